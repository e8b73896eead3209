"""Pure-numpy reduction kernels, bit-identical to the compiled ones.

The cascade is a fixed perfect binary tree: the input is zero-padded to the
next power of two and adjacent pairs are added level by level. Padding with
zeros does not perturb IEEE-754 sums, and the tree fixes the operand order,
so repeated runs (and both backends) return the same double.
"""

from __future__ import annotations

import numpy as np


def cascade_sum(values: np.ndarray) -> float:
    buf = np.ascontiguousarray(values, dtype=np.float64).ravel()
    n = buf.size
    if n == 0:
        return 0.0
    m = 1 << (n - 1).bit_length()
    if m != n:
        buf = np.concatenate([buf, np.zeros(m - n)])
    while buf.size > 1:
        buf = buf[0::2] + buf[1::2]
    return float(buf[0])


def prefix_count(masses: np.ndarray, threshold: float) -> int:
    """First prefix length whose running sum reaches threshold, or -1.

    The running sum is the plain left-to-right accumulation (np.cumsum),
    matching the compiled kernel's loop exactly.
    """
    if threshold <= 0.0:
        return 0
    csum = np.cumsum(np.ascontiguousarray(masses, dtype=np.float64))
    idx = int(np.searchsorted(csum, threshold, side="left"))
    if idx >= csum.size:
        return -1
    return idx + 1
