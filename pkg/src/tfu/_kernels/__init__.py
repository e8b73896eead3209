"""Reduction kernels with a compiled fast path.

The compiled Cython extension is preferred when present; setting
TFU_PURE_KERNELS=1 forces the numpy fallback. Both backends implement the
same fixed reduction trees and return bit-identical results, so the choice
only affects speed (see benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import os

if os.environ.get("TFU_PURE_KERNELS"):
    from tfu._kernels._pure import cascade_sum, prefix_count

    BACKEND = "pure"
else:
    try:
        from tfu._kernels._cascade import cascade_sum, prefix_count

        BACKEND = "compiled"
    except ImportError:
        from tfu._kernels._pure import cascade_sum, prefix_count

        BACKEND = "pure"

__all__ = ["cascade_sum", "prefix_count", "BACKEND"]
