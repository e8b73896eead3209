"""Numerical checks of the two fundamental STFT identities.

First: the plane Fourier transform of V_{g1}f1 * conj(V_{g2}f2) equals
(V_{f2}f1 * conj(V_{g2}g1)) evaluated at the quarter-rotated point
(-xi, x). Second: the auxiliary field

    F_Z(x, xi) = exp(2 pi i x xi) V(x, xi) V(-x, -xi),
    V = V_g(M_zeta T_z f),

is invariant under the plane Fourier transform composed with that same
rotation, for every shift Z = (z, zeta).

Both checks realize the rotation as an exact index permutation, which
requires a square grid (equal counts and steps on both axes); comparing
against the transform additionally requires the grid to be self-dual. On
the half-open lattice the boundary row/column has no reflected partner and
wraps to itself; all admitted fields have decayed to rounding level there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tfu.core import SampledSignal, TFArray, TFGrid, fourier_2d
from tfu.reference import translate_modulate
from tfu.stft import compute_stft


def _require_square(grid: TFGrid) -> None:
    if not grid.is_square:
        raise ValueError(
            "asymmetric grid: the quarter rotation needs x_count == xi_count "
            "and x_step == xi_step"
        )


def _require_self_dual(grid: TFGrid) -> None:
    if not grid.is_self_dual:
        raise ValueError(
            "grid is not self-dual: transform output would land on a different "
            "lattice than the rotated field (need count * step^2 == 1)"
        )


def point_reflection(values: np.ndarray) -> np.ndarray:
    """Field at (-x, -xi): index (N - i) mod N on both axes."""
    n0, n1 = values.shape
    i0 = (n0 - np.arange(n0)) % n0
    i1 = (n1 - np.arange(n1)) % n1
    return values[np.ix_(i0, i1)]


def quarter_rotation(values: np.ndarray) -> np.ndarray:
    """Field at (-xi, x) on a square grid."""
    n = values.shape[0]
    i = (n - np.arange(n)) % n
    return values[i, :].T


@dataclass(frozen=True)
class AuxiliaryField:
    """F_Z for one shift Z = (z, zeta), kept with its construction data."""

    base: TFArray
    z: float
    zeta: float


def build_auxiliary(
    f: SampledSignal, g: SampledSignal, grid: TFGrid, z: float, zeta: float
) -> AuxiliaryField:
    """Construct F_Z from a single STFT evaluation and its point reflection."""
    _require_square(grid)
    v = compute_stft(translate_modulate(f, z, zeta), g, grid).values
    x, xi = grid.meshgrid()
    phase = np.exp(2j * np.pi * x * xi)
    return AuxiliaryField(
        base=TFArray(grid=grid, values=phase * v * point_reflection(v)), z=z, zeta=zeta
    )


def rotation_invariance_defect(a: AuxiliaryField) -> float:
    """max |FT(F_Z) - F_Z((-xi, x))| / max |F_Z|."""
    _require_self_dual(a.base.grid)
    transformed = fourier_2d(a.base).values
    rotated = quarter_rotation(a.base.values)
    scale = float(np.max(np.abs(a.base.values)))
    return float(np.max(np.abs(transformed - rotated))) / scale


def fundamental_identity_defect(
    f1: SampledSignal,
    f2: SampledSignal,
    g1: SampledSignal,
    g2: SampledSignal,
    grid: TFGrid,
) -> float:
    """Normalized max-abs gap between the two sides of the product identity."""
    _require_square(grid)
    _require_self_dual(grid)
    v1 = compute_stft(f1, g1, grid).values
    v2 = compute_stft(f2, g2, grid).values
    lhs = fourier_2d(TFArray(grid=grid, values=v1 * np.conj(v2))).values
    a = compute_stft(f1, f2, grid).values
    b = compute_stft(g1, g2, grid).values
    rhs = quarter_rotation(a * np.conj(b))
    scale = max(float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(lhs - rhs))) / scale
