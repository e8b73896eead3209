"""Grids, sampled signals, deterministic quadrature, and centered Fourier transforms.

Conventions used throughout the package:

* Signals are uniformly sampled on an origin-centered, half-open window:
  sample k of an N-point signal with step d lives at t_k = (k - N/2) d,
  so the window is [-N d/2, N d/2). N is even.
* The Fourier transform is F(xi) = integral f(x) exp(-2 pi i x xi) dx.
  Its discrete realization is the Riemann sum over the sample lattice,
  evaluated on the dual lattice (step 1/(N d)) by an FFT with centering
  shifts. The signal is treated as identically zero outside its window,
  and a boundary-decay check guards that truncation.
* Every double integral over the time-frequency plane is a Riemann sum
  weighted by the grid's cell measure. Reductions use a fixed pairwise
  cascade (see tfu._kernels), which makes results reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from tfu import _kernels

#: Relative boundary magnitude above which a 1-D signal is considered
#: unsafe to treat as compactly supported.
BOUNDARY_DECAY_TOL_1D = 1e-12
#: Same guard for 2-D fields.
BOUNDARY_DECAY_TOL_2D = 1e-10

_STEP_RTOL = 1e-12


def pairwise_sum(values: np.ndarray) -> float:
    """Deterministic cascade sum of a real array (any shape)."""
    buf = np.ascontiguousarray(values, dtype=np.float64).ravel()
    return _kernels.cascade_sum(buf)


@dataclass(frozen=True)
class SignalLayout:
    """Sampling lattice of a signal: count points, spacing step."""

    count: int
    step: float

    def __post_init__(self) -> None:
        if self.count < 16 or self.count % 2 != 0:
            raise ValueError(f"signal count must be an even integer >= 16, got {self.count}")
        if not (self.step > 0 and math.isfinite(self.step)):
            raise ValueError(f"signal step must be positive and finite, got {self.step}")

    @property
    def dual_step(self) -> float:
        return 1.0 / (self.count * self.step)

    @property
    def half_extent(self) -> float:
        return (self.count // 2) * self.step

    def times(self) -> np.ndarray:
        return (np.arange(self.count) - self.count // 2) * self.step

    def dual(self) -> "SignalLayout":
        return SignalLayout(self.count, self.dual_step)


#: 256 samples on [-8, 8) with step 1/16, both in time and frequency.
#: Self-dual, and Gaussian tails at the boundary are ~1e-87.
DEFAULT_LAYOUT = SignalLayout(count=256, step=1.0 / 16)


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Uniformly sampled complex signal on an origin-centered window."""

    samples: np.ndarray
    step: float

    def __post_init__(self) -> None:
        arr = np.asarray(self.samples, dtype=np.complex128)
        SignalLayout(arr.size, self.step)  # validates count and step
        if not np.all(np.isfinite(arr)):
            raise ValueError("signal samples must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def count(self) -> int:
        return self.samples.size

    @property
    def layout(self) -> SignalLayout:
        return SignalLayout(self.count, self.step)

    def times(self) -> np.ndarray:
        return self.layout.times()

    def l2_norm(self) -> float:
        """sqrt(step * sum |samples|^2), via the deterministic cascade."""
        return math.sqrt(self.step * pairwise_sum(np.abs(self.samples) ** 2))


@dataclass(frozen=True)
class TFGrid:
    """The discrete (x, xi) lattice all plane quadrature runs on.

    Node (j, k) sits at ((j - x_count/2) x_step, (k - xi_count/2) xi_step);
    both axes are origin-centered and half-open, like SignalLayout.
    """

    x_step: float
    xi_step: float
    x_count: int
    xi_count: int

    def __post_init__(self) -> None:
        for name, count in (("x_count", self.x_count), ("xi_count", self.xi_count)):
            if count <= 0 or count % 2 != 0:
                raise ValueError(f"{name} must be a positive even integer, got {count}")
        for name, step in (("x_step", self.x_step), ("xi_step", self.xi_step)):
            if not (step > 0 and math.isfinite(step)):
                raise ValueError(f"{name} must be positive and finite, got {step}")

    @property
    def cell_measure(self) -> float:
        return self.x_step * self.xi_step

    @property
    def shape(self) -> tuple[int, int]:
        return (self.x_count, self.xi_count)

    @property
    def half_extent(self) -> float:
        return min((self.x_count // 2) * self.x_step, (self.xi_count // 2) * self.xi_step)

    @property
    def is_square(self) -> bool:
        return self.x_count == self.xi_count and math.isclose(
            self.x_step, self.xi_step, rel_tol=_STEP_RTOL
        )

    @property
    def is_self_dual(self) -> bool:
        return math.isclose(
            self.x_step, 1.0 / (self.x_count * self.x_step), rel_tol=_STEP_RTOL
        ) and math.isclose(
            self.xi_step, 1.0 / (self.xi_count * self.xi_step), rel_tol=_STEP_RTOL
        )

    def x_nodes(self) -> np.ndarray:
        return (np.arange(self.x_count) - self.x_count // 2) * self.x_step

    def xi_nodes(self) -> np.ndarray:
        return (np.arange(self.xi_count) - self.xi_count // 2) * self.xi_step

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.x_nodes(), self.xi_nodes(), indexing="ij")

    def dual(self) -> "TFGrid":
        return TFGrid(
            x_step=1.0 / (self.x_count * self.x_step),
            xi_step=1.0 / (self.xi_count * self.xi_step),
            x_count=self.x_count,
            xi_count=self.xi_count,
        )

    @classmethod
    def from_layout(cls, layout: SignalLayout) -> "TFGrid":
        """STFT grid for a signal layout: x on the sample lattice, xi on its dual."""
        return cls(
            x_step=layout.step,
            xi_step=layout.dual_step,
            x_count=layout.count,
            xi_count=layout.count,
        )


DEFAULT_GRID = TFGrid.from_layout(DEFAULT_LAYOUT)


@dataclass(frozen=True, eq=False)
class TFArray:
    """Complex field sampled on a TFGrid; entries are validated finite."""

    grid: TFGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.complex128)
        if arr.shape != self.grid.shape:
            raise ValueError(f"values shape {arr.shape} does not match grid shape {self.grid.shape}")
        if not np.all(np.isfinite(arr)):
            bad = np.argwhere(~np.isfinite(arr))
            j, k = (int(v) for v in bad[0])
            raise ValueError(f"non-finite field value at node ({j}, {k})")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)


def quadrature_sum(a: TFArray, integrand: Callable[[np.ndarray], np.ndarray]) -> float:
    """cell_measure * sum of integrand(values) over all nodes.

    The reduction is the fixed pairwise cascade in row-major leaf order, so
    repeated evaluations are bit-identical. The integrand must map complex
    values to finite reals; a non-finite result anywhere aborts with the
    offending node.
    """
    vals = integrand(a.values)
    vals = np.asarray(vals)
    if vals.shape != a.values.shape:  # scalar-only callables
        vals = np.vectorize(integrand)(a.values)
    if np.iscomplexobj(vals):
        if np.any(vals.imag != 0):
            raise ValueError("integrand must be real-valued")
        vals = vals.real
    vals = np.asarray(vals, dtype=np.float64)
    return a.grid.cell_measure * _checked_cascade(vals)


def _checked_cascade(real_field: np.ndarray) -> float:
    if not np.all(np.isfinite(real_field)):
        bad = np.argwhere(~np.isfinite(real_field))
        idx = tuple(int(v) for v in bad[0])
        raise ValueError(f"non-finite integrand value at node {idx}")
    return pairwise_sum(real_field)


def _centered_fft(values: np.ndarray, step: float, axis: int = -1) -> np.ndarray:
    """Riemann-sum Fourier transform on an origin-centered lattice.

    For even N the index shuffles make the FFT compute exactly
    step * sum_k v_k exp(-2 pi i (k - N/2)(m - N/2) / N), i.e. continuous-FT
    samples on the dual lattice.
    """
    shifted = np.fft.ifftshift(values, axes=axis)
    out = np.fft.fft(shifted, axis=axis)
    return step * np.fft.fftshift(out, axes=axis)


def _boundary_unsound(magnitudes: np.ndarray, boundary: float, tol: float) -> bool:
    peak = float(np.max(magnitudes))
    if peak == 0.0:
        return False
    return boundary > tol * peak


def discrete_fourier(s: SampledSignal) -> SampledSignal:
    """Samples of the continuous Fourier transform on the dual lattice.

    Requires the signal to have decayed at its window boundary; otherwise
    the implicit zero extension would misrepresent the transform.
    """
    mag = np.abs(s.samples)
    edge = max(float(mag[0]), float(mag[-1]))
    if _boundary_unsound(mag, edge, BOUNDARY_DECAY_TOL_1D):
        raise ValueError(
            "truncation unsound: boundary magnitude "
            f"{edge:.3e} exceeds {BOUNDARY_DECAY_TOL_1D:g} of peak {float(np.max(mag)):.3e}"
        )
    return SampledSignal(_centered_fft(s.samples, s.step), s.layout.dual_step)


def fourier_2d(a: TFArray) -> TFArray:
    """Continuous 2-D Fourier transform of the field, on the dual TFGrid."""
    mag = np.abs(a.values)
    frame = max(
        float(np.max(mag[0, :])),
        float(np.max(mag[-1, :])),
        float(np.max(mag[:, 0])),
        float(np.max(mag[:, -1])),
    )
    if _boundary_unsound(mag, frame, BOUNDARY_DECAY_TOL_2D):
        raise ValueError(
            "truncation unsound: boundary magnitude "
            f"{frame:.3e} exceeds {BOUNDARY_DECAY_TOL_2D:g} of peak {float(np.max(mag)):.3e}"
        )
    inner = _centered_fft(a.values, a.grid.xi_step, axis=1)
    outer = _centered_fft(inner, a.grid.x_step, axis=0)
    return TFArray(grid=a.grid.dual(), values=outer)
