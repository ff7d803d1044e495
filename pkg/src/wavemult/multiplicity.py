"""Numerical multiplicity of general wavelets from frequency-domain fibers.

At a base point xi the translation fiber of the j-th dilate is the sequence
2**(j/2) * profile(2**j * (xi + 2*pi*k)) over k.  Orthogonalizing the fibers
recursively gives residuals g_j with weights h_j = 2*pi*||g_j||**2; the
multiplicity at xi is the number of h_j above a relative tolerance, and it
must match the plain squared lattice sum (the dimension-function value).
For MSF profiles both are cross-checked against the exact integer count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .exact import IntervalSet, PreconditionError, RationalPi
from .dimension import dimension_at

__all__ = [
    "SpectralProfile",
    "FiberVector",
    "GramSchmidtState",
    "DimensionSum",
    "GridRecord",
    "AgreementReport",
    "msf_profile",
    "meyer_profile",
    "sampled_profile",
    "fiber",
    "gram_schmidt",
    "multiplicity_rank",
    "dimension_sum",
    "verify_m_equals_d",
    "uniform_grid",
]

TWO_PI_F = 2.0 * math.pi


class SpectralProfile:
    """Pointwise-evaluatable frequency-domain amplitude with compact support.

    `evaluate_array` must be vectorized over a float array of frequencies and
    return complex amplitudes that vanish outside [-support_radius,
    support_radius].
    """

    def __init__(self, kind, evaluate_array, support_radius, msf_set=None):
        self.kind = kind
        self._evaluate = evaluate_array
        self.support_radius = float(support_radius)
        self.msf_set = msf_set

    def evaluate(self, xi: float) -> complex:
        return complex(self._evaluate(np.asarray([float(xi)]))[0])

    def evaluate_array(self, xi) -> np.ndarray:
        return np.asarray(self._evaluate(np.asarray(xi, dtype=float)), dtype=complex)

    def __repr__(self) -> str:
        return f"SpectralProfile(kind={self.kind!r}, support_radius={self.support_radius})"


def msf_profile(W: IntervalSet) -> SpectralProfile:
    """Indicator profile of a wavelet set: 1 on W, 0 off W."""
    bounds = np.array([float(e) for iv in W for e in (iv.lo, iv.hi)], dtype=float)

    def ev(x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(bounds, x, side="right")
        return (idx % 2 == 1).astype(complex)

    support = float(W.max_abs()) if not W.is_empty else 0.0
    return SpectralProfile("msf", ev, support, msf_set=W)


def _bell(t: np.ndarray) -> np.ndarray:
    return t**4 * (35 - 84 * t + 70 * t**2 - 20 * t**3)


def meyer_profile() -> SpectralProfile:
    """Standard smooth profile supported on 2*pi/3 <= |xi| <= 8*pi/3.

    Modulus sin(pi/2 * nu(3|xi|/(2 pi) - 1)) on the inner band and
    cos(pi/2 * nu(3|xi|/(4 pi) - 1)) on the outer band, with the polynomial
    bell nu(t) = t**4 (35 - 84 t + 70 t**2 - 20 t**3) and phase exp(i xi / 2).
    """

    def ev(x: np.ndarray) -> np.ndarray:
        ax = np.abs(x)
        amp = np.zeros_like(ax)
        inner = (ax >= 2 * np.pi / 3) & (ax < 4 * np.pi / 3)
        outer = (ax >= 4 * np.pi / 3) & (ax <= 8 * np.pi / 3)
        amp[inner] = np.sin(np.pi / 2 * _bell(3 * ax[inner] / (2 * np.pi) - 1))
        amp[outer] = np.cos(np.pi / 2 * _bell(3 * ax[outer] / (4 * np.pi) - 1))
        return amp * np.exp(0.5j * x)

    return SpectralProfile("meyer", ev, 8 * math.pi / 3)


def sampled_profile(points: Sequence[float], values: Sequence[complex]) -> SpectralProfile:
    """Piecewise-linear interpolation of sampled amplitudes, 0 outside the span."""
    xs = np.asarray(points, dtype=float)
    vs = np.asarray(values, dtype=complex)
    if xs.ndim != 1 or xs.size < 2 or np.any(np.diff(xs) <= 0):
        raise ValueError("sample points must be strictly increasing, at least two")
    if vs.shape != xs.shape:
        raise ValueError("sample points and values must have matching shapes")

    def ev(x: np.ndarray) -> np.ndarray:
        re = np.interp(x, xs, vs.real, left=0.0, right=0.0)
        im = np.interp(x, xs, vs.imag, left=0.0, right=0.0)
        return re + 1j * im

    return SpectralProfile("sampled", ev, max(abs(xs[0]), abs(xs[-1])))


@dataclass(frozen=True, eq=False)
class FiberVector:
    """Translation fiber of the level-j dilate, truncated to |k| <= k_max."""

    xi: float
    level: int
    k_max: int
    entries: np.ndarray
    truncation_exact: bool


def fiber(profile: SpectralProfile, xi: float, level: int, k_max: int) -> FiberVector:
    """Entries 2**(level/2) * profile(2**level * (xi + 2*pi*k)), k = -k_max..k_max."""
    if level < 1 or k_max < 1:
        raise PreconditionError("level and k_max must be positive")
    ks = np.arange(-k_max, k_max + 1)
    points = (2.0**level) * (float(xi) + TWO_PI_F * ks)
    entries = (2.0 ** (level / 2)) * profile.evaluate_array(points)
    # Every dropped |k| > k_max satisfies 2**level (2 pi |k| - pi) > support.
    exact = (2.0**level) * (TWO_PI_F * (k_max + 1) - math.pi) > profile.support_radius
    return FiberVector(float(xi), level, k_max, entries, exact)


@dataclass(frozen=True, eq=False)
class GramSchmidtState:
    """Residual fibers, their weights h_j, and the projection coefficients."""

    xi: float
    tol: float
    fibers: np.ndarray
    residuals: np.ndarray
    h_values: np.ndarray
    eta: np.ndarray
    max_scale: float
    truncation_exact: bool

    @property
    def threshold(self) -> float:
        return self.tol * self.max_scale

    @property
    def usable(self) -> np.ndarray:
        """Residuals counted as genuinely nonzero at the working tolerance."""
        return self.h_values > self.threshold

    @property
    def rank(self) -> int:
        return int(self.usable.sum())


def gram_schmidt(
    profile: SpectralProfile, xi: float, j_max: int, k_max: int, tol: float = 1e-9
) -> GramSchmidtState:
    """Orthogonalize the fibers at xi for levels 1..j_max.

    Implements g_j = psi_j - sum_{k<j} <psi_j, u_k> u_k, skipping directions
    whose weight h_k = 2*pi*||g_k||**2 falls below the relative tolerance
    (they are treated as zero).  eta[j, k] = <psi_j, g_k> / ||g_k||**2 for the
    used directions, so psi_j = g_j + sum_k eta[j, k] g_k.
    """
    if j_max < 1 or tol <= 0:
        raise PreconditionError("j_max must be >= 1 and tol > 0")
    vectors = []
    exact = True
    for level in range(1, j_max + 1):
        fv = fiber(profile, xi, level, k_max)
        vectors.append(fv.entries)
        exact = exact and fv.truncation_exact
    fibers = np.array(vectors)
    norms_sq = np.sum(np.abs(fibers) ** 2, axis=1)
    max_scale = max(1.0, float(norms_sq.max()))
    threshold = tol * max_scale

    residuals = np.zeros_like(fibers)
    h_values = np.zeros(j_max)
    eta = np.zeros((j_max, j_max), dtype=complex)
    for j in range(j_max):
        g = fibers[j].copy()
        for k in range(j):
            if h_values[k] > threshold:
                gk = residuals[k]
                coeff = np.vdot(gk, fibers[j]) / (h_values[k] / TWO_PI_F)
                eta[j, k] = coeff
                g = g - coeff * gk
        residuals[j] = g
        h_values[j] = TWO_PI_F * float(np.vdot(g, g).real)
    return GramSchmidtState(
        float(xi), tol, fibers, residuals, h_values, eta, max_scale, exact
    )


def multiplicity_rank(
    profile: SpectralProfile, xi: float, j_max: int, k_max: int, tol: float = 1e-9
) -> int:
    """Number of linearly independent fibers at xi (relative tolerance)."""
    return gram_schmidt(profile, xi, j_max, k_max, tol).rank


class DimensionSum(NamedTuple):
    value: float
    truncation_exact: bool


def dimension_sum(
    profile: SpectralProfile, xi: float, j_max: int, k_max: int
) -> DimensionSum:
    """Truncated lattice sum of |profile(2**j (xi + 2 pi k))|**2.

    `truncation_exact` reports whether the dropped (j, k) terms provably
    vanish for this compactly supported profile.
    """
    xi = float(xi)
    ks = np.arange(-k_max, k_max + 1)
    total = 0.0
    for level in range(1, j_max + 1):
        values = profile.evaluate_array((2.0**level) * (xi + TWO_PI_F * ks))
        total += float(np.sum(np.abs(values) ** 2))
    support = profile.support_radius
    k_exact = 2.0 * (TWO_PI_F * (k_max + 1) - math.pi) > support
    nearest = abs(xi - TWO_PI_F * round(xi / TWO_PI_F))
    j_exact = (2.0 ** (j_max + 1)) * nearest > support
    return DimensionSum(total, k_exact and j_exact)


@dataclass(frozen=True)
class GridRecord:
    xi: float
    xi_text: Optional[str]
    rank: int
    dim_sum: float
    exact: Optional[int]
    agree: bool


@dataclass(frozen=True)
class AgreementReport:
    """Per-point comparison of rank, lattice sum, and exact count when available."""

    records: tuple[GridRecord, ...]

    @property
    def all_agree(self) -> bool:
        return all(r.agree for r in self.records)

    @property
    def disagreements(self) -> tuple[GridRecord, ...]:
        return tuple(r for r in self.records if not r.agree)

    def to_json_obj(self) -> list[dict]:
        out = []
        for r in self.records:
            obj = {"xi": r.xi, "rank": r.rank, "dim_sum": r.dim_sum, "agree": r.agree}
            if r.xi_text is not None:
                obj["xi_pi"] = r.xi_text
            if r.exact is not None:
                obj["exact"] = r.exact
            out.append(obj)
        return out

    def to_csv_rows(self) -> list[dict]:
        return [
            {
                "xi": r.xi,
                "rank": r.rank,
                "dim_sum": r.dim_sum,
                "exact": "" if r.exact is None else r.exact,
                "agree": r.agree,
            }
            for r in self.records
        ]


GridPoint = Union[float, RationalPi]


def verify_m_equals_d(
    profile: SpectralProfile,
    grid: Iterable[GridPoint],
    j_max: int,
    k_max: int,
    tol: float = 1e-9,
) -> AgreementReport:
    """Check rank == round(lattice sum) on a grid, and both == the exact count
    when the profile is an MSF indicator and the grid point is exact.

    Grid points should avoid 0 and, for MSF profiles, the breakpoints of the
    exact step function (use `dimension.midpoint_grid`).
    """
    records = []
    for point in grid:
        exact: Optional[int] = None
        xi_text: Optional[str] = None
        if isinstance(point, RationalPi):
            xi_text = point.pi_text()
            if profile.kind == "msf" and profile.msf_set is not None:
                exact = dimension_at(profile.msf_set, point)
        xi = float(point)
        rank = multiplicity_rank(profile, xi, j_max, k_max, tol)
        total = dimension_sum(profile, xi, j_max, k_max).value
        agree = rank == round(total)
        if exact is not None:
            agree = agree and rank == exact
        records.append(GridRecord(xi, xi_text, rank, total, exact, agree))
    return AgreementReport(tuple(records))


def uniform_grid(window: IntervalSet, count: int) -> list[float]:
    """Midpoints of `count` equal cells spread over the window pieces (floats)."""
    if window.is_empty:
        return []
    per_piece = -(-count // len(window))
    points = []
    for iv in window:
        lo, hi = float(iv.lo), float(iv.hi)
        width = (hi - lo) / per_piece
        points.extend(lo + width * (i + 0.5) for i in range(per_piece))
    return points
