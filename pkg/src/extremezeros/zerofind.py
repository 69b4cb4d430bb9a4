"""Zeros of classical orthogonal polynomials from their Jacobi matrix.

Each eigenvalue of the symmetric tridiagonal Jacobi matrix is isolated by
bisection on the Sturm (LDL^T negative-pivot) count, then polished with a
few guarded Newton steps on the standard-normalization polynomial.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ParameterDomainError
from .polyfam import (
    PolynomialFamily,
    RecurrenceCoefficients,
    check_degree,
    evaluate_full,
    monic_recurrence,
)

DEFAULT_TOL = 1e-13
SECTIONS = 15
MAX_PASSES = 600
MAX_NEWTON_STEPS = 3


@dataclass(frozen=True)
class ZeroSet:
    """Strictly increasing zeros of the degree-``degree`` member of ``family``."""

    family: PolynomialFamily
    degree: int
    zeros: np.ndarray

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    @property
    def smallest(self) -> float:
        return float(self.zeros[0])

    @property
    def largest(self) -> float:
        return float(self.zeros[-1])


def _pivot_floor(coeffs):
    b2max = float(np.max(coeffs.offdiag**2)) if len(coeffs.offdiag) else 0.0
    return np.finfo(float).tiny * max(1.0, b2max)


def sturm_count(coeffs: RecurrenceCoefficients, x):
    """Number of Jacobi-matrix eigenvalues strictly below ``x`` (scalar or array).

    Pivots smaller in magnitude than ``pivmin`` are replaced by ``-pivmin``,
    so an eigenvalue exactly at ``x`` is counted as lying below it.
    """
    pivmin = _pivot_floor(coeffs)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    b2 = (coeffs.offdiag**2).tolist()
    diag = coeffs.diag.tolist()
    count = np.zeros(x.shape, dtype=np.int64)
    d = np.empty_like(x)
    small = np.empty(x.shape, dtype=bool)
    for k in range(coeffs.degree_limit):
        if k == 0:
            np.subtract(diag[0], x, out=d)
        else:
            np.divide(b2[k - 1], d, out=d)
            np.subtract(diag[k] - x, d, out=d)
        np.less(np.abs(d), pivmin, out=small)
        if small.any():
            d[small] = -pivmin
        count += d < 0
    return int(count[0]) if scalar else count


def gershgorin_interval(coeffs: RecurrenceCoefficients) -> tuple[float, float]:
    off = np.abs(coeffs.offdiag)
    radius = np.zeros(coeffs.degree_limit)
    radius[:-1] += off
    radius[1:] += off
    lo = float(np.min(coeffs.diag - radius))
    hi = float(np.max(coeffs.diag + radius))
    margin = 4 * np.finfo(float).eps * max(abs(lo), abs(hi), 1.0)
    return lo - margin, hi + margin


def _bisect_all(coeffs, tol):
    """Shrink one bracket per eigenvalue until its width is below tolerance.

    Each pass evaluates the Sturm count at ``SECTIONS`` interior points of
    every unfinished bracket, i.e. several bisection steps per sweep through
    the recurrence.
    """
    n = coeffs.degree_limit
    lo0, hi0 = gershgorin_interval(coeffs)
    lo = np.full(n, lo0)
    hi = np.full(n, hi0)
    target = np.arange(1, n + 1)
    frac = np.arange(1, SECTIONS + 1) / (SECTIONS + 1)
    for _ in range(MAX_PASSES):
        width = hi - lo
        active = width > tol * np.maximum(1.0, np.abs(0.5 * (lo + hi)))
        if not active.any():
            break
        idx = np.flatnonzero(active)
        pts = lo[idx, None] + width[idx, None] * frac
        counts = sturm_count(coeffs, pts.ravel()).reshape(pts.shape)
        below = (counts < target[idx, None]).sum(axis=1)
        has_lo = below > 0
        has_hi = below < SECTIONS
        rows = np.arange(len(idx))
        new_lo = np.where(has_lo, pts[rows, np.maximum(below - 1, 0)], lo[idx])
        new_hi = np.where(has_hi, pts[rows, np.minimum(below, SECTIONS - 1)], hi[idx])
        if np.array_equal(new_lo, lo[idx]) and np.array_equal(new_hi, hi[idx]):
            break
        lo[idx] = new_lo
        hi[idx] = new_hi
    mid = 0.5 * (lo + hi)
    bad = (hi - lo) > tol * np.maximum(1.0, np.abs(mid))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise ConvergenceError(
            f"bracket for zero {i} did not reach tolerance {tol:g}", (float(lo[i]), float(hi[i]))
        )
    return lo, hi


def _newton_polish(family, n, x, lo, hi):
    x = x.copy()
    for _ in range(MAX_NEWTON_STEPS):
        p, dp, _ = evaluate_full(family, n, x)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0.0)
        cand = x - step
        ok = np.isfinite(cand) & (cand >= lo) & (cand <= hi)
        if not ok.any():
            break
        x = np.where(ok, cand, x)
    return x


def zeros(family: PolynomialFamily, n: int, tol: float = DEFAULT_TOL) -> ZeroSet:
    """All ``n`` zeros of the degree-``n`` member of ``family``, ascending.

    Gegenbauer zeros are computed through the Jacobi form with
    alpha = beta = lambda - 1/2 and then symmetrized about the origin.
    Results are memoized; the returned array is read-only.
    """
    n = check_degree(n, 1)
    if not tol >= 1e-15:
        raise ParameterDomainError(f"tol must be >= 1e-15, got {tol}")
    return _zeros_cached(family, n, float(tol))


@functools.lru_cache(maxsize=512)
def _zeros_cached(family, n, tol):
    solve_family = family.as_jacobi() if family.kind == "gegenbauer" else family
    coeffs = monic_recurrence(solve_family, n)
    lo, hi = _bisect_all(coeffs, tol)
    z = _newton_polish(solve_family, n, 0.5 * (lo + hi), lo, hi)
    z = np.sort(z)
    if family.kind == "gegenbauer":
        z = 0.5 * (z - z[::-1])
        if n % 2:
            z[n // 2] = 0.0
    z.flags.writeable = False
    return ZeroSet(family, n, z)
