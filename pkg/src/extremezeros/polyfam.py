"""Laguerre, Jacobi and Gegenbauer families: parameters, evaluation, recurrences.

All evaluation uses the standard (Szego) normalization:

    L_n^a(x)      Laguerre,   weight x^a e^-x on (0, inf),       a > -1
    P_n^(a,b)(x)  Jacobi,     weight (1-x)^a (1+x)^b on (-1, 1),  a, b > -1
    C_n^l(x)      Gegenbauer, weight (1-x^2)^(l-1/2) on (-1, 1),  l > -1/2
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateNormalizationError, ParameterDomainError

Kind = Literal["laguerre", "jacobi", "gegenbauer"]

_NPARAMS = {"laguerre": 1, "jacobi": 2, "gegenbauer": 1}


def check_degree(n, minimum=0, name="n"):
    """Return ``n`` as an int, raising ParameterDomainError if it is not an integer >= minimum."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        else:
            raise ParameterDomainError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise ParameterDomainError(f"{name} must be >= {minimum}, got {n}")
    return n


def _check_finite(value, name):
    value = float(value)
    if not math.isfinite(value):
        raise ParameterDomainError(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class PolynomialFamily:
    """A classical family together with its parameter(s).

    Use the ``laguerre``, ``jacobi`` and ``gegenbauer`` constructors rather
    than building ``params`` by hand.
    """

    kind: Kind
    params: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in _NPARAMS:
            raise ParameterDomainError(f"unknown family {self.kind!r}")
        if len(self.params) != _NPARAMS[self.kind]:
            raise ParameterDomainError(
                f"{self.kind} takes {_NPARAMS[self.kind]} parameter(s), got {len(self.params)}"
            )
        params = tuple(_check_finite(p, "parameter") for p in self.params)
        object.__setattr__(self, "params", params)
        if self.kind == "laguerre" and not params[0] > -1:
            raise ParameterDomainError(f"Laguerre requires alpha > -1, got {params[0]}")
        if self.kind == "jacobi" and not (params[0] > -1 and params[1] > -1):
            raise ParameterDomainError(
                f"Jacobi requires alpha, beta > -1, got ({params[0]}, {params[1]})"
            )
        if self.kind == "gegenbauer" and not params[0] > -0.5:
            raise ParameterDomainError(f"Gegenbauer requires lambda > -1/2, got {params[0]}")

    @classmethod
    def laguerre(cls, alpha):
        return cls("laguerre", (alpha,))

    @classmethod
    def jacobi(cls, alpha, beta):
        return cls("jacobi", (alpha, beta))

    @classmethod
    def gegenbauer(cls, lam):
        return cls("gegenbauer", (lam,))

    def support(self) -> tuple[float, float]:
        if self.kind == "laguerre":
            return (0.0, math.inf)
        return (-1.0, 1.0)

    def as_jacobi(self) -> PolynomialFamily:
        """The Jacobi family with the same monic polynomials (Gegenbauer and Jacobi only)."""
        if self.kind == "jacobi":
            return self
        if self.kind == "gegenbauer":
            a = self.params[0] - 0.5
            return PolynomialFamily.jacobi(a, a)
        raise ParameterDomainError("Laguerre polynomials have no Jacobi form")

    def label(self) -> str:
        names = {"laguerre": ("alpha",), "jacobi": ("alpha", "beta"), "gegenbauer": ("lambda",)}
        args = ", ".join(f"{k}={v:g}" for k, v in zip(names[self.kind], self.params))
        return f"{self.kind}({args})"


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1."""
    k = check_degree(k, 0, "k")
    return math.prod((a + i for i in range(k)), start=1.0)


def _step_coefficients(family, k):
    """(A, B, C) with p_{k+1} = (A x + B) p_k - C p_{k-1} in standard normalization."""
    if family.kind == "laguerre":
        (a,) = family.params
        return -1.0 / (k + 1), (2 * k + 1 + a) / (k + 1), (k + a) / (k + 1)
    if family.kind == "gegenbauer":
        (lam,) = family.params
        return 2.0 * (k + lam) / (k + 1), 0.0, (k + 2 * lam - 1) / (k + 1)
    a, b = family.params
    s = a + b
    # k >= 1 here, so 2k+s > 0 and k+s+1 > 0 on the whole parameter domain
    denom = 2.0 * (k + 1) * (k + s + 1) * (2 * k + s)
    A = (2 * k + s + 1) * (2 * k + s + 2) * (2 * k + s) / denom
    B = (2 * k + s + 1) * (a * a - b * b) / denom
    C = 2.0 * (k + a) * (k + b) * (2 * k + s + 2) / denom
    return A, B, C


def _degree_one(family):
    """(A, B) with p_1(x) = A x + B."""
    if family.kind == "laguerre":
        return -1.0, 1.0 + family.params[0]
    if family.kind == "gegenbauer":
        return 2.0 * family.params[0], 0.0
    a, b = family.params
    return (a + b + 2) / 2.0, (a - b) / 2.0


def evaluate_full(family: PolynomialFamily, n: int, x):
    """Forward recurrence returning ``(value, derivative, scale)`` at ``x``.

    ``scale`` is the largest magnitude among the intermediate recurrence terms
    and serves as the reference magnitude for residual checks.
    """
    n = check_degree(n)
    if family.kind == "gegenbauer" and family.params[0] == 0 and n >= 1:
        raise DegenerateNormalizationError(
            "C_n^0 vanishes identically in standard normalization; use the Jacobi form"
        )
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    d_prev = np.zeros_like(x)
    p = np.ones_like(x)
    d = np.zeros_like(x)
    scale = np.ones_like(x)
    if n >= 1:
        A, B = _degree_one(family)
        p_prev, d_prev = p, d
        p = A * x + B
        d = np.full_like(x, A)
        scale = np.maximum(scale, np.maximum(np.abs(A * x), abs(B)))
    for k in range(1, n):
        A, B, C = _step_coefficients(family, k)
        lin = A * x + B
        t1 = lin * p
        t2 = C * p_prev
        p_next = t1 - t2
        d_next = lin * d + A * p - C * d_prev
        scale = np.maximum(scale, np.maximum(np.abs(t1), np.abs(t2)))
        p_prev, d_prev, p, d = p, d, p_next, d_next
    scale = np.maximum(scale, np.abs(p))
    if p.ndim == 0:
        return float(p), float(d), float(scale)
    return p, d, scale


def evaluate(family: PolynomialFamily, n: int, x):
    """Value of the degree-``n`` family member at ``x`` (scalar or array)."""
    return evaluate_full(family, n, x)[0]


def leading_coefficient(family: PolynomialFamily, n: int) -> float:
    n = check_degree(n)
    if family.kind == "laguerre":
        return math.prod((-1.0 / k for k in range(1, n + 1)), start=1.0)
    if family.kind == "gegenbauer":
        (lam,) = family.params
        return math.prod((2.0 * (lam + k) / (k + 1) for k in range(n)), start=1.0)
    a, b = family.params
    return math.prod(((n + a + b + 1 + k) / (2.0 * (k + 1)) for k in range(n)), start=1.0)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Monic recurrence p_{k+1}(x) = (x - diag[k]) p_k(x) - offdiag[k-1]**2 p_{k-1}(x).

    ``diag`` and ``offdiag`` are the diagonal and off-diagonal of the
    symmetric tridiagonal Jacobi matrix whose eigenvalues are the zeros of
    the degree ``degree_limit`` polynomial.
    """

    degree_limit: int
    diag: np.ndarray
    offdiag: np.ndarray

    def jacobi_matrix(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def evaluate(self, x, degree=None):
        """Monic polynomial of the given degree (default ``degree_limit``) at ``x``."""
        degree = self.degree_limit if degree is None else check_degree(degree)
        if degree > self.degree_limit:
            raise ParameterDomainError(f"degree {degree} exceeds {self.degree_limit}")
        x = np.asarray(x, dtype=float)
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        for k in range(degree):
            b2 = self.offdiag[k - 1] ** 2 if k >= 1 else 0.0
            p_prev, p = p, (x - self.diag[k]) * p - b2 * p_prev
        return float(p) if p.ndim == 0 else p


def _jacobi_recurrence(a, b, n):
    s = a + b
    diag = np.empty(n)
    diag[0] = (b - a) / (s + 2)
    for k in range(1, n):
        diag[k] = (b - a) * (b + a) / ((2 * k + s) * (2 * k + s + 2))
    b2 = np.empty(max(n - 1, 0))
    if n >= 2:
        # k = 1: the factor (1 + s) cancels; general form is 0/0 at s = -1
        b2[0] = 4.0 * (1 + a) * (1 + b) / ((2 + s) ** 2 * (3 + s))
    for k in range(2, n):
        t = 2 * k + s
        b2[k - 1] = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1) * (t - 1))
    return diag, np.sqrt(b2)


def monic_recurrence(family: PolynomialFamily, n: int) -> RecurrenceCoefficients:
    """Coefficients of the monic three-term recurrence up to degree ``n``."""
    n = check_degree(n, 1)
    if family.kind == "laguerre":
        (a,) = family.params
        k = np.arange(n, dtype=float)
        diag = 2 * k + a + 1
        kk = np.arange(1, n, dtype=float)
        offdiag = np.sqrt(kk * (kk + a))
    else:
        jac = family.as_jacobi()
        diag, offdiag = _jacobi_recurrence(*jac.params, n)
        if family.kind == "gegenbauer":
            diag = np.zeros(n)
    return RecurrenceCoefficients(n, diag, offdiag)
