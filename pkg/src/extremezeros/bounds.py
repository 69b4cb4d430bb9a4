"""Closed-form bounds on the extreme zeros of classical orthogonal polynomials.

Every bound refers to the polynomial of degree ``n + 1`` (``target_degree``).
Lower bounds are for its largest zero, upper bounds for its smallest zero.

Method identifiers are stable strings of the form ``<family>.<min|max>.<name>``,
e.g. ``"laguerre.min.driver_jordaan"``. The bound functions also accept the
bare ``<name>`` part.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DegenerateQuadraticError, NoRealRootsError, ParameterDomainError
from .polyfam import PolynomialFamily, check_degree, pochhammer

EPS = 2.0**-52

LOWER_ON_LARGEST = "lower_on_largest"
UPPER_ON_SMALLEST = "upper_on_smallest"

BoundKind = Literal["lower_on_largest", "upper_on_smallest"]

METHODS = {
    "laguerre.min": ("driver_jordaan", "gupta_muldoon", "szego", "hahn"),
    "laguerre.max": ("driver_jordaan", "szego", "bottema", "neumann"),
    "jacobi.max": ("driver_jordaan", "szego_a", "szego_b"),
    "jacobi.min": ("driver_jordaan",),
    "gegenbauer.max": ("jacobi_specialization", "squared", "szego_squared"),
}

# Methods derived from a two-degree mixed recurrence: at n = 1 the bound
# coincides with the zero itself, so strictness needs n >= 2.
_MIN_DEGREE = {
    "laguerre.min.driver_jordaan": 2,
    "laguerre.max.driver_jordaan": 2,
    "gegenbauer.max.squared": 2,
    "gegenbauer.max.szego_squared": 2,
}

# 3n - 1 exceeds the largest zero of L_{n+1}^a for these n once a drops
# below roughly -0.83, -0.86 and -0.97 respectively.
_NEUMANN_UNSAFE_N = (2, 3, 4)
_NEUMANN_SAFE_ALPHA = -0.8


@dataclass(frozen=True)
class BoundResult:
    value: float | None
    kind: BoundKind
    method: str
    target_degree: int
    applicable: bool = True
    note: str = ""


def quadratic_extreme_roots(A: float, B: float, C: float) -> tuple[float, float]:
    """Both real roots of ``A x^2 + B x + C``, smallest first, without cancellation."""
    if A == 0:
        raise DegenerateQuadraticError("leading coefficient is zero")
    disc = B * B - 4.0 * A * C
    if disc < 0 and -disc <= 8 * EPS * max(B * B, abs(4.0 * A * C)):
        disc = 0.0  # double root blurred by rounding
    if disc < 0:
        raise NoRealRootsError(f"negative discriminant {disc}")
    if B == 0:
        r = math.sqrt(-C / A)
        return -r, r
    q = -0.5 * (B + math.copysign(math.sqrt(disc), B))
    r1 = q / A
    r2 = C / q if q != 0 else r1
    return (r1, r2) if r1 <= r2 else (r2, r1)


def _method_id(prefix, method):
    name = method.split(".")[-1]
    if name not in METHODS[prefix]:
        raise ParameterDomainError(
            f"unknown method {method!r} for {prefix}; expected one of {METHODS[prefix]}"
        )
    return f"{prefix}.{name}"


def _result(value, kind, method_id, n, note=""):
    applicable = True
    notes = [note] if note else []
    if n == 0:
        applicable = False
        notes.append("n = 0: degree-one polynomial, bound is not strict")
    elif n < _MIN_DEGREE.get(method_id, 1):
        applicable = False
        notes.append("outside theorem's degree range: bound equals the zero")
    if value is not None and applicable:
        if kind == LOWER_ON_LARGEST and value <= -1 and method_id.startswith(("jacobi", "gegen")):
            notes.append("vacuous: below support")
        if kind == LOWER_ON_LARGEST and value <= 0 and method_id.startswith("laguerre"):
            notes.append("vacuous: below support")
    return BoundResult(value, kind, method_id, n + 1, applicable, "; ".join(notes))


def _check_alpha(alpha):
    PolynomialFamily.laguerre(alpha)


def laguerre_min_quadratic(alpha, n):
    """Coefficients (A, B, C) of the quadratic whose smaller root bounds the smallest zero."""
    a = alpha
    return (
        pochhammer(n + a + 2, 2),
        -pochhammer(a + 2, 2) * (3 * n + 2 * a + 5),
        pochhammer(a + 1, 4),
    )


def laguerre_min_upper(alpha: float, n: int, method: str = "driver_jordaan") -> BoundResult:
    """Upper bound on the smallest zero of L_{n+1}^alpha."""
    _check_alpha(alpha)
    n = check_degree(n)
    mid = _method_id("laguerre.min", method)
    a = alpha
    name = mid.rsplit(".", 1)[1]
    if name == "hahn":
        value = (a + 1) * (a + 2) / (n + a + 2)
    elif name == "szego":
        value = (a + 1) * (a + 3) / (2 * n + a + 3)
    elif name == "gupta_muldoon":
        value = (a + 1) * (a + 2) * (a + 4) * (2 * n + a + 3) / (
            (a + 1) ** 2 * (a + 2) + (5 * a + 11) * (n + 1) * (n + a + 2)
        )
    else:
        value = quadratic_extreme_roots(*laguerre_min_quadratic(a, n))[0]
    return _result(value, UPPER_ON_SMALLEST, mid, n)


def laguerre_max_lower(alpha: float, n: int, method: str = "driver_jordaan") -> BoundResult:
    """Lower bound on the largest zero of L_{n+1}^alpha."""
    _check_alpha(alpha)
    n = check_degree(n)
    mid = _method_id("laguerre.max", method)
    a = alpha
    name = mid.rsplit(".", 1)[1]
    if name == "neumann":
        value = 3.0 * n - 1
        if n in _NEUMANN_UNSAFE_N and a < _NEUMANN_SAFE_ALPHA:
            return BoundResult(
                value, LOWER_ON_LARGEST, mid, n + 1, False,
                "fails for alpha near -1 at n in {2, 3, 4}",
            )
    elif name == "bottema":
        value = 4.0 * n + 4 + a - 16 * math.sqrt(2 * n + 2)
    elif name == "szego":
        value = 2.0 * n + a + 1
    else:
        value = 2.0 * n + a + math.sqrt(n * n + a * n + 1)
    return _result(value, LOWER_ON_LARGEST, mid, n)


def _check_jacobi(alpha, beta):
    PolynomialFamily.jacobi(alpha, beta)


def jacobi_max_lower(alpha: float, beta: float, n: int, method: str = "driver_jordaan") -> BoundResult:
    """Lower bound on the largest zero of P_{n+1}^(alpha, beta)."""
    _check_jacobi(alpha, beta)
    n = check_degree(n)
    mid = _method_id("jacobi.max", method)
    a, b = alpha, beta
    name = mid.rsplit(".", 1)[1]
    if name == "driver_jordaan":
        value = 1 - 2 * (a + 1) * (a + 3) / (2 * n * (n + a + b + 3) + (a + 3) * (a + b + 2))
    elif name == "szego_a":
        value = (2 * n + b - a) / (2 * n + a + b + 2)
    else:
        if b < a:
            return BoundResult(None, LOWER_ON_LARGEST, mid, n + 1, False, "requires beta >= alpha")
        value = n / (n + a + 1)
    return _result(value, LOWER_ON_LARGEST, mid, n)


def jacobi_min_upper(alpha: float, beta: float, n: int, method: str = "driver_jordaan") -> BoundResult:
    """Upper bound on the smallest zero of P_{n+1}^(alpha, beta)."""
    _check_jacobi(alpha, beta)
    n = check_degree(n)
    mid = _method_id("jacobi.min", method)
    a, b = alpha, beta
    value = -1 + 2 * (b + 1) * (b + 3) / (2 * n * (n + a + b + 3) + (b + 3) * (a + b + 2))
    return _result(value, UPPER_ON_SMALLEST, mid, n)


def gegenbauer_max_lower(lam: float, n: int, method: str = "jacobi_specialization") -> BoundResult:
    """Lower bound on the largest zero of C_{n+1}^lambda.

    The ``squared`` and ``szego_squared`` methods bound the square of the
    zero; they are reported as sqrt(max(0, bound)) with the raw squared bound
    kept in ``note``.
    """
    PolynomialFamily.gegenbauer(lam)
    n = check_degree(n)
    mid = _method_id("gegenbauer.max", method)
    t1 = 2 * lam + 1
    name = mid.rsplit(".", 1)[1]
    if name == "jacobi_specialization":
        t5 = 2 * lam + 5
        value = 1 - t1 * t5 / (4 * n * (n + 2 * lam + 2) + t1 * t5)
        return _result(value, LOWER_ON_LARGEST, mid, n)
    if name == "squared":
        t3 = 2 * lam + 3
        sq = 1 - t1 * t3 / (n * (n + 2 * lam + 2) + t1 * t3)
    else:
        sq = 1 - t1 / (n + 2 * lam + 1)
    note = f"squared bound {sq!r}"
    if sq < 0:
        note += "; vacuous"
    return _result(math.sqrt(max(0.0, sq)), LOWER_ON_LARGEST, mid, n, note)


def bounds_for(family: PolynomialFamily, n: int) -> list[BoundResult]:
    """Every bound available for the degree-(n+1) member of ``family``."""
    if family.kind == "laguerre":
        (a,) = family.params
        out = [laguerre_min_upper(a, n, m) for m in METHODS["laguerre.min"]]
        out += [laguerre_max_lower(a, n, m) for m in METHODS["laguerre.max"]]
    elif family.kind == "jacobi":
        a, b = family.params
        out = [jacobi_max_lower(a, b, n, m) for m in METHODS["jacobi.max"]]
        out.append(jacobi_min_upper(a, b, n))
    else:
        (lam,) = family.params
        out = [gegenbauer_max_lower(lam, n, m) for m in METHODS["gegenbauer.max"]]
    return out
