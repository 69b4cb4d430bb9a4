"""Mixed three-term recurrences and interlacing / common-zero verification.

A mixed recurrence links two members of one family through

    f(x) g(x) = G(x) p_n(x) + H(x) p_{n+1}(x),

with f free of zeros on the support and G of degree k. Whenever it holds,
the zeros of G*g interlace with those of p_{n+1}. A common zero of g and
p_{n+1} must be a zero of G, and it can never be an extreme zero of p_{n+1}.
The two Laguerre identities below use k = 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import laguerre_min_quadratic, quadratic_extreme_roots
from .errors import NoRealRootsError, ParameterDomainError
from .polyfam import PolynomialFamily, check_degree, evaluate, pochhammer
from .zerofind import ZeroSet, zeros

DEFAULT_COMMON_TOL = 1e-9


@dataclass(frozen=True)
class MixedIdentity:
    """A Laguerre mixed recurrence with a quadratic coefficient G (k = 2).

    ``constant_shift`` only matters for the iterated identity. It sets the
    constant term of G to 3n^2 + 3an + a^2 + constant_shift. The identity
    holds with -1; :data:`ITERATED_PLUS_ONE` keeps the +1 variant for
    regression tests.
    """

    name: str
    g_alpha_shift: int
    constant_shift: float = -1.0
    k: int = 2

    def f(self, alpha, n, x):
        if self.g_alpha_shift == 5:
            return np.asarray(x, dtype=float) ** 5
        return (alpha + n - 1) * (alpha + n) * np.ones_like(np.asarray(x, dtype=float))

    def g_family(self, alpha):
        return PolynomialFamily.laguerre(alpha + self.g_alpha_shift)

    def quadratic(self, alpha, n):
        """(A, B, C) of G(x) with any positive constant prefactor removed."""
        if self.g_alpha_shift == 5:
            return laguerre_min_quadratic(alpha, n)
        a = alpha
        return 1.0, -2.0 * (2 * n + a), 3.0 * n * n + 3 * a * n + a * a + self.constant_shift

    def G(self, alpha, n, x):
        A, B, C = self.quadratic(alpha, n)
        pref = (n + alpha + 1) if self.g_alpha_shift == 5 else 1.0
        x = np.asarray(x, dtype=float)
        return pref * ((A * x + B) * x + C)

    def H(self, alpha, n, x):
        a = alpha
        x = np.asarray(x, dtype=float)
        if self.g_alpha_shift == 5:
            return -(n + 1) * (
                pochhammer(a + 1, 4) - pochhammer(a + 2, 2) * (3 * n + a + 1) * x + (n - 1) * n * x * x
            )
        return -(n + 1) * (2 * n + a - 1 - x)


SHIFT5 = MixedIdentity("laguerre_shift5", g_alpha_shift=5)
ITERATED = MixedIdentity("laguerre_iterated", g_alpha_shift=0)
ITERATED_PLUS_ONE = MixedIdentity("laguerre_iterated_plus_one", g_alpha_shift=0, constant_shift=1.0)

IDENTITIES = {
    "shift5": SHIFT5,
    "laguerre_shift5": SHIFT5,
    "iterated": ITERATED,
    "laguerre_iterated": ITERATED,
}


def get_identity(name) -> MixedIdentity:
    if isinstance(name, MixedIdentity):
        return name
    try:
        return IDENTITIES[name]
    except KeyError:
        raise ParameterDomainError(f"unknown identity {name!r}") from None


def _check_identity_args(alpha, n, minimum):
    PolynomialFamily.laguerre(alpha)
    return check_degree(n, minimum)


def identity_residual(identity, alpha: float, n: int, x):
    """Relative mismatch |LHS - RHS| / scale of a mixed identity at ``x``.

    ``scale`` is the largest of |f g|, |G p_n| and |H p_{n+1}|.
    """
    identity = get_identity(identity)
    n = _check_identity_args(alpha, n, 2)
    lag = PolynomialFamily.laguerre(alpha)
    lhs = identity.f(alpha, n, x) * evaluate(identity.g_family(alpha), n - 2, x)
    t1 = identity.G(alpha, n, x) * evaluate(lag, n, x)
    t2 = identity.H(alpha, n, x) * evaluate(lag, n + 1, x)
    scale = np.maximum.reduce([np.abs(lhs), np.abs(t1), np.abs(t2)])
    scale = np.maximum(scale, np.finfo(float).tiny)
    res = np.abs(lhs - (t1 + t2)) / scale
    return float(res) if np.ndim(res) == 0 else res


def g2_quadratic(identity, alpha: float, n: int) -> tuple[float, float, float]:
    """Coefficients of the quadratic multiplying L_n^alpha in the identity."""
    identity = get_identity(identity)
    n = _check_identity_args(alpha, n, 2)
    return identity.quadratic(alpha, n)


@dataclass
class InterlacingReport:
    passed: bool
    common_zeros: list[float] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    counts: tuple[int, int] = (0, 0)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        r, cap = self.counts
        return f"interlacing {status} (common zeros {r}, cap {cap}, violations {len(self.violations)})"


def _values(z):
    if isinstance(z, ZeroSet):
        return np.asarray(z.zeros, dtype=float)
    return np.sort(np.asarray(z, dtype=float).ravel())


def _close(u, v, tol):
    return abs(u - v) <= tol * max(1.0, abs(u))


def common_zeros(a, b, tol: float = DEFAULT_COMMON_TOL) -> list[float]:
    """Midpoints of close pairs between ``a`` and ``b``, each point used at most once.

    Pairs are matched greedily in order of increasing distance.
    """
    av, bv = _values(a), _values(b)
    pairs = sorted(
        (abs(u - v), i, j)
        for i, u in enumerate(av)
        for j, v in enumerate(bv)
        if _close(u, v, tol)
    )
    used_a, used_b, out = set(), set(), []
    for _, i, j in pairs:
        if i in used_a or j in used_b:
            continue
        used_a.add(i)
        used_b.add(j)
        out.append(0.5 * (av[i] + bv[j]))
    return sorted(out)


def stieltjes_check(small, big, tol: float = DEFAULT_COMMON_TOL) -> InterlacingReport:
    """Check that each zero of ``small`` sits in its own gap between zeros of ``big``.

    A zero of ``small`` that coincides with a zero of ``big`` is recorded as
    a common zero, not a violation.
    """
    sv, bv = _values(small), _values(big)
    if len(sv) >= len(bv):
        raise ParameterDomainError("small must have fewer zeros than big")
    common = common_zeros(sv, bv, tol)
    violations = []
    seen = {}
    for s in sv:
        if any(_close(s, c, tol) for c in common):
            continue
        if not bv[0] < s < bv[-1]:
            violations.append(f"zero {s!r} outside ({bv[0]!r}, {bv[-1]!r})")
            continue
        j = int(np.searchsorted(bv, s))
        if j in seen:
            violations.append(
                f"zeros {seen[j]!r} and {s!r} share interval ({bv[j - 1]!r}, {bv[j]!r})"
            )
        else:
            seen[j] = s
    # at most min{m, n-m-1} common zeros between p_m and p_n
    cap = max(0, min(len(sv), len(bv) - len(sv) - 1))
    if len(common) > cap:
        violations.append(f"{len(common)} common zeros exceed cap {cap}")
    for c in common:
        if _close(c, bv[0], tol) or _close(c, bv[-1], tol):
            violations.append(f"common zero {c!r} is an extreme zero of big")
    return InterlacingReport(not violations, common, violations, (len(common), cap))


def _strictly_alternates(outer, inner):
    """True when outer[0] < inner[0] < outer[1] < ... < inner[-1] < outer[-1]."""
    if len(outer) != len(inner) + 1:
        return False
    merged = np.empty(len(outer) + len(inner))
    merged[0::2] = outer
    merged[1::2] = inner
    return bool(np.all(np.diff(merged) > 0))


def check_mixed_interlacing(p_zeros, g_zeros, G_roots, k, tol=DEFAULT_COMMON_TOL) -> InterlacingReport:
    """Verify the interlacing and common-zero conclusions for one mixed recurrence.

    ``p_zeros`` are the zeros of p_{n+1}, ``g_zeros`` those of g_{n-k}, and
    ``G_roots`` the k roots of the coefficient polynomial G_k.
    """
    w = _values(p_zeros)
    gz = _values(g_zeros)
    Gr = _values(G_roots)
    n = len(w) - 1
    cap = min(k, n - k)
    violations = []
    common = common_zeros(gz, w, tol)
    r = len(common)
    if r > cap:
        violations.append(f"{r} common zeros exceed cap {cap}")
    for c in common:
        if not any(_close(c, g, tol) for g in Gr):
            violations.append(f"common zero {c!r} is not a root of G")
        if _close(c, w[0], tol) or _close(c, w[-1], tol):
            violations.append(f"common zero {c!r} is an extreme zero of p")
    hit = [i for i, wi in enumerate(w) if any(_close(wi, c, tol) for c in common)]
    for i, j in zip(hit, hit[1:]):
        if j == i + 1:
            violations.append(f"successive zeros {w[i]!r}, {w[j]!r} are both common")

    def drop_common(vals):
        return [v for v in vals if not any(_close(v, c, tol) for c in common)]

    inner = np.sort(np.concatenate([drop_common(Gr), drop_common(gz), common]))
    outer = np.asarray(drop_common(w))
    if not _strictly_alternates(outer, inner):
        violations.append(
            f"{len(inner)} zeros of G*g (common zeros kept once) do not interlace "
            f"{len(outer)} remaining zeros of p"
        )
    return InterlacingReport(not violations, common, violations, (r, cap))


def verify_theorem22(identity, alpha: float, n: int, tol: float = DEFAULT_COMMON_TOL) -> InterlacingReport:
    """Check the interlacing and common-zero conclusions for one Laguerre identity.

    The zeros of L_{n+1}^alpha are compared against those of g = L_{n-2}^{alpha'}
    and the two roots of the quadratic coefficient G.
    """
    identity = get_identity(identity)
    n = _check_identity_args(alpha, n, 3)
    p = zeros(PolynomialFamily.laguerre(alpha), n + 1)
    g = zeros(identity.g_family(alpha), n - 2)
    try:
        G_roots = quadratic_extreme_roots(*identity.quadratic(alpha, n))
    except NoRealRootsError as exc:
        cap = min(identity.k, n - identity.k)
        return InterlacingReport(False, [], [f"G has no real roots: {exc}"], (0, cap))
    if G_roots[0] == G_roots[1]:
        return InterlacingReport(False, [], ["G has a double root"], (0, min(identity.k, n - identity.k)))
    return check_mixed_interlacing(p, g, G_roots, identity.k, tol)


def jacobi_point(alpha: float, beta: float, n: int, shifted: str = "alpha") -> float:
    """The point A_n for the Jacobi mixed recurrence with g = P_{n-1}^(alpha+4, beta).

    With ``shifted="beta"`` this is instead the point for g = P_{n-1}^(alpha, beta+4).
    """
    a, b = alpha, beta
    base = 2 * n * (n + a + b + 3)
    if shifted == "alpha":
        return (base + (a + 3) * (b - a)) / (base + (a + 3) * (a + b + 2))
    if shifted == "beta":
        return -(base + (b + 3) * (a - b)) / (base + (b + 3) * (a + b + 2))
    raise ParameterDomainError(f"shifted must be 'alpha' or 'beta', got {shifted!r}")


def verify_jacobi_point(alpha: float, beta: float, n: int, shifted: str = "alpha",
                        tol: float = DEFAULT_COMMON_TOL) -> InterlacingReport:
    """Check that A_n and the zeros of the shifted P_{n-1} interlace those of P_{n+1}^(alpha, beta)."""
    PolynomialFamily.jacobi(alpha, beta)
    n = check_degree(n, 1)
    a_n = jacobi_point(alpha, beta, n, shifted)
    p = zeros(PolynomialFamily.jacobi(alpha, beta), n + 1)
    if n >= 2:
        ga, gb = (alpha + 4, beta) if shifted == "alpha" else (alpha, beta + 4)
        g = zeros(PolynomialFamily.jacobi(ga, gb), n - 1)
    else:
        g = []
    return check_mixed_interlacing(p, g, [a_n], 1, tol)


def max_identity_residual(identity, alpha: float, n: int, points: int = 16) -> float:
    """Largest residual over the zeros of L_{n+1}^alpha, x = 0 and a grid across them."""
    zs = zeros(PolynomialFamily.laguerre(alpha), n + 1).zeros
    grid = np.linspace(0.0, 1.1 * zs[-1], points)
    xs = np.concatenate([zs, grid])
    return float(np.max(identity_residual(identity, alpha, n, xs)))
