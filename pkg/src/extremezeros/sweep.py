"""Randomized verification sweeps over the three families."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import LOWER_ON_LARGEST, bounds_for
from .interlace import SHIFT5, ITERATED, stieltjes_check, verify_jacobi_point, verify_theorem22
from .polyfam import PolynomialFamily, check_degree
from .zerofind import zeros

# half-open parameter ranges (low, high]
LAGUERRE_ALPHA = (-1.0, 400.0)
JACOBI_PARAM = (-1.0, 150.0)
GEGENBAUER_LAMBDA = (-0.5, 120.0)


@dataclass
class SweepResult:
    trials: int
    passed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _draw(rng, low, high):
    # (low, high]: never hits the open end of the parameter domain
    return float(high - rng.uniform(0.0, high - low))


def draw_family(rng, kind) -> PolynomialFamily:
    if kind == "laguerre":
        return PolynomialFamily.laguerre(_draw(rng, *LAGUERRE_ALPHA))
    if kind == "jacobi":
        return PolynomialFamily.jacobi(_draw(rng, *JACOBI_PARAM), _draw(rng, *JACOBI_PARAM))
    return PolynomialFamily.gegenbauer(_draw(rng, *GEGENBAUER_LAMBDA))


def bracketing_violations(family: PolynomialFamily, n: int) -> list[str]:
    """Applicable bounds on the degree-(n+1) member that fail to bracket its extreme zero strictly."""
    zs = zeros(family, n + 1)
    out = []
    for b in bounds_for(family, n):
        if not b.applicable:
            continue
        if b.kind == LOWER_ON_LARGEST and not b.value < zs.largest:
            out.append(f"{b.method}={b.value!r} >= largest zero {zs.largest!r}")
        elif b.kind != LOWER_ON_LARGEST and not b.value > zs.smallest:
            out.append(f"{b.method}={b.value!r} <= smallest zero {zs.smallest!r}")
    return out


def check_point(family: PolynomialFamily, n: int) -> list[str]:
    """All property checks for one (family, n) draw; returns violation messages."""
    out = bracketing_violations(family, n)
    rep = stieltjes_check(zeros(family, n), zeros(family, n + 1))
    out += [f"consecutive interlacing: {v}" for v in rep.violations]
    if family.kind == "laguerre" and n >= 3:
        for ident in (SHIFT5, ITERATED):
            rep = verify_theorem22(ident, family.params[0], n)
            out += [f"{ident.name}: {v}" for v in rep.violations]
    elif family.kind == "jacobi":
        for shifted in ("alpha", "beta"):
            rep = verify_jacobi_point(*family.params, n, shifted)
            out += [f"jacobi point ({shifted}+4): {v}" for v in rep.violations]
    return out


def run_sweep(trials: int, seed: int, max_n: int) -> SweepResult:
    """Run ``trials`` trials, each drawing one parameter point per family.

    Every trial has its own generator derived from ``(seed, trial)``, so
    results do not depend on evaluation order.
    """
    trials = check_degree(trials, 1, "trials")
    max_n = check_degree(max_n, 1, "max_n")
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    result = SweepResult(trials)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        trial_failures = []
        for kind in ("laguerre", "jacobi", "gegenbauer"):
            fam = draw_family(rng, kind)
            n = int(rng.integers(1, max_n + 1))
            for msg in check_point(fam, n):
                trial_failures.append(
                    {"trial": t, "family": fam.kind, "params": list(fam.params), "n": n, "violation": msg}
                )
        if trial_failures:
            result.failures.extend(trial_failures)
        else:
            result.passed += 1
    return result
