"""Command-line interface.

    extremezeros table --id 2 --format csv
    extremezeros bounds --family jacobi --alpha 0 --beta 0 --n 1
    extremezeros verify --identity iterated --alpha 0.3 --n 10
    extremezeros sweep --trials 200 --seed 42 --max-n 40

Exit codes: 0 success, 2 parameter error, 3 property violation,
4 convergence failure.
"""
from __future__ import annotations

import functools
import json
import sys

import click

from .bounds import LOWER_ON_LARGEST, bounds_for
from .errors import ConvergenceError, ExtremeZerosError, ParameterDomainError
from .interlace import get_identity, max_identity_residual, verify_theorem22
from .polyfam import PolynomialFamily
from .sweep import run_sweep
from .tables import render_table
from .zerofind import zeros

EXIT_PARAMETER = 2
EXIT_VIOLATION = 3
EXIT_CONVERGENCE = 4

RESIDUAL_TOL = 1e-9


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ConvergenceError as exc:
            click.echo(f"error: {exc} (bracket {exc.bracket})", err=True)
            sys.exit(EXIT_CONVERGENCE)
        except (ParameterDomainError, ExtremeZerosError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PARAMETER)

    return wrapper


@click.group()
def cli():
    """Extreme zeros of Laguerre, Jacobi and Gegenbauer polynomials."""


@cli.command()
@click.option("--id", "table_id", type=click.IntRange(1, 4), required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@_handle_errors
def table(table_id, fmt):
    """Recompute one of the four comparison tables."""
    click.echo(render_table(table_id, fmt), nl=False)


def _family(family, alpha, beta, lam):
    if family == "laguerre":
        if alpha is None:
            raise ParameterDomainError("--alpha is required for laguerre")
        return PolynomialFamily.laguerre(alpha)
    if family == "jacobi":
        if alpha is None or beta is None:
            raise ParameterDomainError("--alpha and --beta are required for jacobi")
        return PolynomialFamily.jacobi(alpha, beta)
    if lam is None:
        raise ParameterDomainError("--lambda is required for gegenbauer")
    return PolynomialFamily.gegenbauer(lam)


def bounds_report(fam: PolynomialFamily, n: int) -> dict:
    """True extreme zeros of the degree-(n+1) member and every applicable bound, tightest first."""
    zs = zeros(fam, n + 1)
    entries = []
    for b in bounds_for(fam, n):
        if not b.applicable:
            continue
        target = zs.largest if b.kind == LOWER_ON_LARGEST else zs.smallest
        entries.append({
            "method": b.method,
            "kind": b.kind,
            "value": b.value,
            "gap": abs(target - b.value),
            "note": b.note,
        })
    entries.sort(key=lambda e: (e["kind"], e["gap"]))
    return {
        "family": fam.kind,
        "params": list(fam.params),
        "n": n,
        "degree": n + 1,
        "smallest_zero": zs.smallest,
        "largest_zero": zs.largest,
        "bounds": entries,
    }


@cli.command()
@click.option("--family", type=click.Choice(["laguerre", "jacobi", "gegenbauer"]), required=True)
@click.option("--alpha", type=float)
@click.option("--beta", type=float)
@click.option("--lambda", "lam", type=float)
@click.option("--n", type=int, required=True, help="Bounds refer to the degree n+1 polynomial.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@_handle_errors
def bounds(family, alpha, beta, lam, n, fmt):
    """Compare every bound with the true extreme zeros of the degree n+1 polynomial."""
    fam = _family(family, alpha, beta, lam)
    rep = bounds_report(fam, n)
    if fmt == "json":
        click.echo(json.dumps(rep, indent=2))
    elif fmt == "csv":
        click.echo("method,kind,value,gap,true_zero")
        for e in rep["bounds"]:
            target = rep["largest_zero"] if e["kind"] == LOWER_ON_LARGEST else rep["smallest_zero"]
            click.echo(f"{e['method']},{e['kind']},{e['value']:.17g},{e['gap']:.17g},{target:.17g}")
    else:
        click.echo(f"{fam.label()}, degree {n + 1}")
        click.echo(f"smallest zero {rep['smallest_zero']:.6g}")
        click.echo(f"largest zero  {rep['largest_zero']:.6g}")
        for e in rep["bounds"]:
            note = f"  [{e['note']}]" if e["note"] else ""
            click.echo(f"  {e['method']:<40} {e['value']:>12.6g}  gap {e['gap']:.3g}{note}")


@cli.command()
@click.option("--identity", type=click.Choice(["shift5", "iterated"]), required=True)
@click.option("--alpha", type=float, required=True)
@click.option("--n", type=int, required=True)
@_handle_errors
def verify(identity, alpha, n):
    """Check one mixed Laguerre identity and its interlacing conclusions."""
    ident = get_identity(identity)
    residual = max_identity_residual(ident, alpha, n)
    rep = verify_theorem22(ident, alpha, n)
    click.echo(f"residual {residual:.3e}")
    click.echo(rep.summary())
    for c in rep.common_zeros:
        click.echo(f"  common zero {c:.17g}")
    for v in rep.violations:
        click.echo(f"  violation: {v}")
    if residual > RESIDUAL_TOL or not rep.passed:
        record = {"identity": ident.name, "alpha": alpha, "n": n, "residual": residual,
                  "violations": rep.violations}
        click.echo(json.dumps(record), err=True)
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-n", "max_n", type=int, default=40, show_default=True)
@_handle_errors
def sweep(trials, seed, max_n):
    """Randomized bracketing and interlacing checks."""
    res = run_sweep(trials, seed, max_n)
    status = "PASS" if res.ok else "FAIL"
    click.echo(f"{res.passed}/{res.trials} {status}")
    if not res.ok:
        for f in res.failures:
            click.echo(json.dumps(f), err=True)
        sys.exit(EXIT_VIOLATION)


def main(argv=None):
    cli.main(args=argv, prog_name="extremezeros")


if __name__ == "__main__":
    main()
