"""Recomputation of the four extreme-zero comparison tables."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .bounds import gegenbauer_max_lower, jacobi_max_lower, laguerre_max_lower, laguerre_min_upper
from .polyfam import PolynomialFamily
from .zerofind import zeros


@dataclass(frozen=True)
class TableSpec:
    title: str
    param_names: tuple[str, ...]
    points: tuple[tuple, ...]
    zero_column: str
    methods: tuple[str, ...]


TABLES = {
    1: TableSpec(
        "Comparison of upper bounds for the smallest zero of L_{n+1}^alpha",
        ("alpha", "n"),
        ((340.56, 12), (65.3, 20), (-0.9, 100), (-0.9, 3)),
        "smallest_zero",
        ("laguerre.min.driver_jordaan", "laguerre.min.gupta_muldoon",
         "laguerre.min.szego", "laguerre.min.hahn"),
    ),
    2: TableSpec(
        "Comparison of lower bounds for the largest zero of L_{n+1}^alpha",
        ("alpha", "n"),
        ((340.56, 12), (65.3, 20), (-0.9, 100), (-0.9, 4)),
        "largest_zero",
        ("laguerre.max.driver_jordaan", "laguerre.max.szego",
         "laguerre.max.bottema", "laguerre.max.neumann"),
    ),
    3: TableSpec(
        "Comparison of lower bounds for the largest zero of P_{n+1}^(alpha,beta)",
        ("n", "alpha", "beta"),
        ((3, -0.9, -0.8), (15, -0.9, -0.8), (11, 30.9, -0.8),
         (18, 30.9, 32.8), (3, 30.9, 32.8), (3, 0.9, 132.8)),
        "largest_zero",
        ("jacobi.max.driver_jordaan", "jacobi.max.szego_a", "jacobi.max.szego_b"),
    ),
    4: TableSpec(
        "Comparison of lower bounds for the largest zero of C_{n+1}^lambda",
        ("n", "lambda"),
        ((30, -0.49), (3, -0.4956), (50, 30.9), (5, 60.49)),
        "largest_zero",
        ("gegenbauer.max.jacobi_specialization", "gegenbauer.max.squared",
         "gegenbauer.max.szego_squared"),
    ),
}


@dataclass(frozen=True)
class TableRow:
    params: dict
    zero: float
    bounds: dict  # method id -> float, or None where the bound does not apply


def _row(table_id, point):
    spec = TABLES[table_id]
    p = dict(zip(spec.param_names, point))
    n = p["n"]
    if table_id in (1, 2):
        fam = PolynomialFamily.laguerre(p["alpha"])
        fn = laguerre_min_upper if table_id == 1 else laguerre_max_lower
        results = [fn(p["alpha"], n, m) for m in spec.methods]
    elif table_id == 3:
        fam = PolynomialFamily.jacobi(p["alpha"], p["beta"])
        results = [jacobi_max_lower(p["alpha"], p["beta"], n, m) for m in spec.methods]
    else:
        fam = PolynomialFamily.gegenbauer(p["lambda"])
        results = [gegenbauer_max_lower(p["lambda"], n, m) for m in spec.methods]
    zs = zeros(fam, n + 1)
    zero = zs.smallest if spec.zero_column == "smallest_zero" else zs.largest
    return TableRow(p, zero, {r.method: r.value for r in results})


def compute_table(table_id: int) -> list[TableRow]:
    if table_id not in TABLES:
        raise KeyError(f"no table {table_id}; choose 1-4")
    return [_row(table_id, pt) for pt in TABLES[table_id].points]


def columns(table_id):
    spec = TABLES[table_id]
    return [*spec.param_names, spec.zero_column, *spec.methods]


def _fmt(value, digits):
    if value is None:
        return "NA"
    return f"{value:.{digits}g}"


def _param(value):
    return str(value) if isinstance(value, int) else repr(float(value))


def _cells(table_id, row, digits):
    spec = TABLES[table_id]
    out = [_param(row.params[k]) for k in spec.param_names]
    out.append(_fmt(row.zero, digits))
    out += [_fmt(row.bounds[m], digits) for m in spec.methods]
    return out


def render_csv(table_id, rows, digits=17):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns(table_id))
    for row in rows:
        w.writerow(_cells(table_id, row, digits))
    return buf.getvalue()


def render_text(table_id, rows, digits=6):
    head = columns(table_id)
    body = [_cells(table_id, r, digits) for r in rows]
    widths = [max(len(c) for c in col) for col in zip(head, *body)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
    out = [f"Table {table_id}: {TABLES[table_id].title}", line(head)]
    out += [line(r) for r in body]
    return "\n".join(out) + "\n"


def render_json(table_id, rows, digits=17):
    """JSON with numbers written at ``digits`` significant digits; NA cells become null."""
    def num(v):
        return "null" if v is None else f"{v:.{digits}g}"

    spec = TABLES[table_id]
    items = []
    for row in rows:
        fields = [f'"{k}": {_param(row.params[k])}' for k in spec.param_names]
        fields.append(f'"{spec.zero_column}": {num(row.zero)}')
        fields += [f'"{m}": {num(row.bounds[m])}' for m in spec.methods]
        items.append("    {" + ", ".join(fields) + "}")
    cols = ", ".join(f'"{c}"' for c in columns(table_id))
    return (
        "{\n"
        f'  "table": {table_id},\n'
        f'  "title": "{spec.title}",\n'
        f'  "columns": [{cols}],\n'
        '  "rows": [\n' + ",\n".join(items) + "\n  ]\n}\n"
    )


RENDERERS = {"text": render_text, "csv": render_csv, "json": render_json}


def render_table(table_id: int, fmt: str = "text") -> str:
    return RENDERERS[fmt](table_id, compute_table(table_id))
