"""Text renderings of dimension tables: plain, CSV, JSON and LaTeX."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .contributions import TERM_NAMES, Weight
from .dimension import DimensionResult, dim_cusp_forms
from .level import Level

FORMATS = ("plain", "csv", "json", "latex")


@dataclass(frozen=True)
class Table:
    level: Level
    ks: tuple[int, ...]
    js: tuple[int, ...]
    cells: dict[tuple[int, int], DimensionResult]  # (j, k) -> result

    def value(self, j: int, k: int) -> int:
        return self.cells[(j, k)].dimension


def compute_table(level: Level, ks: Sequence[int], js: Sequence[int]) -> Table:
    cells = {(j, k): dim_cusp_forms(Weight(k, j), level) for j in js for k in ks}
    return Table(level, tuple(ks), tuple(js), cells)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def render_plain(t: Table) -> str:
    width = max(len(str(v.dimension)) for v in t.cells.values())
    width = max(width, *(len(str(k)) for k in t.ks), 3)
    head = "j\\k".rjust(4) + "".join(str(k).rjust(width + 1) for k in t.ks)
    lines = [f"dim S_{{k,j}}({t.level})", head]
    for j in t.js:
        lines.append(
            str(j).rjust(4) + "".join(str(t.value(j, k)).rjust(width + 1) for k in t.ks)
        )
    return "\n".join(lines) + "\n"


def render_csv(t: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d1", "d2", "k", "j", "dim", "validity"])
    for j in t.js:
        for k in t.ks:
            r = t.cells[(j, k)]
            w.writerow([t.level.D1, t.level.D2, k, j, r.dimension, r.validity.value])
    return buf.getvalue()


def render_json(t: Table, with_breakdown: bool = False) -> str:
    out = []
    for j in t.js:
        for k in t.ks:
            r = t.cells[(j, k)]
            rec = {
                "d1": t.level.D1,
                "d2": t.level.D2,
                "k": k,
                "j": j,
                "dim": r.dimension,
                "validity": r.validity.value,
            }
            if with_breakdown:
                terms = r.breakdown.h + r.breakdown.i
                rec["breakdown"] = {n: fraction_str(v) for n, v in zip(TERM_NAMES, terms)}
                rec["breakdown"]["total"] = fraction_str(r.breakdown.total)
            out.append(rec)
    return json.dumps(out, indent=2) + "\n"


def render_latex(t: Table) -> str:
    """A tabular laid out like the published tables: rows j, columns k.

    A rule separates the formal columns (k <= 4) from the proven ones.
    """
    n_formal = sum(1 for k in t.ks if k <= 4)
    n_proven = len(t.ks) - n_formal
    groups = [g for g in ("c" * n_formal, "c" * n_proven) if g]
    cols = "|c|" + "|".join(groups) + "|"
    lines = [
        f"\\begin{{tabular}}{{{cols}}} \\hline",
        "$j\\backslash k$ &" + "&".join(str(k) for k in t.ks) + " \\\\ \\hline",
    ]
    for j in t.js:
        row = "&".join(str(t.value(j, k)) for k in t.ks)
        lines.append(f"{j}&{row} \\\\ \\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render(t: Table, fmt: str, with_breakdown: bool = False) -> str:
    if fmt == "plain":
        return render_plain(t)
    if fmt == "csv":
        return render_csv(t)
    if fmt == "json":
        return render_json(t, with_breakdown)
    if fmt == "latex":
        return render_latex(t)
    raise ValueError(f"unknown format {fmt!r}")
