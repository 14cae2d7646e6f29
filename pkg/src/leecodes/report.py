"""Reproduction of the published Z/4 comparison table and the three bound
comparison figures, with exact-rational arithmetic throughout.

Figure conventions were reverse-engineered from the published plotted
integers and are pinned here:

  * chiang_wolf          floor(A(p,s,s) * (n - k1 + 1))   (free-rank form)
  * rank_plotkin         floor(A(p,s,1) * (n - K + 1))    (floor of product)
  * wyner_graham         floor(n * avg * |C| / (|C| - 1))
  * shiromoto            M * (n - K + 1)                  (rank form: the
                         plotted curve tracks K, not ceil(k); see README)
  * alderson_huntemann   floor(M * (n - k)), k the exact rational type

Verification anchors at the first figure's origin: 671 = 61*11 (Chiang-Wolf,
A(3,5,5) = 61), 891 = 81*11 (rank averaging bound, A(3,5,1) = 81) and
1331 = 121*11 (Shiromoto, M = 121).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .bounds import CodeParams, coefficient_A, wyner_graham
from .codes import LinearCode
from .ring import Modulus
from .search import SearchSpace, max_lee_distance_census

__all__ = [
    "FIGURE_SPECS",
    "FIGURE_CURVES",
    "figure_points",
    "figure_csv",
    "TABLE_COLUMNS",
    "table_rows",
    "table_report",
    "table_csv",
    "reference_table",
]

# (modulus, fixed free rank); the second subtype entry sweeps 0..15 and the
# length is twice the rank.
FIGURE_SPECS = {
    1: (Modulus(3, 5), 10),
    2: (Modulus(5, 2), 15),
    3: (Modulus(5, 5), 10),
}

FIGURE_CURVES = ("chiang_wolf", "rank_plotkin", "wyner_graham",
                 "shiromoto", "alderson_huntemann")

K2_RANGE = range(16)


def _figure_params(m: Modulus, k1: int, k2: int) -> CodeParams:
    subtype = [0] * m.s
    subtype[0] = k1
    if m.s > 1:
        subtype[1] = k2
    K = k1 + k2
    return CodeParams.from_subtype(m, 2 * K, subtype)


def figure_points(fig_id: int) -> dict[str, list[int]]:
    """The five plotted curves of one figure, 16 integer points each."""
    m, k1 = FIGURE_SPECS[fig_id]
    out: dict[str, list[int]] = {name: [] for name in FIGURE_CURVES}
    a_top = coefficient_A(m, m.s)
    a_one = coefficient_A(m, 1)
    for k2 in K2_RANGE:
        params = _figure_params(m, k1, k2)
        n, K, k = params.n, params.K, params.k
        out["chiang_wolf"].append(math.floor(a_top * (n - k1 + 1)))
        out["rank_plotkin"].append(math.floor(a_one * (n - K + 1)))
        out["wyner_graham"].append(math.floor(wyner_graham(params)))
        out["shiromoto"].append(m.M * (n - K + 1))
        out["alderson_huntemann"].append(math.floor(Fraction(m.M) * (n - k)))
    return out


def figure_csv(fig_id: int) -> str:
    pts = figure_points(fig_id)
    lines = ["k2,bound_id,value"]
    for name in FIGURE_CURVES:
        for k2, v in zip(K2_RANGE, pts[name]):
            lines.append(f"{k2},{name},{v}")
    return "\n".join(lines) + "\n"


# -- the Z/4 table ---------------------------------------------------------------

TABLE_COLUMNS = ("z4_singleton", "shiromoto", "shiromoto_rank",
                 "alderson_huntemann", "wyner_graham", "chiang_wolf",
                 "rank_plotkin")


def reference_table() -> dict:
    with resources.files("leecodes.data").joinpath("z4_reference_table.json").open() as fh:
        return json.load(fh)


def _row_subtype(row: dict) -> tuple[int, int]:
    k1 = row["k1"]
    return (k1, row["K"] - k1)


def computed_cells(params: CodeParams) -> dict[str, int | None]:
    """One table row of bound values under the pinned table conventions."""
    m = params.modulus
    n, k, K, k1 = params.n, params.k, params.K, params.k1
    cells: dict[str, int | None] = {}
    cells["z4_singleton"] = math.floor(2 * (n - k)) + 1
    cells["shiromoto"] = math.floor(Fraction(m.M) * (n - k)) + 1
    cells["shiromoto_rank"] = m.M * (n - K + 1)
    cells["alderson_huntemann"] = (m.M * (n - int(k))
                                   if k.denominator == 1 and 1 < k < n else None)
    cells["wyner_graham"] = math.floor(wyner_graham(params))
    cells["chiang_wolf"] = (math.floor(coefficient_A(m, m.s) * (n - k1 + 1))
                            if params.is_free else None)
    level = m.s if params.is_free else 1
    cells["rank_plotkin"] = math.floor(coefficient_A(m, level) * (n - K + 1))
    return cells


@dataclass
class TableMismatch:
    row: int                 # 1-based row index in the reference table
    column: str
    computed: int | None
    published: int | None
    documented: bool


@dataclass
class TableReport:
    rows: list[dict]
    mismatches: list[TableMismatch]

    @property
    def undocumented(self) -> list[TableMismatch]:
        return [mm for mm in self.mismatches if not mm.documented]


def table_rows(run_census: bool = True) -> list[dict]:
    """Recompute every table row; `max_d` comes from an exhaustive census."""
    m = Modulus(2, 2)
    rows = []
    for ref in reference_table()["rows"]:
        params = CodeParams.from_subtype(m, ref["n"], _row_subtype(ref))
        row = {"n": ref["n"], "K": ref["K"], "k": str(Fraction(ref["k"])),
               "k1": ref["k1"]}
        if run_census:
            space = SearchSpace(m, ref["n"], _row_subtype(ref))
            row["max_d"] = max_lee_distance_census(space).max_d
        row.update(computed_cells(params))
        rows.append(row)
    return rows


def table_report(run_census: bool = True) -> TableReport:
    ref = reference_table()
    documented = {(a["row"], a["column"]) for a in ref["documented_anomalies"]}
    rows = table_rows(run_census=run_census)
    mismatches = []
    for idx, (computed, published) in enumerate(zip(rows, ref["rows"]), start=1):
        keys = TABLE_COLUMNS + (("max_d",) if run_census else ())
        for col in keys:
            if computed[col] != published[col]:
                mismatches.append(TableMismatch(
                    idx, col, computed[col], published[col],
                    (idx, col) in documented))
    return TableReport(rows, mismatches)


def table_csv(report: TableReport) -> str:
    header = ["n", "K", "k", "k1", "max_d", *TABLE_COLUMNS]
    lines = [",".join(header)]
    for row in report.rows:
        cells = [str(row.get(c, "")) if row.get(c) is not None else "-" for c in header]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# -- structural report used by the CLI inspect command ----------------------------

def inspect_code(code: LinearCode) -> dict:
    m = code.modulus
    info = {
        "ring": str(m),
        "n": code.n,
        "type_k": str(code.type_k),
        "subtype": list(code.subtype),
        "rank": code.rank,
        "free_rank": code.free_rank,
        "cardinality": code.cardinality,
        "support_subtype": list(code.support_subtype()),
        "socle_generators": [list(r) for r in code.socle().rows],
        "dual_generators": [list(r) for r in code.dual().rows],
    }
    if code.cardinality >= 2:
        info["min_hamming_distance"] = code.min_hamming_distance()
        info["min_lee_distance"] = code.min_lee_distance()
        info["lee_equidistant"] = code.is_lee_equidistant()
        info["average_lee_weight"] = str(code.average_lee_weight())
    else:
        info["trivial"] = True
    return info
