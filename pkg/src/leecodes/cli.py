"""Command-line surface: bound evaluation, code inspection, constructions,
censuses, and reproduction of the published table and figure data.

Exit codes: 0 success, 1 input error, 2 budget refusal, 3 reference mismatch.
"""

from __future__ import annotations

import json
import sys

import click

from . import report as report_mod
from .bounds import CodeParams, evaluate_bounds
from .codes import BudgetError, LinearCode, format_code_text, parse_code_text
from .constructions import (EquidistantSpec, catalog_mld, equidistant_rank1,
                            equidistant_rank2, predict_support_subtype)
from .ring import Modulus
from .search import SearchSpace, max_lee_distance_census


def _fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_code(path: str) -> LinearCode:
    try:
        with open(path) as fh:
            return parse_code_text(fh.read())
    except FileNotFoundError:
        _fail(f"no such file: {path}")
    except ValueError as exc:
        _fail(str(exc))


def _subtype_from_flags(s, subtype, ks):
    if subtype:
        parts = [int(x) for x in subtype.split(",")]
        if len(parts) != s:
            raise ValueError(f"--subtype needs exactly s={s} entries")
        return tuple(parts)
    out = list(ks[:s])
    if any(k for k in ks[s:]):
        raise ValueError(f"--k{len(ks)} flags beyond s={s} must stay zero")
    return tuple(out)


@click.group()
def main():
    """Linear codes over Z/p^s Z in the Lee metric."""


_k_options = [click.option(f"--k{i}", default=0, show_default=True,
                           help=f"subtype multiplicity k_{i}") for i in range(1, 6)]


def _with_k_options(fn):
    for opt in reversed(_k_options):
        fn = opt(fn)
    return fn


@main.command("bounds")
@click.option("--file", "path", type=str, default=None, help="code file to evaluate")
@click.option("--p", type=int, default=None)
@click.option("--s", type=int, default=1, show_default=True)
@click.option("--n", type=int, default=None)
@click.option("--subtype", default=None, help="comma-separated k_1,...,k_s")
@_with_k_options
@click.option("--json", "as_json", is_flag=True, help="emit JSON instead of a table")
def cmd_bounds(path, p, s, n, subtype, k1, k2, k3, k4, k5, as_json):
    """Evaluate every bound for a parameter set or a concrete code."""
    try:
        if path is not None:
            code = _load_code(path)
            cells = evaluate_bounds(code)
            header = f"code over {code.modulus}, n={code.n}, subtype={code.subtype}, d_L={code.min_lee_distance()}"
        else:
            if p is None or n is None:
                raise ValueError("need --file, or --p/--n with a subtype")
            m = Modulus(p, s)
            st = _subtype_from_flags(s, subtype, (k1, k2, k3, k4, k5))
            params = CodeParams.from_subtype(m, n, st)
            cells = evaluate_bounds(params)
            header = f"parameters over {m}, n={n}, subtype={st}, k={params.k}"
    except BudgetError as exc:
        _fail(str(exc), 2)
    except ValueError as exc:
        _fail(str(exc))
    if as_json:
        doc = {name: {"value": str(c.value) if c.value is not None else None,
                      "floored": c.floored, "applicable": c.applicable,
                      "attained": c.attained,
                      **({"stated": c.stated} if c.stated is not None else {})}
               for name, c in cells.items()}
        click.echo(json.dumps(doc, indent=2))
        return
    click.echo(header)
    for name, c in cells.items():
        if not c.applicable:
            click.echo(f"  {name:<20} -")
            continue
        extra = "" if c.attained is None else f"  attained={c.attained}"
        shown = f"{c.floored}" if c.value == c.floored else f"{c.floored} (= floor {c.value})"
        if c.stated is not None and c.stated != c.floored:
            shown += f", stated form {c.stated}"
        click.echo(f"  {name:<20} {shown}{extra}")


@main.command("inspect")
@click.argument("path")
def cmd_inspect(path):
    """Structural report for a code file."""
    code = _load_code(path)
    try:
        info = report_mod.inspect_code(code)
    except BudgetError as exc:
        _fail(str(exc), 2)
    for key, value in info.items():
        click.echo(f"{key}: {value}")


@main.group("construct")
def cmd_construct():
    """Emit a named construction in the text code format."""


@cmd_construct.command("equidistant")
@click.option("--p", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--i", "level", type=int, required=True, help="level of the non-socle generator")
@click.option("--rank", type=click.Choice(["1", "2"]), required=True)
@click.option("--ell", type=int, default=1, show_default=True, help="replication factor")
@click.option("-o", "--out", type=str, default=None, help="write to a file instead of stdout")
def construct_equidistant(p, s, level, rank, ell, out):
    try:
        spec = EquidistantSpec(Modulus(p, s), level, int(rank))
        code = equidistant_rank1(spec) if spec.rank == 1 else equidistant_rank2(spec)
        if ell > 1:
            code = code.replicate(ell)
        comments = [
            f"shortest Lee-equidistant construction: rank {rank}, level i={level}"
            + (f", replicated {ell}-fold" if ell > 1 else ""),
            f"codewords={code.cardinality} lee_equidistant={code.is_lee_equidistant()} "
            f"weight={code.min_lee_distance()}",
            f"support_subtype={code.support_subtype()}",
        ]
        if ell == 1:
            comments.append(f"predicted_support_subtype={predict_support_subtype(spec)}")
    except BudgetError as exc:
        _fail(str(exc), 2)
    except ValueError as exc:
        _fail(str(exc))
    text = format_code_text(code, comments)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@cmd_construct.command("mld")
@click.option("--p", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--index", type=int, default=0, show_default=True,
              help="which catalog witness to emit (they are listed in a footer)")
@click.option("-o", "--out", type=str, default=None)
def construct_mld(p, s, n, index, out):
    try:
        codes = catalog_mld(Modulus(p, s), n)
    except ValueError as exc:
        _fail(str(exc))
    if not codes:
        _fail(f"no catalog witness for p={p}, s={s}, n={n}")
    if not (0 <= index < len(codes)):
        _fail(f"catalog holds {len(codes)} witnesses; --index out of range")
    code = codes[index]
    comments = [f"catalog witness {index + 1} of {len(codes)}, "
                f"d_L={code.min_lee_distance()}"]
    text = format_code_text(code, comments)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("census")
@click.option("--p", type=int, required=True)
@click.option("--s", type=int, default=1, show_default=True)
@click.option("--n", type=int, required=True)
@click.option("--subtype", default=None, help="comma-separated k_1,...,k_s")
@_with_k_options
@click.option("--budget", type=int, default=None, help="candidate budget override")
def cmd_census(p, s, n, subtype, k1, k2, k3, k4, k5, budget):
    """Exhaustive max-d_L census over one (p, s, n, subtype) space."""
    try:
        m = Modulus(p, s)
        st = _subtype_from_flags(s, subtype, (k1, k2, k3, k4, k5))
        kwargs = {"budget": budget} if budget else {}
        space = SearchSpace(m, n, st, **kwargs)
        result = max_lee_distance_census(space)
    except BudgetError as exc:
        _fail(str(exc), 2)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(result.to_json())


@main.command("table1")
@click.option("--csv", "csv_path", type=str, default=None, help="also write the CSV here")
@click.option("--no-census", is_flag=True, help="skip the max-d column (bounds only)")
def cmd_table1(csv_path, no_census):
    """Recompute the Z/4 comparison table and diff it against the published
    reference; exits 3 on any undocumented cell mismatch."""
    rep = report_mod.table_report(run_census=not no_census)
    csv_text = report_mod.table_csv(rep)
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(csv_text)
    else:
        click.echo(csv_text, nl=False)
    if rep.mismatches:
        click.echo("# mismatches against the published reference:")
        for mm in rep.mismatches:
            tag = "documented" if mm.documented else "UNDOCUMENTED"
            click.echo(f"#   row {mm.row:2d} {mm.column:<18} computed={mm.computed} "
                       f"published={mm.published} [{tag}]")
    else:
        click.echo("# all cells match the published reference")
    if rep.undocumented:
        sys.exit(3)


@main.command("figure")
@click.argument("fig_id", type=click.Choice(["1", "2", "3"]))
def cmd_figure(fig_id):
    """Emit the five bound curves of one comparison figure as CSV."""
    click.echo(report_mod.figure_csv(int(fig_id)), nl=False)


if __name__ == "__main__":
    main()
