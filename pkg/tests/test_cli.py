import json

from click.testing import CliRunner

from leecodes.cli import main
from leecodes.codes import parse_code_text


def run(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def test_bounds_from_parameters():
    res = run("bounds", "--p", "3", "--s", "5", "--n", "20", "--k1", "10", "--k2", "0")
    assert res.exit_code == 0
    out = res.output
    assert "chiang_wolf" in out and "671" in out
    assert "891" in out      # rank averaging bound
    assert "1214" in out     # Wyner-Graham
    assert "1331" in out     # Shiromoto max-d form
    assert "1210" in out     # Alderson-Huntemann


def test_bounds_z4_row():
    res = run("bounds", "--p", "2", "--s", "2", "--n", "2", "--k1", "0", "--k2", "1",
              "--json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["shiromoto_rank"]["floored"] == 4
    assert doc["z4_singleton"]["floored"] == 4


def test_bounds_from_file_reports_attainment(tmp_path):
    path = tmp_path / "c2.code"
    path.write_text("5 1 2\n1 2\n")
    res = run("bounds", "--file", str(path), "--json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["shiromoto"]["attained"] is True


def test_bounds_input_errors():
    assert run("bounds", "--p", "4", "--s", "1", "--n", "2", "--k1", "1").exit_code == 1
    assert run("bounds").exit_code == 1


def test_inspect(tmp_path):
    path = tmp_path / "c.code"
    path.write_text("2 2 2\n2 2\n")
    res = run("inspect", str(path))
    assert res.exit_code == 0
    assert "type_k: 1/2" in res.output
    assert "rank: 1" in res.output
    assert "min_lee_distance: 4" in res.output

    path.write_text("5 1 4\n1 2 1 3\n")
    res = run("inspect", str(path))
    assert "lee_equidistant: True" in res.output
    assert "min_lee_distance: 6" in res.output

    path.write_text("5 1 2\n0 0\n")
    res = run("inspect", str(path))
    assert res.exit_code == 0
    assert "trivial: True" in res.output


def test_inspect_missing_file():
    assert run("inspect", "/nonexistent.code").exit_code == 1


def test_construct_equidistant_round_trip():
    res = run("construct", "equidistant", "--p", "3", "--s", "2", "--i", "1",
              "--rank", "1")
    assert res.exit_code == 0
    code = parse_code_text(res.output)
    assert code.n == 11
    assert code.min_lee_distance() == 27
    assert "weight=27" in res.output
    assert "lee_equidistant=True" in res.output

    res = run("construct", "equidistant", "--p", "3", "--s", "2", "--i", "1",
              "--rank", "2")
    code = parse_code_text(res.output)
    assert code.n == 12 and len(code.given_rows) == 2


def test_construct_equidistant_rejects_p2():
    res = run("construct", "equidistant", "--p", "2", "--s", "2", "--i", "1",
              "--rank", "2")
    assert res.exit_code == 1


def test_construct_mld():
    res = run("construct", "mld", "--p", "2", "--s", "3", "--n", "4")
    assert res.exit_code == 0
    code = parse_code_text(res.output)
    assert code.given_rows == ((4, 4, 4, 4),)
    assert "d_L=16" in res.output
    assert run("construct", "mld", "--p", "7", "--s", "1", "--n", "3").exit_code == 1


def test_census_command():
    res = run("census", "--p", "2", "--s", "2", "--n", "3", "--k1", "1", "--k2", "1")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["max_lee_distance"] == 2

    res = run("census", "--p", "5", "--n", "2", "--k1", "1")
    doc = json.loads(res.output)
    assert doc["max_lee_distance"] == 3
    assert len(doc["optimal_generators"]) == 1  # one class, led by <(1,2)>

    # budget refusal is exit code 2
    res = run("census", "--p", "3", "--s", "2", "--n", "4", "--k1", "2", "--k2", "1",
              "--budget", "10")
    assert res.exit_code == 2


def test_table1_command(tmp_path):
    out = tmp_path / "table.csv"
    res = run("table1", "--no-census", "--csv", str(out))
    assert res.exit_code == 0, res.output
    assert "documented" in res.output
    assert "UNDOCUMENTED" not in res.output
    assert out.read_text().startswith("n,K,k,k1,max_d")


def test_figure_command_stable():
    a = run("figure", "1")
    b = run("figure", "1")
    assert a.exit_code == 0 and a.output == b.output
    assert a.output.splitlines()[0] == "k2,bound_id,value"
    assert "0,chiang_wolf,671" in a.output
    assert "0,shiromoto,1331" in a.output
