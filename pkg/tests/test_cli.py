import json
from fractions import Fraction

import pytest

from mvdop import cli
from mvdop.jack import JackTable


@pytest.fixture(autouse=True)
def cache_in_tmp(tmp_path, monkeypatch):
    monkeypatch.setenv("MVDOP_CACHE_DIR", str(tmp_path / "cache"))
    yield tmp_path


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_meixner_r1(capsys):
    code, out, _ = run(
        ["eval", "--family", "meixner", "--d", "1", "--r", "1",
         "--alpha", "2", "--c", "1/2", "--m", "1", "--x", "1"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["value"] == "1/2"


def test_eval_charlier_normalization(capsys):
    code, out, _ = run(
        ["eval", "--family", "charlier", "--d", "2", "--r", "2",
         "--a", "1", "--m", "0,0", "--x", "2,1"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["value"] == "1"


def test_eval_laguerre(capsys):
    code, out, _ = run(
        ["eval", "--family", "laguerre", "--d", "2", "--r", "1",
         "--alpha", "3", "--m", "1", "--u", "1/2"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["value"] == "5/2"  # alpha - u


def test_missing_parameter_exits_2(capsys):
    code, _, err = run(
        ["eval", "--family", "meixner", "--d", "1", "--r", "1",
         "--alpha", "2", "--m", "1", "--x", "1"],
        capsys,
    )
    assert code == 2
    assert "needs --c" in err


def test_pole_exits_3(capsys):
    code, _, err = run(
        ["eval", "--family", "meixner", "--d", "1", "--r", "1",
         "--alpha", "-1", "--c", "1/2", "--m", "2", "--x", "2"],
        capsys,
    )
    assert code == 3
    assert "vanishes" in err


def test_bad_d_exits_2(capsys):
    code, _, _ = run(["conjecture", "--d", "0", "--r", "2"], capsys)
    assert code == 2


def test_verify_krawtchouk_orthogonality_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(
        ["verify", "orthogonality", "--family", "krawtchouk", "--d", "2",
         "--r", "2", "--N", "2", "--p", "1/3", "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    rep = json.loads(out_path.read_text())
    assert rep["summary"]["passed"] == rep["summary"]["total"]
    assert all(c["residual"] == "0" for c in rep["cases"])


def test_verify_difference_classical(capsys):
    code, out, _ = run(
        ["verify", "difference", "--family", "meixner", "--d", "2", "--r", "1",
         "--alpha", "2", "--c", "1/2", "--max-weight", "3"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["summary"]["passed"] == rep["summary"]["total"] == 16


def test_verify_failing_case_exits_1_report_still_written(tmp_path, capsys):
    # truncation far too shallow for the tolerance: the report must be
    # written and the exit code must signal verification failure
    out_path = tmp_path / "fail.json"
    code, _, _ = run(
        ["verify", "orthogonality", "--family", "meixner", "--d", "2", "--r", "2",
         "--alpha", "7/2", "--c", "1/3", "--max-weight", "2",
         "--truncation-weights", "4,6", "--out", str(out_path)],
        capsys,
    )
    assert code == 1
    rep = json.loads(out_path.read_text())
    assert rep["summary"]["passed"] < rep["summary"]["total"]


def test_verify_genfunc_records_sign(capsys):
    code, out, _ = run(
        ["verify", "genfunc", "--family", "krawtchouk", "--d", "2", "--r", "2",
         "--p", "1/3", "--N", "2", "--degree", "3", "--max-weight", "2"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["params"]["sign_convention"] in ("plus", "minus")


def test_verify_master_genfunc(capsys):
    code, out, _ = run(
        ["verify", "master-genfunc", "--family", "charlier", "--d", "5/2", "--r", "2",
         "--a", "2", "--degree", "2"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["summary"]["max_residual"] == 0.0


def test_verify_orthogonality_generator(capsys):
    code, out, _ = run(
        ["verify", "orthogonality-generator", "--d", "2", "--r", "1",
         "--alpha", "2", "--c", "1/6", "--degree", "1",
         "--truncation-weights", "10,14,18"],
        capsys,
    )
    assert code == 0


def test_verify_limits(capsys):
    code, out, _ = run(
        ["verify", "limits", "--d", "2", "--r", "2", "--a", "1",
         "--max-weight", "1", "--scales", "100,10000,1000000"],
        capsys,
    )
    assert code == 0


def test_table_csv_golden(capsys):
    argv = ["table", "--family", "charlier", "--d", "2", "--r", "2",
            "--a", "2", "--max-degree", "1", "--format", "csv"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,x,value"
    assert lines[1] == "0,0 | 0,0 | 1"
    code2, out2, _ = run(argv, capsys)
    assert out2 == out  # byte-identical rerun


def test_table_symmetric_under_index_swap(capsys):
    code, out, _ = run(
        ["table", "--family", "meixner", "--d", "2", "--r", "2", "--alpha", "7/2",
         "--c", "1/3", "--max-degree", "2", "--format", "json"],
        capsys,
    )
    assert code == 0
    rows = {(row["m"], row["x"]): row["value"] for row in json.loads(out)["rows"]}
    for (m, x), v in rows.items():
        assert rows[(x, m)] == v


def test_conjecture_cli(tmp_path, capsys):
    out_path = tmp_path / "conj.json"
    code, _, _ = run(
        ["conjecture", "--d", "2", "--r", "2", "--max-degree", "2",
         "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    rep = json.loads(out_path.read_text())
    assert rep["params"]["classical"] is True


def test_cache_round_trip_bit_identical(tmp_path, capsys):
    run(["eval", "--family", "charlier", "--d", "5/2", "--r", "2",
         "--a", "1", "--m", "2,1", "--x", "1,0"], capsys)
    cache_file = next((tmp_path / "cache").glob("jack-r2-d5_2.json"))
    first = cache_file.read_text()
    cached = JackTable.from_json_dict(json.loads(first))
    fresh = JackTable(2, Fraction(5, 2))
    fresh.extend(cached.built_degree)
    assert json.dumps(fresh.to_json_dict(), indent=None, sort_keys=False) == first
    # a second run must reuse the cache unchanged
    run(["eval", "--family", "charlier", "--d", "5/2", "--r", "2",
         "--a", "1", "--m", "2,1", "--x", "1,0"], capsys)
    assert cache_file.read_text() == first
