import csv
import json

import pytest

import symcc.cli as cli
from symcc.algebra import FactoredGF, LaurentPoly, series_expand
from symcc.cli import ParseError, main, parse_batch, parse_vector


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_parse_vector():
    assert parse_vector("-1,1,1") == [-1, 1, 1]
    assert parse_vector("  -1  3 ") == [-1, 3]
    with pytest.raises(ParseError) as err:
        parse_vector("-1,a,1")
    assert err.value.token == 2


def test_parse_batch_skips_comments_and_reports_lines():
    assert parse_batch("# header\n\n-1,1,1\n  # indented\n-1 3\n") == [[-1, 1, 1], [-1, 3]]
    with pytest.raises(ParseError) as err:
        parse_batch("-1,1,1\n\n1,x\n")
    assert err.value.line == 3 and err.value.token == 2


def test_compute_triangle(capsys):
    code, out = run(capsys, "compute", "--a", "-1,1,1", "--series", "6")
    assert code == 0
    (rec,) = json.loads(out)["results"]
    assert rec["engine"] == "t1" and rec["sorted"] == [-1, 1, 1]
    assert rec["numerator"] == [[0, "1"], [2, "2"], [4, "2"], [6, "1"]]
    assert rec["denominators"] == [2, 3, 4]
    assert rec["series"] == [1, 0, 3, 1, 6, 3, 10]


def test_compute_single_part(capsys):
    code, out = run(capsys, "compute", "--a=1")
    (rec,) = json.loads(out)["results"]
    assert code == 0 and rec["numerator"] == [[0, "1"]] and rec["denominators"] == [1]


def test_compute_oracle_only(capsys):
    code, out = run(capsys, "compute", "--a", "1,1", "--series", "5")
    (rec,) = json.loads(out)["results"]
    assert code == 0 and rec["oracle_only"] and rec["engine"] == "oracle"
    assert rec["series"] == [1, 2, 3, 4, 5, 6] and rec["numerator"] is None


def test_compute_t2_reports_lattice(capsys):
    code, out = run(capsys, "compute", "--a", "-1,-1,4", "--no-reduce")
    (rec,) = json.loads(out)["results"]
    assert rec["engine"] == "t2" and rec["lattice_points"] == 4
    assert rec["generators"] == [[3, 1, 1], [4, 4, 2], [1, 1, 1]]


def test_compute_json_roundtrip_and_order(capsys, tmp_path):
    batch = tmp_path / "v.txt"
    batch.write_text("# mixed\n-2,1,2\n-1 3\n1,1\n-1,-1,4\n")
    code, out = run(capsys, "compute", "--input", str(batch), "--series", "15", "--jobs", "2")
    assert code == 0
    recs = json.loads(out)["results"]
    assert [r["input"] for r in recs] == [[-2, 1, 2], [-1, 3], [1, 1], [-1, -1, 4]]
    for r in recs:
        if r["numerator"] is None:
            continue
        num = LaurentPoly({e: int(c) for e, c in r["numerator"]})
        assert series_expand(FactoredGF(num, tuple(r["denominators"])), 15) == r["series"]
        assert [e for e, _ in r["numerator"]] == sorted(e for e, _ in r["numerator"])


def test_forcing_t2_on_sum_one_keeps_series(capsys):
    _, out1 = run(capsys, "compute", "--a", "-2,0,1,2", "--series", "20")
    _, out2 = run(capsys, "compute", "--a", "-2,0,1,2", "--series", "20", "--engine", "t2")
    r1, r2 = json.loads(out1)["results"][0], json.loads(out2)["results"][0]
    assert r1["engine"] == "t1" and r2["engine"] == "t2"
    assert r1["series"] == r2["series"]


def test_compute_validation_failure_exit_2(capsys):
    code, out = run(capsys, "compute", "--a", "-1,3", "--engine", "t1")
    assert code == 2 and "error" in json.loads(out)["results"][0]
    code, _ = run(capsys, "compute", "--a", "-1,a,1")
    assert code == 2
    code, _ = run(capsys, "compute")
    assert code == 2


def test_compute_multi(capsys):
    code, out = run(capsys, "compute", "--a", "-1,2", "--multi")
    rec = json.loads(out)["results"][0]
    assert code == 0 and len(rec["multi"]) == 2
    assert all(len(t["denominators"]) == 2 for t in rec["multi"])


def test_compute_text_format(capsys):
    code, out = run(capsys, "compute", "--a", "-1,3", "--format", "text", "--series", "4")
    assert code == 0 and "engine = t2" in out and "[1, 0, 1, 2, 3]" in out


def test_verify_ok(capsys, tmp_path):
    batch = tmp_path / "v.txt"
    batch.write_text("-1,1,1\n-1,3\n-2,1,2\n")
    code, out = run(capsys, "verify", "--input", str(batch), "--max-weight", "12")
    assert code == 0 and "0 mismatches" in out


def test_verify_empty(capsys, tmp_path):
    batch = tmp_path / "v.txt"
    batch.write_text("# nothing\n")
    code, out = run(capsys, "verify", "--input", str(batch), "--max-weight", "5")
    assert code == 0 and "checked 0 vectors" in out


def test_verify_detects_corruption(capsys, monkeypatch):
    real = cli.gf_q_t1

    def corrupted(cv):
        gf = real(cv)
        return FactoredGF(gf.numerator + LaurentPoly.monomial(4), gf.denominators)

    monkeypatch.setattr(cli, "gf_q_t1", corrupted)
    code, out = run(capsys, "verify", "--a", "-1,1,1", "--max-weight", "8")
    assert code == 1
    assert "MISMATCH vector=[-1, 1, 1] engine=t1 weight=4 expected=6 got=7" in out


def test_verify_guard(capsys):
    code, _ = run(capsys, "verify", "--a", "-1,1,1", "--max-weight", "30")
    assert code == 2


def test_bench_csv(capsys, tmp_path):
    out_file = tmp_path / "bench.csv"
    code, _ = run(capsys, "bench", "--n-range", "3..7", "--seed", "11", "--out", str(out_file))
    assert code == 0
    rows = list(csv.DictReader(out_file.open()))
    assert [int(r["n"]) for r in rows] == [3, 4, 5, 6, 7]
    for r in rows:
        assert int(r["terms"]) <= 2 ** (int(r["n"]) - 1)
        assert float(r["millis"]) >= 0
    assert int(rows[0]["terms"]) <= 4


def test_bench_is_deterministic():
    a = cli.bench_rows(3, 9, seed=5)
    b = cli.bench_rows(3, 9, seed=5)
    assert [(n, t, v) for n, _, t, v in a] == [(n, t, v) for n, _, t, v in b]
    assert all(sum(v) == 1 and v == sorted(v) for *_, v in a)


def test_bench_bad_range(capsys):
    code, _ = run(capsys, "bench", "--n-range", "5..2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["--family", "1", "--n", "3", "--b", "2"],
        ["--family", "2", "--n", "3", "--b", "1"],
        ["--family", "3", "--n", "3", "--b", "1"],
        ["--family", "4", "--n", "4", "--k", "2", "--l", "2"],
    ],
)
def test_examples_command(capsys, argv):
    code, out = run(capsys, "examples", *argv, "--series", "25")
    rec = json.loads(out)
    assert code == 0 and rec["match"]
    assert rec["closed_form_series"] == rec["engine_series"]


def test_examples_bad_params(capsys):
    code, _ = run(capsys, "examples", "--family", "4", "--n", "3", "--k", "2", "--l", "1")
    assert code == 2
