import json

import pytest

from hyperdist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "gamma(1/2)^2", "--prec", "30")
    assert code == 0 and out.startswith("3.141592653589793238462643383")
    code, doc = run_json(capsys, "eval", "3F2(1, 1, 1; 2, 2; 1)")
    assert doc["schema"] == 1 and doc["command"] == "eval"
    assert doc["value"].startswith("1.644934066848226436472415166646")


def test_dist_example(capsys):
    code, doc = run_json(capsys, "dist", "4", "3", "1", "1,1,1", "3/2,2")
    assert code == 0
    assert doc["verification"]["passed"]
    assert doc["identity"]["name"].startswith("DIST(4,3,1,")
    code, out, _ = run(capsys, "dist", "4", "3", "1", "1,1,1", "3/2,2", "--sum")
    assert code == 0 and "ArcSinSquare" in out and "PASS" in out


def test_dist_with_empty_lists_and_symbolic_argument(capsys):
    code, out, _ = run(capsys, "dist", "2", "0", "1/3", "", "")
    assert code == 0 and "PASS" in out
    code, doc = run_json(capsys, "dist", "2", "1", "z", "1/2", "3/2")
    assert code == 0 and doc["verification"] is None


def test_dist_bad_spec_exits_2(capsys):
    code, _, err = run(capsys, "dist", "2", "2", "1/2", "1", "2")
    assert code == 2 and "InvalidSpec" in err


def test_rewrites(capsys):
    assert run(capsys, "rewrite", "stir", "2F1(5/2, 1/3; 3/2; 1/4)", "0", "0")[0] == 0
    assert run(capsys, "rewrite", "init", "2F1(1, 1/2; 2; 1/2)", "0", "0")[0] == 0
    code, doc = run_json(capsys, "rewrite", "pfd", "3F2(1/3, 2/3, 1; 4/3, 5/3; -1/2)", "0:0", "1:1")
    assert code == 0 and doc["command"] == "rewrite" and doc["verification"]["passed"]
    code, _, err = run(capsys, "rewrite", "stir", "2F1(5/2, 1/3; 7/3; 1/4)", "0", "0")
    assert code == 2 and "NotIntegerDifference" in err


def test_sum(capsys):
    code, doc = run_json(capsys, "sum", "2F1(1/2, 1/8; 11/8; -1)")
    assert code == 0
    assert [m["theorem"] for m in doc["matches"]] == ["KummerMinus1"]
    assert doc["matches"][0]["binding"] == {"a": "1/2", "b": "1/8"}
    assert doc["matches"][0]["verification"]["passed"]
    code, out, _ = run(capsys, "sum", "2F1(1, 1; 2; 1)")
    assert code == 1 and "no closed form" in out


def test_verify(capsys):
    assert run(capsys, "verify", "zeta(2)", "pi^2/6")[0] == 0
    code, doc = run_json(capsys, "verify", "zeta(2)", "pi^2/6 + 10^(-20)", "--tol", "-25")
    assert code == 1 and not doc["verification"]["passed"]
    assert doc["verification"]["tolerance"] == -25


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "verify", "gamma(", "1")
    assert code == 2 and "ParseError" in err


def test_corpus_list(capsys):
    code, doc = run_json(capsys, "corpus", "list", "--tag", "K")
    assert code == 0
    assert {r["name"] for r in doc["entries"]} >= {"K1+", "K1-", "K2", "K3", "K4"}


def test_corpus_run_subset(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "corpus", "run", "--tag", "singular-value", "--json", "--out", str(out_file))
    assert code == 0
    doc = json.loads(out)
    assert out_file.read_text() == out
    assert doc["totals"]["passed"] == 2 and doc["seed"] == 0
    assert all(e["tolerance"] == -30 for e in doc["entries"])
    code, out, _ = run(capsys, "corpus", "run", "--name", "K3", "--tol", "-12")
    assert code == 0 and "1/1 entries passed" in out


def test_corpus_run_reports_failures(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema": 1, "entries": [{
        "name": "wrong", "lhs": {"kind": "int", "value": "1"}, "rhs": {"kind": "int", "value": "2"},
    }]}))
    code, out, _ = run(capsys, "corpus", "run", "--corpus", str(bad))
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [[], ["nope"], ["rewrite"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
