import json

import pytest

from flaghilb.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from flaghilb.fixed_points import injected_fault


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_fixed_points(capsys):
    code, out = run(capsys, "fixed-points", "--n", "2", "--k", "2")
    assert code == EXIT_OK and out["count"] == 1
    assert out["flags"][0]["cotangent"] == "2*q"
    code, out = run(capsys, "fixed-points", "--n", "1", "--k", "0")
    assert out["flags"][0]["cotangent"] == "q + t"
    code, out = run(capsys, "fixed-points", "--n", "0", "--k", "0")
    assert out["flags"][0]["flag"] == {"lambda": [], "order": []}


def test_apply(capsys):
    code, out = run(capsys, "apply", "d+")
    assert code == EXIT_OK
    assert out["output"]["terms"] == [{"flag": {"lambda": [1], "order": [[0, 0]]}, "coeff": "1"}]
    code, out = run(capsys, "apply", "d- d+", "--lam", "1")
    assert code == EXIT_OK and len(out["output"]["terms"]) == 2


def test_apply_errors(capsys):
    code, out = run(capsys, "apply", "z:3", "--lam", "1", "--order", "0,0")
    assert code == EXIT_USAGE and out["error"] == "GradeError"
    code, out = run(capsys, "apply", "d+ nope")
    assert code == EXIT_USAGE and out["position"] == 1
    code, out = run(capsys, "apply", "d+", "--lam", "1,2")
    assert code == EXIT_USAGE


def test_check(capsys):
    code, out = run(capsys, "check", "--max-n", "3", "--max-k", "2")
    assert code == EXIT_OK and out["passed"]
    code, out = run(capsys, "check", "--relation", "nope")
    assert code == EXIT_USAGE
    code, out = run(capsys, "check", "--list")
    assert "commrel" in out["relations"]


def test_check_detects_corruption(capsys):
    with injected_fault("T"):
        code, out = run(capsys, "--no-cache", "check", "--max-n", "2", "--max-k", "2", "--relation", "hecke_quadratic")
    assert code == EXIT_FAIL and out["failures"][0]["counterexample"]


def test_matrix_is_cached_and_deterministic(capsys, tmp_path):
    args = ("--cache-dir", str(tmp_path), "matrix", "T:1", "--n", "3", "--k", "2")
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args)
    assert code1 == code2 == EXIT_OK and out1 == out2
    assert list(tmp_path.rglob("*.json"))


def test_pieri_pmn_bijection_bruhat(capsys):
    assert run(capsys, "pieri", "--lam", "2,1")[0] == EXIT_OK
    code, out = run(capsys, "pmn", "--m", "2", "--n", "3", "--compare-tableau")
    assert code == EXIT_OK and out["agree"]
    assert run(capsys, "pmn", "--m", "2", "--n", "4")[0] == EXIT_USAGE
    code, out = run(capsys, "bijection", "--n", "4", "--k", "2")
    assert code == EXIT_OK and out["A_count"] == out["M_count"]
    code, out = run(capsys, "bruhat", "--x-mu", "2", "--y-mu", "1,1")
    assert out["leq"] is True
    assert run(capsys, "bruhat", "--x-mu", "2", "--y-a", "0")[0] == EXIT_USAGE


def test_phi_and_macdonald(capsys):
    code, out = run(capsys, "phi", "--mu", "1", "--a", "1", "--check-triangularity")
    assert code == EXIT_OK and out["triangularity"]["passed"]
    code, out = run(capsys, "macdonald", "--mu", "2")
    assert out["schur_expansion"] == [{"schur": [2], "coeff": "1"}, {"schur": [1, 1], "coeff": "q"}]


def test_bad_arguments(capsys):
    assert main(["fixed-points", "--n", "1", "--k", "3"]) == EXIT_USAGE
    assert main(["no-such-command"]) == EXIT_USAGE
    capsys.readouterr()
