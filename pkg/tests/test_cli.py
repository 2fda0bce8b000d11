import json

import pytest

from smtkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_admissible_c2(capsys):
    code, out, _ = run(capsys, "admissible", "--type", "C2", "--weight", "0,1")
    assert code == 0
    assert "count 5 vs weyl_dim 5: PASS" in out


def test_admissible_a2(capsys):
    code, out, _ = run(capsys, "admissible", "--type", "A2", "--weight", "1,0")
    assert code == 0
    assert "count 3 vs weyl_dim 3: PASS" in out


def test_admissible_rejects_non_classical(capsys):
    code, _, err = run(capsys, "admissible", "--type", "G2", "--weight", "1,0")
    assert code == 2
    assert "classical" in err


def test_smt_full_flag_count(capsys):
    code, out, _ = run(
        capsys,
        "smt", "--type", "A2", "--parabolic", "none",
        "--weights", "1,0+0,1", "--pair", "e:w0", "--verify-count",
    )
    assert code == 0
    assert "standard monomials on (e, s1.s2.s1): 8" in out


def test_smt_point_pair(capsys):
    code, out, _ = run(
        capsys,
        "smt", "--type", "A2", "--weights", "1,0+0,1", "--pair", "s2.s1:s2.s1",
    )
    assert code == 0
    assert ": 1" in out.splitlines()[0]


def test_smt_verify_filtration(capsys):
    code, out, _ = run(
        capsys,
        "smt", "--type", "A2", "--parabolic", "none", "--weights", "1,1",
        "--pair", "e:w0", "--verify-filtration",
    )
    assert code == 0
    assert "filtration blocks consistent: PASS" in out


def test_smt_union(capsys):
    code, out, _ = run(
        capsys,
        "smt", "--type", "A2", "--weights", "1,1",
        "--union", "e:s1.s2+e:s2.s1",
    )
    assert code == 0
    assert "union count: 7" in out
    assert "inclusion-exclusion value: 7" in out


def test_straighten_pair(capsys):
    code, out, _ = run(capsys, "straighten", "--grassmann", "2,4", "--pair", "14,23")
    assert code == 0
    assert "p[1, 3]*p[2, 4] - p[1, 2]*p[3, 4]" in out


def test_straighten_standard_pair_is_usage_error(capsys):
    code, _, err = run(capsys, "straighten", "--grassmann", "2,4", "--pair", "13,24")
    assert code == 2
    assert "already standard" in err


def test_straighten_verify_hodge(capsys):
    code, out, _ = run(
        capsys, "straighten", "--grassmann", "2,4", "--verify-hodge", "--degree", "2"
    )
    assert code == 0
    assert "degree 2: chains 20, rank check PASS" in out
    assert "Schubert restriction checks: PASS" in out


def test_json_output_deterministic(capsys):
    argv = ["straighten", "--grassmann", "2,4", "--pair", "14,23", "--json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["relation"]["lhs"] == [[1, 4], [2, 3]]
    assert payload["relation"]["exact"] is True
    assert payload["relation"]["rhs"][0]["c"] in ("+1", "-1")


def test_admissible_json_schema(capsys):
    code, out, _ = run(capsys, "admissible", "--type", "C2", "--weight", "0,1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == payload["weyl_dim"] == 5
    for pair in payload["pairs"]:
        assert set(pair) == {"v", "w", "xi", "chain"}


def test_smt_json_schema(capsys):
    code, out, _ = run(
        capsys, "smt", "--type", "A2", "--weights", "1,0+0,1", "--pair", "e:w0", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 8
    for mono in payload["monomials"]:
        assert set(mono) == {"factors", "lifts", "weight"}
        assert len(mono["lifts"]) == 4


def test_usage_errors(capsys):
    code, _, err = run(capsys, "smt", "--type", "A2", "--weights", "1,0", "--pair", "nonsense")
    assert code == 2
    code, _, err = run(capsys, "straighten", "--grassmann", "3,9")
    assert code == 2
    code, _, err = run(capsys, "smt", "--type", "A2", "--weights", "1,0,0", "--pair", "e:w0")
    assert code == 2
