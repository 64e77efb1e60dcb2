import json
import os
from fractions import Fraction

import pytest

import jlfiltration as jlf

DATA = os.environ.get("JLF_TEST_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "data"))
QUATERNION = os.path.join(DATA, "quaternion.json")


def test_transfer():
    doc = jlf.transfer(QUATERNION)
    assert [(f["cuspidal"], Fraction(f["exponent"])) for f in doc["sigma"]] == [
        ("tau", Fraction(1, 2)),
        ("rho", Fraction(1, 2)),
        ("rho", Fraction(-1, 2)),
        ("tau", Fraction(-1, 2)),
    ]
    assert doc["q_partition"] == [2, 2, 2, 2]


def test_correspond():
    doc = jlf.correspond(QUATERNION)
    assert doc["quotient_map"] == [[0, 1], [1, 3]]
    assert doc["unmatched"] == [0, 2]
    assert doc["epsilons"] == [1, 0]
    assert len(doc["inner"]["layers"]) == 2


def test_problem_forms_agree():
    with open(QUATERNION, encoding="utf-8") as f:
        text = f.read()
    assert jlf.filtration(text, "split", refined=True) == jlf.filtration(json.loads(text), "split", refined=True)


def test_triples_share_a_point():
    orbits = jlf.triples(QUATERNION, side="split")["orbits"]
    assert len(orbits) == 4
    golden = ["1/2", "1/2", "0", "0", "0", "0", "-1/2", "-1/2"]
    assert sorted(o["in_image"] for o in orbits if o["point"] == golden) == [False, True]


def test_compare_points():
    assert jlf.compare_points([0, 0, 0], [1, 0, -1]) == "succeeds"
    assert jlf.compare_points([Fraction(1, 2), Fraction(-1, 2)], [0, 0]) == "precedes"


def test_errors_carry_kind():
    problem = {
        "degree_d": 1,
        "cuspidals": [{"name": "a", "inner_size": 1, "k": 1}],
        "support": [{"cuspidal": "a", "exponent": "1"}],
    }
    with pytest.raises(jlf.JlfError) as err:
        jlf.validate(problem)
    message, kind, _ = err.value.args
    assert kind == "center_condition_violated"
    assert "center condition violated" in message


def test_verify_small():
    results = jlf.verify(seed=3, max_size=4)
    assert results
    assert all(ok for _, _, ok in results.values())
