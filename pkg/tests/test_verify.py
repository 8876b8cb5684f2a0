import json
from fractions import Fraction

import pytest

from slablab import fixtures
from slablab.lattice import Region
from slablab.twist import twist
from slablab.verify import (
    CONFIRMED,
    REFUTED,
    SKIPPED,
    STATEMENTS,
    dumps_lines,
    parity_scan,
    verify_all,
    verify_statement,
)

FAST = ["flip-invariance", "integrality", "coloring-uniqueness", "complement", "mixed-symmetry", "two-floor",
        "rigidity", "solenoid", "frozen-core"]


@pytest.mark.parametrize("statement", FAST)
def test_statements_confirmed(statement):
    out = verify_statement(statement)
    assert out.status == CONFIRMED, out.detail
    assert out.ok


def test_bound_statement():
    out = verify_statement("bound")
    assert out.status == CONFIRMED
    assert all(v <= 16 for v in out.detail["max_abs_twist"].values())


def test_corrupted_twist_is_caught(tmp_path):
    def corrupted(t):
        # adds the number of x-dominoes, which flips do change
        return twist(t) + sum(1 for p in t.pieces if p.axis == 0)

    out = verify_statement("flip-invariance", witness_dir=tmp_path, twist_fn=corrupted)
    assert out.status == REFUTED
    assert out.witness is not None and out.witness.validate().ok
    saved = json.loads((tmp_path / "flip-invariance-witness.json").read_text())
    assert saved["family"] == "domino"


def test_budget_skip():
    assert verify_statement("four-by-four", budget=100).status == SKIPPED


def test_unknown_statement():
    with pytest.raises(KeyError):
        verify_statement("nonsense")


def test_parity_on_boxes():
    for dims in ((2, 2, 2), (4, 4, 2)):
        assert parity_scan(Region.box(*dims)).offsets == [0, 0, 0]


def test_parity_on_odd_cylinder():
    rep = parity_scan(fixtures.region("odd_cylinder_region"))
    assert rep.tilings == 10
    assert rep.offsets[2] == 1
    assert rep.consistent


def test_outputs_are_json_lines():
    outs = verify_all(statements=["rigidity", "solenoid"])
    text = dumps_lines(outs)
    lines = text.splitlines()
    assert [json.loads(x)["statement"] for x in lines] == ["rigidity", "solenoid"]
    assert verify_all(statements=["rigidity"]) == verify_all(statements=["rigidity"])


def test_statement_list():
    assert len(STATEMENTS) == 14
