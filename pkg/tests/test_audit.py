import pytest

from provability.audit import (
    BudgetExceeded,
    CHECKS,
    audit,
    beta_plus_equivalent,
    sentences,
)
from provability.syntax import parse
from provability.trace import Trace, compute_trace


@pytest.fixture(scope="module")
def report4():
    return audit(4)


def test_depth_guard():
    for bad in (0, 9):
        with pytest.raises(BudgetExceeded):
            audit(bad)


def test_sentences_cover_every_trace():
    fs = sentences(3)
    assert len(fs) == 16
    seen = {tuple(compute_trace(f).at(i) for i in range(4)) for f in fs}
    assert len(seen) == 16


def test_audit3_examples():
    rep = audit(3)
    assert rep["c1"].instances == 16 and not rep["c1"].counterexamples
    assert not rep["limitation"].counterexamples
    mixed = [cx.trace.minimal() for cx in rep["c2.2"].counterexamples]
    assert (False, True, False) in mixed
    assert any(str(cx.formula) == "[][]bot & ~[]bot" for cx in rep["c2.2"].counterexamples)


def test_claims_that_hold(report4):
    for claim in ("c1", "c2.1", "c2.3", "mono", "multi", "r3", "limitation"):
        rec = report4[claim]
        assert rec.instances > 0
        assert rec.confirmations == rec.instances, claim


def test_c22_counterexamples_are_mixed_false(report4):
    rec = report4["c2.2"]
    assert rec.instances == 16
    assert rec.counterexamples
    for cx in rec.counterexamples:
        assert cx.detail["category"].startswith("MixedFalse")


def test_r1_counterexamples(report4):
    rec = report4["r1"]
    assert rec.counterexamples
    assert "~[]bot" in [str(cx.formula) for cx in rec.counterexamples]
    for cx in rec.counterexamples:
        assert cx.detail["negation_smallest_n"] > 1


def test_syntactic_reading_includes_trivia(report4):
    rec = report4["r1.syntactic"]
    assert rec.instances == report4["r1"].instances + 1
    assert "[]bot & ~[]bot" in [str(cx.formula) for cx in rec.counterexamples]


def test_counterexamples_reverify(report4):
    assert report4.reverify() == []
    for rec in report4.claims:
        for cx in rec.counterexamples:
            assert not CHECKS[rec.claim](cx.formula, cx.param, 10**6)


def test_counterexamples_sorted(report4):
    for rec in report4.claims:
        keys = [tuple(cx.trace.at(i) for i in range(10)) for cx in rec.counterexamples]
        assert keys == sorted(keys)


def test_deterministic():
    assert audit(3).to_dict() == audit(3).to_dict()


def test_beta_plus_equivalent():
    f, m = beta_plus_equivalent(Trace((True, False, True)))
    assert m == 2 and str(f) == "[][]bot -> []bot"
    f, m = beta_plus_equivalent(Trace((False, True, False, True)))
    assert m == 1
    with pytest.raises(ValueError):
        beta_plus_equivalent(compute_trace(parse("[]bot")))
