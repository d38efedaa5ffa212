import random

import pytest
from hypothesis import given, settings

from generators import formulas, random_formula, valid_on_small_frames
from provability.formula import Box
from provability.kripke import eval_in_model, validate_model
from provability.prover import ResourceLimit, decide, equivalent, is_provable
from provability.syntax import parse


def check(f):
    """Decide ``f`` and assert the refutation invariants on the outcome."""
    out = decide(f)
    if not out.provable:
        m = out.model
        assert validate_model(m)
        assert not eval_in_model(m, m.root, f)
    return out


@pytest.mark.parametrize(
    "text",
    [
        "[]([]p -> p) -> []p",
        "[](p -> q) -> []p -> []q",
        "[]p -> [][]p",
        "[]([]p & ~p) -> [][]bot",
        "[](p & q) <-> []p & []q",
        "[]~[]bot -> []bot",
        "~bot",
        "[]bot -> [][]bot",
        "<>p -> <>(p & []~p)",
    ],
)
def test_theorems(text):
    assert check(parse(text)).provable


@pytest.mark.parametrize(
    "text",
    ["[]p -> p", "p -> []p", "[]p -> []bot", "<>top", "[][]bot -> []bot", "[]p | []~p", "bot"],
)
def test_non_theorems(text):
    assert not check(parse(text)).provable


def test_vacuous_box_countermodel_is_one_world():
    m = decide(parse("[]p -> p")).model
    assert m.worlds == {0} and not m.relation and m.valuation[0] == frozenset()


def test_necessitation_of_theorems():
    for text in ["[]([]p -> p) -> []p", "p -> p", "[]p -> [][]p"]:
        f = parse(text)
        assert is_provable(Box(f)) and is_provable(Box(Box(f)))


def test_equivalent():
    assert equivalent(parse("~bot & ~[]bot"), parse("~[]bot"))
    assert not equivalent(parse("[]bot"), parse("bot"))
    f = parse("[]p -> <>q")
    assert equivalent(f, f)


def test_budget():
    with pytest.raises(ResourceLimit):
        decide(parse("[]([]p -> p) -> []p"), budget=2)


def test_determinism():
    rng = random.Random(11)
    for _ in range(40):
        f = random_formula(rng, 3, size=14)
        a, b = decide(f), decide(f)
        assert a == b


def test_long_branching_search():
    # a chain of 600 implications on the left forces a search path far
    # deeper than the default interpreter recursion limit
    n = 600
    chain = " & ".join(f"[](p{i} -> p{i + 1})" for i in range(n))
    assert decide(parse(f"{chain} -> []p0 -> []p{n}")).provable
    assert not decide(parse(f"{chain} -> []p1 -> []p0")).provable


@settings(max_examples=300, deadline=None)
@given(formulas(max_leaves=9))
def test_sound_and_complete_on_small_frames(f):
    """Provable formulas hold on every small GL model; refuted ones come with a model."""
    out = check(f)
    if out.provable:
        assert valid_on_small_frames(f)


@settings(max_examples=200, deadline=None)
@given(formulas(max_leaves=10))
def test_refutations_validate(f):
    check(f)
