import pytest

from provability.kripke import KripkeModel, UnknownWorld, eval_in_model, validate_model
from provability.syntax import parse


def model(n, rel, val=None, root=0):
    val = val or {}
    return KripkeModel(frozenset(range(n)), frozenset(rel), {w: frozenset(val.get(w, ())) for w in range(n)}, root)


def test_single_world():
    m = model(1, [])
    assert eval_in_model(m, 0, parse("[]bot"))
    assert not eval_in_model(m, 0, parse("bot"))


def test_two_world_chain():
    m = model(2, [(0, 1)])
    assert not eval_in_model(m, 0, parse("[]bot"))
    assert eval_in_model(m, 0, parse("[][]bot"))
    assert eval_in_model(m, 1, parse("[]bot"))


def test_atoms_and_box():
    m = model(3, [(0, 1), (0, 2), (1, 2)], {1: {"p"}, 2: {"p"}})
    assert eval_in_model(m, 0, parse("[]p"))
    assert not eval_in_model(m, 0, parse("p"))
    assert not eval_in_model(m, 0, parse("[]p -> p"))
    assert eval_in_model(m, 0, parse("<>p <-> ~[]~p"))


def test_unknown_world():
    with pytest.raises(UnknownWorld):
        eval_in_model(model(1, []), 5, parse("bot"))


@pytest.mark.parametrize(
    "m, ok",
    [
        (model(3, [(0, 1), (0, 2), (1, 2)]), True),
        (model(1, [(0, 0)]), False),
        (model(3, [(0, 1), (1, 2)]), False),
        (model(2, [(0, 1)], root=7), False),
        (model(2, [(0, 3)]), False),
    ],
)
def test_validate(m, ok):
    assert validate_model(m) is ok


def test_text_round_trip():
    m = model(3, [(0, 1), (0, 2), (1, 2)], {1: {"p", "q"}})
    text = m.to_text()
    assert text.splitlines()[0] == "w0: {}"
    assert "R: (0,1),(0,2),(1,2)" in text
    assert text.endswith("root: w0")
    assert KripkeModel.from_text(text) == m
