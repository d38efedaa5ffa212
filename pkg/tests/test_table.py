import pytest

from provability.table import build_table, render_table


def cells(entries, row, truth):
    return [str(e.formula) for e in entries if e.row == row and e.classically_true == truth]


def test_rows_and_columns():
    entries = build_table(3)
    assert cells(entries, 2, False) == ["[]bot"]
    assert "~[]bot" in cells(entries, 1, True)
    assert "bot" in cells(entries, 1, False)
    assert any(e.label == "L2" and e.classification.smallest_n == 3 for e in entries if e.row == 3)


def test_every_entry_classified_in_place():
    for e in build_table(5):
        c = e.classification
        assert c.smallest_n == e.row and c.classically_true == e.classically_true


def test_render_notes_rosser_omission():
    text = render_table(build_table(2))
    assert text.startswith("row 1:")
    assert "R_n" in text


@pytest.mark.parametrize("bad", [0, 9])
def test_row_guard(bad):
    with pytest.raises(ValueError):
        build_table(bad)
