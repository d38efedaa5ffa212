"""Summary table of constant sentences by smallest n and classical truth value.

Each row ``n`` lists sentences that are n-constructively false at the
smallest, split by classical truth. Every entry is classified before it is
shown; a misplaced entry raises :class:`TableMismatch`.
"""

from __future__ import annotations

from dataclasses import dataclass

from provability.classify import Classification, classify
from provability.fixedpoint import liar
from provability.formula import (
    BOT,
    Conjunction,
    Formula,
    Implication,
    Negation,
    box_tower,
)
from provability.prover import DEFAULT_BUDGET

MAX_TABLE_ROWS = 8

ROSSER_NOTE = (
    "n-Rosser sentences R_n have no constant representative: a constant "
    "sentence and its negation have complementary traces, so their smallest "
    "n always differ. R_n are not constructed here."
)


class TableMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class TableEntry:
    row: int
    classically_true: bool
    label: str
    formula: Formula
    classification: Classification

    def to_dict(self) -> dict:
        return {
            "row": self.row,
            "classically_true": self.classically_true,
            "label": self.label,
            "formula": str(self.formula),
            "smallest_n": self.classification.smallest_n,
            "category": str(self.classification.category),
        }


def _candidates(n: int, max_n: int, budget: int) -> list[tuple[bool, str, Formula]]:
    if n == 1:
        rows = [
            (True, "~[]^m bot, m=1", Negation(box_tower(1))),
            (False, "bot", BOT),
            (False, "[]^m bot & ~[]^(n-1) bot, m=2 n=2", Conjunction(box_tower(2), Negation(box_tower(1)))),
        ]
        for i in range(1, max(2, max_n)):
            rows.append((False, f"~L{i}", Negation(liar(i, budget=budget)[0])))
        return rows
    return [
        (True, f"L{n - 1}", liar(n - 1, budget=budget)[0]),
        (True, f"[]^m bot -> []^{n - 1} bot, m={n}", Implication(box_tower(n), box_tower(n - 1))),
        (False, f"[]^{n - 1} bot", box_tower(n - 1)),
    ]


def build_table(max_n: int, budget: int = DEFAULT_BUDGET) -> list[TableEntry]:
    if not 1 <= max_n <= MAX_TABLE_ROWS:
        raise ValueError(f"table rows must be within 1..{MAX_TABLE_ROWS}, got {max_n}")
    entries = []
    for n in range(1, max_n + 1):
        for truth, label, f in _candidates(n, max_n, budget):
            c = classify(f)
            if c.classically_true != truth or c.smallest_n != n:
                raise TableMismatch(
                    f"{label} = {f} classifies as classically_true={c.classically_true}, "
                    f"smallest_n={c.smallest_n}; expected {truth}, {n}"
                )
            entries.append(TableEntry(n, truth, label, f, c))
    return entries


def render_table(entries: list[TableEntry]) -> str:
    lines = []
    for n in sorted({e.row for e in entries}):
        lines.append(f"row {n}: {n}-constructively false at the smallest")
        for truth, heading in ((True, "classically true"), (False, "classically false")):
            cells = [e for e in entries if e.row == n and e.classically_true == truth]
            for k, e in enumerate(cells):
                head = f"{heading}:" if k == 0 else ""
                shown = str(e.formula)
                text = shown if e.label == shown else f"{e.label} := {shown}"
                lines.append(f"  {head:19s}{text}")
    lines.append(f"note: {ROSSER_NOTE}")
    return "\n".join(lines)
