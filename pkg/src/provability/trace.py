"""Rank semantics and canonical normal forms for letterless sentences.

A letterless sentence is evaluated along the linear GL frame in which the
world of rank ``i`` sees exactly the ranks below it. Falsum is false
everywhere, ``[]B`` holds at rank ``i`` iff ``B`` holds at every rank
``j < i``, and the truth vector is constant from the sentence's modal depth
on. Every letterless sentence is therefore a boolean combination of box
towers, and its trace says which one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from provability.formula import (
    Atom,
    Box,
    Conjunction,
    Disjunction,
    Equivalence,
    Falsum,
    Formula,
    Implication,
    Negation,
    box_tower,
    disjoin,
    is_letterless,
    modal_depth,
    subformulas,
)

# ranks computed past the modal depth to check stabilization
_STABILITY_MARGIN = 2


class NotLetterless(ValueError):
    pass


@dataclass(frozen=True)
class Trace:
    """Truth of a letterless sentence at ranks ``0..d``; rank ``d`` onward is ``tail``."""

    values: tuple[bool, ...]

    @property
    def tail(self) -> bool:
        return self.values[-1]

    def at(self, rank: int) -> bool:
        return self.values[rank] if rank < len(self.values) else self.tail

    def minimal(self) -> tuple[bool, ...]:
        """Shortest prefix whose last entry repeats forever."""
        vals = list(self.values)
        while len(vals) > 1 and vals[-2] == vals[-1]:
            vals.pop()
        return tuple(vals)

    def agrees_with(self, other: "Trace") -> bool:
        """Same truth value at every rank, regardless of recorded length."""
        return self.minimal() == other.minimal()

    def all_true(self) -> bool:
        return all(self.values)

    def all_false(self) -> bool:
        return not any(self.values)

    def least_false_rank(self) -> int | None:
        for i, v in enumerate(self.values):
            if not v:
                return i
        return None

    def render(self) -> str:
        cells = ",".join("t" if v else "f" for v in self.values)
        return f"[{cells}] tail={'t' if self.tail else 'f'}"

    def __str__(self) -> str:
        return f"trace: {self.render()}"

    def to_dict(self) -> dict:
        return {"values": list(self.values), "tail": self.tail}


def require_letterless(f: Formula) -> None:
    if not is_letterless(f):
        raise NotLetterless(f"formula contains propositional atoms: {f}")


def rank_values(f: Formula, ranks: int) -> tuple[bool, ...]:
    """Truth of letterless ``f`` at ranks ``0..ranks-1``."""
    memo: dict[int, list[bool]] = {}
    for g in subformulas(f):
        if id(g) in memo:
            continue
        if isinstance(g, Falsum):
            val = [False] * ranks
        elif isinstance(g, Atom):
            raise NotLetterless(f"atom {g.name!r} has no rank semantics")
        elif isinstance(g, Negation):
            val = [not x for x in memo[id(g.operand)]]
        elif isinstance(g, Box):
            inner = memo[id(g.operand)]
            val, below = [], True
            for x in inner:
                val.append(below)
                below = below and x
        else:
            a, b = memo[id(g.left)], memo[id(g.right)]
            if isinstance(g, Conjunction):
                val = [x and y for x, y in zip(a, b)]
            elif isinstance(g, Disjunction):
                val = [x or y for x, y in zip(a, b)]
            elif isinstance(g, Implication):
                val = [(not x) or y for x, y in zip(a, b)]
            elif isinstance(g, Equivalence):
                val = [x == y for x, y in zip(a, b)]
            else:
                raise TypeError(f"not a formula: {g!r}")
        memo[id(g)] = val
    return tuple(memo[id(f)])


def compute_trace(f: Formula) -> Trace:
    require_letterless(f)
    d = modal_depth(f)
    vals = rank_values(f, d + 1 + _STABILITY_MARGIN)
    if any(v != vals[d] for v in vals[d:]):
        raise AssertionError(f"trace of {f} failed to stabilize at rank {d}: {vals}")
    return Trace(vals[: d + 1])


def classical_truth(f: Formula) -> bool:
    """Truth in the standard model, where no box tower holds."""
    return compute_trace(f).tail


def letterless_provable(f: Formula) -> bool:
    return compute_trace(f).all_true()


def rank_indicator(i: int) -> Formula:
    """Holds at rank ``i`` and nowhere else: ``[]^(i+1)bot & ~[]^i bot``."""
    return Conjunction(box_tower(i + 1), Negation(box_tower(i)))


def realize(values: Sequence[bool]) -> Formula:
    """Canonical letterless sentence whose trace is ``values`` with the last entry repeated.

    The vector is first cut to its shortest form, so any two vectors
    describing the same infinite trace realize to the same formula.
    """
    if not values:
        raise ValueError("a trace has at least one entry")
    vals = Trace(tuple(bool(v) for v in values)).minimal()
    d = len(vals) - 1
    disjuncts = [rank_indicator(i) for i in range(d) if vals[i]]
    if vals[d]:
        disjuncts.append(Negation(box_tower(d)))
    return disjoin(*disjuncts)


def normal_form(f: Formula) -> Formula:
    return realize(compute_trace(f).values)
