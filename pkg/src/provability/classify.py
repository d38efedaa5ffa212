"""Constructive truth and n-constructive falsity of constant sentences.

A sentence ``F`` is n-constructively false when ``[]F -> []^n bot`` is
provable. For letterless ``F`` this holds exactly when ``n`` exceeds the
least rank at which ``F`` fails, which gives the smallest such ``n``
directly from the trace; the prover is used to confirm it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from provability.formula import (
    Box,
    Conjunction,
    Formula,
    Implication,
    Negation,
    box_tower,
)
from provability.prover import DEFAULT_BUDGET, ProofOutcome, decide
from provability.trace import Trace, require_letterless, compute_trace, realize


def falsity_goal(f: Formula, n: int) -> Formula:
    """``[]f -> []^n bot``."""
    return Implication(Box(f), box_tower(n))


def is_n_cf(f: Formula, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Is ``f`` n-constructively false?

    Exact for letterless ``f``; for formulas with atoms this is the
    schema reading, true iff every substitution instance is.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return decide(falsity_goal(f, n), budget).provable


def smallest_n_of_trace(tr: Trace) -> Optional[int]:
    k = tr.least_false_rank()
    return None if k is None else k + 1


def smallest_n(f: Formula) -> Optional[int]:
    """Least n making ``f`` n-constructively false; None if ``f`` is a GL theorem."""
    return smallest_n_of_trace(compute_trace(f))


@dataclass(frozen=True)
class Category:
    name: str  # Alpha | BetaPlus | Gamma | MixedFalse
    m: Optional[int] = None

    def __str__(self) -> str:
        return self.name if self.m is None else f"{self.name}({self.m})"

    def to_dict(self) -> dict:
        return {"name": self.name, "m": self.m}


ALPHA = Category("Alpha")


def category_of(tr: Trace) -> Category:
    n = smallest_n_of_trace(tr)
    if n is None:
        return ALPHA
    if tr.tail:
        return Category("BetaPlus", n)
    true_ranks = {i for i, v in enumerate(tr.values) if v}
    if true_ranks == set(range(n - 1)):
        return Category("Gamma", n)
    return Category("MixedFalse", n)


@dataclass(frozen=True)
class Classification:
    classically_true: bool
    constructively_true: bool
    smallest_n: Optional[int]
    category: Category
    trace: Trace
    normal_form: Formula

    def to_dict(self) -> dict:
        return {
            "classically_true": self.classically_true,
            "constructively_true": self.constructively_true,
            "smallest_n": self.smallest_n,
            "category": self.category.to_dict(),
            "trace": self.trace.to_dict(),
            "normal_form": str(self.normal_form),
        }


def classify(f: Formula) -> Classification:
    tr = compute_trace(f)
    return Classification(
        classically_true=tr.tail,
        constructively_true=tr.all_true(),
        smallest_n=smallest_n_of_trace(tr),
        category=category_of(tr),
        trace=tr,
        normal_form=realize(tr.values),
    )


@dataclass(frozen=True)
class RosserStatus:
    n_rosser: Optional[int]
    weak_rosser_n: Optional[int]
    # smallest n of the sentence and of its negation
    sentence_n: Optional[int] = None
    negation_n: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "n_rosser": self.n_rosser,
            "weak_rosser_n": self.weak_rosser_n,
            "sentence_n": self.sentence_n,
            "negation_n": self.negation_n,
        }


def rosser_status(f: Formula) -> RosserStatus:
    require_letterless(f)
    a, b = smallest_n(f), smallest_n(Negation(f))
    if a is None or b is None:
        return RosserStatus(None, None, a, b)
    return RosserStatus(a if a == b else None, max(a, b), a, b)


def neg_reflection_goal(f: Formula) -> Formula:
    """``[]([]f & ~f) -> [][]bot``: the negated reflection instance is 2-constructively false."""
    return falsity_goal(Conjunction(Box(f), Negation(f)), 2)


def check_neg_reflection(f: Formula, budget: int = DEFAULT_BUDGET) -> bool:
    return decide(neg_reflection_goal(f), budget).provable


@dataclass(frozen=True)
class ProbeEntry:
    n: int
    sentence: ProofOutcome
    negation: ProofOutcome


@dataclass(frozen=True)
class ProbeResult:
    formula: Formula
    entries: tuple[ProbeEntry, ...] = field(default=())

    @property
    def strong_witness(self) -> bool:
        """Every ``[]f -> []^n bot`` was refuted."""
        return all(not e.sentence.provable for e in self.entries)

    @property
    def extreme_witness(self) -> bool:
        """Both ``f`` and ``~f`` escaped n-constructive falsity for every probed n."""
        return self.strong_witness and all(not e.negation.provable for e in self.entries)

    def to_dict(self) -> dict:
        def outcome(o: ProofOutcome) -> dict:
            if o.provable:
                return {"verdict": "Provable"}
            return {"verdict": "Refuted", "model": o.model.to_dict()}

        return {
            "formula": str(self.formula),
            "entries": [
                {"n": e.n, "sentence": outcome(e.sentence), "negation": outcome(e.negation)}
                for e in self.entries
            ],
            "strong_witness": self.strong_witness,
            "extreme_witness": self.extreme_witness,
        }


def independence_probe(f: Formula, N: int, budget: int = DEFAULT_BUDGET) -> ProbeResult:
    """Decide ``[]f -> []^n bot`` and ``[]~f -> []^n bot`` for ``n = 1..N``."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    entries = tuple(
        ProbeEntry(
            n,
            decide(falsity_goal(f, n), budget),
            decide(falsity_goal(Negation(f), n), budget),
        )
        for n in range(1, N + 1)
    )
    return ProbeResult(f, entries)
