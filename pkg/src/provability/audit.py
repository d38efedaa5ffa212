"""Exhaustive machine checks of the classification results for constant sentences.

Every infinite trace that is constant from rank ``max_depth`` on is realized
as a concrete letterless sentence, and each claim is tested on the relevant
sentences with the prover as the deciding authority. Claims that fail on
some sentences are reported with the failing sentences, never adjusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from provability.classify import (
    ALPHA,
    classify,
    is_n_cf,
    rosser_status,
    smallest_n,
)
from provability.formula import (
    Conjunction,
    Formula,
    Implication,
    Negation,
    box_tower,
    conjoin,
    contains_box,
)
from provability.prover import DEFAULT_BUDGET, decide, equivalent
from provability.trace import Trace, compute_trace, realize
from provability.syntax import parse

MAX_AUDIT_DEPTH = 8


class BudgetExceeded(ValueError):
    pass


def beta_plus_equivalent(tr: Trace) -> tuple[Formula, int]:
    """Conjunction of ``[]^(b+1)bot -> []^a bot`` over the maximal false runs ``a..b``.

    Only meaningful for classically true traces; returns the conjunction
    and the least parameter ``a + 1``.
    """
    if not tr.tail:
        raise ValueError("classically false trace has no (beta+) form")
    vals = tr.minimal()
    runs = []
    start = None
    for i, v in enumerate(vals):
        if not v and start is None:
            start = i
        elif v and start is not None:
            runs.append((start, i - 1))
            start = None
    if not runs:
        raise ValueError("trace is everywhere true")
    parts = [Implication(box_tower(b + 1), box_tower(a)) for a, b in runs]
    return conjoin(*parts), runs[0][0] + 1


def beta_sentence(n: int, m: int) -> Formula:
    """``[]^m bot -> []^(n-1) bot`` for ``1 <= n <= m``."""
    return Implication(box_tower(m), box_tower(n - 1))


def gamma_sentence(n: int) -> Formula:
    return box_tower(n - 1)


def essentially_modal(tr: Trace) -> bool:
    return not tr.all_true() and not tr.all_false()


# -- per-instance checks; each returns True when the claim holds on that instance


def _check_c1(f: Formula, param, budget: int) -> bool:
    provable = decide(f, budget).provable
    n = smallest_n(f)
    if provable == (n is not None):
        return False
    return n is None or is_n_cf(f, n, budget)


def _check_c2_1(f: Formula, param, budget: int) -> bool:
    beta, m = beta_plus_equivalent(compute_trace(f))
    return m == smallest_n(f) and equivalent(f, beta, budget)


def _check_c2_2(f: Formula, param, budget: int) -> bool:
    return equivalent(f, box_tower(smallest_n(f) - 1), budget)


def _check_c2_3(f: Formula, param, budget: int) -> bool:
    return decide(f, budget).provable == (classify(f).category == ALPHA)


def _check_least_n(f: Formula, n: int, budget: int) -> bool:
    if smallest_n(f) != n or not is_n_cf(f, n, budget):
        return False
    return n == 1 or not is_n_cf(f, n - 1, budget)


def _check_r1(f: Formula, param, budget: int) -> bool:
    return is_n_cf(Negation(f), 1, budget)


def _check_r2(f: Formula, param, budget: int) -> bool:
    st = rosser_status(f)
    some_n = st.n_rosser is not None
    one = st.n_rosser == 1
    return some_n == one == is_n_cf(f, 1, budget)


def _check_r3(f: Formula, param, budget: int) -> bool:
    w = rosser_status(f).weak_rosser_n
    return w is not None and is_n_cf(f, w, budget) and is_n_cf(Negation(f), w, budget)


def _check_limitation(f: Formula, param, budget: int) -> bool:
    for g in (f, Negation(f)):
        n = smallest_n(g)
        if n is None:
            if not decide(g, budget).provable:
                return False
        elif not is_n_cf(g, n, budget):
            return False
    return True


CHECKS: dict[str, Callable[[Formula, Optional[int], int], bool]] = {
    "c1": _check_c1,
    "c2.1": _check_c2_1,
    "c2.2": _check_c2_2,
    "c2.3": _check_c2_3,
    "mono": _check_least_n,
    "multi": _check_least_n,
    "r1": _check_r1,
    "r1.syntactic": _check_r1,
    "r2": _check_r2,
    "r3": _check_r3,
    "limitation": _check_limitation,
}

STATEMENTS = {
    "c1": "every constant sentence is constructively true or n-constructively false for some n, never both",
    "c2.1": "a classically true, unprovable sentence is equivalent to a (beta+, m) conjunction with m its smallest n",
    "c2.2": "a classically false sentence with smallest n = m is equivalent to []^(m-1) bot",
    "c2.3": "a sentence is provable iff it falls in category Alpha",
    "mono": "([]^m bot -> []^(n-1) bot) and []^(n-1) bot are n-constructively false at the smallest",
    "multi": "a conjunction of (beta, a) and (gamma, b) sentences is n-constructively false at the smallest, n the least parameter",
    "r1": "if an essentially modal sentence is n-constructively false, its negation is 1-constructively false",
    "r1.syntactic": "as r1, for every unprovable sentence that syntactically contains a box",
    "r2": "for essentially modal sentences: n-Rosser for some n iff 1-Rosser iff 1-constructively false",
    "r3": "an essentially modal sentence that is not constructively true is weakly n-Rosser for some n",
    "limitation": "no constant sentence or its negation is strongly independent",
}


@dataclass(frozen=True)
class Counterexample:
    formula: Formula
    trace: Trace
    param: Optional[int] = None
    detail: dict = field(default_factory=dict, compare=False, hash=False)

    def to_dict(self) -> dict:
        return {
            "formula": str(self.formula),
            "trace": self.trace.to_dict(),
            "param": self.param,
            "detail": self.detail,
        }


@dataclass
class ClaimRecord:
    claim: str
    statement: str
    instances: int = 0
    confirmations: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "instances": self.instances,
            "confirmations": self.confirmations,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


@dataclass
class AuditReport:
    max_depth: int
    claims: list[ClaimRecord]

    def __getitem__(self, claim: str) -> ClaimRecord:
        for rec in self.claims:
            if rec.claim == claim:
                return rec
        raise KeyError(claim)

    def reverify(self, budget: int = DEFAULT_BUDGET) -> list[tuple[str, Counterexample]]:
        """Counterexamples that no longer fail their check; empty when the report is sound."""
        stale = []
        for rec in self.claims:
            for cx in rec.counterexamples:
                if CHECKS[rec.claim](cx.formula, cx.param, budget):
                    stale.append((rec.claim, cx))
        return stale

    def to_dict(self) -> dict:
        return {"max_depth": self.max_depth, "claims": [r.to_dict() for r in self.claims]}

    def render(self) -> str:
        lines = [f"audit of all traces constant from rank {self.max_depth}"]
        for rec in self.claims:
            lines.append(
                f"{rec.claim:13s} {rec.confirmations}/{rec.instances} confirmed, "
                f"{len(rec.counterexamples)} counterexamples  -- {rec.statement}"
            )
            for cx in rec.counterexamples:
                extra = "" if cx.param is None else f" param={cx.param}"
                notes = " ".join(f"{k}={v}" for k, v in cx.detail.items())
                lines.append(f"    {cx.formula}   {cx.trace.render()}{extra}  {notes}".rstrip())
        return "\n".join(lines)


def _detail(f: Formula) -> dict:
    c = classify(f)
    neg = classify(Negation(f))
    return {
        "smallest_n": c.smallest_n,
        "category": str(c.category),
        "negation_smallest_n": neg.smallest_n,
    }


def _order(cx: Counterexample):
    vector = tuple(cx.trace.at(i) for i in range(MAX_AUDIT_DEPTH + 2))
    return vector, str(cx.formula), cx.param or 0


def _run(claim: str, instances, budget: int) -> ClaimRecord:
    rec = ClaimRecord(claim, STATEMENTS[claim])
    check = CHECKS[claim]
    failures = []
    for f, param in instances:
        rec.instances += 1
        if check(f, param, budget):
            rec.confirmations += 1
        else:
            failures.append(Counterexample(f, compute_trace(f), param, _detail(f)))
    failures.sort(key=_order)
    rec.counterexamples = failures
    return rec


def sentences(max_depth: int) -> list[Formula]:
    """One canonical sentence per trace vector of length ``max_depth + 1``."""
    return [realize(vals) for vals in itertools.product((False, True), repeat=max_depth + 1)]


def taxonomy_witnesses(top: int) -> tuple[list[tuple[Formula, int]], list[tuple[Formula, int]]]:
    """Single (beta, n)/(gamma, n) sentences, and pairwise conjunctions of them, up to height ``top``."""
    singles: list[tuple[Formula, int]] = []
    for m in range(1, top + 1):
        for n in range(1, m + 1):
            singles.append((beta_sentence(n, m), n))
    for n in range(1, top + 1):
        singles.append((gamma_sentence(n), n))
    pairs = [
        (Conjunction(a, b), min(na, nb))
        for (a, na), (b, nb) in itertools.combinations(singles, 2)
    ]
    return singles, pairs


def audit(max_depth: int, budget: int = DEFAULT_BUDGET) -> AuditReport:
    if not 1 <= max_depth <= MAX_AUDIT_DEPTH:
        raise BudgetExceeded(f"audit depth must be within 1..{MAX_AUDIT_DEPTH}, got {max_depth}")
    pool = [(f, compute_trace(f)) for f in sentences(max_depth)]
    everything = [(f, None) for f, _ in pool]
    true_unprovable = [(f, None) for f, tr in pool if tr.tail and not tr.all_true()]
    false_ones = [(f, None) for f, tr in pool if not tr.tail]
    modal = [(f, None) for f, tr in pool if essentially_modal(tr)]
    # the two trivial truth values dressed up with a box
    trivial = [parse("[]bot -> []bot"), parse("[]bot & ~[]bot")]
    syntactic = [
        (f, None)
        for f in [f for f, _ in pool] + trivial
        if contains_box(f) and not compute_trace(f).all_true()
    ]
    singles, pairs = taxonomy_witnesses(max_depth + 1)
    claims = [
        _run("c1", everything, budget),
        _run("c2.1", true_unprovable, budget),
        _run("c2.2", false_ones, budget),
        _run("c2.3", everything, budget),
        _run("mono", singles, budget),
        _run("multi", pairs, budget),
        _run("r1", modal, budget),
        _run("r1.syntactic", syntactic, budget),
        _run("r2", modal, budget),
        _run("r3", modal, budget),
        _run("limitation", everything, budget),
    ]
    return AuditReport(max_depth, claims)
