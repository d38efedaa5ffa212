"""Finite Kripke models for GL, used as refutation witnesses.

Worlds are small integers and print as ``w<i>``. The text format is::

    w0: {p}
    w1: {}
    R: (0,1)
    root: w0
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

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
    subformulas,
)


class UnknownWorld(KeyError):
    pass


@dataclass(frozen=True)
class KripkeModel:
    worlds: frozenset[int]
    relation: frozenset[tuple[int, int]]
    valuation: Mapping[int, frozenset[str]]
    root: int
    _succ: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def successors(self, w: int) -> frozenset[int]:
        if self._succ is None:
            succ: dict[int, set[int]] = {v: set() for v in self.worlds}
            for a, b in self.relation:
                succ.setdefault(a, set()).add(b)
            object.__setattr__(self, "_succ", {k: frozenset(v) for k, v in succ.items()})
        return self._succ.get(w, frozenset())

    def to_text(self) -> str:
        lines = []
        for w in sorted(self.worlds):
            lines.append(f"w{w}: {{{', '.join(sorted(self.valuation.get(w, ())))}}}")
        pairs = ",".join(f"({a},{b})" for a, b in sorted(self.relation))
        lines.append(f"R: {pairs}".rstrip())
        lines.append(f"root: w{self.root}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "worlds": sorted(self.worlds),
            "relation": [list(p) for p in sorted(self.relation)],
            "valuation": {f"w{w}": sorted(self.valuation.get(w, ())) for w in sorted(self.worlds)},
            "root": self.root,
        }

    @classmethod
    def from_text(cls, text: str) -> "KripkeModel":
        worlds, valuation, relation, root = set(), {}, set(), None
        for line in text.strip().splitlines():
            head, _, rest = line.partition(":")
            head, rest = head.strip(), rest.strip()
            if head == "R":
                relation = {(int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", rest)}
            elif head == "root":
                root = int(rest.lstrip("w"))
            else:
                w = int(head.lstrip("w"))
                worlds.add(w)
                inner = rest.strip("{}").strip()
                valuation[w] = frozenset(a.strip() for a in inner.split(",") if a.strip())
        if root is None:
            raise ValueError("model text has no root line")
        return cls(frozenset(worlds), frozenset(relation), valuation, root)


def validate_model(m: KripkeModel) -> bool:
    """Irreflexive, transitive, and rooted inside its own world set."""
    if m.root not in m.worlds:
        return False
    for a, b in m.relation:
        if a == b or a not in m.worlds or b not in m.worlds:
            return False
    for a, b in m.relation:
        for c in m.successors(b):
            if (a, c) not in m.relation:
                return False
    return True


def truth_set(m: KripkeModel, f: Formula) -> frozenset[int]:
    """The set of worlds of ``m`` at which ``f`` holds."""
    every = m.worlds
    memo: dict[int, frozenset[int]] = {}
    for g in subformulas(f):
        key = id(g)
        if key in memo:
            continue
        if isinstance(g, Falsum):
            val = frozenset()
        elif isinstance(g, Atom):
            val = frozenset(w for w in every if g.name in m.valuation.get(w, ()))
        elif isinstance(g, Negation):
            val = every - memo[id(g.operand)]
        elif isinstance(g, Box):
            inner = memo[id(g.operand)]
            val = frozenset(w for w in every if m.successors(w) <= inner)
        else:
            a, b = memo[id(g.left)], memo[id(g.right)]
            if isinstance(g, Conjunction):
                val = a & b
            elif isinstance(g, Disjunction):
                val = a | b
            elif isinstance(g, Implication):
                val = (every - a) | b
            elif isinstance(g, Equivalence):
                val = every - (a ^ b)
            else:
                raise TypeError(f"not a formula: {g!r}")
        memo[key] = val
    return memo[id(f)]


def eval_in_model(m: KripkeModel, w: int, f: Formula) -> bool:
    if w not in m.worlds:
        raise UnknownWorld(w)
    return w in truth_set(m, f)
