"""Modal sentences over falsum, atoms, the boolean connectives and one box.

Formulas are immutable trees of frozen dataclasses, so structural equality
and hashing come for free. Verum and the diamond have no constructors of
their own: ``top`` is ``Negation(Falsum())`` and ``<>A`` is
``Negation(Box(Negation(A)))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Union


class _Node:
    __slots__ = ()

    def __str__(self) -> str:
        from provability.syntax import render

        return render(self)


@dataclass(frozen=True)
class Falsum(_Node):
    pass


@dataclass(frozen=True)
class Atom(_Node):
    name: str


@dataclass(frozen=True)
class Negation(_Node):
    operand: "Formula"


@dataclass(frozen=True)
class Conjunction(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Disjunction(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implication(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Equivalence(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Box(_Node):
    operand: "Formula"


Formula = Union[Falsum, Atom, Negation, Conjunction, Disjunction, Implication, Equivalence, Box]

UNARY = (Negation, Box)
BINARY = (Conjunction, Disjunction, Implication, Equivalence)

BOT = Falsum()
TOP = Negation(BOT)


def diamond(f: Formula) -> Formula:
    return Negation(Box(Negation(f)))


def conjoin(*fs: Formula) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``top``."""
    if not fs:
        return TOP
    return reduce(Conjunction, fs)


def disjoin(*fs: Formula) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``bot``."""
    if not fs:
        return BOT
    return reduce(Disjunction, fs)


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, UNARY):
        return (f.operand,)
    if isinstance(f, BINARY):
        return (f.left, f.right)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order walk: children left to right, then the node itself."""
    for c in children(f):
        yield from subformulas(c)
    yield f


def atoms(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def modal_depth(f: Formula) -> int:
    if isinstance(f, Box):
        return 1 + modal_depth(f.operand)
    return max((modal_depth(c) for c in children(f)), default=0)


def is_letterless(f: Formula) -> bool:
    return not any(isinstance(g, Atom) for g in subformulas(f))


def contains_box(f: Formula) -> bool:
    return any(isinstance(g, Box) for g in subformulas(f))


def substitute(f: Formula, v: str, g: Formula) -> Formula:
    """Replace every ``Atom(v)`` in ``f`` by ``g``."""
    if isinstance(f, Atom):
        return g if f.name == v else f
    if isinstance(f, UNARY):
        return type(f)(substitute(f.operand, v, g))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.left, v, g), substitute(f.right, v, g))
    return f


def is_modalized_in(f: Formula, v: str) -> bool:
    """True iff every occurrence of ``v`` sits under at least one box."""
    if isinstance(f, Atom):
        return f.name != v
    if isinstance(f, Box):
        return True
    return all(is_modalized_in(c, v) for c in children(f))


def box_tower(n: int) -> Formula:
    """The n-fold boxed falsum; ``box_tower(0)`` is falsum itself."""
    if n < 0:
        raise ValueError(f"tower height must be non-negative, got {n}")
    f: Formula = BOT
    for _ in range(n):
        f = Box(f)
    return f


def reflection(f: Formula) -> Formula:
    """Local reflection for ``f``: ``[]f -> f``."""
    return Implication(Box(f), f)


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))
