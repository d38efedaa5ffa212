"""Decision procedure for GL with countermodel extraction.

The search works on sequents ``left => right`` of subformula ids. Boolean
connectives are decomposed first; once only atoms and boxes remain, each
boxed formula ``[]B`` on the right may be realized by a successor world
seeded with

    left:  C and []C for every []C on the left, plus []B
    right: B

Carrying ``[]B`` into the successor is the Löb step: a later attempt to
falsify ``[]B`` on the same branch closes immediately, so every branch
fires each boxed subformula at most once and the search terminates.

A sequent is provable iff every propositional branch closes and, at the
modal stage, at least one successor is provable. Refuted sequents yield
worlds whose accessibility relation is the transitive closure of the
successor edges, which is irreflexive and transitive by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

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
)
from provability.kripke import KripkeModel

DEFAULT_BUDGET = 10**6


class ResourceLimit(RuntimeError):
    """The search visited more sequents than the configured node budget."""


@dataclass(frozen=True)
class Provable:
    @property
    def provable(self) -> bool:
        return True


@dataclass(frozen=True)
class Refuted:
    model: KripkeModel

    @property
    def provable(self) -> bool:
        return False


ProofOutcome = Union[Provable, Refuted]

# node kinds
_BOT, _ATOM, _NOT, _AND, _OR, _IMP, _BOX = range(7)


class _World:
    __slots__ = ("atoms", "children")

    def __init__(self, atoms: tuple[str, ...], children: list["_World"]):
        self.atoms = atoms
        self.children = children


class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.visited = 0
        # id -> (kind, a, b); ids are assigned in post-order so smaller ids
        # are further left and further in
        self.nodes: list[tuple[int, object, int]] = []
        self.index: dict[tuple, int] = {}
        self.memo: dict[tuple[frozenset, frozenset], _World | None] = {}

    def intern(self, f: Formula) -> int:
        if isinstance(f, Falsum):
            key = (_BOT, None, -1)
        elif isinstance(f, Atom):
            key = (_ATOM, f.name, -1)
        elif isinstance(f, Negation):
            key = (_NOT, self.intern(f.operand), -1)
        elif isinstance(f, Box):
            key = (_BOX, self.intern(f.operand), -1)
        elif isinstance(f, Equivalence):
            a, b = self.intern(f.left), self.intern(f.right)
            ab = self._add((_IMP, a, b))
            ba = self._add((_IMP, b, a))
            key = (_AND, ab, ba)
        else:
            kind = {Conjunction: _AND, Disjunction: _OR, Implication: _IMP}[type(f)]
            key = (kind, self.intern(f.left), self.intern(f.right))
        return self._add(key)

    def _add(self, key: tuple) -> int:
        i = self.index.get(key)
        if i is None:
            i = len(self.nodes)
            self.nodes.append(key)
            self.index[key] = i
        return i

    def tick(self) -> None:
        self.visited += 1
        if self.visited > self.budget:
            raise ResourceLimit(f"GL search exceeded node budget of {self.budget}")

    def prove(self, left: frozenset[int], right: frozenset[int]) -> _World | None:
        """None when ``left => right`` is provable, else a refuting world.

        Runs on an explicit stack so deep searches do not hit the
        interpreter's recursion limit. The measure (formula complexity,
        then boxes carried left) strictly decreases along every edge, so no
        sequent can depend on itself.
        """
        root = (left, right)
        memo = self.memo
        if root in memo:
            return memo[root]
        stack = [self._open(root)]
        while True:
            frame = stack[-1]
            if not frame.finished and frame.index < len(frame.goals):
                goal = frame.goals[frame.index]
                if goal in memo:
                    frame.receive(memo[goal])
                else:
                    stack.append(self._open(goal))
                continue
            result = frame.result()
            memo[frame.key] = result
            stack.pop()
            if not stack:
                return result
            stack[-1].receive(result)

    def _open(self, key: tuple[frozenset, frozenset]) -> "_Frame":
        self.tick()
        left, right = set(key[0]), set(key[1])
        nodes = self.nodes
        # non-branching rules, applied to a fixed point
        while True:
            if left & right or any(nodes[i][0] == _BOT for i in left):
                return _Frame(key, _AND, [])
            step = None
            for i in sorted(left):
                kind, a, b = nodes[i]
                if kind in (_NOT, _AND, _OR, _IMP):
                    step = ("L", i, kind, a, b)
                    break
            if step is None:
                for i in sorted(right):
                    kind, a, b = nodes[i]
                    if kind in (_NOT, _AND, _OR, _IMP):
                        step = ("R", i, kind, a, b)
                        break
            if step is None:
                break
            side, i, kind, a, b = step
            if side == "L":
                left.discard(i)
                if kind == _NOT:
                    right.add(a)
                elif kind == _AND:
                    left.update((a, b))
                elif kind == _OR:
                    return _Frame(key, _AND, [_key(left | {a}, right), _key(left | {b}, right)])
                else:
                    return _Frame(key, _AND, [_key(left, right | {a}), _key(left | {b}, right)])
            else:
                right.discard(i)
                if kind == _NOT:
                    left.add(a)
                elif kind == _OR:
                    right.update((a, b))
                elif kind == _IMP:
                    left.add(a)
                    right.add(b)
                else:
                    return _Frame(key, _AND, [_key(left, right | {a}), _key(left, right | {b})])
        # modal stage: one candidate successor per boxed formula on the right
        boxed_left = [i for i in sorted(left) if nodes[i][0] == _BOX]
        carried = set(boxed_left)
        carried.update(nodes[i][1] for i in boxed_left)
        goals = [
            _key(carried | {i}, {nodes[i][1]})
            for i in sorted(right)
            if nodes[i][0] == _BOX
        ]
        true_atoms = tuple(sorted(nodes[i][1] for i in left if nodes[i][0] == _ATOM))
        return _Frame(key, _OR, goals, true_atoms)


def _key(left, right) -> tuple[frozenset, frozenset]:
    return frozenset(left), frozenset(right)


class _Frame:
    """A sequent awaiting its premises.

    ``_AND`` frames (propositional branching, or an axiom with no goals)
    are provable iff every goal is; ``_OR`` frames (the modal stage) are
    provable iff some goal is, and are otherwise refuted by a world whose
    successors refute the goals.
    """

    __slots__ = ("key", "mode", "goals", "atoms", "index", "finished", "refuted", "children")

    def __init__(self, key, mode: int, goals: list, atoms: tuple[str, ...] = ()):
        self.key = key
        self.mode = mode
        self.goals = goals
        self.atoms = atoms
        self.index = 0
        self.finished = False
        self.refuted: _World | None = None
        self.children: list[_World] = []

    def receive(self, res: _World | None) -> None:
        self.index += 1
        if self.mode == _AND:
            if res is not None:
                self.refuted = res
                self.finished = True
        elif res is None:
            self.finished = True
        else:
            self.children.append(res)

    def result(self) -> _World | None:
        if self.mode == _AND:
            return self.refuted
        if self.finished:
            return None
        return _World(self.atoms, self.children)


def _to_model(top: _World) -> KripkeModel:
    ids: dict[int, int] = {}
    order: list[_World] = []
    stack = [top]
    while stack:
        w = stack.pop()
        if id(w) in ids:
            continue
        ids[id(w)] = len(order)
        order.append(w)
        stack.extend(reversed(w.children))
    below: dict[int, set[int]] = {}

    def reach(w: _World) -> set[int]:
        k = ids[id(w)]
        if k not in below:
            acc: set[int] = set()
            for c in w.children:
                acc.add(ids[id(c)])
                acc |= reach(c)
            below[k] = acc
        return below[k]

    relation = frozenset((ids[id(w)], j) for w in order for j in reach(w))
    valuation = {ids[id(w)]: frozenset(w.atoms) for w in order}
    return KripkeModel(frozenset(range(len(order))), relation, valuation, 0)


def decide(f: Formula, budget: int = DEFAULT_BUDGET) -> ProofOutcome:
    """Decide whether ``f`` is a theorem of GL.

    Returns :class:`Provable`, or :class:`Refuted` carrying a finite
    transitive irreflexive model whose root falsifies ``f``. Raises
    :class:`ResourceLimit` when more than ``budget`` sequents are visited.
    """
    search = _Search(budget)
    goal = search.intern(f)
    w = search.prove(frozenset(), frozenset({goal}))
    if w is None:
        return Provable()
    return Refuted(_to_model(w))


def is_provable(f: Formula, budget: int = DEFAULT_BUDGET) -> bool:
    return decide(f, budget).provable


def equivalent(f: Formula, g: Formula, budget: int = DEFAULT_BUDGET) -> bool:
    """GL-provable equivalence of ``f`` and ``g``."""
    return decide(Equivalence(f, g), budget).provable
