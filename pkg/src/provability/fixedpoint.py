"""Explicit GL fixed points, and the liar sentences built from them.

For a template ``A(p)`` with ``p`` under a box, the k-th iterate of ``A``
from ``top`` agrees with the fixed point on every world of height below k.
For the liar templates the iterates settle after a couple of steps, but not
in general: the iterates of ``<>p`` are ``~[]^k bot`` and never settle,
although the fixed point is ``bot``. When the iteration does not settle
within its bound, the fixed point is built directly by abstracting the
outermost boxed occurrences of ``p``:

    A(p) = B([]D_1(p), ..., []D_m(p))
    H_i  = fixed point of A with []D_i(p) replaced by top
    H    = B([]D_1(H_1), ..., []D_m(H_m))

Either way the result carries a prover check of ``H <-> A(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from provability.classify import Classification, classify
from provability.formula import (
    BINARY,
    TOP,
    Atom,
    Box,
    Equivalence,
    Formula,
    Implication,
    Negation,
    atoms,
    box_tower,
    children,
    is_letterless,
    is_modalized_in,
    modal_depth,
    substitute,
)
from provability.prover import DEFAULT_BUDGET, decide, equivalent
from provability.trace import normal_form

LIAR_ATOM = "p"


class NotModalized(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class FixedPointResult:
    fixed_point: Formula
    iterations: Optional[int]  # None when built by the direct construction
    certificate_checked: bool
    template: Formula
    atom: str
    method: str = "iteration"

    def to_dict(self) -> dict:
        return {
            "fixed_point": str(self.fixed_point),
            "iterations": self.iterations,
            "method": self.method,
            "certificate_checked": self.certificate_checked,
            "template": str(self.template),
            "atom": self.atom,
        }


def default_bound(template: Formula) -> int:
    return modal_depth(template) + 2


def fixed_point(
    template: Formula,
    p: str,
    max_iter: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> FixedPointResult:
    """Find ``F`` with ``F <-> template[p := F]`` provable in GL.

    First iterates ``F_0 = top``, ``F_{k+1} = template[p := F_k]`` and stops
    at the first ``k <= max_iter`` with ``F_{k+1}`` equivalent to ``F_k``.
    Otherwise falls back to the direct construction. Letterless results
    are returned in normal form.
    """
    if not is_modalized_in(template, p):
        raise NotModalized(f"{p!r} occurs outside every box in {template}")
    bound = default_bound(template) if max_iter is None else max_iter
    found = _iterate(template, p, bound, budget)
    if found is not None:
        fp, iterations, method = found[0], found[1], "iteration"
    else:
        fp, iterations, method = construct_fixed_point(template, p), None, "construction"
    certificate = Equivalence(fp, substitute(template, p, fp))
    checked = decide(certificate, budget).provable
    if not checked:
        raise NoConvergence(f"candidate fixed point {fp} of {template} failed its certificate")
    return FixedPointResult(fp, iterations, checked, template, p, method)


def _simplify(f: Formula) -> Formula:
    return normal_form(f) if is_letterless(f) else f


def _iterate(template: Formula, p: str, bound: int, budget: int) -> tuple[Formula, int] | None:
    current = TOP
    for k in range(bound + 1):
        nxt = _simplify(substitute(template, p, current))
        if equivalent(nxt, current, budget):
            return current, k
        current = nxt
    return None


def _outer_boxes(f: Formula, p: str) -> list[Box]:
    """Distinct outermost boxed subformulas containing ``p``, left to right."""
    found: list[Box] = []

    def walk(g: Formula) -> None:
        if isinstance(g, Box):
            if p in atoms(g) and g not in found:
                found.append(g)
            return
        for c in children(g):
            walk(c)

    walk(f)
    return found


def _abstract(f: Formula, boxes: list[Box], holes: list[str]) -> Formula:
    """Replace outermost occurrences of ``boxes[i]`` by ``Atom(holes[i])``."""
    if isinstance(f, Box):
        for b, h in zip(boxes, holes):
            if f == b:
                return Atom(h)
        return f
    if isinstance(f, Negation):
        return Negation(_abstract(f.operand, boxes, holes))
    if isinstance(f, BINARY):
        return type(f)(_abstract(f.left, boxes, holes), _abstract(f.right, boxes, holes))
    return f


def _fill(skeleton: Formula, holes: list[str], parts: list[Formula]) -> Formula:
    for h, part in zip(holes, parts):
        skeleton = substitute(skeleton, h, part)
    return skeleton


def construct_fixed_point(template: Formula, p: str) -> Formula:
    """Fixed point of ``template`` in ``p`` by abstracting outermost boxes; no certificate."""
    boxes = _outer_boxes(template, p)
    if not boxes:
        return _simplify(template)
    # '#' cannot appear in a parsed identifier, so holes never clash with atoms
    holes = [f"hole#{i}" for i in range(len(boxes))]
    skeleton = _abstract(template, boxes, holes)
    parts = []
    for i, box in enumerate(boxes):
        reduced = _fill(skeleton, holes, [TOP if j == i else b for j, b in enumerate(boxes)])
        inner = construct_fixed_point(reduced, p)
        parts.append(substitute(box, p, inner))
    return _simplify(_fill(skeleton, holes, parts))


def liar_template(n: int) -> Formula:
    """``[]p -> []^n bot``."""
    return Implication(Box(Atom(LIAR_ATOM)), box_tower(n))


def liar(n: int, max_iter: int | None = None, budget: int = DEFAULT_BUDGET) -> tuple[Formula, Classification]:
    """The n-constructive liar as a letterless normal form, with its classification."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    result = liar_result(n, max_iter, budget)
    return result.fixed_point, classify(result.fixed_point)


def liar_result(n: int, max_iter: int | None = None, budget: int = DEFAULT_BUDGET) -> FixedPointResult:
    return fixed_point(liar_template(n), LIAR_ATOM, max_iter, budget)


def godel_liar(n: int) -> tuple[Formula, Classification]:
    """``~[]^n bot``, the consistency statement iterated n times."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    f = Negation(box_tower(n))
    return f, classify(f)
