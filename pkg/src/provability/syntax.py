"""Concrete ASCII syntax for modal formulas.

Precedence, loosest first: ``<->`` (left-assoc), ``->`` (right-assoc),
``|``, ``&``, then the prefix operators ``~``, ``[]``, ``<>`` and their
keyword spellings ``box`` and ``dia``. ``top`` abbreviates ``~bot``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from provability.formula import (
    BOT,
    Atom,
    Box,
    Conjunction,
    Disjunction,
    Equivalence,
    Falsum,
    Formula,
    Implication,
    Negation,
    TOP,
    diamond,
)

RESERVED = frozenset({"bot", "top", "box", "dia"})

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|\[\]|<>|[~&|()])|(?P<ident>[a-z][a-zA-Z0-9_]*))"
)


class ParseError(ValueError):
    """Malformed formula text.

    ``offset`` is the byte offset of the offending token (the input length
    at end of input) and ``expected`` the set of token kinds that would
    have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # an operator literal, "ident", a reserved word, or "eof"
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        start = m.start("op") if m.group("op") else m.start("ident")
        word = m.group("op") or m.group("ident")
        kind = word if m.group("op") or word in RESERVED else "ident"
        toks.append(_Tok(kind, word, _byte_offset(text, start)))
        pos = m.end()
    toks.append(_Tok("eof", "", _byte_offset(text, len(text))))
    return toks


_PREFIX = ("~", "[]", "<>", "box", "dia")
_ATOM_START = frozenset({"bot", "top", "ident", "("})


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected) -> ParseError:
        t = self.tok
        what = "end of input" if t.kind == "eof" else repr(t.text)
        return ParseError(f"unexpected {what}", t.offset, frozenset(expected))

    def formula(self) -> Formula:
        f = self.imp()
        while self.tok.kind == "<->":
            self.advance()
            f = Equivalence(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.tok.kind == "->":
            self.advance()
            return Implication(f, self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.tok.kind == "|":
            self.advance()
            f = Disjunction(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.tok.kind == "&":
            self.advance()
            f = Conjunction(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind = self.tok.kind
        if kind in _PREFIX:
            self.advance()
            operand = self.unary()
            if kind == "~":
                return Negation(operand)
            if kind in ("[]", "box"):
                return Box(operand)
            return diamond(operand)
        return self.atom()

    def atom(self) -> Formula:
        t = self.tok
        if t.kind == "bot":
            self.advance()
            return BOT
        if t.kind == "top":
            self.advance()
            return TOP
        if t.kind == "ident":
            self.advance()
            return Atom(t.text)
        if t.kind == "(":
            self.advance()
            f = self.formula()
            if self.tok.kind != ")":
                raise self.fail({")", "<->", "->", "|", "&"})
            self.advance()
            return f
        raise self.fail(set(_PREFIX) | _ATOM_START)


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula, raising :class:`ParseError` if malformed."""
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "eof":
        raise p.fail({"<->", "->", "|", "&", "eof"})
    return f


# binding strength used by render; higher binds tighter
_LEVEL = {Equivalence: 1, Implication: 2, Disjunction: 3, Conjunction: 4}
_SYMBOL = {Equivalence: "<->", Implication: "->", Disjunction: "|", Conjunction: "&"}
_UNARY_LEVEL = 5


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), _UNARY_LEVEL)


def render(f: Formula) -> str:
    """Canonical ASCII text with the fewest parentheses that re-parse to ``f``."""
    if isinstance(f, Falsum):
        return "bot"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, (Negation, Box)):
        prefix = "~" if isinstance(f, Negation) else "[]"
        return prefix + _wrap(f.operand, _level(f.operand) < _UNARY_LEVEL)
    level = _LEVEL[type(f)]
    if isinstance(f, Implication):
        # right-associative
        left_paren = _level(f.left) <= level
        right_paren = _level(f.right) < level
    else:
        left_paren = _level(f.left) < level
        right_paren = _level(f.right) <= level
    return f"{_wrap(f.left, left_paren)} {_SYMBOL[type(f)]} {_wrap(f.right, right_paren)}"


def _wrap(f: Formula, paren: bool) -> str:
    s = render(f)
    return f"({s})" if paren else s
