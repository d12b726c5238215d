"""Propositional formulas in negation normal form, with dependence atoms.

Concrete syntax::

    disj := conj ('|' conj)*
    conj := atom ('&' atom)*
    atom := 'T' | 'F' | var | '~' var
          | 'dep(' [var (',' var)* ';'] var ')'
          | '(' disj ')'
    var  := [a-z][a-zA-Z0-9_]*

'|' binds looser than '&' and both chains associate to the left.  Negation
is admitted on variables only, so every tree this module produces is in
negation normal form by construction.  ``dep(p)`` and ``dep(;p)`` both
denote the constancy atom and render as ``dep(p)``.  The word ``dep`` acts
as a plain variable when not followed by '('.

Whitespace is insignificant.  Parse failures raise :class:`ParseError`
carrying a 1-based character offset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Syntax error with a 1-based character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at position {pos}: {message}")
        self.message = message
        self.pos = pos


class Formula:
    """Base class for formula nodes.  Instances are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class PosLit(Formula):
    var: str


@dataclass(frozen=True)
class NegLit(Formula):
    var: str


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Dep(Formula):
    """Dependence atom dep(args; target).  Empty args is the constancy atom."""

    args: tuple[str, ...]
    target: str


TOP = Top()
BOTTOM = Bottom()

VAR_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<var>[a-z][a-zA-Z0-9_]*)
  | (?P<top>T)
  | (?P<bot>F)
  | (?P<punct>[&|~(),;])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    # (kind, text, 1-based position)
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i + 1)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "punct":
                kind = tok
            out.append((kind, tok, i + 1))
        i = m.end()
    out.append(("eof", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {what}", t[2])
        return t

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[0] == "|":
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.atom()
        while self.peek()[0] == "&":
            self.next()
            f = And(f, self.atom())
        return f

    def atom(self) -> Formula:
        kind, tok, pos = self.next()
        if kind == "top":
            return TOP
        if kind == "bot":
            return BOTTOM
        if kind == "var":
            if tok == "dep" and self.peek()[0] == "(":
                return self.dep_atom()
            return PosLit(tok)
        if kind == "~":
            k2, t2, p2 = self.next()
            if k2 != "var" or (t2 == "dep" and self.peek()[0] == "("):
                raise ParseError("negation applies only to variables", p2)
            return NegLit(t2)
        if kind == "(":
            f = self.disj()
            self.expect(")", "')'")
            return f
        if kind == "eof":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {tok!r}", pos)

    def dep_atom(self) -> Formula:
        self.expect("(", "'('")
        names: list[str] = []
        if self.peek()[0] == ";":
            self.next()
            target = self.expect("var", "a variable")[1]
            self.expect(")", "')'")
            return Dep((), target)
        names.append(self.expect("var", "a variable")[1])
        while self.peek()[0] == ",":
            self.next()
            names.append(self.expect("var", "a variable")[1])
        kind, tok, pos = self.next()
        if kind == ")":
            if len(names) != 1:
                raise ParseError("expected ';' before the dependent variable", pos)
            return Dep((), names[0])
        if kind == ";":
            target = self.expect("var", "a variable")[1]
            self.expect(")", "')'")
            return Dep(tuple(names), target)
        raise ParseError("expected ',', ';' or ')'", pos)


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula, raising ParseError on bad input."""
    p = _Parser(text)
    f = p.disj()
    kind, tok, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"unexpected token {tok!r} after formula", pos)
    return f


def render(f: Formula) -> str:
    """Render with minimal parentheses; parse(render(f)) == f."""
    if isinstance(f, Or):
        left = render(f.left)
        right = render(f.right)
        if isinstance(f.right, Or):
            right = f"({right})"
        return f"{left} | {right}"
    if isinstance(f, And):
        return f"{_and_operand(f.left, right_child=False)} & {_and_operand(f.right, right_child=True)}"
    return _render_atom(f)


def _and_operand(f: Formula, right_child: bool) -> str:
    if isinstance(f, Or) or (right_child and isinstance(f, And)):
        return f"({render(f)})"
    return render(f)


def _render_atom(f: Formula) -> str:
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bottom):
        return "F"
    if isinstance(f, PosLit):
        return f.var
    if isinstance(f, NegLit):
        return f"~{f.var}"
    if isinstance(f, Dep):
        if f.args:
            return f"dep({','.join(f.args)};{f.target})"
        return f"dep({f.target})"
    raise TypeError(f"not a formula node: {f!r}")


def vars_of(f: Formula) -> set[str]:
    """All variables occurring in f, including dependence-atom arguments."""
    if isinstance(f, (Top, Bottom)):
        return set()
    if isinstance(f, (PosLit, NegLit)):
        return {f.var}
    if isinstance(f, Dep):
        return set(f.args) | {f.target}
    if isinstance(f, (And, Or)):
        return vars_of(f.left) | vars_of(f.right)
    raise TypeError(f"not a formula node: {f!r}")


def is_pl(f: Formula) -> bool:
    """True iff f contains no dependence atom."""
    if isinstance(f, Dep):
        return False
    if isinstance(f, (And, Or)):
        return is_pl(f.left) and is_pl(f.right)
    return True


def node_count(f: Formula) -> int:
    if isinstance(f, (And, Or)):
        return 1 + node_count(f.left) + node_count(f.right)
    return 1
