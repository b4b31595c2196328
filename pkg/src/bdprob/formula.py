"""Formulas of the Belnap-Dunn language: AST, parser, printer, normal forms.

Surface syntax::

    formula := or
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | atom | '(' formula ')'
    atom    := [a-z][a-zA-Z0-9_]*

``~`` binds tighter than ``&``, which binds tighter than ``|``. Binary
connectives associate to the left. There are no constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import ParseError

__all__ = [
    "Formula",
    "Atom",
    "Not",
    "And",
    "Or",
    "Literal",
    "NormalForm",
    "DNF",
    "CNF",
    "parse",
    "render",
    "atoms",
    "normal_form",
    "conjoin",
    "disjoin",
]

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")

DNF = "dnf"
CNF = "cnf"


class Formula:
    """Base class of formula nodes. Nodes are immutable and hashable."""

    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula

    def __repr__(self) -> str:
        return f"Not({self.arg!r})"


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, order=True, slots=True)
class Literal:
    """An atom or a negated atom. Orders by atom name, positive first."""

    atom: str
    negated: bool = False

    def __str__(self) -> str:
        return f"~{self.atom}" if self.negated else self.atom

    @property
    def complement(self) -> Literal:
        return Literal(self.atom, not self.negated)

    def formula(self) -> Formula:
        node = Atom(self.atom)
        return Not(node) if self.negated else node

    @classmethod
    def parse(cls, text: str) -> Literal:
        text = text.strip()
        negated = text.startswith("~")
        name = text[1:].strip() if negated else text
        if not _ATOM_RE.fullmatch(name):
            raise ValueError(f"invalid literal {text!r}")
        return cls(name, negated)


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"[a-z][a-zA-Z0-9_]*|[~&|()]")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(_byte_offset(text, pos), {"atom", "~", "("}, text)
        word = m.group()
        kind = "atom" if word[0].isalpha() else word
        tokens.append((kind, word, _byte_offset(text, pos)))
        pos = m.end()
    tokens.append(("eof", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: set[str]):
        raise ParseError(self.tokens[self.i][2], expected, self.text)

    def formula(self) -> Formula:
        node = self.conjunction()
        while self.peek() == "|":
            self.take()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.unary()
        while self.peek() == "&":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "~":
            self.take()
            return Not(self.unary())
        if kind == "atom":
            return Atom(self.take()[1])
        if kind == "(":
            self.take()
            node = self.formula()
            if self.peek() != ")":
                self.fail({")", "&", "|"})
            self.take()
            return node
        self.fail({"atom", "~", "("})


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula.

    Raises :class:`ParseError` carrying the byte offset of the offending
    token and the set of tokens that would have been accepted there.
    """
    parser = _Parser(text)
    node = parser.formula()
    if parser.peek() != "eof":
        parser.fail({"&", "|", "eof"})
    return node


# -- printing --------------------------------------------------------------

_PREC = {Or: 1, And: 2, Not: 3, Atom: 4}


def render(f: Formula) -> str:
    """Print ``f`` with the fewest parentheses that still re-parse to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = render(f.arg)
        return "~" + (f"({inner})" if _PREC[type(f.arg)] < 3 else inner)
    prec = _PREC[type(f)]
    sym = " & " if isinstance(f, And) else " | "
    left = render(f.left)
    right = render(f.right)
    if _PREC[type(f.left)] < prec:
        left = f"({left})"
    # right operand of a left-associative operator needs parens at equal precedence
    if _PREC[type(f.right)] <= prec:
        right = f"({right})"
    return left + sym + right


def atoms(f: Formula) -> frozenset[str]:
    """Names of the atoms occurring in ``f``."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.arg)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(out)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.arg)
    elif isinstance(f, (And, Or)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def conjoin(fs: Iterable[Formula]) -> Formula:
    """Left-folded conjunction of a nonempty iterable of formulas."""
    return reduce(And, fs)


def disjoin(fs: Iterable[Formula]) -> Formula:
    """Left-folded disjunction of a nonempty iterable of formulas."""
    return reduce(Or, fs)


# -- normal forms ----------------------------------------------------------


def _clause_key(clause: frozenset[Literal]) -> tuple:
    return tuple(sorted(clause))


@dataclass(frozen=True)
class NormalForm:
    """A DNF (disjunction of conjunctive clauses) or CNF, as literal sets.

    A clause may hold both ``p`` and ``~p``; such clauses are meaningful in
    Belnap-Dunn logic and are never pruned.
    """

    clauses: tuple[frozenset[Literal], ...]
    polarity: str

    def __post_init__(self):
        if self.polarity not in (DNF, CNF):
            raise ValueError(f"polarity must be {DNF!r} or {CNF!r}")
        if not self.clauses or any(not c for c in self.clauses):
            raise ValueError("normal forms have at least one clause and no empty clause")
        canon = tuple(sorted(set(self.clauses), key=_clause_key))
        object.__setattr__(self, "clauses", canon)

    def to_formula(self) -> Formula:
        inner, outer = (conjoin, disjoin) if self.polarity == DNF else (disjoin, conjoin)
        return outer(inner(lit.formula() for lit in sorted(c)) for c in self.clauses)

    def __str__(self) -> str:
        return render(self.to_formula())


def _product(xs: set[frozenset], ys: set[frozenset]) -> set[frozenset]:
    return {x | y for x in xs for y in ys}


def _families(f: Formula, positive: bool, dnf: bool) -> set[frozenset[Literal]]:
    # ``positive`` is False while under an odd number of negations (De Morgan).
    if isinstance(f, Atom):
        return {frozenset([Literal(f.name, not positive)])}
    if isinstance(f, Not):
        return _families(f.arg, not positive, dnf)
    left = _families(f.left, positive, dnf)
    right = _families(f.right, positive, dnf)
    conjunctive = isinstance(f, And) == positive
    if conjunctive == dnf:
        return _product(left, right)
    return left | right


def normal_form(f: Formula, polarity: str = DNF) -> NormalForm:
    """FDE-equivalent disjunctive (``DNF``) or conjunctive (``CNF``) normal form.

    Only double negation, De Morgan, distribution and the lattice laws are
    used, so the result is equivalent in both the positive and the negative
    sense. Duplicate clauses are removed; nothing else is simplified.
    """
    if polarity not in (DNF, CNF):
        raise ValueError(f"polarity must be {DNF!r} or {CNF!r}")
    return NormalForm(tuple(_families(f, True, polarity == DNF)), polarity)
