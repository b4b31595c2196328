"""BD states, positive/negative satisfaction and first-degree entailment.

A state is a subset of the literal set ``Lit`` over a fixed, explicit atom
universe. States are enumerated in a canonical order: literals are ordered
``p, ~p, q, ~q, ...`` with atoms sorted by name, literal ``j`` is bit ``j``
of the state index, and states are listed by increasing index. The empty
state (index 0) is the total gap; the full state ``x_max`` is the total glut.

Entailment quantifies over every model and state. Each state of any model
satisfies exactly the formulas its literal set satisfies, so it suffices to
check the ``2**(2n)`` literal sets over the atoms of both formulas. That
check is what :func:`entails` does, by bitset evaluation over all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import UndeclaredAtom
from .formula import And, Atom, Formula, Literal, Not, atoms

__all__ = [
    "POSITIVE",
    "NEGATIVE",
    "BDState",
    "EntailmentVerdict",
    "universe_of",
    "literal_order",
    "all_states",
    "sat",
    "extension_masks",
    "entails",
]

POSITIVE = "positive"
NEGATIVE = "negative"

_MODE_ALIASES = {"positive": POSITIVE, "pos": POSITIVE, "+": POSITIVE,
                 "negative": NEGATIVE, "neg": NEGATIVE, "-": NEGATIVE}


def _mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None


def universe_of(names: Iterable[str]) -> tuple[str, ...]:
    """Canonical form of an atom universe: a sorted tuple of distinct names."""
    return tuple(sorted(set(names)))


@lru_cache(maxsize=None)
def literal_order(universe: tuple[str, ...]) -> tuple[Literal, ...]:
    return tuple(Literal(a, neg) for a in universe for neg in (False, True))


@dataclass(frozen=True)
class BDState:
    """A set of literals over an atom universe; one BD possible world."""

    literals: frozenset[Literal]
    universe: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "literals", frozenset(self.literals))
        object.__setattr__(self, "universe", universe_of(self.universe))
        stray = {lit.atom for lit in self.literals} - set(self.universe)
        if stray:
            raise UndeclaredAtom(stray)

    @classmethod
    def from_index(cls, index: int, universe: Iterable[str]) -> BDState:
        universe = universe_of(universe)
        order = literal_order(universe)
        if not 0 <= index < 1 << len(order):
            raise ValueError(f"state index {index} out of range")
        return cls(frozenset(lit for j, lit in enumerate(order) if index >> j & 1), universe)

    @classmethod
    def parse(cls, text: str, universe: Iterable[str]) -> BDState:
        """Read ``"{p,~p}"`` style notation (braces optional)."""
        body = text.strip().removeprefix("{").removesuffix("}").strip()
        lits = [Literal.parse(tok) for tok in body.split(",")] if body else []
        return cls(frozenset(lits), tuple(universe))

    @classmethod
    def full(cls, universe: Iterable[str]) -> BDState:
        universe = universe_of(universe)
        return cls(frozenset(literal_order(universe)), universe)

    @property
    def index(self) -> int:
        order = literal_order(self.universe)
        return sum(1 << j for j, lit in enumerate(order) if lit in self.literals)

    def __str__(self) -> str:
        return "{" + ",".join(str(lit) for lit in sorted(self.literals)) + "}"

    def __le__(self, other: BDState) -> bool:
        return self.literals <= other.literals


def all_states(universe: Iterable[str]) -> Iterator[BDState]:
    """Every subset of ``Lit`` over ``universe``, in canonical order."""
    universe = universe_of(universe)
    for i in range(1 << (2 * len(universe))):
        yield BDState.from_index(i, universe)


def sat(x: BDState, f: Formula, mode: str = POSITIVE) -> bool:
    """Whether ``x`` supports the truth (positive) or falsity (negative) of ``f``."""
    missing = atoms(f) - set(x.universe)
    if missing:
        raise UndeclaredAtom(missing)
    return _sat(x.literals, f, _mode(mode) == POSITIVE)


def _sat(lits: frozenset[Literal], f: Formula, positive: bool) -> bool:
    if isinstance(f, Atom):
        return Literal(f.name, not positive) in lits
    if isinstance(f, Not):
        return _sat(lits, f.arg, not positive)
    left = _sat(lits, f.left, positive)
    if isinstance(f, And) == positive:
        return left and _sat(lits, f.right, positive)
    return left or _sat(lits, f.right, positive)


@lru_cache(maxsize=None)
def _literal_masks(universe: tuple[str, ...]) -> dict[Literal, int]:
    order = literal_order(universe)
    n_states = 1 << len(order)
    masks = {}
    for j, lit in enumerate(order):
        half = 1 << j
        block = ((1 << half) - 1) << half
        period = half << 1
        masks[lit] = block * (((1 << n_states) - 1) // ((1 << period) - 1))
    return masks


def extension_masks(f: Formula, universe: Iterable[str]) -> tuple[int, int]:
    """Positive and negative extension of ``f`` as bitsets over state indices.

    Bit ``i`` of the first (second) integer is set iff the state with
    canonical index ``i`` satisfies ``f`` positively (negatively).
    """
    universe = universe_of(universe)
    missing = atoms(f) - set(universe)
    if missing:
        raise UndeclaredAtom(missing)
    masks = _literal_masks(universe)
    everything = (1 << (1 << (2 * len(universe)))) - 1
    memo: dict[Formula, tuple[int, int]] = {}

    def go(g: Formula) -> tuple[int, int]:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if isinstance(g, Atom):
            out = masks[Literal(g.name)], masks[Literal(g.name, True)]
        elif isinstance(g, Not):
            pos, neg = go(g.arg)
            out = neg, pos
        else:
            lp, ln = go(g.left)
            rp, rn = go(g.right)
            out = (lp & rp, ln | rn) if isinstance(g, And) else (lp | rp, ln & rn)
        memo[g] = out
        return out

    pos, neg = go(f)
    return pos & everything, neg & everything


@dataclass(frozen=True)
class EntailmentVerdict:
    holds: bool
    countermodel: BDState | None = None

    def __bool__(self) -> bool:
        return self.holds


def entails(
    f: Formula,
    g: Formula,
    mode: str = POSITIVE,
    universe: Iterable[str] | None = None,
) -> EntailmentVerdict:
    """Decide ``f |= g`` in the given mode.

    States range over the atoms of ``f`` and ``g`` (plus ``universe`` if
    given). The countermodel, when present, is the first failing state in
    canonical order.

    Checking these 2^(2n) literal sets is enough: a state of any model
    fixes which literals over the relevant atoms it satisfies, and every
    literal set is realized by a one-state model.
    """
    names = atoms(f) | atoms(g) | set(universe or ())
    uni = universe_of(names)
    idx = 0 if _mode(mode) == POSITIVE else 1
    fm = extension_masks(f, uni)[idx]
    gm = extension_masks(g, uni)[idx]
    bad = fm & ~gm
    if not bad:
        return EntailmentVerdict(True)
    first = (bad & -bad).bit_length() - 1
    return EntailmentVerdict(False, BDState.from_index(first, uni))
