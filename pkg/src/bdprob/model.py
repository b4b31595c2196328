"""Probabilistic models and the probabilities they induce.

A model is a finite list of states, each carrying a positive valuation
(``pos``), a negative valuation (``neg``) and a mass. ``pos`` and ``neg``
may overlap (gluts) and need not cover the universe (gaps). Every state
realizes one literal set; pushing masses forward along that map gives the
canonical model over ``P(Lit)``, which induces the same probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AtomMismatch,
    InvalidModel,
    InvalidVector,
    UndeclaredAtom,
    WeightOutOfRange,
)
from .formula import Formula, Literal, atoms
from .rational import as_fraction, format_rational, parse_rationals
from .semantics import BDState, extension_masks, literal_order, universe_of

__all__ = [
    "CELLS",
    "FourVector",
    "State",
    "ProbModel",
    "validate_model",
    "extension",
    "eval_ns",
    "eval_fv",
    "canonicalize",
    "mix",
    "cell_masks",
]

CELLS = ("b", "d", "u", "c")
_EXTENSIONS = ("plus", "minus") + CELLS


@dataclass(frozen=True)
class FourVector:
    """Pure belief, pure disbelief, uncertainty and conflict about a formula."""

    b: Fraction
    d: Fraction
    u: Fraction
    c: Fraction

    def __post_init__(self):
        for name in CELLS:
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> FourVector:
        return cls(*parse_rationals(text, 4))

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.b, self.d, self.u, self.c))

    def __getitem__(self, cell: str) -> Fraction:
        if cell not in CELLS:
            raise KeyError(cell)
        return getattr(self, cell)

    def __str__(self) -> str:
        return ",".join(format_rational(x) for x in self)

    def swap(self) -> FourVector:
        """The vector of the negated formula: belief and disbelief exchanged."""
        return FourVector(self.d, self.b, self.u, self.c)

    def violations(self) -> list[str]:
        out = [f"{n} = {format_rational(v)} < 0" for n, v in zip(CELLS, self) if v < 0]
        total = sum(self)
        if total != 1:
            out.append(f"b + d + u + c = {format_rational(total)} ≠ 1")
        return out

    def check(self) -> FourVector:
        bad = self.violations()
        if bad:
            raise InvalidVector("; ".join(bad))
        return self


@dataclass(frozen=True)
class State:
    id: str
    pos: frozenset[str]
    neg: frozenset[str]
    mass: Fraction

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))
        object.__setattr__(self, "mass", as_fraction(self.mass))

    @property
    def literals(self) -> frozenset[Literal]:
        return frozenset(Literal(a) for a in self.pos) | frozenset(
            Literal(a, True) for a in self.neg
        )


def _state_label(lits: Iterable[Literal]) -> str:
    return "{" + ",".join(str(lit) for lit in sorted(lits)) + "}"


@dataclass(frozen=True)
class ProbModel:
    """A finite probabilistic model over an explicit atom universe.

    Construction does not validate; call :func:`validate_model` (or
    :meth:`check`) on untrusted input.
    """

    atoms: tuple[str, ...]
    states: tuple[State, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", universe_of(self.atoms))
        object.__setattr__(self, "states", tuple(self.states))

    # -- constructors --

    @classmethod
    def from_masses(cls, atoms: Iterable[str], masses: Sequence) -> ProbModel:
        """Canonical model from a mass per state index (length ``4**n``)."""
        universe = universe_of(atoms)
        if len(masses) != 1 << (2 * len(universe)):
            raise ValueError("need one mass per subset of Lit")
        states = []
        for i, w in enumerate(masses):
            lits = BDState.from_index(i, universe).literals
            states.append(_state_from_literals(lits, w))
        return cls(universe, tuple(states))

    @classmethod
    def from_literal_sets(cls, atoms: Iterable[str], masses: Mapping) -> ProbModel:
        """Model with one state per key. Keys are literal sets or ``"{p,~q}"`` strings."""
        universe = universe_of(atoms)
        states = []
        seen: dict[str, int] = {}
        for key, w in masses.items():
            lits = BDState.parse(key, universe).literals if isinstance(key, str) else frozenset(key)
            st = _state_from_literals(lits, w)
            n = seen.get(st.id, 0) + 1
            seen[st.id] = n
            if n > 1:
                st = State(f"{st.id}#{n}", st.pos, st.neg, st.mass)
            states.append(st)
        return cls(universe, tuple(states))

    @classmethod
    def point_mass(cls, atoms: Iterable[str], state) -> ProbModel:
        """Canonical model with all mass on one literal set."""
        universe = universe_of(atoms)
        if isinstance(state, str):
            state = BDState.parse(state, universe)
        elif not isinstance(state, BDState):
            state = BDState(frozenset(state), universe)
        masses = [Fraction(0)] * (1 << (2 * len(universe)))
        masses[state.index] = Fraction(1)
        return cls.from_masses(universe, masses)

    # -- views --

    @cached_property
    def state_indices(self) -> tuple[int, ...]:
        """Canonical index of the literal set realized by each state."""
        order = {lit: j for j, lit in enumerate(literal_order(self.atoms))}
        out = []
        for st in self.states:
            stray = (st.pos | st.neg) - set(self.atoms)
            if stray:
                raise UndeclaredAtom(stray)
            out.append(sum(1 << order[lit] for lit in st.literals))
        return tuple(out)

    def mass_vector(self) -> tuple[Fraction, ...]:
        """Pushforward of the masses onto ``P(Lit)``, indexed canonically."""
        out = [Fraction(0)] * (1 << (2 * len(self.atoms)))
        for i, st in zip(self.state_indices, self.states):
            out[i] += st.mass
        return tuple(out)

    @property
    def is_canonical(self) -> bool:
        n = 1 << (2 * len(self.atoms))
        return len(self.states) == n and self.state_indices == tuple(range(n))

    def mass_of(self, mask: int) -> Fraction:
        """Total mass of the states whose canonical index is in ``mask``."""
        return sum(
            (st.mass for i, st in zip(self.state_indices, self.states) if mask >> i & 1),
            Fraction(0),
        )

    def rescaled(self, factor_of) -> ProbModel:
        """Same states with ``mass * factor_of(canonical_index)``."""
        states = tuple(
            State(st.id, st.pos, st.neg, st.mass * factor_of(i))
            for i, st in zip(self.state_indices, self.states)
        )
        return ProbModel(self.atoms, states)

    def check(self) -> ProbModel:
        bad = validate_model(self)
        if bad:
            raise InvalidModel(bad)
        return self

    def __str__(self) -> str:
        rows = (f"  {st.id}: {format_rational(st.mass)}" for st in self.states)
        return "ProbModel(" + ", ".join(self.atoms) + ")\n" + "\n".join(rows)


def _state_from_literals(lits: frozenset[Literal], mass) -> State:
    return State(
        _state_label(lits),
        frozenset(l.atom for l in lits if not l.negated),
        frozenset(l.atom for l in lits if l.negated),
        mass,
    )


def validate_model(m: ProbModel) -> list[str]:
    """All violations of the model invariants; an empty list means valid."""
    out = []
    for st in m.states:
        if st.mass < 0:
            out.append(f"negative mass {format_rational(st.mass)} on state {st.id}")
    total = sum((st.mass for st in m.states), Fraction(0))
    if total != 1:
        out.append(f"mass sum {format_rational(total)} ≠ 1")
    ids = [st.id for st in m.states]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        out.append("duplicate state ids: " + ", ".join(dupes))
    for st in m.states:
        stray = (st.pos | st.neg) - set(m.atoms)
        if stray:
            out.append(f"state {st.id} uses undeclared atoms: {', '.join(sorted(stray))}")
    return out


def cell_masks(f: Formula, universe: Iterable[str]) -> dict[str, int]:
    """Positive/negative extensions and the four belief cells as bitsets."""
    universe = universe_of(universe)
    plus, minus = extension_masks(f, universe)
    everything = (1 << (1 << (2 * len(universe)))) - 1
    return {
        "plus": plus,
        "minus": minus,
        "b": plus & ~minus,
        "d": minus & ~plus,
        "u": everything & ~(plus | minus),
        "c": plus & minus,
    }


def _require_atoms(m: ProbModel, f: Formula):
    missing = atoms(f) - set(m.atoms)
    if missing:
        raise UndeclaredAtom(missing)


def extension(m: ProbModel, f: Formula, cell: str = "plus") -> frozenset[str]:
    """Ids of the states in the given extension (``plus``/``minus``) or cell."""
    if cell not in _EXTENSIONS:
        raise ValueError(f"cell must be one of {', '.join(_EXTENSIONS)}")
    _require_atoms(m, f)
    mask = cell_masks(f, m.atoms)[cell]
    return frozenset(st.id for i, st in zip(m.state_indices, m.states) if mask >> i & 1)


def eval_ns(m: ProbModel, f: Formula) -> Fraction:
    """Non-standard probability: mass of the positive extension."""
    _require_atoms(m, f)
    return m.mass_of(extension_masks(f, m.atoms)[0])


def eval_fv(m: ProbModel, f: Formula) -> FourVector:
    """Four-valued probability: masses of the b, d, u and c cells."""
    _require_atoms(m, f)
    masks = cell_masks(f, m.atoms)
    return FourVector(*(m.mass_of(masks[c]) for c in CELLS))


def canonicalize(m: ProbModel) -> ProbModel:
    """The canonical model over ``P(Lit)`` inducing the same probabilities.

    Mass-0 states are kept so that every subset of ``Lit`` appears once.
    """
    return ProbModel.from_masses(m.atoms, m.mass_vector())


def mix(a: ProbModel, e: ProbModel, k) -> ProbModel:
    """Canonical model with masses ``k * a + (1 - k) * e``."""
    k = as_fraction(k)
    if not 0 <= k <= 1:
        raise WeightOutOfRange(f"weight {format_rational(k)} not in [0, 1]")
    if a.atoms != e.atoms:
        raise AtomMismatch(f"atom universes differ: {a.atoms} vs {e.atoms}")
    wa, we = a.mass_vector(), e.mass_vector()
    return ProbModel.from_masses(a.atoms, [k * x + (1 - k) * y for x, y in zip(wa, we)])
