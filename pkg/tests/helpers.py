"""Random generators and independent oracles shared by the test modules.

The oracles avoid the package's bitset machinery: they evaluate formulas
recursively over explicit truth-value sets and sum masses state by state.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from bdprob import (
    And,
    Atom,
    FourVector,
    Literal,
    Not,
    Or,
    ProbModel,
    State,
)

F = Fraction

M1_MASSES = {"{}": F(1, 10), "{p}": F(2, 5), "{~p}": F(3, 10), "{p,~p}": F(1, 5)}


def m1() -> ProbModel:
    return ProbModel.from_literal_sets(["p"], M1_MASSES)


# -- generators ------------------------------------------------------------


def random_formula(rng: random.Random, names, depth: int = 3):
    if depth == 0 or rng.random() < 0.25:
        a = Atom(rng.choice(list(names)))
        return Not(a) if rng.random() < 0.3 else a
    kind = rng.randrange(3)
    if kind == 0:
        return Not(random_formula(rng, names, depth - 1))
    op = And if kind == 1 else Or
    return op(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def random_weights(rng: random.Random, n: int, zero_rate: float = 0.2, top: int = 9) -> list[Fraction]:
    """``n`` nonnegative rationals summing to 1, some of them zero."""
    while True:
        raw = [0 if rng.random() < zero_rate else rng.randint(1, top) for _ in range(n)]
        total = sum(raw)
        if total:
            return [F(x, total) for x in raw]


def random_model(rng: random.Random, names=("p", "q"), zero_rate: float = 0.2) -> ProbModel:
    names = tuple(sorted(names))
    return ProbModel.from_masses(names, random_weights(rng, 1 << (2 * len(names)), zero_rate))


def random_raw_model(rng: random.Random, names=("p", "q")) -> ProbModel:
    """A non-canonical model: a few states, repeated literal sets allowed."""
    names = tuple(sorted(names))
    k = rng.randint(1, 6)
    weights = random_weights(rng, k, zero_rate=0.1)
    states = []
    for n, w in enumerate(weights):
        pos = frozenset(a for a in names if rng.random() < 0.5)
        neg = frozenset(a for a in names if rng.random() < 0.5)
        states.append(State(f"w{n}", pos, neg, w))
    return ProbModel(names, tuple(states))


def random_classical_model(rng: random.Random, names=("p", "q")) -> ProbModel:
    """States are classical valuations: each atom in exactly one of pos and neg."""
    names = tuple(sorted(names))
    worlds = list(itertools.product((True, False), repeat=len(names)))
    weights = random_weights(rng, len(worlds))
    states = []
    for n, (world, w) in enumerate(zip(worlds, weights)):
        pos = frozenset(a for a, v in zip(names, world) if v)
        states.append(State(f"v{n}", pos, frozenset(names) - pos, w))
    return ProbModel(names, tuple(states))


def random_vector(rng: random.Random, zero_rate: float = 0.2) -> FourVector:
    return FourVector(*random_weights(rng, 4, zero_rate))


def random_admissible_target(rng: random.Random, prior: FourVector) -> FourVector:
    support = [c > 0 for c in prior]
    while True:
        w = random_weights(rng, 4)
        w = [x if s else F(0) for x, s in zip(w, support)]
        total = sum(w)
        if total:
            return FourVector(*(x / total for x in w))


# -- oracles ---------------------------------------------------------------


def bd_truth(state_pos, state_neg, f) -> frozenset:
    """Belnap-Dunn value of ``f`` as a subset of {0, 1}, computed truth-functionally."""
    if isinstance(f, Atom):
        out = set()
        if f.name in state_pos:
            out.add(1)
        if f.name in state_neg:
            out.add(0)
        return frozenset(out)
    if isinstance(f, Not):
        v = bd_truth(state_pos, state_neg, f.arg)
        return frozenset({1 - x for x in v})
    x = bd_truth(state_pos, state_neg, f.left)
    y = bd_truth(state_pos, state_neg, f.right)
    out = set()
    if isinstance(f, And):
        if 1 in x and 1 in y:
            out.add(1)
        if 0 in x or 0 in y:
            out.add(0)
    else:
        if 1 in x or 1 in y:
            out.add(1)
        if 0 in x and 0 in y:
            out.add(0)
    return frozenset(out)


def oracle_ns(m: ProbModel, f) -> Fraction:
    return sum((st.mass for st in m.states if 1 in bd_truth(st.pos, st.neg, f)), F(0))


def oracle_fv(m: ProbModel, f) -> FourVector:
    cells = {frozenset({1}): 0, frozenset({0}): 1, frozenset(): 2, frozenset({0, 1}): 3}
    out = [F(0)] * 4
    for st in m.states:
        out[cells[bd_truth(st.pos, st.neg, f)]] += st.mass
    return FourVector(*out)


def oracle_entails(f, g, names, negative: bool = False) -> bool:
    want = 0 if negative else 1
    names = sorted(names)
    for bits in itertools.product(range(4), repeat=len(names)):
        pos = {a for a, b in zip(names, bits) if b & 1}
        neg = {a for a, b in zip(names, bits) if b & 2}
        if want in bd_truth(pos, neg, f) and want not in bd_truth(pos, neg, g):
            return False
    return True


def all_literal_sets(names):
    lits = [Literal(a, neg) for a in sorted(names) for neg in (False, True)]
    for r in range(len(lits) + 1):
        for combo in itertools.combinations(lits, r):
            yield frozenset(combo)


def moebius_masses(value_of_monomial, names) -> dict[frozenset, Fraction]:
    """Masses by inclusion-exclusion over supersets: W(x) = sum (-1)^|y - x| p(/\\y)."""
    sets = list(all_literal_sets(names))
    val = {x: (F(1) if not x else value_of_monomial(x)) for x in sets}
    return {
        x: sum((val[y] * (-1) ** (len(y) - len(x)) for y in sets if x <= y), F(0)) for x in sets
    }
