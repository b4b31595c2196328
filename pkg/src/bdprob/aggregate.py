"""Pooling two agents' beliefs about one formula.

Policies work per formula: on a pair ``(p(f), p(~f))`` of non-standard
probabilities or on a four-valued vector. Only weighted averaging extends
to whole belief bases (see :func:`bdprob.model.mix`); the max/min policies
deliberately have no model-level counterpart.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidPair, NotExtremal, WeightOutOfRange
from .model import FourVector
from .rational import as_fraction, format_rational, parse_rationals

__all__ = [
    "NSPair",
    "BDValue",
    "Policy",
    "Weighted",
    "CREDULOUS",
    "CAUTIOUS",
    "OPTIMIST",
    "PESSIMIST",
    "parse_policy",
    "aggregate_ns",
    "aggregate_fv",
    "bd_value",
    "lattice_op",
    "LATTICE_OPS",
]


@dataclass(frozen=True)
class NSPair:
    """An agent's probability of a formula and of its negation; no joint constraint."""

    on_f: Fraction
    on_not_f: Fraction

    def __post_init__(self):
        for name in ("on_f", "on_not_f"):
            v = as_fraction(getattr(self, name))
            if not 0 <= v <= 1:
                raise InvalidPair(f"{name} = {format_rational(v)} not in [0, 1]")
            object.__setattr__(self, name, v)

    @classmethod
    def parse(cls, text: str) -> NSPair:
        return cls(*parse_rationals(text, 2))

    def __iter__(self):
        return iter((self.on_f, self.on_not_f))

    def __str__(self) -> str:
        return f"{format_rational(self.on_f)},{format_rational(self.on_not_f)}"

    @property
    def is_classical(self) -> bool:
        return self.on_f + self.on_not_f == 1


class BDValue(enum.Enum):
    """Belnap-Dunn truth values as subsets of ``{0, 1}``."""

    NEITHER = frozenset()
    TRUE = frozenset({1})
    FALSE = frozenset({0})
    BOTH = frozenset({0, 1})

    @classmethod
    def of(cls, members) -> BDValue:
        return cls(frozenset(members))

    def __str__(self) -> str:
        return self.name.capitalize()


def _truth_join(x: frozenset, y: frozenset) -> set:
    out = set()
    if 1 in x or 1 in y:
        out.add(1)
    if 0 in x and 0 in y:
        out.add(0)
    return out


def _truth_meet(x: frozenset, y: frozenset) -> set:
    out = set()
    if 1 in x and 1 in y:
        out.add(1)
    if 0 in x or 0 in y:
        out.add(0)
    return out


LATTICE_OPS = {
    "info_join": frozenset.union,
    "info_meet": frozenset.intersection,
    "truth_join": _truth_join,
    "truth_meet": _truth_meet,
}


def lattice_op(x: BDValue, y: BDValue, op: str) -> BDValue:
    """Meet or join in the truth or the information order."""
    try:
        fn = LATTICE_OPS[op]
    except KeyError:
        raise ValueError(f"op must be one of {', '.join(LATTICE_OPS)}") from None
    return BDValue.of(fn(x.value, y.value))


def bd_value(pair: NSPair) -> BDValue:
    """The truth value of an extremal pair: 1 in it iff ``p(f) = 1``, 0 iff ``p(~f) = 1``."""
    if pair.on_f not in (0, 1) or pair.on_not_f not in (0, 1):
        raise NotExtremal(f"({pair}) is not a pair of 0s and 1s")
    members = set()
    if pair.on_f == 1:
        members.add(1)
    if pair.on_not_f == 1:
        members.add(0)
    return BDValue.of(members)


@dataclass(frozen=True)
class Policy:
    name: str
    k: Fraction | None = None

    def __str__(self) -> str:
        return self.name if self.k is None else f"{self.name}:{format_rational(self.k)}"


def Weighted(k) -> Policy:
    k = as_fraction(k)
    if not 0 <= k <= 1:
        raise WeightOutOfRange(f"weight {format_rational(k)} not in [0, 1]")
    return Policy("weighted", k)


CREDULOUS = Policy("credulous")
CAUTIOUS = Policy("cautious")
OPTIMIST = Policy("optimist")
PESSIMIST = Policy("pessimist")
_NAMED = {p.name: p for p in (CREDULOUS, CAUTIOUS, OPTIMIST, PESSIMIST)}


def parse_policy(text: str) -> Policy:
    """``"weighted:1/3"``, ``"credulous"``, ``"cautious"``, ``"optimist"`` or ``"pessimist"``."""
    name, sep, arg = text.partition(":")
    if name == "weighted":
        if not sep:
            raise ValueError("weighted policy needs a weight, e.g. weighted:1/2")
        return Weighted(arg)
    if sep or name not in _NAMED:
        raise ValueError(f"unknown policy {text!r}")
    return _NAMED[name]


def aggregate_ns(a: NSPair, e: NSPair, policy: Policy) -> NSPair:
    """Combine two agents' ``(p(f), p(~f))`` reports."""
    if policy.name == "weighted":
        k = policy.k
        return NSPair(k * a.on_f + (1 - k) * e.on_f, k * a.on_not_f + (1 - k) * e.on_not_f)
    if policy == CREDULOUS:
        return NSPair(max(a.on_f, e.on_f), max(a.on_not_f, e.on_not_f))
    if policy == CAUTIOUS:
        return NSPair(min(a.on_f, e.on_f), min(a.on_not_f, e.on_not_f))
    if policy == OPTIMIST:
        return NSPair(max(a.on_f, e.on_f), min(a.on_not_f, e.on_not_f))
    if policy == PESSIMIST:
        return NSPair(min(a.on_f, e.on_f), max(a.on_not_f, e.on_not_f))
    raise ValueError(f"unknown policy {policy}")


def aggregate_fv(a: FourVector, e: FourVector, policy: Policy) -> FourVector:
    """Combine two four-valued reports; weighted, credulous or cautious only.

    Credulous takes the larger total belief ``b + c`` and total disbelief
    ``d + c`` and the least conflict consistent with them (never below
    either agent's). Cautious takes the smaller totals and the least
    uncertainty consistent with them (never below either agent's).
    """
    if policy.name == "weighted":
        k = policy.k
        return FourVector(*(k * x + (1 - k) * y for x, y in zip(a, e)))
    if policy == CREDULOUS:
        tb = max(a.b + a.c, e.b + e.c)
        td = max(a.d + a.c, e.d + e.c)
        c = max(a.c, e.c, tb + td - 1)
        b, d = tb - c, td - c
        return FourVector(b, d, 1 - b - d - c, c)
    if policy == CAUTIOUS:
        tb = min(a.b + a.c, e.b + e.c)
        td = min(a.d + a.c, e.d + e.c)
        u = max(a.u, e.u, 1 - tb - td)
        c = tb + td + u - 1
        return FourVector(tb - c, td - c, u, c)
    raise ValueError(f"no four-valued form of the {policy} policy")
