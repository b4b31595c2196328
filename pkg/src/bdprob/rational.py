"""Exact rational helpers. Floats are refused so no rounding leaks in."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Fraction", "as_fraction", "format_rational", "parse_rationals"]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE_ "):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rationals(text: str, count: int | None = None) -> tuple[Fraction, ...]:
    """Parse a comma-separated list such as ``"2/5,3/10,1/10,1/5"``."""
    parts = tuple(as_fraction(p) for p in text.split(","))
    if count is not None and len(parts) != count:
        raise ValueError(f"expected {count} comma-separated rationals, got {len(parts)}")
    return parts
