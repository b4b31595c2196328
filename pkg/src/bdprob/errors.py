"""Exception hierarchy."""

from __future__ import annotations

__all__ = [
    "BDError",
    "ParseError",
    "UndeclaredAtom",
    "AtomMismatch",
    "WeightOutOfRange",
    "InvalidModel",
    "InvalidVector",
    "InvalidTriple",
    "IncompleteTable",
    "TableRejected",
    "TargetOutOfRange",
    "PriorExtremal",
    "InadmissibleTarget",
    "InvalidPartial",
    "ResidualMassZero",
    "TargetSumExceedsOne",
    "NotExtremal",
    "InvalidPair",
]


class BDError(Exception):
    """Base class for all errors raised by bdprob."""


class ParseError(BDError, ValueError):
    def __init__(self, offset: int, expected: set[str], text: str = ""):
        self.offset = offset
        self.expected = frozenset(expected)
        self.text = text
        want = ", ".join(sorted(self.expected))
        super().__init__(f"parse error at offset {offset}: expected one of {want}")


class UndeclaredAtom(BDError, ValueError):
    def __init__(self, missing):
        self.missing = frozenset(missing)
        super().__init__(f"atoms not in universe: {', '.join(sorted(self.missing))}")


class AtomMismatch(BDError, ValueError):
    pass


class WeightOutOfRange(BDError, ValueError):
    pass


class InvalidModel(BDError, ValueError):
    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidVector(BDError, ValueError):
    pass


class InvalidTriple(BDError, ValueError):
    def __init__(self, failed: list[str]):
        self.failed = list(failed)
        super().__init__("; ".join(self.failed))


class IncompleteTable(BDError, ValueError):
    def __init__(self, missing):
        self.missing = list(missing)
        super().__init__(f"{len(self.missing)} monomial value(s) missing, e.g. {self.missing[0]}")


class TableRejected(BDError):
    """The monomial table is not induced by any probabilistic model.

    ``witnesses`` maps each literal set whose synthesized mass is negative
    to that mass.
    """

    def __init__(self, witnesses: dict):
        self.witnesses = dict(witnesses)
        super().__init__(f"{len(self.witnesses)} negative mass(es)")


class TargetOutOfRange(BDError, ValueError):
    pass


class PriorExtremal(BDError, ValueError):
    pass


class InadmissibleTarget(BDError, ValueError):
    def __init__(self, cells: list[str]):
        self.cells = list(cells)
        super().__init__(
            "target puts mass on cell(s) with zero prior mass: " + ", ".join(self.cells)
        )


class InvalidPartial(BDError, ValueError):
    pass


class ResidualMassZero(InvalidPartial):
    pass


class TargetSumExceedsOne(InvalidPartial):
    pass


class NotExtremal(BDError, ValueError):
    pass


class InvalidPair(BDError, ValueError):
    pass
