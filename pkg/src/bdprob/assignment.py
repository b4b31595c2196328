"""Syntactic probability assignments.

A non-standard assignment is a function on infinitely many formulas, but it
is fixed by its values on the monomials ``/\\x`` (conjunctions of the
literals in a nonempty ``x`` subset of ``Lit``): every formula has a
disjunctive normal form and the import-export rule fixes the value of a
disjunction from values of conjunctions. :class:`MonomialTable` is that
finite presentation.

:func:`synthesize` turns a table into the unique canonical model inducing
it, by peeling off masses from the largest literal set down::

    W(x) = p(/\\x) - sum(W(y) for y strictly containing x)
    W({}) = 1 - sum(W(x) for x nonempty)

The table is induced by some model exactly when every ``W(x)`` is
nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import IncompleteTable, InvalidTriple, InvalidVector, TableRejected
from .formula import And, Atom, Formula, Literal, Not, conjoin, disjoin, normal_form, render
from .model import FourVector, ProbModel, eval_ns
from .rational import as_fraction, format_rational
from .semantics import BDState, entails, extension_masks, literal_order, universe_of

__all__ = [
    "NSTriple",
    "MonomialTable",
    "Violation",
    "AuditReport",
    "tr",
    "trinv",
    "triple_of",
    "monomial",
    "literal_set",
    "mass_function",
    "synthesize",
    "table_of",
    "extend",
    "inclusion_exclusion",
    "monomial_pairs",
    "check_ns_axioms",
    "check_fv_axioms",
    "audit_ns",
    "audit_fv",
]


# -- translation -----------------------------------------------------------


@dataclass(frozen=True)
class NSTriple:
    """``p(phi)``, ``p(~phi)`` and ``p(phi & ~phi)`` for one formula."""

    p_pos: Fraction
    p_neg: Fraction
    p_glut: Fraction

    def __post_init__(self):
        for name in ("p_pos", "p_neg", "p_glut"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def __iter__(self):
        return iter((self.p_pos, self.p_neg, self.p_glut))

    def __str__(self) -> str:
        return ",".join(format_rational(x) for x in self)

    def violations(self) -> list[str]:
        out = []
        for name, v in zip(("p_pos", "p_neg", "p_glut"), self):
            if not 0 <= v <= 1:
                out.append(f"{name} = {format_rational(v)} not in [0, 1]")
        if self.p_glut > min(self.p_pos, self.p_neg):
            out.append("p_glut > min(p_pos, p_neg)")
        if self.p_pos + self.p_neg - self.p_glut > 1:
            out.append("p_pos + p_neg - p_glut > 1")
        return out


def tr(v: FourVector) -> Fraction:
    """Total belief ``b + c`` of a four-valued vector."""
    bad = v.violations()
    if bad:
        raise InvalidVector("; ".join(bad))
    return v.b + v.c


def _trinv_raw(p_pos, p_neg, p_glut) -> FourVector:
    return FourVector(p_pos - p_glut, p_neg - p_glut, 1 - p_pos - p_neg + p_glut, p_glut)


def trinv(t: NSTriple) -> FourVector:
    """Four-valued vector from ``(p(phi), p(~phi), p(phi & ~phi))``."""
    bad = t.violations()
    if bad:
        raise InvalidTriple(bad)
    return _trinv_raw(*t)


def triple_of(v: FourVector) -> NSTriple:
    """``tr`` applied to ``phi``, ``~phi`` and ``phi & ~phi``: ``(b+c, d+c, c)``."""
    tr(v)
    return NSTriple(v.b + v.c, v.d + v.c, v.c)


# -- monomial tables -------------------------------------------------------


def monomial(lits: Iterable[Literal]) -> Formula:
    """Conjunction of the given literals in canonical order."""
    lits = sorted(lits)
    if not lits:
        raise ValueError("monomials are conjunctions of at least one literal")
    return conjoin(lit.formula() for lit in lits)


def literal_set(f: Formula) -> frozenset[Literal] | None:
    """The literals of ``f`` if it is a conjunction of literals, else None."""
    if isinstance(f, Atom):
        return frozenset([Literal(f.name)])
    if isinstance(f, Not) and isinstance(f.arg, Atom):
        return frozenset([Literal(f.arg.name, True)])
    if isinstance(f, And):
        left, right = literal_set(f.left), literal_set(f.right)
        if left is not None and right is not None:
            return left | right
    return None


def _key(lits: Iterable[Literal]) -> str:
    return ",".join(str(lit) for lit in sorted(lits))


def _parse_key(key) -> frozenset[Literal]:
    if isinstance(key, str):
        return frozenset(Literal.parse(tok) for tok in key.split(",") if tok.strip())
    return frozenset(key)


@dataclass(frozen=True)
class MonomialTable:
    """Values ``p(/\\x)`` for every nonempty literal set ``x``.

    ``values`` may be keyed by literal sets or by comma-joined literal
    strings such as ``"p,~p"``. Values are not range-checked here so that
    invalid tables can be audited.
    """

    atoms: tuple[str, ...]
    values: Mapping[frozenset[Literal], Fraction] = field(compare=False)
    _vector: tuple[Fraction, ...] = field(init=False, repr=False)

    def __post_init__(self):
        universe = universe_of(self.atoms)
        object.__setattr__(self, "atoms", universe)
        vals = {_parse_key(k): as_fraction(v) for k, v in self.values.items()}
        order = literal_order(universe)
        vector = [Fraction(0)] * (1 << len(order))
        missing = []
        for i in range(1, len(vector)):
            lits = frozenset(lit for j, lit in enumerate(order) if i >> j & 1)
            if lits in vals:
                vector[i] = vals.pop(lits)
            else:
                missing.append(_key(lits))
        if vals:
            raise ValueError("values for unknown literal sets: " + "; ".join(_key(k) for k in vals))
        if missing:
            raise IncompleteTable(missing)
        object.__setattr__(self, "_vector", tuple(vector))
        object.__setattr__(self, "values", {
            frozenset(lit for j, lit in enumerate(order) if i >> j & 1): vector[i]
            for i in range(1, len(vector))
        })

    @classmethod
    def from_vector(cls, atoms: Iterable[str], vector: Sequence) -> MonomialTable:
        """Table from values indexed by canonical state index (index 0 ignored)."""
        universe = universe_of(atoms)
        order = literal_order(universe)
        values = {
            frozenset(lit for j, lit in enumerate(order) if i >> j & 1): vector[i]
            for i in range(1, 1 << len(order))
        }
        return cls(universe, values)

    @classmethod
    def constant(cls, atoms: Iterable[str], value) -> MonomialTable:
        universe = universe_of(atoms)
        return cls.from_vector(universe, [as_fraction(value)] * (1 << (2 * len(universe))))

    @property
    def vector(self) -> tuple[Fraction, ...]:
        """Values by canonical index; entry 0 (the empty set) is unused."""
        return self._vector

    def __getitem__(self, key) -> Fraction:
        return self.values[_parse_key(key)]

    def keyed(self) -> dict[str, Fraction]:
        """Values under comma-joined literal keys, in canonical index order."""
        return {_key(k): v for k, v in self.values.items()}


def mass_function(t: MonomialTable) -> tuple[Fraction, ...]:
    """Masses ``W`` by canonical index, computed by descending cardinality.

    The result always sums to 1 but may contain negative entries when the
    table violates the axioms.
    """
    size = 2 * len(t.atoms)
    full = (1 << size) - 1
    w = [Fraction(0)] * (1 << size)
    by_card: dict[int, list[int]] = {}
    for i in range(1, full + 1):
        by_card.setdefault(i.bit_count(), []).append(i)
    for k in range(size, 0, -1):
        for x in by_card[k]:
            # strict supersets of x: x plus a nonempty subset of its complement
            rest = full & ~x
            above = Fraction(0)
            sub = rest
            while sub:
                above += w[x | sub]
                sub = (sub - 1) & rest
            w[x] = t.vector[x] - above
    w[0] = 1 - sum(w[1:], Fraction(0))
    return tuple(w)


def synthesize(t: MonomialTable) -> ProbModel:
    """The unique canonical model whose induced assignment extends ``t``.

    Raises :class:`TableRejected` listing every literal set with negative
    synthesized mass when no model induces the table.
    """
    w = mass_function(t)
    bad = {BDState.from_index(i, t.atoms).literals: x for i, x in enumerate(w) if x < 0}
    if bad:
        raise TableRejected(bad)
    return ProbModel.from_masses(t.atoms, w)


def table_of(m: ProbModel) -> MonomialTable:
    """Values of the model's non-standard probability on every monomial."""
    order = literal_order(m.atoms)
    vector = [Fraction(0)]
    for i in range(1, 1 << len(order)):
        vector.append(eval_ns(m, monomial(lit for j, lit in enumerate(order) if i >> j & 1)))
    return MonomialTable.from_vector(m.atoms, vector)


def extend(t: MonomialTable) -> Callable[[Formula], Fraction]:
    """The assignment a table determines on all formulas over its atoms.

    For an accepted table this is ``eval_ns`` on the synthesized model. For
    a rejected one it is the same linear functional with the (partly
    negative) masses, which equals inclusion-exclusion over the clauses of
    the disjunctive normal form; see :func:`inclusion_exclusion`.
    """
    w = mass_function(t)
    if all(x >= 0 for x in w):
        model = ProbModel.from_masses(t.atoms, w)
        return lambda f: eval_ns(model, f)
    nonzero = [(i, x) for i, x in enumerate(w) if x]

    def p(f: Formula) -> Fraction:
        plus = extension_masks(f, t.atoms)[0]
        return sum((x for i, x in nonzero if plus >> i & 1), Fraction(0))

    return p


def inclusion_exclusion(t: MonomialTable, f: Formula) -> Fraction:
    """Value of ``f`` by inclusion-exclusion over its DNF clauses.

    Exponential in the number of clauses; meant for small formulas.
    """
    clauses = normal_form(f).clauses
    total = Fraction(0)
    for r in range(1, len(clauses) + 1):
        sign = 1 if r % 2 else -1
        for group in combinations(clauses, r):
            total += sign * t[frozenset().union(*group)]
    return total


def monomial_pairs(atoms: Iterable[str]) -> list[tuple[Formula, Formula]]:
    """Every ordered pair of monomials over ``atoms``."""
    universe = universe_of(atoms)
    order = literal_order(universe)
    monos = [
        monomial(lit for j, lit in enumerate(order) if i >> j & 1)
        for i in range(1, 1 << len(order))
    ]
    return [(f, g) for f in monos for g in monos]


# -- audits ----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    formulas: tuple[Formula, ...]
    detail: str

    def __str__(self) -> str:
        where = "; ".join(render(f) for f in self.formulas)
        return f"{self.axiom} [{where}]: {self.detail}"


@dataclass
class AuditReport:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def add(self, axiom: str, formulas, detail: str):
        self.violations.append(Violation(axiom, tuple(formulas), detail))

    def __str__(self) -> str:
        if self.ok:
            return f"ok ({self.checked} checks)"
        return "\n".join(str(v) for v in self.violations)


def _fmt(q) -> str:
    return format_rational(q)


def check_ns_axioms(
    p: Callable[[Formula], Fraction],
    pairs: Iterable[tuple[Formula, Formula]],
    report: AuditReport | None = None,
) -> AuditReport:
    """Check normalization, monotonicity and import-export on each pair.

    Import-export is checked as an identity and, since it fixes
    ``p(phi | psi)`` from the other three values, also for that forced value
    leaving ``[0, 1]``.
    """
    report = report if report is not None else AuditReport()
    seen: set[Formula] = set()
    for f, g in pairs:
        vf, vg = p(f), p(g)
        for h, vh in ((f, vf), (g, vg)):
            if h in seen:
                continue
            seen.add(h)
            report.checked += 1
            if not 0 <= vh <= 1:
                report.add("A1", [h], f"p = {_fmt(vh)} not in [0, 1]")
        conj, disj = p(And(f, g)), p(f | g)
        report.checked += 2
        if conj + disj != vf + vg:
            report.add("A3", [f, g], f"p(and) + p(or) = {_fmt(conj + disj)} but p + p = {_fmt(vf + vg)}")
        forced = vf + vg - conj
        if not 0 <= forced <= 1:
            report.add("A3", [f, g], f"import-export forces p({render(f | g)}) = {_fmt(forced)}, outside [0, 1]")
        report.checked += 1
        if vf > vg and entails(f, g):
            report.add("A2", [f, g], f"entailment holds but {_fmt(vf)} > {_fmt(vg)}")
    return report


def check_fv_axioms(
    fv: Callable[[Formula], FourVector],
    pairs: Iterable[tuple[Formula, Formula]],
    report: AuditReport | None = None,
) -> AuditReport:
    """Check D1, D2, D3, D5 per formula and D4, D6 per pair."""
    report = report if report is not None else AuditReport()
    seen: set[Formula] = set()
    for f, g in pairs:
        for h in (f, g):
            if h in seen:
                continue
            seen.add(h)
            v = fv(h)
            report.checked += 4
            if any(x < 0 for x in v):
                report.add("D1", [h], f"negative component in ({v})")
            if sum(v) != 1:
                report.add("D2", [h], f"components of ({v}) sum to {_fmt(sum(v))}")
            vn = fv(Not(h))
            if vn.b != v.d or vn.c != v.c:
                report.add("D3", [h], f"vector of negation ({vn}) is not the swap of ({v})")
            vg = fv(And(h, Not(h)))
            if vg.b != 0 or vg.c != v.c:
                report.add("D5", [h], f"contradiction has vector ({vg}) against ({v})")
        vf, vg = fv(f), fv(g)
        report.checked += 2
        if vf.b + vf.c > vg.b + vg.c and entails(f, g):
            report.add("D4", [f, g], f"entailment holds but b + c drops from {_fmt(vf.b + vf.c)} to {_fmt(vg.b + vg.c)}")
        va, vo = fv(And(f, g)), fv(f | g)
        lhs, rhs = vf.b + vf.c + vg.b + vg.c, va.b + va.c + vo.b + vo.c
        if lhs != rhs:
            report.add("D6", [f, g], f"total beliefs {_fmt(lhs)} vs {_fmt(rhs)}")
    return report


def audit_ns(t: MonomialTable, pairs: Iterable[tuple[Formula, Formula]]) -> AuditReport:
    """Audit a table against normalization, monotonicity and import-export.

    Besides the supplied pairs, every monomial ``/\\x`` occurring in them is
    checked against the disjunction of its strict super-monomials (the
    monotonicity instance whose failure is exactly ``W(x) < 0``), and the
    disjunction of all literals is checked for normalization (``W({}) < 0``).
    """
    pairs = list(pairs)
    p = extend(t)
    report = check_ns_axioms(p, pairs)
    order = literal_order(t.atoms)
    full = frozenset(order)
    done: set[frozenset[Literal]] = set()
    for f, g in pairs:
        for h in (f, g):
            x = literal_set(h)
            if x is None or x in done or x == full:
                continue
            done.add(x)
            above = disjoin(monomial(x | {lit}) for lit in order if lit not in x)
            va, vx = p(above), p(h)
            report.checked += 1
            if va > vx:
                report.add("A2", [above, h], f"entailment holds but {_fmt(va)} > {_fmt(vx)}")
    everything = disjoin(lit.formula() for lit in order)
    if any(everything in pair for pair in pairs):
        return report
    v = p(everything)
    report.checked += 1
    if not 0 <= v <= 1:
        report.add("A1", [everything], f"p = {_fmt(v)} not in [0, 1]")
    return report


def audit_fv(t: MonomialTable, pairs: Iterable[tuple[Formula, Formula]]) -> AuditReport:
    """Audit the four-valued assignment ``trinv`` derives from the table."""
    p = extend(t)

    def fv(f: Formula) -> FourVector:
        return _trinv_raw(p(f), p(Not(f)), p(And(f, Not(f))))

    return check_fv_axioms(fv, pairs)
