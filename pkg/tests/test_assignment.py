import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from bdprob import (
    BDState,
    FourVector,
    IncompleteTable,
    InvalidTriple,
    InvalidVector,
    Literal,
    MonomialTable,
    NSTriple,
    ProbModel,
    TableRejected,
    audit_fv,
    audit_ns,
    check_fv_axioms,
    eval_ns,
    extend,
    inclusion_exclusion,
    mass_function,
    monomial,
    monomial_pairs,
    parse,
    synthesize,
    table_of,
    tr,
    triple_of,
    trinv,
)
from conftest import formulas, models, vectors
from helpers import m1, moebius_masses, random_formula, random_model

P, NP, GLUT = parse("p"), parse("~p"), parse("p & ~p")


def one_atom(pv, npv, gv):
    return MonomialTable(("p",), {"p": pv, "~p": npv, "p,~p": gv})


@pytest.mark.parametrize(
    "v, expected",
    [((1, 0, 0, 0), 1), ((0, 0, 0, 1), 1), ((F(2, 5), F(3, 10), F(1, 10), F(1, 5)), F(3, 5))],
)
def test_tr(v, expected):
    assert tr(FourVector(*v)) == expected


def test_tr_rejects_invalid_vector():
    with pytest.raises(InvalidVector):
        tr(FourVector(1, 1, 0, 0))


@pytest.mark.parametrize(
    "t, expected",
    [
        ((F(3, 5), F(1, 2), F(1, 5)), (F(2, 5), F(3, 10), F(1, 10), F(1, 5))),
        ((1, 0, 0), (1, 0, 0, 0)),
        ((F(1, 2), F(1, 2), F(1, 2)), (0, 0, F(1, 2), F(1, 2))),
    ],
)
def test_trinv(t, expected):
    assert trinv(NSTriple(*t)) == FourVector(*expected)


def test_trinv_names_failed_inequalities():
    with pytest.raises(InvalidTriple) as info:
        trinv(NSTriple(F(1, 2), F(1, 4), F(1, 3)))
    assert info.value.failed
    with pytest.raises(InvalidTriple):
        trinv(NSTriple(1, 1, 0))


@given(vectors())
def test_translation_bijection_from_vectors(v):
    assert trinv(triple_of(v)) == v
    assert triple_of(v) == NSTriple(tr(v), tr(v.swap()), v.c)


def test_synthesize_constant_half():
    m = synthesize(one_atom(F(1, 2), F(1, 2), F(1, 2)))
    assert m.mass_vector() == (F(1, 2), 0, 0, F(1, 2))
    rng = random.Random(0)
    for _ in range(20):
        assert eval_ns(m, random_formula(rng, ["p"])) == F(1, 2)


def test_synthesize_recovers_m1():
    assert synthesize(one_atom(F(3, 5), F(1, 2), F(1, 5))) == m1()


def test_synthesize_rejects_with_witnesses():
    with pytest.raises(TableRejected) as info:
        synthesize(one_atom(F(1, 2), F(1, 2), F(3, 4)))
    w = info.value.witnesses
    assert w[frozenset({Literal("p")})] == F(-1, 4)
    assert all(v < 0 for v in w.values())


def test_incomplete_table():
    with pytest.raises(IncompleteTable):
        MonomialTable(("p",), {"p": F(1, 2), "~p": F(1, 2)})


def test_table_of():
    t = table_of(m1())
    assert t.keyed() == {"p": F(3, 5), "~p": F(1, 2), "p,~p": F(1, 5)}
    top = ProbModel.point_mass(("p", "q"), "{p,~p,q,~q}")
    assert set(table_of(top).vector[1:]) == {1}
    bottom = ProbModel.point_mass(("p", "q"), "{}")
    assert set(table_of(bottom).vector[1:]) == {0}


@given(models())
def test_representation_round_trip(m):
    t = table_of(m)
    assert synthesize(t) == m
    assert table_of(synthesize(t)) == t


@given(models())
def test_mass_function_matches_moebius_oracle(m):
    t = table_of(m)
    order_names = m.atoms
    w = moebius_masses(lambda x: t[x], order_names)
    ours = mass_function(t)
    for x, value in w.items():
        assert ours[BDState(x, order_names).index] == value


def test_invalid_table_extension_is_inclusion_exclusion():
    rng = random.Random(1)
    for _ in range(30):
        vals = [F(rng.randint(0, 8), 8) for _ in range(16)]
        t = MonomialTable.from_vector(("p", "q"), vals)
        p = extend(t)
        for _ in range(5):
            f = random_formula(rng, ["p", "q"])
            assert p(f) == inclusion_exclusion(t, f)
        assert all(p(monomial(x)) == t[x] for x in t.values)


def test_audit_ns_examples():
    half = MonomialTable.constant(("p", "q"), F(1, 2))
    assert audit_ns(half, monomial_pairs(half.atoms)).ok
    explosive = one_atom(1, 1, 0)
    report = audit_ns(explosive, [(P, NP)])
    assert "A3" in report.axioms()
    assert any("= 2" in v.detail for v in report.violations if v.axiom == "A3")
    rejected = one_atom(F(1, 2), F(1, 2), F(3, 4))
    report = audit_ns(rejected, [(GLUT, P)])
    a2 = [v for v in report.violations if v.axiom == "A2" and v.formulas == (GLUT, P)]
    assert a2 and "3/4 > 1/2" in a2[0].detail


def test_audit_fv_examples():
    assert audit_fv(table_of(m1()), monomial_pairs(("p",))).ok
    half = MonomialTable.constant(("p",), F(1, 2))
    assert audit_fv(half, monomial_pairs(("p",))).ok
    assert trinv(NSTriple(F(1, 2), F(1, 2), F(1, 2))) == FourVector(0, 0, F(1, 2), F(1, 2))


def test_d5_violation_on_doctored_assignment():
    def fv(f):
        if f == GLUT:
            return FourVector(F(1, 10), F(3, 5), F(1, 10), F(1, 5))
        if f == NP:
            return FourVector(F(3, 10), F(2, 5), F(1, 10), F(1, 5))
        return FourVector(F(2, 5), F(3, 10), F(1, 10), F(1, 5))

    report = check_fv_axioms(fv, [(P, P)])
    assert "D5" in report.axioms()


@given(models(), formulas(("p", "q")), formulas(("p", "q")))
def test_valid_tables_pass_both_audits(m, f, g):
    t = table_of(m)
    assert audit_ns(t, [(f, g)]).ok
    assert audit_fv(t, [(f, g)]).ok


def _tables(names, denominators):
    n = 1 << (2 * len(names))
    for values in itertools.product(denominators, repeat=n - 1):
        yield MonomialTable.from_vector(names, (F(0),) + values)


def test_acceptance_iff_audit_clean_one_atom():
    grid = [F(k, 4) for k in range(5)]
    pairs = monomial_pairs(("p",))
    for t in _tables(("p",), grid):
        try:
            synthesize(t)
            accepted = True
        except TableRejected:
            accepted = False
        assert accepted == audit_ns(t, pairs).ok


def test_acceptance_iff_audit_clean_two_atoms():
    rng = random.Random(2)
    pairs = monomial_pairs(("p", "q"))
    seen = {True: 0, False: 0}
    for n in range(150):
        if n % 3 == 2:
            vals = [F(0)] + [F(rng.randint(0, 4), 4) for _ in range(15)]
        else:
            vals = list(table_of(random_model(rng)).vector)
            if n % 3:
                vals[rng.randrange(1, 16)] += F(rng.choice([-1, 1]), 8)
        t = MonomialTable.from_vector(("p", "q"), vals)
        try:
            synthesize(t)
            accepted = True
        except TableRejected:
            accepted = False
        seen[accepted] += 1
        assert accepted == audit_ns(t, pairs).ok
    assert seen[False] > 0 and seen[True] > 0
