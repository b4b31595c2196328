import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bdprob import (
    FourVector,
    InadmissibleTarget,
    InvalidPartial,
    PriorExtremal,
    ProbModel,
    ResidualMassZero,
    TargetOutOfRange,
    TargetSumExceedsOne,
    bayes_fv,
    bayes_fv_syntactic,
    bayes_ns,
    complete_partial,
    eval_fv,
    eval_ns,
    jeffrey_fv,
    jeffrey_fv_syntactic,
    jeffrey_ns,
    jeffrey_ns_syntactic,
    jeffrey_partial,
    parse,
    table_of,
    validate_model,
)
from conftest import formulas, models, weights
from helpers import m1, random_admissible_target, random_formula

P, NP, GLUT = parse("p"), parse("~p"), parse("p & ~p")
FS = formulas(("p", "q"), max_leaves=5)
unit = st.integers(0, 12).map(lambda k: F(k, 12))


def test_jeffrey_ns_examples():
    m = jeffrey_ns(m1(), P, F(1, 2))
    assert m.mass_vector() == (F(1, 8), F(1, 3), F(3, 8), F(1, 6))
    assert eval_ns(m, NP) == F(13, 24)
    assert jeffrey_ns(m1(), P, F(3, 5)) == m1()
    with pytest.raises(PriorExtremal):
        jeffrey_ns(ProbModel.point_mass(("p",), "{p}"), P, F(1, 2))
    with pytest.raises(TargetOutOfRange):
        jeffrey_ns(m1(), P, F(3, 2))


def test_jeffrey_ns_syntactic_examples():
    post = jeffrey_ns_syntactic(table_of(m1()), P, F(1, 2))
    assert post(NP) == F(13, 24)
    assert post(P) == F(1, 2)


def test_jeffrey_to_extreme_target_is_bayes():
    assert jeffrey_ns(m1(), P, 1) == bayes_ns(m1(), P, "pos")
    assert jeffrey_ns(m1(), P, 0) == bayes_ns(m1(), P, "neg")


def test_bayes_ns_examples():
    pos = bayes_ns(m1(), P, "pos")
    assert eval_ns(pos, NP) == F(1, 3)
    assert eval_ns(pos, P) == 1
    assert eval_ns(bayes_ns(m1(), P, "neg"), NP) == F(3, 4)
    with pytest.raises(PriorExtremal):
        bayes_ns(ProbModel.point_mass(("p",), "{}"), P, "pos")
    with pytest.raises(PriorExtremal):
        bayes_ns(ProbModel.point_mass(("p",), "{p}"), P, "neg")


def test_jeffrey_fv_examples():
    m = jeffrey_fv(m1(), P, FourVector(1, 0, 0, 0))
    assert m.mass_vector() == (0, 1, 0, 0)
    quarter = jeffrey_fv(m1(), P, FourVector(*[F(1, 4)] * 4))
    assert quarter.mass_vector() == (F(1, 4),) * 4
    no_glut = ProbModel.from_literal_sets(("p",), {"{p}": F(1, 2), "{~p}": F(1, 2)})
    with pytest.raises(InadmissibleTarget) as info:
        jeffrey_fv(no_glut, P, FourVector(0, 0, 0, 1))
    assert info.value.cells == ["c"]


def test_bayes_fv_examples():
    assert eval_fv(bayes_fv(m1(), P, "pos"), P) == FourVector(1, 0, 0, 0)
    unc = bayes_fv(m1(), P, "unc")
    assert unc.mass_vector() == (1, 0, 0, 0)
    con = bayes_fv(m1(), P, "con")
    assert con.mass_vector() == (0, 0, 0, 1)
    assert eval_fv(con, GLUT) == FourVector(0, 0, 0, 1)


def test_complete_partial_examples():
    prior = FourVector(F(2, 5), F(3, 10), F(1, 10), F(1, 5))
    assert complete_partial(prior, {"c": 0}) == FourVector(F(1, 2), F(3, 8), F(1, 8), 0)
    assert complete_partial(prior, {"b": prior.b}) == prior
    with pytest.raises(TargetSumExceedsOne):
        complete_partial(prior, {"b": F(3, 4), "d": F(1, 2)})
    with pytest.raises(ResidualMassZero):
        complete_partial(FourVector(1, 0, 0, 0), {"b": F(1, 2)})
    assert complete_partial(FourVector(1, 0, 0, 0), {"b": 1}) == FourVector(1, 0, 0, 0)
    for bad in ({}, {"b": 0, "d": 0, "u": 0, "c": 1}, {"x": 0}, {"b": F(-1, 2)}):
        with pytest.raises(InvalidPartial):
            complete_partial(prior, bad)


def test_jeffrey_partial():
    m = jeffrey_partial(m1(), P, {"c": 0})
    assert eval_fv(m, P) == FourVector(F(1, 2), F(3, 8), F(1, 8), 0)


@given(models(), FS, unit, st.lists(FS, min_size=1, max_size=5))
def test_jeffrey_ns_success_and_oracle(m, f, q, psis):
    assume(0 < eval_ns(m, f) < 1)
    post = jeffrey_ns(m, f, q)
    assert validate_model(post) == []
    assert eval_ns(post, f) == q
    oracle = jeffrey_ns_syntactic(m, f, q)
    for psi in psis:
        assert eval_ns(post, psi) == oracle(psi)


@given(models(), FS, weights(4), st.lists(FS, min_size=1, max_size=5))
def test_jeffrey_fv_success_and_closed_forms(m, f, raw, psis):
    prior = eval_fv(m, f)
    support = [x if c > 0 else F(0) for x, c in zip(raw, prior)]
    assume(sum(support) > 0)
    target = FourVector(*(x / sum(support) for x in support))
    post = jeffrey_fv(m, f, target)
    assert validate_model(post) == []
    assert eval_fv(post, f) == target
    oracle = jeffrey_fv_syntactic(m, f, target)
    for psi in psis:
        assert eval_fv(post, psi) == oracle(psi)


@given(models(), FS, st.sampled_from(["pos", "unc", "con"]), st.lists(FS, min_size=1, max_size=5))
def test_bayes_fv_closed_forms(m, f, flavor, psis):
    cell = {"pos": "b", "unc": "u", "con": "c"}[flavor]
    assume(eval_fv(m, f)[cell] > 0)
    post = bayes_fv(m, f, flavor)
    oracle = bayes_fv_syntactic(m, f, flavor)
    for psi in psis:
        assert eval_fv(post, psi) == oracle(psi)


def _defined(fn, *args):
    try:
        return fn(*args)
    except (PriorExtremal, InadmissibleTarget):
        return None


@given(models(), FS, FS, st.sampled_from(["pos", "neg"]), st.sampled_from(["pos", "neg"]))
def test_bayes_ns_order_independent(m, f, g, s, t):
    a = _defined(bayes_ns, m, f, s)
    b = _defined(bayes_ns, m, g, t)
    assume(a is not None and b is not None)
    ab, ba = _defined(bayes_ns, a, g, t), _defined(bayes_ns, b, f, s)
    assume(ab is not None and ba is not None)
    assert ab.mass_vector() == ba.mass_vector()


@given(models(), FS, FS, st.sampled_from(["pos", "unc", "con"]), st.sampled_from(["pos", "unc", "con"]))
def test_bayes_fv_order_independent(m, f, g, s, t):
    a, b = _defined(bayes_fv, m, f, s), _defined(bayes_fv, m, g, t)
    assume(a is not None and b is not None)
    ab, ba = _defined(bayes_fv, a, g, t), _defined(bayes_fv, b, f, s)
    assume(ab is not None and ba is not None)
    assert ab.mass_vector() == ba.mass_vector()


INTERACTION = {"pos": ("pos", "neg"), "unc": ("neg", "neg"), "con": ("pos", "pos")}


@given(models(), FS, st.sampled_from(sorted(INTERACTION)), st.booleans())
def test_interaction_with_ns_bayes(m, f, flavor, f_first):
    cell = {"pos": "b", "unc": "u", "con": "c"}[flavor]
    assume(eval_fv(m, f)[cell] > 0)
    s_f, s_nf = INTERACTION[flavor]
    steps = [(f, s_f), (~f, s_nf)]
    if not f_first:
        steps.reverse()
    ns = m
    for g, s in steps:
        ns = bayes_ns(ns, g, s)
    assert ns.mass_vector() == bayes_fv(m, f, flavor).mass_vector()


def test_noncommutativity_witnesses():
    a = jeffrey_ns(jeffrey_ns(m1(), P, F(1, 2)), NP, F(1, 2))
    b = jeffrey_ns(jeffrey_ns(m1(), NP, F(1, 2)), P, F(1, 2))
    assert eval_ns(a, P) == F(74, 143)
    assert eval_ns(b, P) == F(1, 2)
    s, t = FourVector(F(1, 2), F(1, 8), F(1, 4), F(1, 8)), FourVector(F(1, 2), F(1, 8), F(1, 8), F(1, 4))
    a = jeffrey_fv(jeffrey_fv(m1(), P, s), NP, t)
    b = jeffrey_fv(jeffrey_fv(m1(), NP, t), P, s)
    assert eval_fv(a, P) != eval_fv(b, P)


def test_random_admissible_targets_succeed():
    rng = random.Random(5)
    for _ in range(40):
        m = ProbModel.from_masses(("p", "q"), [F(rng.randint(0, 3), 1) for _ in range(16)])
        total = sum(m.mass_vector())
        if not total:
            continue
        m = ProbModel.from_masses(("p", "q"), [w / total for w in m.mass_vector()])
        f = random_formula(rng, ["p", "q"])
        target = random_admissible_target(rng, eval_fv(m, f))
        assert eval_fv(jeffrey_fv(m, f, target), f) == target
