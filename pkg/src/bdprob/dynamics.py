"""Conditioning: Jeffrey and Bayes updates, non-standard and four-valued.

Updates act on models by rescaling state masses and return new models.
The syntactic formulas (``*_syntactic``) compute the same posteriors from
prior probabilities alone; they exist to cross-check the model updates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .assignment import MonomialTable, synthesize
from .errors import (
    InadmissibleTarget,
    InvalidPartial,
    PriorExtremal,
    ResidualMassZero,
    TargetOutOfRange,
    TargetSumExceedsOne,
)
from .formula import And, Formula, Not
from .model import CELLS, FourVector, ProbModel, cell_masks, eval_fv, eval_ns
from .rational import as_fraction, format_rational

__all__ = [
    "jeffrey_ns",
    "jeffrey_ns_syntactic",
    "bayes_ns",
    "jeffrey_fv",
    "jeffrey_fv_syntactic",
    "bayes_fv",
    "bayes_fv_syntactic",
    "complete_partial",
    "jeffrey_partial",
    "admissibility_failures",
    "BAYES_TARGETS",
]

BAYES_TARGETS = {
    "pos": FourVector(1, 0, 0, 0),
    "unc": FourVector(0, 0, 1, 0),
    "con": FourVector(0, 0, 0, 1),
}
_SIGNS = ("pos", "neg")


# -- non-standard ----------------------------------------------------------


def jeffrey_ns(m: ProbModel, f: Formula, q) -> ProbModel:
    """Set the probability of ``f`` to ``q``.

    Masses inside the positive extension of ``f`` are scaled by
    ``q / p(f)``, all others by ``(1 - q) / (1 - p(f))``.
    """
    q = as_fraction(q)
    if not 0 <= q <= 1:
        raise TargetOutOfRange(f"target {format_rational(q)} not in [0, 1]")
    prior = eval_ns(m, f)
    if prior in (0, 1):
        raise PriorExtremal(f"prior p({f}) = {format_rational(prior)}; need 0 < p < 1")
    plus = cell_masks(f, m.atoms)["plus"]
    inside, outside = q / prior, (1 - q) / (1 - prior)
    return m.rescaled(lambda i: inside if plus >> i & 1 else outside)


def _as_assignment(p) -> Callable[[Formula], Fraction]:
    if isinstance(p, MonomialTable):
        model = synthesize(p)
        return lambda f: eval_ns(model, f)
    if isinstance(p, ProbModel):
        return lambda f: eval_ns(p, f)
    return p


def jeffrey_ns_syntactic(p, f: Formula, q) -> Callable[[Formula], Fraction]:
    """Posterior assignment of a non-standard Jeffrey update, from prior values.

    ``p`` is a monomial table, a model, or any callable assignment.
    """
    p = _as_assignment(p)
    q = as_fraction(q)
    if not 0 <= q <= 1:
        raise TargetOutOfRange(f"target {format_rational(q)} not in [0, 1]")
    pf = p(f)
    if pf in (0, 1):
        raise PriorExtremal(f"prior p({f}) = {format_rational(pf)}; need 0 < p < 1")

    def posterior(psi: Formula) -> Fraction:
        joint = p(And(psi, f))
        return joint * q / pf + (p(psi) - joint) * (1 - q) / (1 - pf)

    return posterior


def bayes_ns(m: ProbModel, f: Formula, sign: str = "pos") -> ProbModel:
    """Condition on the positive extension of ``f`` (``pos``) or its complement (``neg``)."""
    if sign not in _SIGNS:
        raise ValueError(f"sign must be 'pos' or 'neg', not {sign!r}")
    prior = eval_ns(m, f)
    plus = cell_masks(f, m.atoms)["plus"]
    if sign == "pos":
        if prior == 0:
            raise PriorExtremal(f"positive update needs p({f}) > 0")
        return m.rescaled(lambda i: 1 / prior if plus >> i & 1 else 0)
    if prior == 1:
        raise PriorExtremal(f"negative update needs p({f}) < 1")
    return m.rescaled(lambda i: 0 if plus >> i & 1 else 1 / (1 - prior))


# -- four-valued -----------------------------------------------------------


def admissibility_failures(prior: FourVector, target: FourVector) -> list[str]:
    """Cells where ``target`` is positive although ``prior`` is zero."""
    return [c for c in CELLS if target[c] != 0 and prior[c] == 0]


def jeffrey_fv(m: ProbModel, f: Formula, target: FourVector) -> ProbModel:
    """Rescale the b, d, u and c cells of ``f`` to the masses in ``target``."""
    target = target if isinstance(target, FourVector) else FourVector(*target)
    target.check()
    prior = eval_fv(m, f)
    bad = admissibility_failures(prior, target)
    if bad:
        raise InadmissibleTarget(bad)
    masks = cell_masks(f, m.atoms)
    factor = {c: (target[c] / prior[c] if prior[c] else Fraction(0)) for c in CELLS}

    def scale(i: int) -> Fraction:
        for c in CELLS:
            if masks[c] >> i & 1:
                return factor[c]
        raise AssertionError("cells partition the states")

    return m.rescaled(scale)


def bayes_fv(m: ProbModel, f: Formula, flavor: str = "pos") -> ProbModel:
    """Four-valued Bayes: all mass onto the b (``pos``), u (``unc``) or c (``con``) cell."""
    try:
        target = BAYES_TARGETS[flavor]
    except KeyError:
        raise ValueError(f"flavor must be one of {', '.join(BAYES_TARGETS)}") from None
    return jeffrey_fv(m, f, target)


def _ratio(x: Fraction, y: Fraction) -> Fraction:
    # 0/0 = 0; admissibility rules out x > 0 = y
    return x / y if y else Fraction(0)


def jeffrey_fv_syntactic(
    fv, f: Formula, target: FourVector
) -> Callable[[Formula], FourVector]:
    """Posterior four-valued assignment, from prior vectors alone.

    ``fv`` is a model or a callable four-valued assignment. Each posterior
    component sums, over the four cells of ``f``, the rescaled mass of the
    region where that cell meets the matching cell of ``psi``; the region
    masses are recovered from prior vectors of conjunctions of ``f``,
    ``~f``, ``psi`` and ``~psi``.
    """
    if isinstance(fv, ProbModel):
        model = fv
        fv = lambda g: eval_fv(model, g)  # noqa: E731
    target = target if isinstance(target, FourVector) else FourVector(*target)
    prior = fv(f)
    bad = admissibility_failures(prior, target)
    if bad:
        raise InadmissibleTarget(bad)
    kb, kd, ku, kc = (_ratio(target[c], prior[c]) for c in CELLS)
    nf = Not(f)
    glut = And(f, nf)

    def posterior(psi: Formula) -> FourVector:
        npsi = Not(psi)
        v = fv(psi)
        f_psi, f_npsi = fv(And(f, psi)), fv(And(f, npsi))
        nf_psi, nf_npsi = fv(And(nf, psi)), fv(And(nf, npsi))
        g_psi, g_npsi = fv(And(glut, psi)), fv(And(glut, npsi))
        g_both = fv(And(And(glut, psi), npsi))
        b = (
            kb * f_psi.b
            + kd * nf_psi.b
            + ku * (g_both.d - g_psi.d - g_psi.c + g_both.c)
            + kc * (g_psi.c - g_both.c)
        )
        d = (
            kb * f_npsi.b
            + kd * nf_npsi.b
            + ku * (g_both.d - g_npsi.d - g_npsi.c + g_both.c)
            + kc * (g_npsi.c - g_both.c)
        )
        u = (
            kb * (prior.b - f_psi.b - f_npsi.b - f_psi.c + g_psi.c)
            + kd * (prior.d - nf_psi.b - nf_npsi.b - nf_psi.c + g_psi.c)
            + ku * (1 - g_both.d - g_both.c)
            + kc * (prior.c - g_psi.c - g_npsi.c + g_both.c)
        )
        c = (
            kb * (f_psi.c - g_psi.c)
            + kd * (nf_psi.c - g_psi.c)
            + ku * (v.c - f_psi.c + g_psi.c - nf_psi.c + g_psi.c - g_both.c)
            + kc * g_both.c
        )
        return FourVector(b, d, u, c)

    return posterior


def bayes_fv_syntactic(fv, f: Formula, flavor: str = "pos") -> Callable[[Formula], FourVector]:
    """Closed forms of the three four-valued Bayes updates, from prior vectors."""
    if isinstance(fv, ProbModel):
        model = fv
        fv = lambda g: eval_fv(model, g)  # noqa: E731
    if flavor not in BAYES_TARGETS:
        raise ValueError(f"flavor must be one of {', '.join(BAYES_TARGETS)}")
    prior = fv(f)
    cell = {"pos": "b", "unc": "u", "con": "c"}[flavor]
    if prior[cell] == 0:
        raise InadmissibleTarget([cell])
    nf = Not(f)
    glut = And(f, nf)

    def posterior(psi: Formula) -> FourVector:
        npsi = Not(psi)
        g_psi, g_npsi = fv(And(glut, psi)), fv(And(glut, npsi))
        g_both = fv(And(And(glut, psi), npsi))
        if flavor == "pos":
            f_psi, f_npsi = fv(And(f, psi)), fv(And(f, npsi))
            parts = (
                f_psi.b,
                f_npsi.b,
                prior.b - f_psi.b - f_npsi.b - f_psi.c + g_psi.c,
                f_psi.c - g_psi.c,
            )
            scale = prior.b
        elif flavor == "unc":
            v, f_psi, nf_psi = fv(psi), fv(And(f, psi)), fv(And(nf, psi))
            parts = (
                g_both.d - g_psi.d - g_psi.c + g_both.c,
                g_both.d - g_npsi.d - g_npsi.c + g_both.c,
                1 - g_both.d - g_both.c,
                v.c - f_psi.c + g_psi.c - nf_psi.c + g_psi.c - g_both.c,
            )
            scale = prior.u
        else:
            parts = (
                g_psi.c - g_both.c,
                g_npsi.c - g_both.c,
                prior.c - g_psi.c - g_npsi.c + g_both.c,
                g_both.c,
            )
            scale = prior.c
        return FourVector(*(x / scale for x in parts))

    return posterior


# -- partial information ---------------------------------------------------


def complete_partial(prior: FourVector, a: Mapping[str, object]) -> FourVector:
    """Fill in the cells a partial target leaves open, proportionally to the prior.

    Cells in ``a`` take their given values; the remaining cells share the
    leftover mass ``1 - sum(a)`` in proportion to their prior masses.

    The denominator is the prior mass of the open cells only. Normalizing
    by the full prior instead would leave targets that do not sum to 1
    whenever a fixed cell carries prior mass.
    """
    a = {k: as_fraction(v) for k, v in a.items()}
    unknown = set(a) - set(CELLS)
    if unknown:
        raise InvalidPartial(f"unknown cell(s): {', '.join(sorted(unknown))}")
    if not a or len(a) == len(CELLS):
        raise InvalidPartial("a partial target must fix some but not all cells")
    for c, v in a.items():
        if not 0 <= v <= 1:
            raise InvalidPartial(f"{c} = {format_rational(v)} not in [0, 1]")
    fixed = sum(a.values(), Fraction(0))
    if fixed > 1:
        raise TargetSumExceedsOne(f"fixed cells sum to {format_rational(fixed)} > 1")
    residual_target = 1 - fixed
    residual_prior = sum((prior[c] for c in CELLS if c not in a), Fraction(0))
    if residual_prior == 0:
        if residual_target != 0:
            raise ResidualMassZero(
                f"open cells have no prior mass but {format_rational(residual_target)} is left to place"
            )
        scale = Fraction(0)
    else:
        scale = residual_target / residual_prior
    return FourVector(*(a[c] if c in a else prior[c] * scale for c in CELLS))


def jeffrey_partial(m: ProbModel, f: Formula, a: Mapping[str, object]) -> ProbModel:
    """Four-valued Jeffrey update towards the completion of a partial target."""
    return jeffrey_fv(m, f, complete_partial(eval_fv(m, f), a))
