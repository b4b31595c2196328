"""
Conditioning
============

Jeffrey updates move the probability of a formula to a new value by
rescaling masses; Bayes updates condition on support (or lack of it).
Four-valued updates rescale the belief, disbelief, uncertainty and
conflict cells separately.
"""

from fractions import Fraction as F

from bdprob import (
    FourVector,
    ProbModel,
    bayes_fv,
    bayes_ns,
    eval_fv,
    eval_ns,
    jeffrey_fv,
    jeffrey_ns,
    jeffrey_partial,
    parse,
)

m = ProbModel.from_literal_sets(
    ["p"], {"{}": F(1, 10), "{p}": F(2, 5), "{~p}": F(3, 10), "{p,~p}": F(1, 5)}
)
p, np_ = parse("p"), parse("~p")

j = jeffrey_ns(m, p, F(1, 2))
print("after p -> 1/2:   p(~p) =", eval_ns(j, np_))
print("Bayes on p:       p(~p) =", eval_ns(bayes_ns(m, p, "pos"), np_))
print("Bayes against p:  p(~p) =", eval_ns(bayes_ns(m, p, "neg"), np_))

# Learning that there is no conflict about p, nothing else.
print("conflict -> 0:    b,d,u,c =", eval_fv(jeffrey_partial(m, p, {"c": 0}), p))

# The three four-valued Bayes flavors.
for flavor in ("pos", "unc", "con"):
    print(f"bayes_fv {flavor}:     masses =", [str(w) for w in bayes_fv(m, p, flavor).mass_vector()])

# Jeffrey updates do not commute.
a = jeffrey_ns(jeffrey_ns(m, p, F(1, 2)), np_, F(1, 2))
b = jeffrey_ns(jeffrey_ns(m, np_, F(1, 2)), p, F(1, 2))
print("p then ~p:", eval_ns(a, p), "  ~p then p:", eval_ns(b, p))
s, t = FourVector(F(1, 2), F(1, 8), F(1, 4), F(1, 8)), FourVector(F(1, 2), F(1, 8), F(1, 8), F(1, 4))
print("four-valued:", eval_fv(jeffrey_fv(jeffrey_fv(m, p, s), np_, t), p),
      "vs", eval_fv(jeffrey_fv(jeffrey_fv(m, np_, t), p, s), p))
