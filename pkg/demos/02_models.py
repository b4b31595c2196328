"""
Probabilistic models and four-valued belief
============================================

A model spreads mass over states. The non-standard probability of a
formula is the mass of the states supporting it; the four-valued view
splits mass into pure belief, pure disbelief, uncertainty and conflict.
"""

from fractions import Fraction as F

from bdprob import NSTriple, ProbModel, eval_fv, eval_ns, parse, tr, trinv

m = ProbModel.from_literal_sets(
    ["p"], {"{}": F(1, 10), "{p}": F(2, 5), "{~p}": F(3, 10), "{p,~p}": F(1, 5)}
)
p, np_, glut = parse("p"), parse("~p"), parse("p & ~p")

print(m)
print("p(p) =", eval_ns(m, p), " p(~p) =", eval_ns(m, np_), " p(p & ~p) =", eval_ns(m, glut))

# p and ~p together exceed 1; that is the conflict mass counted twice.
v = eval_fv(m, p)
print("b,d,u,c of p:", v)

# The two views carry the same information.
assert tr(v) == eval_ns(m, p)
assert trinv(NSTriple(eval_ns(m, p), eval_ns(m, np_), eval_ns(m, glut))) == v
print("translation round trip ok")
