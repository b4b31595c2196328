"""
First-degree entailment
=======================

Formulas are parsed from ``~ & |`` text. A state is any set of literals,
so it can contain both ``p`` and ``~p`` (a glut) or neither (a gap).
"""

from bdprob import entails, normal_form, parse, render

# Contradictions do not explode: the glut state {p,~p} supports p & ~p
# without supporting q.
v = entails(parse("p & ~p"), parse("q"))
print("p & ~p |= q ?", bool(v), "countermodel:", v.countermodel)

# Nor is excluded middle a tautology: the empty state supports nothing.
print("q |= p | ~p ?", bool(entails(parse("q"), parse("p | ~p"))))

# De Morgan and distribution still hold, in both the positive and the
# negative sense.
f = parse("~(p & q) | r & p")
for polarity in ("dnf", "cnf"):
    nf = normal_form(f, polarity)
    g = nf.to_formula()
    same = all(entails(a, b, mode) for a, b in ((f, g), (g, f)) for mode in ("pos", "neg"))
    print(f"{polarity}: {nf}   equivalent: {same}")

# Printing uses as few parentheses as the precedence ~ > & > | allows.
print(render(parse("((~p) | (q & r))")))
