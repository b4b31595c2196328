"""
From a table of monomial values to a model
==========================================

A non-standard assignment is pinned down by its values on conjunctions of
literals. ``synthesize`` peels masses off from the largest literal sets
down; a negative mass means no model induces the table.
"""

from fractions import Fraction as F

from bdprob import (
    MonomialTable,
    TableRejected,
    audit_ns,
    eval_ns,
    monomial_pairs,
    parse,
    synthesize,
)

# Probability 1/2 for every formula is a legitimate assignment.
half = MonomialTable.constant(["p", "q"], F(1, 2))
m = synthesize(half)
for text in ("p", "~q & p", "p | ~p", "(p | q) & ~(p & ~q)"):
    print(f"p({text}) = {eval_ns(m, parse(text))}")

# An agent certain of both p and ~p but with no belief in p & ~p is not.
bad = MonomialTable(["p"], {"p": 1, "~p": 1, "p,~p": 0})
try:
    synthesize(bad)
except TableRejected as exc:
    for lits, w in exc.witnesses.items():
        print("rejected: mass of {" + ",".join(sorted(map(str, lits))) + "} would be", w)
print(audit_ns(bad, monomial_pairs(["p"])))
