"""
Pooling two agents
==================

Each agent reports p(f) and p(~f), or a four-valued vector. On 0/1 inputs
the credulous and cautious policies act as the information join and meet
of the Belnap-Dunn values; optimist and pessimist act as the truth join
and meet.
"""

import itertools
from fractions import Fraction as F

from bdprob import (
    CAUTIOUS,
    CREDULOUS,
    OPTIMIST,
    PESSIMIST,
    FourVector,
    NSPair,
    Weighted,
    aggregate_fv,
    aggregate_ns,
    bd_value,
)

alice, eve = NSPair(F(3, 5), F(1, 2)), NSPair(F(1, 2), F(1, 4))
for policy in (Weighted(F(1, 2)), CREDULOUS, CAUTIOUS, OPTIMIST, PESSIMIST):
    print(f"{str(policy):>12}: {aggregate_ns(alice, eve, policy)}")

believer, doubter = FourVector(1, 0, 0, 0), FourVector(0, 1, 0, 0)
print("credulous of belief and disbelief:", aggregate_fv(believer, doubter, CREDULOUS))
print("cautious of belief and disbelief: ", aggregate_fv(believer, doubter, CAUTIOUS))

print("\ncredulous on extremal reports")
extremal = [NSPair(x, y) for x in (0, 1) for y in (0, 1)]
for a, e in itertools.product(extremal, repeat=2):
    print(f"  {bd_value(a)!s:>7} + {bd_value(e)!s:<7} -> {bd_value(aggregate_ns(a, e, CREDULOUS))}")
