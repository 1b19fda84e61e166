"""
The tight instance as an oracle
===============================

When Shearer's condition holds there is a probability space that makes the
bound exact: one atom per independent set I, of probability q_I, lying in
exactly the events of I.  Every probability-side claim can be checked on it
by exact summation.
"""

from fractions import Fraction

from lllcert import (check_lopsided_condition, conditional_prob, cycle_graph, prob_event,
                     prob_none, random_product_space, tight_instance, verify_bound,
                     verify_fundamental_inequality)
from lllcert.graph import full_set

G = cycle_graph(5)
p = [Fraction(1, 5)] * 5
T = tight_instance(G, p)
print(f"{len(T)} atoms, total weight {sum(T.weights)}")
print("marginals:", [str(prob_event(T, i)) for i in range(5)])

# Events 1 and 3 are not adjacent in C5; conditioning on Ē_3 leaves Pr[E_1] unchanged.
print("Pr[E1 | not E3] =", conditional_prob(T, 0, 1 << 2))

lop = check_lopsided_condition(T, G, p)
print("lopsided condition:", lop.to_json())

# The lower bound is attained with equality on every vertex set.
print("bound check:", verify_bound(T, G, p).to_json())
print("Pr[no event] =", prob_none(T, full_set(5)))
print("fundamental inequality:", verify_fundamental_inequality(T, G, p))

# A random variable-model space on the same graph satisfies the hypotheses
# too, and its probability of avoiding everything is at least the bound.
S, marg = random_product_space(G, seed=7)
print("random space marginals:", [str(m) for m in marg])
print("random space bound check:", verify_bound(S, G, marg).to_json())
