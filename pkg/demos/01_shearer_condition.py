"""
Deciding Shearer's condition
============================

Given a dependency graph and per-event probability bounds p, the
alternating sums q̆_S must be nonnegative on every vertex set S.  When they
are, q̆ of the full vertex set is a lower bound on the probability that no
event occurs.
"""

from fractions import Fraction

from lllcert import breve_q_table, check_shearer, complete_graph, cycle_graph, external

# Two events that may depend on each other: the complete graph on 2 vertices.
K2 = complete_graph(2)
table = breve_q_table(K2, ["1/4", "1/4"])
for S, value in table.items():
    print(f"q̆{external(S)} = {value}")

# Exact rationals make the sign decision trustworthy.  0.6 is parsed as 3/5,
# not as its binary approximation.
report = check_shearer(K2, ["0.6", "0.6"])
print("p = 0.6:", report.to_json())

# p = 1/2 sits on the boundary: the condition holds but the bound is 0,
# so the report flags it as degenerate.
print("p = 1/2:", check_shearer(K2, ["1/2", "1/2"]).to_json())

# On a 5-cycle, scan uniform p to find where the condition stops holding.
C5 = cycle_graph(5)
for k in range(20, 30):
    p = Fraction(k, 100)
    rep = check_shearer(C5, [p] * 5)
    print(f"C5, p = {float(p):.2f}: holds={rep.holds}  bound={rep.bound}")

# Float mode is available for speed; it uses a tolerance instead of exact signs.
from lllcert import FLOAT
print(check_shearer(C5, [0.25] * 5, FLOAT).to_json())
