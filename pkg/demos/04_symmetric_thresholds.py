"""
Symmetric thresholds
====================

With a common bound p for every event and maximum degree d, the classical
sufficient thresholds are 1/(4d), d^d/(d+1)^(d+1), (d-1)^(d-1)/d^d, and
1/(ed) from the cluster expansion with uniform weights y = 1/(d-1).
"""

import math

from lllcert import (check_symm_inequality, complete_graph, cycle_graph, petersen_graph,
                     symm_inequality_margin, symmetric_certificate, symmetric_thresholds)

print(f"{'d':>3}  {'1/(4d)':>10}  {'spencer':>10}  {'shearer':>10}  {'1/(ed)':>10}")
for d in range(2, 9):
    th = symmetric_thresholds(d)
    print(f"{d:>3}  {float(th.erdos_lovasz):10.6f}  {float(th.spencer):10.6f}  "
          f"{float(th.shearer):10.6f}  {th.cluster_ed:10.6f}")

# The inequality behind the 1/(ed) threshold, checked over a wide range of d.
for d in (2, 3, 10, 1000, 10**6):
    print(f"d={d}: holds={check_symm_inequality(d)}  margin={symm_inequality_margin(d):.3e}")

for name, G in [("C5", cycle_graph(5)), ("K4", complete_graph(4)), ("Petersen", petersen_graph())]:
    d = G.max_degree
    rep = symmetric_certificate(G, 1 / (math.e * d))
    print(f"{name}: d={d}, p=1/(ed) certified={rep.holds}, min slack={float(min(rep.slack)):.4f}")
