"""
Cluster-expansion certificates
==============================

The cluster-expansion condition asks for weights y > 0 with
p_i <= y_i / Y_{Γ⁺(i)}, where Y is the independence polynomial.  Its bound
1/Y_[n] is never better than Shearer's, but a certificate y is easy to
check by hand.
"""

from fractions import Fraction

from lllcert import (breve_q_table, check_cluster, cluster_bound, complete_graph, find_y,
                     petersen_graph, verify_cluster_vs_shearer)
from lllcert.graph import full_set

K2 = complete_graph(2)
print(check_cluster(K2, ["1/5", "1/5"], ["1/2", "1/2"]).to_json())

# find_y iterates y <- p * Y_{Γ⁺}(y) from y = p.  A converged point is
# validated in exact arithmetic before it is returned.
G = petersen_graph()
p = [Fraction(1, 10)] * 10
cert = find_y(G, p)
print("converged:", cert.converged, "iterations:", cert.iterations, "validation:", cert.validation)
print("y_1 =", cert.y[0])

shearer = breve_q_table(G, p)[full_set(10)]
cluster = cluster_bound(G, cert.y)
print(f"Shearer bound  {float(shearer):.6f}")
print(f"cluster bound  {float(cluster):.6f}")
print("ratio chain against Shearer holds:", verify_cluster_vs_shearer(G, p, cert.y))

# Past the convergence region the search reports that it found nothing;
# that is not a proof that the condition fails.
print(find_y(G, [Fraction(1, 4)] * 10).to_json()["status"])
