"""
From a total coloring of Q_n to an edge coloring of Q_{n+1}
===========================================================

"""

from intervaltotal import hypercube, hypercube_total_coloring, theorem12_lift, verify_interval_edge
from intervaltotal.export import export_dot

# the longest span on Q_3 is 10
phi = hypercube_total_coloring(3, 10)
psi = theorem12_lift(3, phi)
print("Q_4 edge coloring with", psi.t, "colors:", verify_interval_edge(hypercube(4), psi).ok)

# vertex colors of Q_3 reappear on the matching between the two copies
print(export_dot(hypercube(3), phi, name="Q3"))
