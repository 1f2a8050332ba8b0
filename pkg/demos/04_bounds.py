"""
What is known about the spans
=============================

Each bound remembers where it came from.
"""

import json

from intervaltotal import span_table, theorem9_certificate

for family, params in [("qn", (3,)), ("kmn", (2, 2)), ("multipartite", (4, 3)), ("kmn", (5, 8))]:
    res = span_table(family, *params)
    print(family, params, "chi''", res.chi_tt)
    print("   w_tau", json.dumps(res.w_tau.to_dict()))
    print("   W_tau", json.dumps(res.W_tau.to_dict()))

# K_{5,8}: 9 vertices would have to carry the forced colors but only 8 exist
cert = theorem9_certificate(1)
print(cert.parts, cert.vertices_needed, ">", cert.vertices_available, "gap", cert.gap)
