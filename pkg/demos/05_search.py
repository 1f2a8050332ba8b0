"""
Exact search on small graphs
============================

"""

from intervaltotal import SearchConfig, complete_bipartite, complete_graph, decide_interval_total, spectrum

for name, g in [("K_3", complete_graph(3)), ("K_4", complete_graph(4)), ("K_{2,2}", complete_bipartite(2, 2))]:
    s = spectrum(g)
    print(name, "feasible t:", s.feasible, "gap-free" if s.is_gap_free() else "")

# the certificate instance; twin ordering and per-color matchings make it tractable
cfg = SearchConfig(time_budget=120, twins=True, color_matching=True)
out = decide_interval_total(complete_bipartite(5, 8), 9, cfg)
print("K_{5,8}, t=9:", out.status, out.nodes, "nodes", round(out.duration, 1), "s")
