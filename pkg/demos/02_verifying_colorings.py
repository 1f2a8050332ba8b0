"""
Checking a total coloring
=========================

"""

from intervaltotal import TotalColoring, complete_graph, palette_of, verify_interval_total

k2 = complete_graph(2)

# endpoints 1 and 3, edge 2: both palettes are runs of consecutive colors
good = TotalColoring(3, (1, 3), {(0, 1): 2})
print(verify_interval_total(k2, good).ok, palette_of(k2, good, 0), palette_of(k2, good, 1))

# move one endpoint to 4: vertex 2 now sees {2, 4} and color 3 is never used
bad = TotalColoring(4, (1, 4), {(0, 1): 2})
report = verify_interval_total(k2, bad)
print(report.violation)
print(sorted(report.kinds()))
