"""
Explicit colorings of complete bipartite and multipartite graphs
================================================================

"""

from intervaltotal import (
    complete_balanced_multipartite,
    complete_bipartite,
    palette_of,
    theorem8_coloring,
    theorem10_coloring,
    theorem11_coloring,
    verify_interval_total,
)

# K_{2,4} with 5 colors, the total chromatic number
g = complete_bipartite(2, 4)
c = theorem8_coloring(2, 2)
for v in range(g.n_vertices):
    print(v + 1, palette_of(g, c, v))

# K_{3,3,3,3}: a short span and a long span
g = complete_balanced_multipartite(4, 3)
short, long_ = theorem10_coloring(4, 3), theorem11_coloring(4, 3)
print("short span", short.t, verify_interval_total(g, short).ok)
print("long span ", long_.t, verify_interval_total(g, long_).ok)

# odd part count needs even part size for the long span
c = theorem11_coloring(3, 4)
print("K_{4,4,4}:", c.t, verify_interval_total(complete_balanced_multipartite(3, 4), c).ok)
