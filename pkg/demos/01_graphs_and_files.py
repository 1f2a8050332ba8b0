"""
Generating graphs and reading edge lists
========================================

"""

from intervaltotal import complete_balanced_multipartite, from_edgelist, hypercube, to_edgelist

# Q_3: vertex i is the bit string of i, first coordinate most significant
q3 = hypercube(3)
print(q3.n_vertices, "vertices,", q3.n_edges, "edges, degree", q3.max_degree)
print("vertex 5 is", q3.labels[5].coords)

# K_{3,3,3}: vertices grouped part by part
k333 = complete_balanced_multipartite(3, 3)
print([tuple(lab) for lab in k333.labels[:4]], "...")

# the text format is 1-based and round-trips exactly
text = to_edgelist(q3)
print(text.splitlines()[:3])
assert from_edgelist(text).edges == q3.edges
