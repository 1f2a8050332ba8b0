import re

from intervaltotal.coloring import TotalColoring
from intervaltotal.constructions import hypercube_total_coloring
from intervaltotal.export import export_dot
from intervaltotal.graph import complete_graph, hypercube


def test_k2_uncolored():
    out = export_dot(complete_graph(2))
    assert out == "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n"


def test_k2_colored():
    out = export_dot(complete_graph(2), TotalColoring(3, (1, 3), {(0, 1): 2}))
    assert re.findall(r'^  \d+ \[label="(\d+)"\];$', out, re.M) == ["1", "3"]
    assert re.findall(r'-- \d+ \[label="(\d+)"\];$', out, re.M) == ["2"]


def test_q3_with_max_span_coloring():
    c = hypercube_total_coloring(3, 10)
    out = export_dot(hypercube(3), c)
    assert len(re.findall(r'^  \d+ \[label="\d+"\];$', out, re.M)) == 8
    edges = re.findall(r'^  (\d+) -- (\d+) \[label="(\d+)"\];$', out, re.M)
    assert len(edges) == 12
    assert {int(x) for _, _, x in edges} | set(c.vertex_colors) == set(range(1, 11))


def test_export_is_deterministic():
    c = hypercube_total_coloring(3, 10)
    assert export_dot(hypercube(3), c) == export_dot(hypercube(3), c)
