"""Graphviz DOT output with color indices as ``label`` attributes."""

from __future__ import annotations

from .coloring import EdgeColoring, TotalColoring
from .graph import Graph


def export_dot(g: Graph, c: TotalColoring | EdgeColoring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        if isinstance(c, TotalColoring):
            lines.append(f'  {v + 1} [label="{c.vertex_colors[v]}"];')
        else:
            lines.append(f"  {v + 1};")
    for u, v in g.edges:
        if c is None:
            lines.append(f"  {u + 1} -- {v + 1};")
        else:
            lines.append(f'  {u + 1} -- {v + 1} [label="{c.edge_colors[(u, v)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
