"""Total and edge colorings, their verifiers, and the coloring JSON format.

Violations are reported in a fixed order of kinds::

    out-of-range, adjacent-vertices, incident-vertex-edge, adjacent-edges,
    not-interval, missing-color

and, within a kind, vertices by index and then edges lexicographically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence, Union

from .errors import InvalidArgument
from .graph import Edge, Graph, canonical_edge

Element = Union[int, Edge]

KINDS = (
    "out-of-range",
    "adjacent-vertices",
    "incident-vertex-edge",
    "adjacent-edges",
    "not-interval",
    "missing-color",
)


@dataclass(frozen=True, eq=True)
class TotalColoring:
    t: int
    vertex_colors: tuple[int, ...]
    edge_colors: Mapping[Edge, int] = field(hash=False)

    @classmethod
    def from_lists(cls, g: Graph, t: int, vertex_colors: Sequence[int], edge_colors: Sequence[int]) -> TotalColoring:
        """Build from colors aligned with ``g``'s vertex and edge order."""
        if len(edge_colors) != g.n_edges:
            raise InvalidArgument("one color per edge required")
        return cls(t, tuple(int(x) for x in vertex_colors), dict(zip(g.edges, map(int, edge_colors))))

    def edge(self, u: int, v: int) -> int:
        return self.edge_colors[canonical_edge(u, v)]

    def used_colors(self) -> set[int]:
        return set(self.vertex_colors) | set(self.edge_colors.values())

    def max_color(self) -> int:
        return max(self.used_colors(), default=0)


@dataclass(frozen=True, eq=True)
class EdgeColoring:
    t: int
    edge_colors: Mapping[Edge, int] = field(hash=False)

    @classmethod
    def from_list(cls, g: Graph, t: int, edge_colors: Sequence[int]) -> EdgeColoring:
        if len(edge_colors) != g.n_edges:
            raise InvalidArgument("one color per edge required")
        return cls(t, dict(zip(g.edges, map(int, edge_colors))))

    def edge(self, u: int, v: int) -> int:
        return self.edge_colors[canonical_edge(u, v)]

    def used_colors(self) -> set[int]:
        return set(self.edge_colors.values())


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: tuple[Element, ...]
    colors: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "missing-color":
            return f"missing-color: colors {list(self.colors)} unused"
        elems = ", ".join(_fmt(e) for e in self.elements)
        return f"{self.kind}: {elems} colored {list(self.colors)}"


def _fmt(e: Element) -> str:
    if isinstance(e, tuple):
        return f"edge {e[0] + 1}-{e[1] + 1}"
    return f"vertex {e + 1}"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violation: Violation | None = None
    violations: tuple[Violation, ...] = ()

    @classmethod
    def from_violations(cls, found: list[Violation]) -> VerificationReport:
        if not found:
            return cls(True)
        return cls(False, found[0], tuple(found))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.violation is not None:
            out["violation"] = {
                "kind": self.violation.kind,
                "elements": [_element_json(e) for e in self.violation.elements],
                "colors": list(self.violation.colors),
                "message": str(self.violation),
            }
        return out


def _element_json(e: Element):
    if isinstance(e, tuple):
        return {"u": e[0] + 1, "v": e[1] + 1}
    return {"vertex": e + 1}


def _check_shape(g: Graph, c: TotalColoring | EdgeColoring) -> None:
    if isinstance(c, TotalColoring) and len(c.vertex_colors) != g.n_vertices:
        raise InvalidArgument(
            f"coloring has {len(c.vertex_colors)} vertex colors for {g.n_vertices} vertices"
        )
    if len(c.edge_colors) != g.n_edges or any(e not in c.edge_colors for e in g.edges):
        raise InvalidArgument("coloring does not cover exactly the edges of the graph")
    if c.t < 1:
        raise InvalidArgument("declared color count must be positive")


def _range_violations(g: Graph, c, vertices: bool) -> list[Violation]:
    out = []
    if vertices:
        for v, col in enumerate(c.vertex_colors):
            if not 1 <= col <= c.t:
                out.append(Violation("out-of-range", (v,), (col,)))
    for e in g.edges:
        col = c.edge_colors[e]
        if not 1 <= col <= c.t:
            out.append(Violation("out-of-range", (e,), (col,)))
    return out


def _edge_clash_violations(g: Graph, c) -> list[Violation]:
    out = []
    for v in range(g.n_vertices):
        seen: dict[int, Edge] = {}
        for k in g.incident[v]:
            e = g.edges[k]
            col = c.edge_colors[e]
            if col in seen:
                out.append(Violation("adjacent-edges", (seen[col], e), (col, col)))
            else:
                seen[col] = e
    return out


def _proper_violations(g: Graph, c: TotalColoring) -> list[Violation]:
    vc = c.vertex_colors
    out = [
        Violation("adjacent-vertices", (u, v), (vc[u], vc[v]))
        for u, v in g.edges
        if vc[u] == vc[v]
    ]
    for v in range(g.n_vertices):
        for k in g.incident[v]:
            e = g.edges[k]
            if c.edge_colors[e] == vc[v]:
                out.append(Violation("incident-vertex-edge", (v, e), (vc[v], vc[v])))
    out += _edge_clash_violations(g, c)
    return out


def _interval_violations(g: Graph, palettes: list[tuple[int, ...]], sizes: Sequence[int]) -> list[Violation]:
    out = []
    for v, pal in enumerate(palettes):
        if not pal:
            continue
        # properness gives distinct colors, so max - min = size - 1 is the whole test
        if len(pal) != sizes[v] or pal[-1] - pal[0] != sizes[v] - 1:
            out.append(Violation("not-interval", (v,), pal))
    return out


def _missing(c, used: set[int]) -> list[Violation]:
    missing = tuple(x for x in range(1, c.t + 1) if x not in used)
    return [Violation("missing-color", (), missing)] if missing else []


def verify_total_proper(g: Graph, c: TotalColoring) -> VerificationReport:
    _check_shape(g, c)
    return VerificationReport.from_violations(_range_violations(g, c, True) + _proper_violations(g, c))


def verify_interval_total(g: Graph, c: TotalColoring) -> VerificationReport:
    """Proper, every color of ``[1, t]`` used, and each S[v] an interval of d(v)+1 colors."""
    _check_shape(g, c)
    found = _range_violations(g, c, True) + _proper_violations(g, c)
    palettes = [palette_of(g, c, v) for v in range(g.n_vertices)]
    found += _interval_violations(g, palettes, [d + 1 for d in g.degrees])
    found += _missing(c, c.used_colors())
    return VerificationReport.from_violations(found)


def verify_interval_edge(g: Graph, c: EdgeColoring) -> VerificationReport:
    _check_shape(g, c)
    found = _range_violations(g, c, False) + _edge_clash_violations(g, c)
    palettes = [edge_palette_of(g, c, v) for v in range(g.n_vertices)]
    found += _interval_violations(g, palettes, g.degrees)
    found += _missing(c, c.used_colors())
    return VerificationReport.from_violations(found)


def palette_of(g: Graph, c: TotalColoring, v: int) -> tuple[int, ...]:
    """S[v, c]: colors of v and its incident edges, sorted."""
    cols = {c.vertex_colors[v]}
    cols.update(c.edge_colors[g.edges[k]] for k in g.incident[v])
    return tuple(sorted(cols))


def edge_palette_of(g: Graph, c: TotalColoring | EdgeColoring, v: int) -> tuple[int, ...]:
    """S(v, c): colors of the edges at v, sorted."""
    return tuple(sorted({c.edge_colors[g.edges[k]] for k in g.incident[v]}))


# -- JSON --------------------------------------------------------------------


def coloring_to_dict(c: TotalColoring | EdgeColoring) -> dict:
    out: dict = {"t": c.t}
    if isinstance(c, TotalColoring):
        out["vertex_colors"] = list(c.vertex_colors)
    out["edge_colors"] = [
        {"u": u + 1, "v": v + 1, "c": col} for (u, v), col in sorted(c.edge_colors.items())
    ]
    return out


def coloring_to_json(c: TotalColoring | EdgeColoring) -> str:
    return json.dumps(coloring_to_dict(c), indent=None, separators=(",", ":")) + "\n"


def coloring_from_dict(obj: dict) -> TotalColoring | EdgeColoring:
    try:
        t = int(obj["t"])
        edges: dict[Edge, int] = {}
        for rec in obj["edge_colors"]:
            u, v = int(rec["u"]) - 1, int(rec["v"]) - 1
            if u < 0 or v < 0 or u == v:
                raise InvalidArgument(f"bad edge record {rec}")
            e = canonical_edge(u, v)
            if e in edges:
                raise InvalidArgument(f"edge {u + 1}-{v + 1} colored twice")
            edges[e] = int(rec["c"])
        if obj.get("vertex_colors") is None:
            return EdgeColoring(t, edges)
        return TotalColoring(t, tuple(int(x) for x in obj["vertex_colors"]), edges)
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed coloring JSON: {exc}") from None


def coloring_from_json(text: str) -> TotalColoring | EdgeColoring:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"invalid JSON: {exc}") from None
    return coloring_from_dict(obj)


def read_coloring(path: str | Path) -> TotalColoring | EdgeColoring:
    return coloring_from_json(Path(path).read_text())


def write_coloring(c: TotalColoring | EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(coloring_to_json(c))
