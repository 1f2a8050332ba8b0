"""Immutable simple graphs and the generated families studied here.

Vertices are indexed ``0..n_vertices-1``.  Family generators attach labels
that address vertices the way the formulas do (1-based part/position pairs
for complete multipartite graphs, bit-vectors for hypercubes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidArgument

Edge = tuple[int, int]


class MultipartiteLabel(NamedTuple):
    part: int  # 1..r
    pos: int  # 1..n


class HypercubeLabel(NamedTuple):
    coords: tuple[int, ...]  # coords[0] is the most significant bit


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonical (sorted, ``u < v``) edge tuples.

    Use :meth:`from_edges` to build one from arbitrary edge input; the
    constructor itself only accepts the canonical form.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple | None = None
    family: str | None = None
    params: tuple[int, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise InvalidArgument("negative vertex count")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n_vertices):
                raise InvalidArgument(f"edge {e} is not canonical or out of range")
            if prev is not None and e <= prev:
                raise InvalidArgument("edges must be sorted and free of duplicates")
            prev = e
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise InvalidArgument("one label per vertex required")
        object.__setattr__(self, "_index", {e: k for k, e in enumerate(self.edges)})

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Sequence[int]], **meta) -> Graph:
        canon = set()
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise InvalidArgument(f"duplicate edge {e}")
            canon.add(e)
        return cls(n_vertices, tuple(sorted(canon)), **meta)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[canonical_edge(u, v)]
        except KeyError:
            raise InvalidArgument(f"no edge between {u} and {v}") from None

    def vertex(self, *label) -> int:
        """Vertex index for a family label, e.g. ``g.vertex(part, pos)``."""
        if self.labels is None:
            raise InvalidArgument("graph carries no labels")
        key = label[0] if len(label) == 1 else tuple(label)
        for k, lab in enumerate(self.labels):
            if tuple(lab) == key or getattr(lab, "coords", None) == key:
                return k
        raise InvalidArgument(f"no vertex labelled {label}")


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: vertices ``0..m-1`` form part 1, ``m..m+n-1`` form part 2."""
    if m < 1 or n < 1:
        raise InvalidArgument("both parts of K_{m,n} must be non-empty")
    labels = tuple(MultipartiteLabel(1, j + 1) for j in range(m)) + tuple(
        MultipartiteLabel(2, j + 1) for j in range(n)
    )
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    return Graph(m + n, edges, labels, "complete_bipartite", (m, n))


def multipartite_index(n: int, part: int, pos: int) -> int:
    """Index of the vertex at 1-based (part, pos) in part-major order."""
    return (part - 1) * n + (pos - 1)


def complete_balanced_multipartite(r: int, n: int) -> Graph:
    """K_{n,...,n} with r parts, vertices ordered part-major, position-minor."""
    if r < 2:
        raise InvalidArgument("a complete multipartite graph needs r >= 2 parts")
    if n < 1:
        raise InvalidArgument("parts must be non-empty")
    labels = tuple(MultipartiteLabel(i, j) for i in range(1, r + 1) for j in range(1, n + 1))
    total = r * n
    edges = tuple(
        (u, v) for u in range(total) for v in range(u + 1, total) if u // n != v // n
    )
    return Graph(total, edges, labels, "complete_multipartite", (r, n))


def complete_graph(n: int) -> Graph:
    """K_n, labelled as the balanced multipartite graph with parts of size one."""
    if n < 1:
        raise InvalidArgument("K_n needs n >= 1")
    labels = tuple(MultipartiteLabel(i, 1) for i in range(1, n + 1))
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    return Graph(n, edges, labels, "complete", (n,))


def hypercube(n: int) -> Graph:
    """Q_n; vertex index is the integer value of its bit-vector (first coordinate = MSB)."""
    if n < 1:
        raise InvalidArgument("hypercube dimension must be >= 1")
    size = 1 << n
    labels = tuple(
        HypercubeLabel(tuple((v >> (n - 1 - b)) & 1 for b in range(n))) for v in range(size)
    )
    edges = tuple(
        (v, v | (1 << b)) for v in range(size) for b in reversed(range(n)) if not v & (1 << b)
    )
    return Graph(size, tuple(sorted(edges)), labels, "hypercube", (n,))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` (relabelled in the given order) and the index map."""
    pos = {v: k for k, v in enumerate(vertices)}
    if len(pos) != len(vertices):
        raise InvalidArgument("repeated vertex in induced subgraph request")
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    labels = None if g.labels is None else tuple(g.labels[v] for v in vertices)
    return Graph.from_edges(len(vertices), edges, labels=labels), list(vertices)


def split_hypercube(g: Graph) -> tuple[Graph, Graph, list[Edge]]:
    """Split Q_{n+1} by its first coordinate.

    Returns the two halves, each relabelled as Q_n by dropping the first
    coordinate, and the cross edges ``(a, a + 2**n)`` in ``g``'s indexing.
    """
    if g.family != "hypercube" or g.labels is None:
        raise InvalidArgument("split_hypercube expects a generated hypercube")
    (dim,) = g.params
    if dim < 2:
        raise InvalidArgument("need Q_{n+1} with n >= 1")
    half = 1 << (dim - 1)
    halves = []
    for offset in (0, half):
        sub, _ = induced_subgraph(g, range(offset, offset + half))
        labels = tuple(HypercubeLabel(lab.coords[1:]) for lab in sub.labels)
        halves.append(Graph(sub.n_vertices, sub.edges, labels, "hypercube", (dim - 1,)))
    cross = [(a, a + half) for a in range(half)]
    return halves[0], halves[1], cross


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartition(g: Graph) -> list[int] | None:
    """A 0/1 side per vertex, or None when the graph has an odd cycle."""
    side = [-1] * g.n_vertices
    for root in range(g.n_vertices):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


# -- edge-list text format ---------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"p {g.n_vertices} {g.n_edges}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse the ``p``/``e`` edge-list format (1-based vertices, ``c`` comments allowed)."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None:
                    raise InvalidArgument(f"line {lineno}: second problem line")
                # tolerate DIMACS "p edge N M"
                n, m = (int(x) for x in parts[-2:])
                if len(parts) not in (3, 4):
                    raise InvalidArgument(f"line {lineno}: malformed problem line")
            elif parts[0] == "e":
                if n is None:
                    raise InvalidArgument(f"line {lineno}: edge before problem line")
                if len(parts) != 3:
                    raise InvalidArgument(f"line {lineno}: malformed edge line")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise InvalidArgument(f"line {lineno}: vertex out of range")
                edges.append((u - 1, v - 1))
            else:
                raise InvalidArgument(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, InvalidArgument):
                raise
            raise InvalidArgument(f"line {lineno}: {exc}") from None
    if n is None:
        raise InvalidArgument("missing problem line")
    if len(edges) != m:
        raise InvalidArgument(f"problem line announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_edgelist(path: str | Path) -> Graph:
    return from_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path: str | Path) -> None:
    Path(path).write_text(to_edgelist(g))
