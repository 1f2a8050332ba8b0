"""Exact search for interval total colorings of small graphs.

In an interval total t-coloring every palette S[v] is exactly the interval
``[s_v, s_v + d(v)]``, so the search runs in two phases:

1. assign an interval start ``s_v`` to every vertex, pruning with interval
   intersection along edges, an interval-to-point matching test at each
   vertex, and coverage of ``[1, t]`` by the union of the intervals;
2. complete the coloring, where each vertex's own color and its edge colors
   must form a permutation of its interval and adjacent vertices differ.

Variable and value orders are fixed, so results are reproducible.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, replace

from .bounds import Bound, SpanResult
from .coloring import TotalColoring, verify_interval_total
from .errors import InvalidArgument
from .graph import Graph, bipartition

MODES = ("decide", "min-span", "max-span", "spectrum")
BUDGET_ENV = "INTERVALTOTAL_BUDGET"


def default_budget() -> float | None:
    raw = os.environ.get(BUDGET_ENV)
    return float(raw) if raw else None


@dataclass(frozen=True)
class SearchConfig:
    """Search knobs.

    ``time_budget`` (seconds) and ``node_limit`` bound each ``decide`` call.
    ``twins`` enables ordering constraints between vertices with identical
    neighbourhoods; ``color_matching`` enables a per-color matching test on
    bipartite graphs.  Both are sound and both are off by default.
    """

    t: int | None = None
    mode: str = "decide"
    time_budget: float | None = None
    node_limit: int | None = None
    reversal: bool = True
    twins: bool = False
    color_matching: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise InvalidArgument(f"mode must be one of {MODES}")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "sat" | "unsat" | "timeout"
    witness: TotalColoring | None = None
    nodes: int = 0
    duration: float = 0.0
    start_assignments: int = 0


class _OutOfBudget(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowbit_color(x: int) -> int:
    return (x & -x).bit_length() - 1


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of size >= 2 of vertices with equal open or equal closed neighbourhoods."""
    seen: dict[tuple, list[int]] = {}
    for v in range(g.n_vertices):
        seen.setdefault(("open", g.adjacency[v]), []).append(v)
    for v in range(g.n_vertices):
        closed = tuple(sorted(g.adjacency[v] + (v,)))
        seen.setdefault(("closed", closed), []).append(v)
    classes = []
    taken: set[int] = set()
    for members in seen.values():
        members = [v for v in members if v not in taken]
        if len(members) >= 2 and g.degree(members[0]) > 0:
            classes.append(members)
            taken.update(members)
    return sorted(classes)


class _Solver:
    def __init__(self, g: Graph, t: int, cfg: SearchConfig):
        self.g, self.t, self.cfg = g, t, cfg
        self.V, self.E = g.n_vertices, g.n_edges
        self.deg = g.degrees
        self.adj = g.adjacency
        self.nodes = 0
        self.starts_tried = 0
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
        self.order = self._vertex_order()
        self.rank = {v: k for k, v in enumerate(self.order)}
        # twin bookkeeping
        self.twin_of: dict[int, list[int]] = {}
        self.twin_classes = twin_classes(g) if cfg.twins else []
        for cls in self.twin_classes:
            for v in cls:
                self.twin_of[v] = cls
        self.sides = bipartition(g) if cfg.color_matching else None
        self.vertex_first = self.sides is not None
        # phase-2 structure: element k < V is vertex k; V + e is edge e
        self.groups = [[v] + [self.V + k for k in g.incident[v]] for v in range(self.V)]
        self.member_of: list[list[int]] = [[v] for v in range(self.V)]
        for u, v in g.edges:
            self.member_of.append([u, v])

    # -- budget -----------------------------------------------------------------

    def tick(self) -> None:
        self.nodes += 1
        if self.cfg.node_limit is not None and self.nodes > self.cfg.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    # -- phase 1: interval starts --------------------------------------------------

    def _vertex_order(self) -> list[int]:
        """Maximum-cardinality order: next vertex has most already-ordered neighbours."""
        placed: list[int] = []
        inside = [False] * self.V
        weight = [0] * self.V
        for _ in range(self.V):
            v = max(
                (u for u in range(self.V) if not inside[u]),
                key=lambda u: (weight[u], self.deg[u], -u),
            )
            inside[v] = True
            placed.append(v)
            for w in self.adj[v]:
                weight[w] += 1
        return placed

    def solve(self) -> TotalColoring | None:
        if any(self.t - d < 1 for d in self.deg):
            return None
        if self.t > self.V + self.E:
            return None
        self.start = [0] * self.V
        return self._assign(0)

    def _range_for(self, v: int) -> tuple[int, int]:
        lo, hi = 1, self.t - self.deg[v]
        dv = self.deg[v]
        for u in self.adj[v]:
            su = self.start[u]
            if su:
                lo = max(lo, su - dv)
                hi = min(hi, su + self.deg[u])
        return lo, hi

    def _twin_ok(self, v: int, s: int) -> bool:
        cls = self.twin_of.get(v)
        if cls is None:
            return True
        for w in cls:
            sw = self.start[w]
            if sw and ((w < v and sw > s) or (w > v and sw < s)):
                return False
        return True

    def _matchable(self, w: int) -> bool:
        """Edges to neighbours with known intervals fit injectively into w's interval."""
        sw, dw = self.start[w], self.deg[w]
        ew = sw + dw
        spans = []
        for u in self.adj[w]:
            su = self.start[u]
            if su:
                spans.append((min(ew, su + self.deg[u]), max(sw, su)))
        spans.sort()
        used: set[int] = set()
        for right, left in spans:
            c = left
            while c in used:
                c += 1
            if c > right:
                return False
            used.add(c)
        return True

    def _coverable(self, depth: int) -> bool:
        t = self.t
        covered = bytearray(t + 2)
        for k in range(depth):
            v = self.order[k]
            s = self.start[v]
            covered[s : s + self.deg[v] + 1] = b"\x01" * (self.deg[v] + 1)
        reach = bytearray(t + 2)
        for k in range(depth, self.V):
            v = self.order[k]
            lo, hi = self._range_for(v)
            if lo > hi:
                return False
            e = hi + self.deg[v]
            reach[lo : e + 1] = b"\x01" * (e - lo + 1)
        return all(covered[c] or reach[c] for c in range(1, t + 1))

    def _assign(self, depth: int) -> TotalColoring | None:
        if depth == self.V:
            if not self._reversal_ok():
                return None
            self.starts_tried += 1
            return self._complete()
        v = self.order[depth]
        lo, hi = self._range_for(v)
        if depth == 0 and self.cfg.reversal and v not in self.twin_of:
            # a coloring and its reversal c -> t + 1 - c are both solutions
            hi = min(hi, (self.t + 1 - self.deg[v]) // 2)
        for s in range(lo, hi + 1):
            self.tick()
            if not self._twin_ok(v, s):
                continue
            self.start[v] = s
            if self._matchable(v) and all(self._matchable(u) for u in self.adj[v] if self.start[u]):
                if self._coverable(depth + 1):
                    found = self._assign(depth + 1)
                    if found is not None:
                        return found
            self.start[v] = 0
        return None

    def _reversal_ok(self) -> bool:
        if not self.cfg.reversal:
            return True
        v0 = self.order[0]
        cls = self.twin_of.get(v0)
        if cls is None:
            return True
        ss = [self.start[w] for w in cls]
        return min(ss) + max(ss) <= self.t + 1 - self.deg[v0]

    # -- phase 2: completion -------------------------------------------------------

    def _complete(self) -> TotalColoring | None:
        V = self.V
        masks = [((1 << (self.deg[v] + 1)) - 1) << self.start[v] for v in range(V)]
        dom = masks[:]
        for u, v in self.g.edges:
            dom.append(masks[u] & masks[v])
        self.masks = masks
        self.twin_pairs = []
        for cls in self.twin_classes:
            for a, b in zip(cls, cls[1:]):
                if self.start[a] == self.start[b]:
                    self.twin_pairs.append((a, b))
        self.twin_next = {a: b for a, b in self.twin_pairs}
        self.twin_prev = {b: a for a, b in self.twin_pairs}
        queue = [x for x, d in enumerate(dom) if d and d & (d - 1) == 0]
        if any(d == 0 for d in dom) or not self._propagate(dom, queue):
            return None
        return self._branch(dom)

    def _propagate(self, dom: list[int], queue: list[int]) -> bool:
        V = self.V
        groups, member_of, adj, masks = self.groups, self.member_of, self.adj, self.masks
        while True:
            while queue:
                x = queue.pop()
                bit = dom[x]
                for gv in member_of[x]:
                    for y in groups[gv]:
                        if y != x and dom[y] & bit:
                            d = dom[y] & ~bit
                            if not d:
                                return False
                            dom[y] = d
                            if d & (d - 1) == 0:
                                queue.append(y)
                if x < V:
                    for w in adj[x]:
                        if dom[w] & bit:
                            d = dom[w] & ~bit
                            if not d:
                                return False
                            dom[w] = d
                            if d & (d - 1) == 0:
                                queue.append(w)
                    if self.twin_pairs and not self._twin_propagate(dom, x, queue):
                        return False
            # hidden singles: each color of S[v] is taken by exactly one member
            changed = False
            for v in range(V):
                mask = masks[v]
                members = groups[v]
                while mask:
                    bit = mask & -mask
                    mask ^= bit
                    holder = -1
                    for y in members:
                        if dom[y] & bit:
                            if holder >= 0:
                                holder = -2
                                break
                            holder = y
                    if holder == -1:
                        return False
                    if holder >= 0 and dom[holder] != bit:
                        dom[holder] = bit
                        queue.append(holder)
                        changed = True
            if not changed:
                break
        if self.sides is not None:
            return self._color_matchings(dom)
        return True

    def _twin_propagate(self, dom: list[int], x: int, queue: list[int]) -> bool:
        bit = dom[x]
        nxt = self.twin_next.get(x)
        if nxt is not None:
            d = dom[nxt] & ~(bit - 1)  # colors >= x's color
            if not d:
                return False
            if d != dom[nxt]:
                dom[nxt] = d
                if d & (d - 1) == 0:
                    queue.append(nxt)
        prv = self.twin_prev.get(x)
        if prv is not None:
            d = dom[prv] & ((bit << 1) - 1)  # colors <= x's color
            if not d:
                return False
            if d != dom[prv]:
                dom[prv] = d
                if d & (d - 1) == 0:
                    queue.append(prv)
        return True

    def _color_matchings(self, dom: list[int]) -> bool:
        """Per color c: vertices needing c on an edge can be matched by c-capable edges.

        On bipartite graphs a matching covering a vertex set exists iff one
        exists for its part on each side separately.
        """
        V, g, sides = self.V, self.g, self.sides
        for c in range(1, self.t + 1):
            bit = 1 << c
            need = [v for v in range(V) if self.masks[v] & bit and not dom[v] & bit]
            if not need:
                continue
            nbrs: dict[int, list[int]] = {}
            for k, (u, v) in enumerate(g.edges):
                if dom[V + k] & bit:
                    nbrs.setdefault(u, []).append(v)
                    nbrs.setdefault(v, []).append(u)
            for side in (0, 1):
                left = [v for v in need if sides[v] == side]
                if left and not _saturates(left, nbrs):
                    return False
        return True

    def _branch(self, dom: list[int]) -> TotalColoring | None:
        self.tick()
        best, best_key = -1, None
        for x, d in enumerate(dom):
            if d & (d - 1):
                key = (x >= self.V, _popcount(d), x) if self.vertex_first else (_popcount(d), x >= self.V, x)
                if best_key is None or key < best_key:
                    best, best_key = x, key
        if best < 0:
            return self._witness(dom)
        d = dom[best]
        while d:
            bit = d & -d
            d ^= bit
            trial = dom[:]
            trial[best] = bit
            if self._propagate(trial, [best]):
                found = self._branch(trial)
                if found is not None:
                    return found
        return None

    def _witness(self, dom: list[int]) -> TotalColoring:
        colors = [_lowbit_color(d) for d in dom]
        return TotalColoring.from_lists(self.g, self.t, colors[: self.V], colors[self.V :])


def _saturates(left: list[int], nbrs: dict[int, list[int]]) -> bool:
    """Kuhn's augmenting paths: is there a matching covering every vertex of ``left``?"""
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in nbrs.get(u, ()):
            if w in seen:
                continue
            seen.add(w)
            if w not in match or augment(match[w], seen):
                match[w] = u
                return True
        return False

    return all(augment(u, set()) for u in left)


def decide_interval_total(g: Graph, t: int, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Does ``g`` have an interval total t-coloring?  Sat witnesses are re-verified."""
    cfg = cfg or SearchConfig(time_budget=default_budget())
    if t < 1:
        raise InvalidArgument("t must be >= 1")
    began = time.monotonic()
    solver = _Solver(g, t, cfg)
    try:
        witness = solver.solve()
    except _OutOfBudget:
        return SearchOutcome("timeout", None, solver.nodes, time.monotonic() - began, solver.starts_tried)
    elapsed = time.monotonic() - began
    if witness is None:
        return SearchOutcome("unsat", None, solver.nodes, elapsed, solver.starts_tried)
    report = verify_interval_total(g, witness)
    if not report.ok:
        raise AssertionError(f"search produced an invalid witness: {report.violation}")
    return SearchOutcome("sat", witness, solver.nodes, elapsed, solver.starts_tried)


@dataclass
class SpectrumResult:
    feasible: tuple[int, ...]
    infeasible: tuple[int, ...]
    undecided: tuple[int, ...]
    witnesses: dict[int, TotalColoring] = field(default_factory=dict, repr=False)

    @property
    def complete(self) -> bool:
        return not self.undecided

    def is_gap_free(self) -> bool:
        f = self.feasible
        return bool(f) and list(f) == list(range(f[0], f[-1] + 1))


def _t_range(g: Graph) -> range:
    return range(g.max_degree + 1, g.n_vertices + g.n_edges + 1)


def _base_result(g: Graph) -> tuple[Bound, Bound]:
    lo, hi = g.max_degree + 1, g.n_vertices + g.n_edges
    b = Bound(lo, hi, "Delta+1", "|V|+|E|")
    return b, b


def min_span(g: Graph, cfg: SearchConfig | None = None) -> SpanResult:
    """Exact w_tau by sweeping t upward; timeouts leave a bounded, incomplete result."""
    cfg = replace(cfg or SearchConfig(time_budget=default_budget()), mode="min-span")
    w, W = _base_result(g)
    lower, complete = w.lower, True
    for t in _t_range(g):
        out = decide_interval_total(g, t, cfg)
        if out.status == "sat":
            w = Bound(lower, t, "search", "search")
            W = W.tighten(lower=t, source="search")
            return SpanResult("graph", (), g.n_vertices, g.n_edges, None, w, W, complete)
        if out.status == "unsat" and complete:
            lower = t + 1
        if out.status == "timeout":
            complete = False
    return SpanResult("graph", (), g.n_vertices, g.n_edges, None, Bound(None, None, "search", "search"),
                      Bound(None, None, "search", "search"), complete, ("not interval total colorable",))


def max_span(g: Graph, cfg: SearchConfig | None = None) -> SpanResult:
    """Exact W_tau by sweeping t downward from |V|+|E|."""
    cfg = replace(cfg or SearchConfig(time_budget=default_budget()), mode="max-span")
    w, W = _base_result(g)
    upper, complete = W.upper, True
    for t in reversed(_t_range(g)):
        out = decide_interval_total(g, t, cfg)
        if out.status == "sat":
            W = Bound(t, upper, "search", "search")
            w = w.tighten(upper=t, source="search")
            return SpanResult("graph", (), g.n_vertices, g.n_edges, None, w, W, complete)
        if out.status == "unsat" and complete:
            upper = t - 1
        if out.status == "timeout":
            complete = False
    return SpanResult("graph", (), g.n_vertices, g.n_edges, None, Bound(None, None, "search", "search"),
                      Bound(None, None, "search", "search"), complete, ("not interval total colorable",))


def spectrum(g: Graph, cfg: SearchConfig | None = None) -> SpectrumResult:
    """Every t in [Delta+1, |V|+|E|] for which an interval total t-coloring exists."""
    cfg = replace(cfg or SearchConfig(time_budget=default_budget()), mode="spectrum")
    sat, unsat, undecided, wit = [], [], [], {}
    for t in _t_range(g):
        out = decide_interval_total(g, t, cfg)
        if out.status == "sat":
            sat.append(t)
            wit[t] = out.witness
        elif out.status == "unsat":
            unsat.append(t)
        else:
            undecided.append(t)
    return SpectrumResult(tuple(sat), tuple(unsat), tuple(undecided), wit)
