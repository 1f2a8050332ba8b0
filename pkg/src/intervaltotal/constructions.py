"""Explicit interval total colorings of complete multipartite graphs and hypercubes.

Formulas are written with 1-based indices (part ``i``, position ``p``) and
converted to vertex indices in one place (:func:`multipartite_index`).
``a % n`` is the residue in ``[0, n-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .coloring import EdgeColoring, TotalColoring, verify_interval_total
from .errors import InvalidArgument, ResourceExhausted, UnsupportedParameters
from .graph import (
    Graph,
    complete_balanced_multipartite,
    complete_bipartite,
    hypercube,
    multipartite_index,
)


def f1(i: int, n: int) -> int:
    return 1 + (i - 1) % n


def f2(j: int, n: int) -> int:
    return (j - 1) // n


def alpha_value(n: int, i: int, j: int) -> int:
    """Color of u_i v_j in the cyclic proper n-edge-coloring of K_{n,n}."""
    if i + j != n + 1:
        # never 0 here: i + j = 1 (mod n) with 2 <= i + j <= 2n forces i + j = n + 1
        return (i + j - 1) % n
    return n


def alpha_knn(n: int) -> EdgeColoring:
    """Proper edge n-coloring of K_{n,n} in which every vertex sees all of [1, n]."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    g = complete_bipartite(n, n)
    colors = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            colors[(i - 1, n + j - 1)] = alpha_value(n, i, j)
    return EdgeColoring(n, {e: colors[e] for e in g.edges})


def knn_base_coloring(n: int) -> TotalColoring:
    """Interval total (n+2)-coloring of K_{n,n}.

    First side colored 1, second side n+2, edge u_i v_j colored
    alpha(u_i v_j) + 1.  Every first-side vertex then sees [1, n+1] and
    every second-side vertex [2, n+2].
    """
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    g = complete_bipartite(n, n)
    vc = [1] * n + [n + 2] * n
    ec = {(i - 1, n + j - 1): alpha_value(n, i, j) + 1 for i in range(1, n + 1) for j in range(1, n + 1)}
    return TotalColoring(n + 2, tuple(vc), {e: ec[e] for e in g.edges})


def theorem8_coloring(n: int, l: int) -> TotalColoring:
    """Interval total (n*l+1)-coloring of K_{n, n*l} (l >= 2); l = 1 gives the K_{n,n} base."""
    if n < 1 or l < 1:
        raise InvalidArgument("need n >= 1 and l >= 1")
    if l == 1:
        return knn_base_coloring(n)
    g = complete_bipartite(n, n * l)
    t = n * l + 1
    vc = [t] * n
    vc += [n + 1 if j <= n else n * f2(j, n) for j in range(1, n * l + 1)]
    ec = {}
    for i in range(1, n + 1):
        for j in range(1, n * l + 1):
            ec[(i - 1, n + j - 1)] = alpha_value(n, f1(i, n), f1(j, n)) + n * f2(j, n)
    return TotalColoring(t, tuple(vc), {e: ec[e] for e in g.edges})


# -- edge-rule families for K_{n,...,n} ------------------------------------------


@dataclass(frozen=True)
class EdgeRuleFamily:
    """One of the eight part-pair rules: pairs (i, j) with i < j it covers and the block offset."""

    name: str
    covers: Callable[[int, int], bool]
    offset: Callable[[int, int], int]  # multiple of the block size


def _between(x: int, lo: int, hi: int) -> bool:
    return lo <= x <= hi


def even_r_families(r: int) -> list[EdgeRuleFamily]:
    """Part-pair rules shared by the even-r constructions (minimum and maximum span)."""
    h, q4, q42 = r // 2, r // 4, (r - 2) // 4
    b = _between
    return [
        EdgeRuleFamily("F1", lambda i, j: b(i, 1, q4) and b(j, 2, h) and i + j <= h + 1,
                       lambda i, j: i + j - 3),
        EdgeRuleFamily("F2", lambda i, j: b(i, 2, h - 1) and b(j, q4 + 2, h) and i + j >= h + 2,
                       lambda i, j: i + j + h - 4),
        EdgeRuleFamily("F3", lambda i, j: b(i, 3, h) and b(j, h + 1, r - 2) and j - i <= h - 2,
                       lambda i, j: h + j - i - 1),
        EdgeRuleFamily("F4", lambda i, j: b(i, 1, h) and b(j, h + 1, r) and j - i >= h,
                       lambda i, j: j - i - 1),
        EdgeRuleFamily("F5", lambda i, j: b(i, 2, 1 + q42) and b(j, h + 1, h + q42) and j - i == h - 1,
                       lambda i, j: 2 * i - 3),
        EdgeRuleFamily("F6", lambda i, j: b(i, q42 + 2, h) and b(j, h + 1 + q42, r - 1) and j - i == h - 1,
                       lambda i, j: i + j - 3),
        EdgeRuleFamily("F7", lambda i, j: b(i, h + 1, h + q4 - 1) and b(j, h + 2, r - 2) and i + j <= 3 * h - 1,
                       lambda i, j: i + j - r - 1),
        EdgeRuleFamily("F8", lambda i, j: b(i, h + 1, r - 1) and b(j, h + q4 + 1, r) and i + j >= 3 * h,
                       lambda i, j: i + j - h - 2),
    ]


def block_families(r: int) -> list[EdgeRuleFamily]:
    """Block-pair rules on U_1..U_{2r} for even part size (K_{2r} minus a perfect matching)."""
    h, h1 = r // 2, (r - 1) // 2
    b = _between
    return [
        EdgeRuleFamily("G1", lambda i, j: b(i, 1, h) and b(j, 2, r) and i + j <= r + 1,
                       lambda i, j: i + j - 3),
        EdgeRuleFamily("G2", lambda i, j: b(i, 2, r - 1) and b(j, h + 2, r) and i + j >= r + 2,
                       lambda i, j: i + j + r - 5),
        EdgeRuleFamily("G3", lambda i, j: b(i, 3, r) and b(j, r + 1, 2 * r - 2) and j - i <= r - 2,
                       lambda i, j: r + j - i - 2),
        EdgeRuleFamily("G4", lambda i, j: b(i, 1, r - 1) and b(j, r + 2, 2 * r) and j - i >= r + 1,
                       lambda i, j: j - i - 2),
        EdgeRuleFamily("G5", lambda i, j: b(i, 2, 1 + h1) and b(j, r + 1, r + h1) and j - i == r - 1,
                       lambda i, j: 2 * i - 3),
        EdgeRuleFamily("G6", lambda i, j: b(i, h1 + 2, r) and b(j, r + 1 + h1, 2 * r - 1) and j - i == r - 1,
                       lambda i, j: i + j - 4),
        EdgeRuleFamily("G7", lambda i, j: b(i, r + 1, r + h - 1) and b(j, r + 2, 2 * r - 2) and i + j <= 3 * r - 1,
                       lambda i, j: i + j - 2 * r - 1),
        EdgeRuleFamily("G8", lambda i, j: b(i, r + 1, 2 * r - 1) and b(j, r + h + 1, 2 * r) and i + j >= 3 * r,
                       lambda i, j: i + j - r - 3),
    ]


def family_assignment(families: list[EdgeRuleFamily], pairs) -> dict[tuple[int, int], list[str]]:
    """Names of the families covering each (i, j) pair; a partition gives one name per pair."""
    return {(i, j): [f.name for f in families if f.covers(i, j)] for i, j in pairs}


def _unique_family(families: list[EdgeRuleFamily], i: int, j: int) -> EdgeRuleFamily:
    hits = [f for f in families if f.covers(i, j)]
    if len(hits) != 1:
        raise AssertionError(f"pair ({i}, {j}) matched {len(hits)} edge rules")
    return hits[0]


def _cyclic_block(n: int, p: int, q: int) -> int:
    """Within-block color in [2, n+1]: a shifted Latin square."""
    if p + q != n + 1:
        return 1 + (p + q - 1) % n
    return n + 1


def _assign_parts(r: int, rules: list[tuple[range, Callable[[int], int]]]) -> dict[int, Callable[[int], int]]:
    """Map each part to its vertex-color function; overlapping rules must agree."""
    out: dict[int, Callable[[int], int]] = {}
    for parts, fn in rules:
        for part in parts:
            if part in out and [out[part](j) for j in (1, 2)] != [fn(j) for j in (1, 2)]:
                raise AssertionError(f"part {part} colored by two different rules")
            out[part] = fn
    if sorted(out) != list(range(1, r + 1)):
        raise AssertionError("vertex-color rules do not cover every part")
    return out


def theorem10_coloring(r: int, n: int) -> TotalColoring:
    """Interval total ((3/2)r - 2)n + 2 coloring of K_{n,...,n}, r even, n odd.

    r = 2 is the K_{n,n} base coloring (any n).
    """
    if r == 2:
        return knn_base_coloring(n)
    if r < 2 or r % 2 or n < 1 or n % 2 == 0:
        raise UnsupportedParameters("needs r = 2, or r even with n odd")
    h = r // 2
    t = (3 * h - 2) * n + 2
    part_color = _assign_parts(r, [
        (range(1, 2), lambda j: 1),
        (range(2, 3), lambda j: (r - 1) * n + 2),
        *[(range(i + 1, i + 2), lambda j, i=i: (i - 1) * n + 1) for i in range(2, h)],
        *[(range(h + i - 1, h + i), lambda j, i=i: (r + i - 2) * n + 2) for i in range(2, h)],
        (range(r - 1, r), lambda j: (h - 1) * n + 1),
        (range(r, r + 1), lambda j: (3 * h - 2) * n + 2),
    ])
    return _multipartite_coloring(r, n, t, part_color, even_r_families(r),
                                  lambda p, q: _cyclic_block(n, p, q))


def theorem11_case1_coloring(r: int, n: int) -> TotalColoring:
    """Interval total ((3/2)r - 1)n + 1 coloring of K_{n,...,n} for even r."""
    if r < 2 or r % 2:
        raise UnsupportedParameters("case 1 needs even r >= 2")
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    h = r // 2
    t = (3 * h - 1) * n + 1
    part_color = _assign_parts(r, [
        (range(1, 2), lambda j: j),
        (range(2, 3), lambda j: (r - 1) * n + 1 + j),
        *[(range(i + 1, i + 2), lambda j, i=i: (i - 1) * n + j) for i in range(2, h)],
        *[(range(h + i - 1, h + i), lambda j, i=i: (r + i - 2) * n + 1 + j) for i in range(2, h)],
        (range(r - 1, r), lambda j: (h - 1) * n + j),
        (range(r, r + 1), lambda j: (3 * h - 2) * n + 1 + j),
    ])
    return _multipartite_coloring(r, n, t, part_color, even_r_families(r), lambda p, q: p + q)


def _multipartite_coloring(r, n, t, part_color, families, within) -> TotalColoring:
    g = complete_balanced_multipartite(r, n)
    vc = [part_color[lab.part](lab.pos) for lab in g.labels]
    ec = {}
    for u, v in g.edges:
        a, b = g.labels[u], g.labels[v]  # u < v in part-major order, so a.part < b.part
        fam = _unique_family(families, a.part, b.part)
        ec[(u, v)] = fam.offset(a.part, b.part) * n + within(a.pos, b.pos)
    return TotalColoring(t, tuple(vc), ec)


def block_of(r: int, m: int, part: int, pos: int) -> tuple[int, int]:
    """Block view of vertex (part, pos) for part size 2m: U_part holds positions 1..m."""
    return (part, pos) if pos <= m else (part + r, pos - m)


def block_vertex(r: int, m: int, block: int, j: int) -> int:
    """Vertex index of u_j^(block) inside complete_balanced_multipartite(r, 2m)."""
    if block <= r:
        return multipartite_index(2 * m, block, j)
    return multipartite_index(2 * m, block - r, m + j)


def theorem11_case2_coloring(r: int, n: int) -> TotalColoring:
    """Interval total ((3/2)r - 1)n + 1 coloring of K_{n,...,n} for even n.

    Built on the block view: part i is U_i together with U_{r+i}, each of
    size m = n/2, so blocks U_i and U_{r+i} are never joined.
    """
    if n < 2 or n % 2:
        raise UnsupportedParameters("case 2 needs even n")
    if r < 2:
        raise InvalidArgument("r must be >= 2")
    m = n // 2
    t = (3 * r - 2) * m + 1
    block_color = _assign_parts(2 * r, [
        (range(1, 2), lambda j: j),
        (range(2, 3), lambda j: (2 * r - 2) * m + 1 + j),
        *[(range(i + 1, i + 2), lambda j, i=i: (i - 1) * m + j) for i in range(2, r)],
        *[(range(r + i - 1, r + i), lambda j, i=i: (2 * r + i - 3) * m + 1 + j) for i in range(2, r)],
        (range(2 * r - 1, 2 * r), lambda j: (r - 1) * m + j),
        (range(2 * r, 2 * r + 1), lambda j: (3 * r - 3) * m + 1 + j),
    ])
    families = block_families(r)
    g = complete_balanced_multipartite(r, n)
    blocks = [block_of(r, m, lab.part, lab.pos) for lab in g.labels]
    vc = [block_color[bk](j) for bk, j in blocks]
    ec = {}
    for u, v in g.edges:
        (bi, p), (bj, q) = sorted((blocks[u], blocks[v]))
        fam = _unique_family(families, bi, bj)
        ec[(u, v)] = fam.offset(bi, bj) * m + p + q
    return TotalColoring(t, tuple(vc), ec)


def theorem11_coloring(r: int, n: int) -> TotalColoring:
    """Dispatch to case 1 (r even) or case 2 (n even); r*n must be even."""
    if r % 2 == 0:
        return theorem11_case1_coloring(r, n)
    if n % 2 == 0:
        return theorem11_case2_coloring(r, n)
    raise UnsupportedParameters("needs r*n even")


# -- hypercubes -------------------------------------------------------------------


def theorem12_lift(n: int, phi: TotalColoring) -> EdgeColoring:
    """Edge coloring of Q_{n+1} from an interval total coloring of Q_n.

    Edges inside either half copy phi's edge colors; the cross edge
    (0, a)(1, a) takes phi's color of vertex a.
    """
    q = hypercube(n)
    report = verify_interval_total(q, phi)
    if not report.ok:
        raise InvalidArgument(f"phi is not an interval total coloring of Q_{n}: {report.violation}")
    big = hypercube(n + 1)
    half = 1 << n
    ec = {}
    for a, b in big.edges:
        if b - a == half and a < half:
            ec[(a, b)] = phi.vertex_colors[a]
        else:
            ec[(a, b)] = phi.edge(a % half, b % half)
    return EdgeColoring(phi.t, ec)


def hypercube_min_span(n: int) -> int:
    return n + 2 if n <= 2 else n + 1


def hypercube_max_span(n: int) -> int:
    return (n + 1) * (n + 2) // 2


def hypercube_total_coloring(n: int, t: int, time_budget: float | None = None) -> TotalColoring:
    """An interval total t-coloring of Q_n, found by exact search.

    No explicit construction is used; for n >= 4 this is best effort under
    ``time_budget`` seconds.
    """
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if not hypercube_min_span(n) <= t <= hypercube_max_span(n):
        raise InvalidArgument(
            f"Q_{n} has interval total colorings only for "
            f"{hypercube_min_span(n)} <= t <= {hypercube_max_span(n)}"
        )
    return _hypercube_search(n, t, time_budget)


@lru_cache(maxsize=None)
def _hypercube_search(n: int, t: int, time_budget: float | None) -> TotalColoring:
    from .search import SearchConfig, decide_interval_total

    out = decide_interval_total(hypercube(n), t, SearchConfig(time_budget=time_budget))
    if out.status == "sat":
        return out.witness
    if out.status == "timeout":
        raise ResourceExhausted(f"search for Q_{n} at t={t} ran out of budget")
    raise AssertionError(f"search refuted Q_{n} at t={t}, contradicting the known spectrum")


# -- registry used by the CLI ------------------------------------------------------


def _qlift(n: int, time_budget: float | None = None) -> EdgeColoring:
    return theorem12_lift(n, hypercube_total_coloring(n, hypercube_max_span(n), time_budget))


CONSTRUCTIONS: dict[str, tuple[tuple[str, ...], Callable, Callable[..., Graph]]] = {
    "t8": (("n", "l"), theorem8_coloring, lambda n, l: complete_bipartite(n, n * l)),
    "knn": (("n",), knn_base_coloring, lambda n: complete_bipartite(n, n)),
    "t10": (("r", "n"), theorem10_coloring, complete_balanced_multipartite),
    "t11c1": (("r", "n"), theorem11_case1_coloring, complete_balanced_multipartite),
    "t11c2": (("r", "n"), theorem11_case2_coloring, complete_balanced_multipartite),
    "qlift": (("n",), _qlift, lambda n: hypercube(n + 1)),
    "qn": (("n", "t"), hypercube_total_coloring, lambda n, t: hypercube(n)),
}
