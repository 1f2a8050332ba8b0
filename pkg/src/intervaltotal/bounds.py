"""Closed-form total chromatic numbers, span bounds, and the K_{n+l,2n} gap certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InvalidArgument

FAMILIES = ("kn", "kmn", "knn", "knnl", "multipartite", "qn")


def chi_tt_complete(n: int) -> int:
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    return n if n % 2 else n + 1


def chi_tt_complete_bipartite(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise InvalidArgument("part sizes must be >= 1")
    return max(m, n) + 1 if m != n else n + 2


def chi_tt_balanced_multipartite(r: int, n: int) -> int:
    if r < 2 or n < 1:
        raise InvalidArgument("need r >= 2 and n >= 1")
    if r == 2 or (r % 2 == 0 and n % 2 == 1):
        return (r - 1) * n + 2
    return (r - 1) * n + 1


def chi_tt_hypercube(n: int) -> int:
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    return n + 2 if n <= 2 else n + 1


@dataclass(frozen=True)
class Bound:
    lower: int | None = None
    upper: int | None = None
    lower_from: str = ""
    upper_from: str = ""

    @property
    def exact(self) -> int | None:
        if self.lower is not None and self.lower == self.upper:
            return self.lower
        return None

    def contains(self, t: int) -> bool:
        return (self.lower is None or self.lower <= t) and (self.upper is None or t <= self.upper)

    def tighten(self, lower: int | None = None, upper: int | None = None, source: str = "") -> Bound:
        lo, lo_from, hi, hi_from = self.lower, self.lower_from, self.upper, self.upper_from
        if lower is not None and (lo is None or lower > lo):
            lo, lo_from = lower, source
        if upper is not None and (hi is None or upper < hi):
            hi, hi_from = upper, source
        return Bound(lo, hi, lo_from, hi_from)

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper,
                "lower_from": self.lower_from, "upper_from": self.upper_from}


@dataclass(frozen=True)
class SpanResult:
    """Known or computed bounds on the minimum span w_tau and maximum span W_tau."""

    family: str
    params: tuple[int, ...]
    n_vertices: int
    n_edges: int
    chi_tt: int | None
    w_tau: Bound
    W_tau: Bound
    complete: bool = True
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "chi_tt": self.chi_tt,
            "w_tau": self.w_tau.exact,
            "W_tau": self.W_tau.exact,
            "w_tau_bounds": self.w_tau.to_dict(),
            "W_tau_bounds": self.W_tau.to_dict(),
            "complete": self.complete,
            "notes": list(self.notes),
        }


# provenance labels
CHI = "total-chromatic-number formula"
KNOWN = "known exact span"
TRIVIAL_CHI = "chi'' <= w_tau"
TRIVIAL_TOTAL = "|V|+|E|"
TRIVIAL_ORDER = "w_tau <= W_tau"
GCD = "m+n+2-gcd(m,n) (cited prior work)"
T8 = "construction t8 + chi''"
T10 = "construction t10"
T11 = "construction t11"
CERT = "counting certificate"
LIFT = "hypercube lift to interval edge coloring"
REGULAR = "regular graph with chi'' = Delta+1"


def _finish(family, params, nv, ne, chi, w: Bound, W: Bound, notes=()) -> SpanResult:
    w = w.tighten(lower=chi, source=TRIVIAL_CHI).tighten(upper=nv + ne, source=TRIVIAL_TOTAL)
    W = W.tighten(upper=nv + ne, source=TRIVIAL_TOTAL)
    W = W.tighten(lower=w.lower, source=TRIVIAL_ORDER)
    w = w.tighten(upper=W.upper, source=TRIVIAL_ORDER)
    return SpanResult(family, tuple(params), nv, ne, chi, w, W, True, tuple(notes))


def _complete(n: int) -> SpanResult:
    chi = chi_tt_complete(n)
    w_exact = n if n % 2 else 3 * n // 2
    W_exact = 2 * n - 1
    return _finish("kn", (n,), n, n * (n - 1) // 2, chi,
                   Bound(w_exact, w_exact, KNOWN, KNOWN), Bound(W_exact, W_exact, KNOWN, KNOWN))


def _bipartite(m: int, n: int, family: str = "kmn", params=None) -> SpanResult:
    chi = chi_tt_complete_bipartite(m, n)
    W_exact = m + n + 1 if m == n == 1 else m + n + 2
    w = Bound().tighten(upper=m + n + 2 - gcd(m, n), source=GCD)
    notes = []
    if m == n:
        w = Bound(n + 2, n + 2, KNOWN, KNOWN)
    else:
        small, big = min(m, n), max(m, n)
        if big % small == 0:
            w = Bound(chi, chi, T8, T8)
        # K_{k+l, 2k} with k = l + 3
        l = small - big // 2 if big % 2 == 0 else 0
        if l >= 1 and big // 2 == l + 3:
            cert = theorem9_certificate(l)
            w = w.tighten(lower=cert.claimed_lower_bound, source=CERT)
            notes.append(f"w_tau - chi'' >= {l}")
    return _finish(family, params or (m, n), m + n, m * n, chi, w, Bound(W_exact, W_exact, KNOWN, KNOWN), notes)


def _multipartite(r: int, n: int) -> SpanResult:
    if r == 2:
        return _bipartite(n, n, "multipartite", (r, n))
    if n == 1:
        res = _complete(r)
        return SpanResult("multipartite", (r, n), res.n_vertices, res.n_edges, res.chi_tt,
                          res.w_tau, res.W_tau, True, ("K_{1,...,1} = K_r",))
    chi = chi_tt_balanced_multipartite(r, n)
    w, W = Bound(), Bound()
    if r % 2 == 0 and n % 2 == 1:
        w = w.tighten(upper=(3 * r // 2 - 2) * n + 2, source=T10)
    else:
        # (r-1)n-regular with chi'' = Delta + 1: any optimal total coloring is interval
        w = Bound(chi, chi, REGULAR, REGULAR)
    if (r * n) % 2 == 0:
        W = W.tighten(lower=(3 * r * n - 2 * n) // 2 + 1, source=T11)
    nv = r * n
    return _finish("multipartite", (r, n), nv, r * (r - 1) * n * n // 2, chi, w, W)


def _hypercube(n: int) -> SpanResult:
    w_exact = chi_tt_hypercube(n)
    W_exact = (n + 1) * (n + 2) // 2
    return _finish("qn", (n,), 1 << n, n << (n - 1), w_exact,
                   Bound(w_exact, w_exact, KNOWN, KNOWN), Bound(W_exact, W_exact, KNOWN, LIFT))


def span_table(family: str, *params: int) -> SpanResult:
    """Best bounds on w_tau and W_tau for a generated family, with their sources.

    Families and parameters: ``kn(n)``, ``kmn(m, n)``, ``knn(n)``,
    ``knnl(n, l)``, ``multipartite(r, n)``, ``qn(n)``.
    """
    try:
        if family == "kn":
            (n,) = params
            if n < 1:
                raise InvalidArgument("n must be >= 1")
            return _complete(n)
        if family == "kmn":
            m, n = params
            if m < 1 or n < 1:
                raise InvalidArgument("part sizes must be >= 1")
            return _bipartite(m, n)
        if family == "knn":
            (n,) = params
            if n < 1:
                raise InvalidArgument("n must be >= 1")
            return _bipartite(n, n, "knn", (n,))
        if family == "knnl":
            n, l = params
            if n < 1 or l < 1:
                raise InvalidArgument("need n, l >= 1")
            return _bipartite(n, n * l, "knnl", (n, l))
        if family == "multipartite":
            r, n = params
            if r < 2 or n < 1:
                raise InvalidArgument("need r >= 2 and n >= 1")
            return _multipartite(r, n)
        if family == "qn":
            (n,) = params
            if n < 1:
                raise InvalidArgument("n must be >= 1")
            return _hypercube(n)
    except ValueError as exc:
        if isinstance(exc, InvalidArgument):
            raise
        raise InvalidArgument(f"wrong number of parameters for {family}") from None
    raise InvalidArgument(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class GapCertificate:
    """Pigeonhole refutation of interval total t-colorings of K_{n+l,2n} for t <= 2n+l."""

    l: int
    n: int
    parts: tuple[int, int]
    chi_tt: int
    claimed_lower_bound: int
    forced_colors: tuple[int, int]
    vertices_needed: int
    vertices_available: int

    @property
    def inequality_fails(self) -> bool:
        return self.vertices_needed > self.vertices_available

    @property
    def gap(self) -> int:
        return self.claimed_lower_bound - self.chi_tt


def theorem9_certificate(l: int) -> GapCertificate:
    """Certificate that w_tau(K_{n+l,2n}) >= chi''(K_{n+l,2n}) + l with n = l + 3.

    In any interval total t-coloring with t <= 2n + l, each of the l + 2
    colors of [n, n+l+1] lies in every vertex palette, and each needs
    n - l vertices of the 2n-side colored with it; (l+2)(n-l) exceeds 2n.
    """
    if l < 1:
        raise InvalidArgument("l must be >= 1")
    n = l + 3
    return GapCertificate(
        l=l,
        n=n,
        parts=(n + l, 2 * n),
        chi_tt=chi_tt_complete_bipartite(n + l, 2 * n),
        claimed_lower_bound=2 * n + 1 + l,
        forced_colors=(n, n + l + 1),
        vertices_needed=(l + 2) * (n - l),
        vertices_available=2 * n,
    )
