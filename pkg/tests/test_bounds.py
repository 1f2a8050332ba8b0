import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervaltotal.bounds import (
    FAMILIES,
    chi_tt_balanced_multipartite,
    chi_tt_complete,
    chi_tt_complete_bipartite,
    chi_tt_hypercube,
    span_table,
    theorem9_certificate,
)
from intervaltotal.errors import InvalidArgument


@pytest.mark.parametrize("n, chi", [(3, 3), (4, 5), (1, 1)])
def test_chi_complete(n, chi):
    assert chi_tt_complete(n) == chi


@pytest.mark.parametrize("m, n, chi", [(2, 4, 5), (3, 3, 5), (1, 1, 3)])
def test_chi_complete_bipartite(m, n, chi):
    assert chi_tt_complete_bipartite(m, n) == chi


@pytest.mark.parametrize("r, n, chi", [(2, 3, 5), (4, 3, 11), (3, 2, 5)])
def test_chi_balanced_multipartite(r, n, chi):
    assert chi_tt_balanced_multipartite(r, n) == chi


def test_chi_hypercube_small():
    # K_2 and C_4 need Delta+2; larger hypercubes Delta+1
    assert [chi_tt_hypercube(n) for n in (1, 2, 3, 4)] == [3, 4, 4, 5]


@given(st.integers(1, 200))
def test_multipartite_with_two_parts_is_bipartite(n):
    assert chi_tt_balanced_multipartite(2, n) == chi_tt_complete_bipartite(n, n)


@given(st.integers(2, 200))
def test_multipartite_with_singleton_parts_is_complete(r):
    assert chi_tt_balanced_multipartite(r, 1) == chi_tt_complete(r)


def test_span_table_examples():
    q3 = span_table("qn", 3)
    assert (q3.w_tau.exact, q3.W_tau.exact) == (4, 10)
    k22 = span_table("kmn", 2, 2)
    assert (k22.w_tau.exact, k22.W_tau.exact) == (4, 6)
    assert span_table("knn", 2).to_dict()["w_tau"] == 4
    m43 = span_table("multipartite", 4, 3)
    assert m43.w_tau.upper <= 14
    assert m43.W_tau.lower >= 13


def test_complete_graph_spans():
    for n, w, W in [(3, 3, 5), (4, 6, 7), (5, 5, 9), (6, 9, 11)]:
        res = span_table("kn", n)
        assert (res.w_tau.exact, res.W_tau.exact) == (w, W)


def test_bounds_carry_provenance():
    res = span_table("multipartite", 4, 3)
    assert res.w_tau.upper_from == "construction t10"
    assert res.W_tau.lower_from == "construction t11"
    assert span_table("qn", 3).W_tau.upper_from == "hypercube lift to interval edge coloring"
    gen = span_table("kmn", 2, 3)
    assert gen.w_tau.upper_from.startswith("m+n+2-gcd")


def test_knnl_uses_construction_exactness():
    res = span_table("knnl", 3, 2)
    assert res.w_tau.exact == res.chi_tt == 7


def test_certificate_instance_in_table():
    res = span_table("kmn", 5, 8)
    assert res.chi_tt == 9
    assert res.w_tau.lower == 10 and res.w_tau.lower_from == "counting certificate"


def test_to_dict_is_json():
    d = json.loads(json.dumps(span_table("qn", 3).to_dict()))
    assert d["w_tau"] == 4 and d["W_tau"] == 10
    assert d["W_tau_bounds"]["upper"] == 10


MATRIX = (
    [("kn", (n,)) for n in range(1, 9)]
    + [("kmn", (m, n)) for m in range(1, 6) for n in range(1, 9)]
    + [("knn", (n,)) for n in range(1, 7)]
    + [("knnl", (n, l)) for n in range(1, 5) for l in range(1, 5)]
    + [("multipartite", (r, n)) for r in range(2, 9) for n in range(1, 6)]
    + [("qn", (n,)) for n in range(1, 8)]
)


@pytest.mark.parametrize("family, params", MATRIX)
def test_span_chain(family, params):
    res = span_table(family, *params)
    total = res.n_vertices + res.n_edges
    w, W = res.w_tau, res.W_tau
    assert res.chi_tt <= w.lower
    assert w.upper is None or w.lower <= w.upper
    assert W.lower is None or W.upper is None or W.lower <= W.upper
    assert w.lower <= (W.upper if W.upper is not None else total) <= total
    if w.upper is not None and W.lower is not None:
        assert w.upper <= total and W.lower >= w.lower


@pytest.mark.parametrize("family, params", [("zz", (1,)), ("kn", (0,)), ("kn", (1, 2)), ("kmn", (3,))])
def test_span_table_errors(family, params):
    with pytest.raises(InvalidArgument):
        span_table(family, *params)


def test_families_listed():
    assert set(FAMILIES) == {"kn", "kmn", "knn", "knnl", "multipartite", "qn"}


def test_certificate_l1():
    c = theorem9_certificate(1)
    assert (c.n, c.parts) == (4, (5, 8))
    assert (c.vertices_needed, c.vertices_available) == (9, 8)
    assert c.inequality_fails and c.gap >= 1
    assert c.chi_tt == 2 * c.n + 1 == 9


def test_certificate_l2():
    c = theorem9_certificate(2)
    assert (c.n, c.parts) == (5, (7, 10))
    assert (c.vertices_needed, c.vertices_available) == (12, 10)
    assert c.inequality_fails and c.gap >= 2


@given(st.integers(1, 10_000))
def test_certificate_general(l):
    c = theorem9_certificate(l)
    n = l + 3
    assert c.chi_tt == 2 * n + 1
    assert c.claimed_lower_bound == 2 * n + 1 + l
    assert c.forced_colors[1] - c.forced_colors[0] + 1 == l + 2
    assert (l + 2) * (n - l) == 3 * l + 6 > 2 * l + 6 == 2 * n
    assert c.inequality_fails and c.gap == l


def test_certificate_rejects_l0():
    with pytest.raises(InvalidArgument):
        theorem9_certificate(0)
