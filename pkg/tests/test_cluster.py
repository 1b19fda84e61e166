from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from lllcert import (EXACT, FLOAT, Graph, IndependencePolynomial, WeightVector, breve_q_table,
                     check_cluster, cluster_bound, complete_graph, cycle_graph, empty_graph,
                     find_y, independence_polynomial, random_tree, verify_cluster_vs_shearer,
                     y_table)
from lllcert.cluster import EXACT_MARGIN
from lllcert.graph import full_set, members

import oracles

K1 = complete_graph(1)
K2 = complete_graph(2)


@st.composite
def weighted(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    y = draw(st.lists(st.fractions(F(1, 10), 3, max_denominator=10), min_size=n, max_size=n))
    return Graph.from_edges(n, edges), y


class TestIndependencePolynomial:
    def test_singleton(self):
        G = cycle_graph(5)
        for i in range(5):
            assert independence_polynomial(G, 1 << i, [F(i + 1, 3)] * 5) == 1 + F(i + 1, 3)

    def test_k2(self):
        assert oracles.indep_poly(K2, [1, 1], 0b11) == 3
        assert independence_polynomial(K2, 0b11, [1, 1]) == 3

    def test_edgeless_product(self):
        assert independence_polynomial(empty_graph(2), 0b11, [1, 1]) == 4

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            independence_polynomial(K2, 0b11, [1, 0])
        with pytest.raises(ValueError):
            WeightVector([F(-1)])

    def test_memo_is_per_weight_vector(self):
        ev = IndependencePolynomial(cycle_graph(6), [F(1, 2)] * 6)
        ev(full_set(6))
        assert len(ev) > 1
        # C6 with y = 1/2: Lucas-style count, checked against brute force
        assert ev(full_set(6)) == oracles.indep_poly(cycle_graph(6), [F(1, 2)] * 6, 63)

    def test_table_and_recursion_agree(self):
        G = random_tree(9, seed=4)
        y = [F(k, 7) for k in range(1, 10)]
        t = y_table(G, y)
        ev = IndependencePolynomial(G, y)
        assert all(t[S] == ev(S) for S in range(1 << 9))


class TestCheckCluster:
    def test_k2_holds(self):
        rep = check_cluster(K2, [F(1, 5)] * 2, [F(1, 2)] * 2)
        assert rep.holds and rep.bound == F(1, 2)
        assert rep.slack == [F(1, 20)] * 2

    def test_k2_fails(self):
        rep = check_cluster(K2, [F(1, 2)] * 2, [1, 1])
        assert not rep.holds and rep.bound is None
        assert rep.slack == [F(1, 3) - F(1, 2)] * 2

    def test_single_vertex_boundary(self):
        rep = check_cluster(K1, [F(1, 2)], [1])
        assert rep.holds and rep.bound == F(1, 2) and rep.slack == [0]

    def test_float_mode(self):
        rep = check_cluster(K1, [0.5], [1.0 - 1e-13], FLOAT)
        assert rep.holds and isinstance(rep.bound, float)

    def test_json(self):
        doc = check_cluster(K2, [F(1, 5)] * 2, [F(1, 2)] * 2).to_json()
        assert doc["bound"] == "1/2" and doc["slack"] == ["1/20", "1/20"]


def test_cluster_bound():
    assert cluster_bound(K2, [1, 1]) == F(1, 3)
    assert cluster_bound(K1, [1]) == F(1, 2)
    assert cluster_bound(empty_graph(3), [1, 1, 1]) == F(1, 8)


class TestFindY:
    def test_k2_certified(self):
        cert = find_y(K2, [F(1, 5)] * 2)
        assert cert.converged and cert.validation == "exact"
        assert check_cluster(K2, [F(1, 5)] * 2, cert.y).holds
        # least fixed point of y = (1/5)(1 + 2y) is y = 1/3
        assert float(cert.y[0]) == pytest.approx(1 / 3, rel=10 * EXACT_MARGIN)

    def test_k2_not_certified(self):
        cert = find_y(K2, ["0.6", "0.6"])
        assert not cert.converged and "cap" in cert.reason
        assert cert.to_json()["status"] == "no certificate found"

    def test_single_vertex_fixed_point(self):
        cert = find_y(K1, [F(1, 2)])
        assert cert.converged
        y = float(cert.y[0])
        assert y == pytest.approx(1.0, rel=1e-5)
        assert y / (1 + y) >= 0.5 - 1e-10

    def test_probability_one(self):
        cert = find_y(K2, [F(1), F(0)])
        assert not cert.converged and "p_i = 1" in cert.reason

    def test_zero_probabilities_are_inert(self):
        G = cycle_graph(4)
        cert = find_y(G, [F(0), F(1, 5), F(0), F(1, 5)])
        assert cert.converged
        assert check_cluster(G, [F(0), F(1, 5), F(0), F(1, 5)], cert.y).holds

    def test_max_iter(self):
        cert = find_y(K2, [F(1, 5)] * 2, max_iter=2)
        assert not cert.converged and cert.reason == "max_iter reached"

    @pytest.mark.parametrize("kw", [{"tol": 0}, {"tol": -1}, {"cap": 1}, {"max_iter": 0}])
    def test_bad_options(self, kw):
        with pytest.raises(ValueError):
            find_y(K2, [F(1, 5)] * 2, **kw)

    def test_iterates_monotone(self):
        G = cycle_graph(7)
        cert = find_y(G, [F(1, 6)] * 7, keep_trace=True)
        assert cert.converged and cert.monotone
        for prev, cur in zip(cert.trace, cert.trace[1:]):
            assert all(c >= a * (1 - 1e-13) for a, c in zip(prev, cur))

    def test_certified_implies_holds(self):
        r = oracles.rng(9)
        for _ in range(25):
            G, p = oracles.random_instance(r, 9)
            cert = find_y(G, p)
            if cert.converged:
                assert check_cluster(G, p, cert.y, EXACT if cert.validation == "exact" else FLOAT).holds


class TestClusterVsShearer:
    def test_k2(self):
        assert verify_cluster_vs_shearer(K2, [F(1, 5)] * 2, [F(1, 2)] * 2)
        assert breve_q_table(K2, [F(1, 5)] * 2)[3] == F(3, 5) >= cluster_bound(K2, [F(1, 2)] * 2)

    def test_single_vertex_equality(self):
        assert verify_cluster_vs_shearer(K1, [F(1, 2)], [1])
        assert breve_q_table(K1, [F(1, 2)])[1] == F(1, 2) == cluster_bound(K1, [1])

    def test_random_trees(self):
        for seed in range(5):
            G = random_tree(8, seed=seed)
            p = [F(1, 8)] * 8
            cert = find_y(G, p)
            assert cert.converged and cert.validation == "exact"
            assert verify_cluster_vs_shearer(G, p, cert.y)

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_cluster_vs_shearer(K2, [F(1, 2)] * 2, [1, 1])


@settings(max_examples=60, deadline=None)
@given(weighted())
def test_y_identity_every_pivot(inst):
    G, y = inst
    t = y_table(G, y)
    assert t[(1 << G.n) - 1] == oracles.indep_poly(G, y, (1 << G.n) - 1)
    for A in range(1, 1 << G.n):
        for a in members(A):
            assert t[A] == t[A & ~(1 << a)] + y[a] * t[A & ~G.closed(a)]


@settings(max_examples=40, deadline=None)
@given(weighted(max_n=7))
def test_log_subadditivity(inst):
    G, y = inst
    t = y_table(G, y)
    n = G.n
    # every ordered pair of disjoint sets: assign each vertex to A, B or neither
    for labels in product(range(3), repeat=n):
        A = sum(1 << i for i, l in enumerate(labels) if l == 1)
        B = sum(1 << i for i, l in enumerate(labels) if l == 2)
        assert t[A | B] <= t[A] * t[B]
        if all(G.adj[i] & B == 0 for i in members(A)):
            assert t[A | B] == t[A] * t[B]


@settings(max_examples=40, deadline=None)
@given(weighted())
def test_telescoping_y_ratios(inst):
    G, y = inst
    t = y_table(G, y)
    n = G.n
    full = full_set(n)
    prod = F(1)
    for i in range(1, n + 1):
        first_i, first_prev = (1 << i) - 1, (1 << (i - 1)) - 1
        prod *= t[full ^ first_i] / t[full ^ first_prev]
    assert prod == 1 / t[full]


def test_float_only_downgrade(monkeypatch):
    import lllcert.cluster as cl
    # without inflation the iterate approaches the fixed point from below, so
    # its exact slack is slightly negative and only the float check passes
    monkeypatch.setattr(cl, "EXACT_MARGIN", 0.0)
    G = cycle_graph(5)
    cert = cl.find_y(G, [F(1, 6)] * 5)
    assert cert.converged and cert.validation == "float-only"
    assert all(isinstance(v, float) for v in cert.y)
    assert check_cluster(G, [F(1, 6)] * 5, cert.y, FLOAT).holds
    assert not check_cluster(G, [F(1, 6)] * 5, cert.y, EXACT).holds
