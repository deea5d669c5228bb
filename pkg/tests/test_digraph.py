import pytest
from hypothesis import given, strategies as st

from lfcheck.digraph import (OracleLimitError, OracleLimits, UndirectedGraph, Walk,
                             WeightedDigraph, concat_walks, digraph_of_matrix,
                             enumerate_simple_cycles, enumerate_walks, is_acyclic, is_walk,
                             make_walk, reverse_walk, underlying_graph, walk_weight)
from lfcheck.exactring import Poly
from lfcheck.genlab import permutation_cycle
from lfcheck.matrix import ExactMatrix, identity, mat_pow, zeros

from conftest import int_matrices

P3 = permutation_cycle(3)
PATH3 = ExactMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
K3 = ExactMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_digraph_of_matrix():
    assert digraph_of_matrix(zeros(3)).edges == {}
    assert digraph_of_matrix(identity(3)).edges == {(1, 1): 1, (2, 2): 1, (3, 3): 1}
    assert digraph_of_matrix(P3).edges == {(1, 2): 1, (2, 3): 1, (3, 1): 1}


def test_zero_weight_edge_rejected():
    with pytest.raises(ValueError):
        WeightedDigraph(2, {(1, 2): 0})


def test_walk_weights():
    a, b = Poly.var("a"), Poly.var("b")
    g = digraph_of_matrix(ExactMatrix.from_rows([[0, a, 0], [b, 0, 0], [0, 0, 0]]))
    assert walk_weight(g, Walk((1,))) == 1
    assert walk_weight(g, (1, 2, 1)) == a * b
    p, q = Poly.var("p"), Poly.var("q")
    tri = digraph_of_matrix(ExactMatrix.from_rows([[1, p, 0], [p, 1, q], [0, q, 1]]))
    assert walk_weight(tri, (1, 2, 3, 2, 1)) == p * q * q * p


def test_walk_weight_rejects_non_edge():
    with pytest.raises(ValueError):
        walk_weight(digraph_of_matrix(P3), (2, 1))


def test_reverse_walk():
    g = digraph_of_matrix(P3)
    rev = reverse_walk(make_walk(g, (1, 2, 3)))
    assert rev == (3, 2, 1)
    assert not is_walk(g, rev)
    assert reverse_walk(Walk((2,))) == (2,)


@given(int_matrices(max_n=4), st.data())
def test_symmetric_pattern_reverse_is_walk(a, data):
    sym = ExactMatrix.from_function(a.n, lambda i, j: a.at(min(i, j), max(i, j)))
    g = digraph_of_matrix(sym)
    u = data.draw(st.integers(1, a.n))
    m = data.draw(st.integers(0, 4))
    for w in enumerate_walks(g, u, data.draw(st.integers(1, a.n)), m):
        assert is_walk(g, reverse_walk(w))
        assert reverse_walk(reverse_walk(w)) == w.vertices


def test_concat():
    g = digraph_of_matrix(ExactMatrix.from_rows([[0, 2, 0], [3, 0, 5], [0, 0, 0]]))
    l = make_walk(g, (1, 2, 3))
    assert concat_walks(l, Walk((3,))) == l
    assert concat_walks(Walk((1, 2)), Walk((2, 3))).vertices == (1, 2, 3)
    assert walk_weight(g, concat_walks(Walk((1, 2)), Walk((2, 1)))) == 2 * 3
    with pytest.raises(ValueError):
        concat_walks(Walk((1, 2)), Walk((3, 2)))


@given(int_matrices(max_n=4), st.data())
def test_concat_weight_multiplies(a, data):
    g = digraph_of_matrix(a)
    u, v = data.draw(st.integers(1, a.n)), data.draw(st.integers(1, a.n))
    first = enumerate_walks(g, u, v, data.draw(st.integers(0, 3)))
    second = enumerate_walks(g, v, data.draw(st.integers(1, a.n)), data.draw(st.integers(0, 3)))
    for l1 in first[:3]:
        for l2 in second[:3]:
            joined = concat_walks(l1, l2)
            assert joined.length == l1.length + l2.length
            assert walk_weight(g, joined) == walk_weight(g, l1) * walk_weight(g, l2)


def test_enumerate_walks_examples():
    g = digraph_of_matrix(K3)
    assert enumerate_walks(g, 1, 1, 0) == [Walk((1,))]
    assert enumerate_walks(g, 1, 2, 0) == []
    assert [w.vertices for w in enumerate_walks(digraph_of_matrix(PATH3), 1, 3, 2)] == [(1, 2, 3)]
    assert [w.vertices for w in enumerate_walks(g, 1, 1, 3)] == [(1, 2, 3, 1), (1, 3, 2, 1)]


def test_enumerate_walks_limits():
    g = digraph_of_matrix(K3)
    with pytest.raises(OracleLimitError):
        enumerate_walks(g, 1, 1, 13)
    with pytest.raises(OracleLimitError):
        enumerate_walks(digraph_of_matrix(identity(9)), 1, 1, 1)
    with pytest.raises(OracleLimitError):
        enumerate_walks(g, 1, 1, 8, OracleLimits(max_walks=10))


@given(int_matrices(max_n=4, density=True), st.integers(0, 5))
def test_transfer_matrix_identity(a, m):
    g = digraph_of_matrix(a)
    p = mat_pow(a, m)
    for u in range(1, a.n + 1):
        for v in range(1, a.n + 1):
            assert sum((walk_weight(g, w) for w in enumerate_walks(g, u, v, m)), 0) == p.at(u, v)


def test_underlying_graph():
    assert underlying_graph(digraph_of_matrix(identity(3))).edges == frozenset()
    g = WeightedDigraph(2, {(1, 2): 1, (2, 1): 4})
    assert underlying_graph(g).edges == {(1, 2)}
    assert underlying_graph(digraph_of_matrix(P3)).edges == {(1, 2), (2, 3), (1, 3)}


def test_undirected_graph_is_simple():
    with pytest.raises(ValueError):
        UndirectedGraph(2, frozenset({(1, 1)}))
    assert UndirectedGraph(3, frozenset({(2, 1), (1, 2)})).edges == {(1, 2)}


@given(int_matrices(min_n=2, max_n=2))
def test_order_two_always_acyclic(a):
    assert is_acyclic(digraph_of_matrix(a)) == (True, None)


@pytest.mark.parametrize("n", range(1, 9))
def test_tridiagonal_acyclic(n):
    a = ExactMatrix.from_function(n, lambda i, j: 1 if abs(i - j) <= 1 else 0)
    assert is_acyclic(digraph_of_matrix(a))[0]


def test_permutation_witness():
    assert is_acyclic(digraph_of_matrix(P3)) == (False, (1, 2, 3))


def test_simple_cycle_examples():
    assert enumerate_simple_cycles(WeightedDigraph(2, {(1, 1): 1})) == [(1,)]
    assert enumerate_simple_cycles(WeightedDigraph(2, {(1, 2): 1, (2, 1): 1})) == [(1, 2)]
    cycles = enumerate_simple_cycles(digraph_of_matrix(K3))
    assert sorted(c for c in cycles if len(c) == 2) == [(1, 2), (1, 3), (2, 3)]
    assert sorted(c for c in cycles if len(c) == 3) == [(1, 2, 3), (1, 3, 2)]
    assert len(cycles) == 5


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    p = draw(st.sampled_from([0.15, 0.3, 0.5]))
    chosen = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return WeightedDigraph(n, {e: 1 for e, r in zip(pairs, chosen) if r < p})


@given(digraphs())
def test_acyclic_decision_matches_enumeration(g):
    ok, witness = is_acyclic(g)
    long_cycles = [c for c in enumerate_simple_cycles(g) if len(c) >= 3]
    assert ok == (not long_cycles)
    if not ok:
        assert len(witness) >= 3 and len(set(witness)) == len(witness)
        assert witness[0] == min(witness)
        assert is_walk(g, witness + witness[:1])
