import random

import pytest
from hypothesis import given, strategies as st

from lfcheck.digraph import digraph_of_matrix, underlying_graph
from lfcheck.exactring import Poly, Ratio
from lfcheck.genlab import (Sampler, gen_gauge_symmetric, gen_paper_family_one,
                            gen_paper_family_two, gen_rank_one_ratio, gen_symmetric,
                            permutation_cycle)
from lfcheck.homology import (Status, chain_of_cycle, is_z_basis, kn_triangle_cycles,
                              recombined_cycle_basis)
from lfcheck.hypotheses import (check_acyclic_matrix, check_certificate,
                                check_triangle_condition, cycle_ratio, search_certificate)
from lfcheck.matrix import ExactMatrix

from conftest import int_matrices

SKEW = ExactMatrix.from_rows([[1, 2, 1], [1, 1, 2], [2, 1, 1]])


@given(int_matrices(min_n=2, max_n=2))
def test_order_two_acyclic(a):
    assert check_acyclic_matrix(a).holds


@given(st.integers(1, 8), st.randoms())
def test_tridiagonal_acyclic(n, rnd):
    a = ExactMatrix.from_function(n, lambda i, j: rnd.randint(-9, 9) if abs(i - j) <= 1 else 0)
    assert check_acyclic_matrix(a).holds


def test_all_ones_not_acyclic():
    res = check_acyclic_matrix(ExactMatrix.from_function(3, lambda i, j: 1))
    assert res.status is Status.FAILS
    assert res.witness["cycle"] == [1, 2, 3, 1]


@given(int_matrices(max_n=5))
def test_symmetric_nonzero_satisfies_triangle(a):
    sym = ExactMatrix.from_function(a.n, lambda i, j: (a.at(min(i, j), max(i, j)) or 1))
    assert check_triangle_condition(sym).holds


def test_rank_one_symbolic_triangle():
    u = [Poly.var(f"u{i}") for i in range(1, 5)]
    v = [Poly.var(f"v{i}") for i in range(1, 5)]
    a = gen_rank_one_ratio(4, u, v)
    assert check_triangle_condition(a).holds
    # both sides of each condition expand to u_i u_j u_{j+1} v_i v_j v_{j+1}
    i, j = 1, 2
    assert a.at(i, j) * a.at(j, j + 1) * a.at(j + 1, i) == u[0] * u[1] * u[2] * v[0] * v[1] * v[2]


def test_triangle_zero_entry():
    a = ExactMatrix.from_rows([[1, 0, 1], [1, 1, 1], [1, 1, 1]])
    res = check_triangle_condition(a)
    assert res.status is Status.FAILS and res.witness == {"entry": [1, 2]}


def test_triangle_violation_witness():
    res = check_triangle_condition(SKEW)
    assert res.witness["pair"] == [1, 2]
    assert (res.witness["lhs"], res.witness["rhs"]) == (8, 1)


def test_cycle_ratio_examples():
    rng = random.Random(5)
    sym = gen_symmetric(4, Sampler(rng))
    assert cycle_ratio(sym, (1, 3, 2, 4)).is_one()
    r1 = gen_rank_one_ratio(4, [2, -3, 5, 7], [1, 4, -2, 3])
    for i, j, k in kn_triangle_cycles(4):
        assert cycle_ratio(r1, (i, j, k)) == Ratio(1, 1)
    r = cycle_ratio(SKEW, (1, 2, 3))
    assert (r.num, r.den) == (8, 1)
    assert not r.is_one()


def test_cycle_ratio_missing_edge():
    with pytest.raises(ValueError):
        cycle_ratio(permutation_cycle(3), (1, 2, 3))


def test_certificate_trivial_forest():
    a = ExactMatrix.from_rows([[1, 2, 0], [3, 0, 4], [0, 5, 6]])
    assert check_certificate(a, []).holds
    assert search_certificate(a).certificate == []


def test_certificate_symmetric_kn():
    rng = random.Random(2)
    for n in range(3, 7):
        a = gen_symmetric(n, Sampler(rng))
        assert check_certificate(a, kn_triangle_cycles(n)).holds


def test_certificate_fails_on_permutation():
    res = check_certificate(permutation_cycle(3), [(1, 2, 3, 1)])
    assert res.status is Status.FAILS and res.reason == "zero pattern not symmetric"


def test_certificate_failure_modes():
    sym = ExactMatrix.from_function(4, lambda i, j: 1)
    assert check_certificate(sym, [(1, 2)]).reason.startswith("not a simple cycle")
    assert "Z-basis" in check_certificate(sym, [(1, 2, 3)]).reason
    assert "Z-basis" in check_certificate(sym, [(1, 2, 3)] * 3).reason
    assert "weight differs" in check_certificate(SKEW, [(1, 2, 3)]).reason
    sparse = ExactMatrix.from_rows([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    assert "missing" in check_certificate(sparse, [(1, 2, 3)]).reason


def test_search_certificate_family_one():
    diag = [1, 1, 1]
    a = gen_paper_family_one(3, diag, {(2, 3): 1}, 2, 5)
    res = search_certificate(a)
    assert res.holds
    assert res.certificate == [(1, 2, 3)]
    assert check_certificate(a, res.certificate).holds


def test_search_certificate_family_one_symbolic():
    b, c = Poly.var("b"), Poly.var("c")
    n = 5
    block = {(i, j): Poly.var(f"a{i}{j}") for i in range(2, n + 1) for j in range(i + 1, n + 1)}
    a = gen_paper_family_one(n, [Poly.var(f"a{i}{i}") for i in range(1, n + 1)], block, b, c)
    res = search_certificate(a)
    assert res.holds
    through_one = [cyc for cyc in res.certificate if 1 in cyc]
    assert through_one
    for cyc in through_one:
        r = cycle_ratio(a, cyc)
        # b and c each enter both directions once
        assert r.is_one()
        assert {"b", "c"} <= r.num.variables() and {"b", "c"} <= r.den.variables()


def test_search_certificate_family_two():
    rng = random.Random(9)
    s = Sampler(rng)
    for n in (3, 4, 6):
        a = gen_paper_family_two(n, {j: s.integer() for j in range(2, n)},
                                 {j: s.integer() for j in range(2, n)},
                                 [s.integer() for _ in range(n)], s.integer())
        res = search_certificate(a)
        assert res.holds
        assert len(res.certificate) == n - 2
        for cyc in res.certificate:
            assert set(cyc) >= {1, n}


def test_search_certificate_failure_witness():
    res = search_certificate(SKEW)
    assert res.status is Status.FAILS
    assert (res.witness["forward"], res.witness["reverse"]) in [(8, 1), (1, 8)]
    assert search_certificate(permutation_cycle(3)).reason == "zero pattern not symmetric"


@given(int_matrices(min_n=3, max_n=6))
def test_triangle_implies_kn_certificate(a):
    fixed = ExactMatrix.from_function(a.n, lambda i, j: a.at(i, j) or 1)
    if check_triangle_condition(fixed).holds:
        assert check_certificate(fixed, kn_triangle_cycles(fixed.n)).holds


def test_triangle_implies_kn_certificate_rank_one():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(3, 7)
        u = [rng.choice([-3, -1, 1, 2, 5]) for _ in range(n)]
        v = [rng.choice([-2, 1, 3, 4]) for _ in range(n)]
        a = gen_rank_one_ratio(n, u, v)
        assert check_triangle_condition(a).holds
        assert check_certificate(a, kn_triangle_cycles(n)).holds


@given(st.integers(0, 2 ** 32), st.integers(3, 6), st.sampled_from(["good", "bad"]))
def test_basis_independence(seed, n, kind):
    rng = random.Random(seed)
    s = Sampler(rng)
    if kind == "good":
        a = gen_gauge_symmetric(n, s, 0.7)
    else:
        sym = gen_symmetric(n, s, 0.7)
        a = ExactMatrix.from_function(n, lambda i, j: sym.at(i, j) * (2 if i < j else 1))
    ug = underlying_graph(digraph_of_matrix(a))
    found = search_certificate(a).holds
    for _ in range(3):
        cycles = recombined_cycle_basis(ug, rng)
        assert is_z_basis(ug, [chain_of_cycle(c) for c in cycles])
        assert check_certificate(a, cycles).holds == found
