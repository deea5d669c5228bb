import random

import pytest

from lfcheck.digraph import digraph_of_matrix, enumerate_simple_cycles
from lfcheck.exactring import Poly
from lfcheck.genlab import (FAMILIES, GeneratorSpec, Sampler, gen_counterexample_suite,
                            gen_paper_family_one, gen_paper_family_two, gen_random_acyclic,
                            gen_rank_one_ratio, generate)
from lfcheck.hypotheses import (check_acyclic_matrix, check_triangle_condition,
                                hypothesis_report, search_certificate)
from lfcheck.verify import random_instance, verify_identity

POSTCONDITION = {
    "tridiagonal": check_acyclic_matrix,
    "acyclic": check_acyclic_matrix,
    "rank-one": check_triangle_condition,
    "symmetric": check_triangle_condition,
    "family-one": search_certificate,
    "family-two": search_certificate,
    "gauge-symmetric": search_certificate,
}


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_generate_is_deterministic(family):
    for seed in (0, 1, 2 ** 63):
        spec = GeneratorSpec(family, 5, seed, density=0.4)
        assert generate(spec) == generate(spec)
    assert any(generate(GeneratorSpec(family, 5, s)) != generate(GeneratorSpec(family, 5, 0))
               for s in range(1, 6))


@pytest.mark.parametrize("family", sorted(POSTCONDITION))
def test_family_postcondition(family):
    check = POSTCONDITION[family]
    for seed in range(100):
        n = 3 + seed % 5
        a = generate(GeneratorSpec(family, n, seed, density=(seed % 10) / 10))
        assert check(a).holds, (family, seed)


@pytest.mark.parametrize("family", sorted(POSTCONDITION))
def test_family_postcondition_rational(family):
    check = POSTCONDITION[family]
    for seed in range(20):
        a = generate(GeneratorSpec(family, 4, seed, domain="rational"))
        assert a.domain in ("rational", "integer")
        assert check(a).holds


@pytest.mark.parametrize("family", sorted(POSTCONDITION))
def test_symbolic_families_satisfy_identity(family):
    rng = random.Random(4)
    for n in (3, 4):
        a = generate(GeneratorSpec(family, n, n, domain="symbolic", density=0.6))
        assert POSTCONDITION[family](a).holds
        for _ in range(5):
            inst = random_instance(rng, n, max_k=3, max_m=3, max_total=6)
            assert verify_identity(a, inst).equal, (family, inst)


def test_random_acyclic_has_no_long_cycles():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(1, 7)
        a = gen_random_acyclic(n, rng, rng.random())
        cycles = enumerate_simple_cycles(digraph_of_matrix(a))
        assert all(len(c) <= 2 for c in cycles)


def test_zero_parameters_rejected():
    with pytest.raises(ValueError):
        gen_rank_one_ratio(2, [1, 0], [1, 1])
    with pytest.raises(ValueError):
        gen_paper_family_one(3, [1, 1, 1], {(2, 3): 1}, 0, 1)
    with pytest.raises(ValueError):
        gen_paper_family_two(3, {2: 1}, {2: 1}, [1, 1, 1], 0)


def test_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("random", 3, domain="complex")
    with pytest.raises(ValueError):
        GeneratorSpec("random", 3, seed=-1)
    with pytest.raises(ValueError):
        GeneratorSpec("random", 3, density=1.5)
    with pytest.raises(ValueError):
        generate(GeneratorSpec("nope", 3))


def test_family_one_shape():
    b, c = Poly.var("b"), Poly.var("c")
    a = gen_paper_family_one(4, [Poly.var(f"d{i}") for i in range(1, 5)],
                             {(i, j): Poly.var(f"a{i}{j}") for i in range(2, 5) for j in range(i + 1, 5)},
                             b, c)
    assert a.at(1, 2) == a.at(1, 3) == a.at(1, 4) == b
    assert a.at(2, 1) == a.at(3, 1) == a.at(4, 1) == c
    assert a.at(3, 2) == a.at(2, 3)


def test_sampler_bounds():
    s = Sampler(random.Random(0), wide=True)
    xs = [s.integer() for _ in range(500)]
    assert 0 not in xs and max(map(abs, xs)) <= 99 and max(map(abs, xs)) > 9


@pytest.mark.parametrize("case", range(len(gen_counterexample_suite())))
def test_counterexample_suite(case):
    a, inst = gen_counterexample_suite()[case]
    hyp = hypothesis_report(a)
    assert hyp.all_fail
    res = verify_identity(a, inst)
    assert not res.equal


def test_pinned_fuzz_counterexample_values():
    a, inst = gen_counterexample_suite()[3]
    res = verify_identity(a, inst)
    assert (res.lhs, res.rhs) == (248, 256)
