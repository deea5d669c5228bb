"""Seeded matrix generators: named families, hypothesis classes, negative controls.

Every generator is a pure function of its arguments; random ones take a
``random.Random`` or draw from a :class:`GeneratorSpec` seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .exactring import Poly, Scalar, entry_var
from .matrix import ExactMatrix, IdentityInstance

DOMAINS = ("integer", "rational", "symbolic")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    seed: int = 0
    domain: str = "integer"
    density: float = 0.5
    wide: bool = False
    params: Dict[str, Any] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}; expected one of {DOMAINS}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")


class Sampler:
    """Draws nonzero entries in the requested domain."""

    def __init__(self, rng: random.Random, domain: str = "integer", wide: bool = False):
        self.rng = rng
        self.domain = domain
        self.bound = 99 if wide else 9

    def integer(self) -> int:
        while True:
            x = self.rng.randint(-self.bound, self.bound)
            if x:
                return x

    def value(self, name: str) -> Scalar:
        """A fresh nonzero value; ``name`` labels the indeterminate in symbolic mode."""
        if self.domain == "symbolic":
            return Poly.var(name)
        if self.domain == "rational":
            return Fraction(self.integer(), self.rng.randint(1, self.bound))
        return self.integer()

    def entry(self, i: int, j: int) -> Scalar:
        if self.domain == "symbolic":
            return entry_var(i, j)
        return self.value(f"x{i}_{j}")


def _zero(domain: str) -> Scalar:
    return Poly() if domain == "symbolic" else 0


def _nonzero(*xs: Scalar) -> None:
    for x in xs:
        if not x:
            raise ValueError("generator parameters must be nonzero")


def gen_tridiagonal(n: int, sampler: Sampler) -> ExactMatrix:
    return ExactMatrix.from_function(
        n, lambda i, j: sampler.entry(i, j) if abs(i - j) <= 1 else _zero(sampler.domain))


def gen_paper_family_one(n: int, diagonal: Sequence[Scalar], block: Dict[Tuple[int, int], Scalar],
                         b: Scalar, c: Scalar) -> ExactMatrix:
    """First row ``(a11, b, ..., b)``, first column ``(a11, c, ..., c)``, symmetric lower block.

    ``diagonal`` holds a_11..a_nn; ``block`` maps (i, j), 2 <= i < j <= n, to a_ij.
    """
    if n < 2:
        raise ValueError("family one needs n >= 2")
    _nonzero(b, c, *block.values())
    if len(diagonal) != n:
        raise ValueError("need n diagonal entries")

    def fn(i, j):
        if i == j:
            return diagonal[i - 1]
        if i == 1:
            return b
        if j == 1:
            return c
        return block[(min(i, j), max(i, j))]

    return ExactMatrix.from_function(n, fn)


def gen_paper_family_two(n: int, row1: Dict[int, Scalar], col1: Dict[int, Scalar],
                         diagonal: Sequence[Scalar], corner: Scalar, zero: Scalar = 0) -> ExactMatrix:
    """Arrow pattern through vertices 1 and n.

    ``row1[j] = a_1j`` and ``col1[j] = a_j1`` for 2 <= j <= n-1, ``diagonal``
    holds a_11..a_nn, ``corner = a_n1``.  Interior row j has a_j1 in columns
    1 and n and a_jj on the diagonal; row n is ``(a_n1, a_12, ..., a_1,n-1, a_nn)``;
    the (1, n) entry is a_n1 as well.
    """
    if n < 3:
        raise ValueError("family two needs n >= 3")
    _nonzero(corner, *row1.values(), *col1.values())
    if len(diagonal) != n:
        raise ValueError("need n diagonal entries")

    def fn(i, j):
        if i == j:
            return diagonal[i - 1]
        if (i, j) in ((1, n), (n, 1)):
            return corner
        if i == 1:
            return row1[j]
        if i == n:
            return row1[j] if j != 1 else corner
        if j in (1, n):
            return col1[i]
        return zero

    return ExactMatrix.from_function(n, fn)


def gen_rank_one_ratio(n: int, u: Sequence[Scalar], v: Sequence[Scalar]) -> ExactMatrix:
    """``A_ij = u_i v_j``; satisfies the triangle condition."""
    if len(u) != n or len(v) != n:
        raise ValueError("u and v need n components")
    _nonzero(*u, *v)
    return ExactMatrix.from_function(n, lambda i, j: u[i - 1] * v[j - 1])


def gen_symmetric(n: int, sampler: Sampler, density: float = 1.0) -> ExactMatrix:
    rng = sampler.rng
    vals: Dict[Tuple[int, int], Scalar] = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i == j or density >= 1.0 or rng.random() < density:
                vals[(i, j)] = sampler.entry(i, j)
            else:
                vals[(i, j)] = _zero(sampler.domain)
    return ExactMatrix.from_function(n, lambda i, j: vals[(min(i, j), max(i, j))])


def gen_gauge_symmetric(n: int, sampler: Sampler, density: float = 0.6) -> ExactMatrix:
    """``A_ij = u_i v_j s_ij`` with ``s`` symmetric: every cycle ratio is 1 on any pattern."""
    s = gen_symmetric(n, sampler, density)
    u = [sampler.value(f"u{i}") for i in range(1, n + 1)]
    v = [sampler.value(f"v{i}") for i in range(1, n + 1)]
    return ExactMatrix.from_function(n, lambda i, j: u[i - 1] * v[j - 1] * s.at(i, j))


def gen_random_acyclic(n: int, rng: random.Random, density: float = 0.5,
                       sampler: Optional[Sampler] = None) -> ExactMatrix:
    """Random member of the acyclic class.

    A random forest is made bidirected with independent weights, loops are
    sprinkled on, and one-way edges are added only from earlier to later
    components in a fixed random order, so every strongly connected component
    is a bidirected tree.
    """
    sampler = sampler or Sampler(rng)
    zero = _zero(sampler.domain)
    entries: Dict[Tuple[int, int], Scalar] = {}
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    parent = {v: v for v in perm}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for t in range(1, n):
        if rng.random() < density:
            v, w = perm[t], perm[rng.randrange(t)]
            entries[(v, w)] = sampler.entry(v, w)
            entries[(w, v)] = sampler.entry(w, v)
            parent[find(v)] = find(w)
    for v in range(1, n + 1):
        if rng.random() < density:
            entries[(v, v)] = sampler.entry(v, v)
    roots = sorted({find(v) for v in range(1, n + 1)})
    rng.shuffle(roots)
    rank = {r: k for k, r in enumerate(roots)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if rank[find(i)] < rank[find(j)] and rng.random() < density:
                entries[(i, j)] = sampler.entry(i, j)
    return ExactMatrix.from_function(n, lambda i, j: entries.get((i, j), zero))


def gen_random_dense(n: int, sampler: Sampler, density: float = 0.7) -> ExactMatrix:
    """Unconstrained random pattern; the adversarial fuzz class."""
    zero = _zero(sampler.domain)
    rng = sampler.rng
    return ExactMatrix.from_function(
        n, lambda i, j: sampler.entry(i, j) if rng.random() < density else zero)


def random_family_one(n: int, sampler: Sampler) -> ExactMatrix:
    diag = [sampler.entry(i, i) for i in range(1, n + 1)]
    block = {(i, j): sampler.entry(i, j) for i in range(2, n + 1) for j in range(i + 1, n + 1)}
    return gen_paper_family_one(n, diag, block, sampler.value("b"), sampler.value("c"))


def random_family_two(n: int, sampler: Sampler) -> ExactMatrix:
    row1 = {j: sampler.entry(1, j) for j in range(2, n)}
    col1 = {j: sampler.entry(j, 1) for j in range(2, n)}
    diag = [sampler.entry(i, i) for i in range(1, n + 1)]
    return gen_paper_family_two(n, row1, col1, diag, sampler.entry(n, 1), _zero(sampler.domain))


def random_rank_one(n: int, sampler: Sampler) -> ExactMatrix:
    u = [sampler.value(f"u{i}") for i in range(1, n + 1)]
    v = [sampler.value(f"v{i}") for i in range(1, n + 1)]
    return gen_rank_one_ratio(n, u, v)


FAMILIES: Dict[str, Callable[[GeneratorSpec, random.Random, Sampler], ExactMatrix]] = {
    "tridiagonal": lambda s, r, sm: gen_tridiagonal(s.n, sm),
    "family-one": lambda s, r, sm: random_family_one(s.n, sm),
    "family-two": lambda s, r, sm: random_family_two(s.n, sm),
    "rank-one": lambda s, r, sm: random_rank_one(s.n, sm),
    "symmetric": lambda s, r, sm: gen_symmetric(s.n, sm, s.params.get("symmetric_density", 1.0)),
    "gauge-symmetric": lambda s, r, sm: gen_gauge_symmetric(s.n, sm, s.density),
    "acyclic": lambda s, r, sm: gen_random_acyclic(s.n, r, s.density, sm),
    "random": lambda s, r, sm: gen_random_dense(s.n, sm, s.density),
}


def generate(spec: GeneratorSpec) -> ExactMatrix:
    """Deterministic in ``spec``: the same spec always yields the same matrix."""
    try:
        builder = FAMILIES[spec.family]
    except KeyError:
        raise ValueError(f"unknown family {spec.family!r}; known: {sorted(FAMILIES)}") from None
    rng = random.Random(spec.seed)
    return builder(spec, rng, Sampler(rng, spec.domain, spec.wide))


def permutation_cycle(n: int) -> ExactMatrix:
    """Cyclic permutation 1 -> 2 -> ... -> n -> 1."""
    return ExactMatrix.from_function(n, lambda i, j: 1 if j == i % n + 1 else 0)


def gen_counterexample_suite() -> List[Tuple[ExactMatrix, IdentityInstance]]:
    """Pinned matrices outside every hypothesis class, each with a failing instance."""
    skew = ExactMatrix.from_rows([[1, 2, 1], [1, 1, 2], [2, 1, 1]])
    return [
        (permutation_cycle(3), IdentityInstance((1, 1, 1), (1, 2, 3))),
        (skew, IdentityInstance((1, 1, 1), (1, 2, 3))),
        (skew, IdentityInstance((1, 2), (1, 2))),
        # adversarial fuzz, seed 7, case 0, after shrinking: lhs 248, rhs 256
        (ExactMatrix.from_rows([[3, 5, -1], [-1, 4, -4], [0, -8, 4]]), IdentityInstance((2, 1), (2, 3))),
        (permutation_cycle(4), IdentityInstance((3, 1), (1, 4))),
        (ExactMatrix.from_rows([[0, 1, 0], [1, 0, 1], [1, 0, 0]]), IdentityInstance((2, 1), (1, 3))),
    ]
