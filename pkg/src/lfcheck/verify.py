"""Identity verification and its walk-enumeration cross-checks.

The fast path evaluates both cyclic products from matrix powers.  The oracle
path enumerates walks in D(A) and multiplies edge weights along them; it
never touches matrix multiplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Dict, List, Optional, Tuple

from .digraph import (DEFAULT_LIMITS, OracleLimitError, OracleLimits, Walk,
                      digraph_of_matrix, is_walk, iter_walks, reverse_walk,
                      walk_weight)
from .exactring import Scalar
from .matrix import ExactMatrix, IdentityInstance, cycle_product


@dataclass(frozen=True)
class VerificationResult:
    instance: IdentityInstance
    lhs: Scalar
    rhs: Scalar

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_identity(a: ExactMatrix, inst: IdentityInstance) -> VerificationResult:
    return VerificationResult(inst, cycle_product(a, inst, "forward"), cycle_product(a, inst, "reverse"))


def random_instance(rng: random.Random, n: int, max_k: int = 4, max_m: int = 6,
                    max_total: Optional[int] = None) -> IdentityInstance:
    """Draw k in 1..max_k, exponents in 1..max_m, indices uniform with repetition."""
    k = rng.randint(1, max_k)
    if max_total is not None:
        k = min(k, max_total)
    ms = [rng.randint(1, max_m) for _ in range(k)]
    if max_total is not None:
        while sum(ms) > max_total:
            t = max(range(k), key=lambda s: ms[s])
            ms[t] -= 1
    idx = [rng.randint(1, n) for _ in range(k)]
    return IdentityInstance(tuple(ms), tuple(idx))


def walk_sum_oracle(a: ExactMatrix, u: int, v: int, m: int,
                    limits: OracleLimits = DEFAULT_LIMITS) -> Scalar:
    """Sum of ``w(l)`` over all length-``m`` walks ``u -> v``; equals ``(A^m)_uv``."""
    g = digraph_of_matrix(a)
    acc: Scalar = 0
    for seq in iter_walks(g, u, v, m, limits):
        acc = acc + walk_weight(g, seq)
    return acc


def walk_sums_from(a: ExactMatrix, u: int, m: int, limits: OracleLimits = DEFAULT_LIMITS
                   ) -> Dict[int, Scalar]:
    """Walk sums from ``u`` to every endpoint in one depth-first pass.

    Prefix weights are carried down the search tree, so each enumerated walk
    costs one multiplication.  Same enumeration as :func:`walk_sum_oracle`.
    """
    g = digraph_of_matrix(a)
    if g.n > limits.max_order or m > limits.max_length:
        raise OracleLimitError(f"order {g.n} / length {m} exceeds oracle limits")
    sums: Dict[int, Scalar] = {v: 0 for v in range(1, g.n + 1)}
    stack: List[Tuple[int, int, Scalar]] = [(u, 0, 1)]
    while stack:
        v, depth, w = stack.pop()
        if depth == m:
            sums[v] = sums[v] + w
            continue
        for x in g.successors(v):
            stack.append((x, depth + 1, w * g.edges[(v, x)]))
    return sums


def closed_walk_family(a: ExactMatrix, inst: IdentityInstance,
                       limits: OracleLimits = DEFAULT_LIMITS) -> List[Walk]:
    """All closed walks ``L_1 L_2 ... L_k`` with ``L_t`` of length ``m_t`` from i_t to i_{t+1}."""
    inst.validate(a.n)
    if sum(inst.exponents) > limits.max_length:
        raise OracleLimitError(f"total length {sum(inst.exponents)} exceeds {limits.max_length}")
    g = digraph_of_matrix(a)
    segments = [list(iter_walks(g, i, j, m, limits)) for m, i, j in inst.segments()]
    total = 1
    for s in segments:
        total *= len(s)
    if total > limits.max_walks:
        raise OracleLimitError(f"{total} closed walks exceeds limit {limits.max_walks}")
    out = []
    for parts in cartesian(*segments):
        verts = list(parts[0])
        for p in parts[1:]:
            verts.extend(p[1:])
        out.append(Walk(tuple(verts)))
    return out


@dataclass
class BijectionReport:
    walk_count: int
    reversals_valid: bool
    weights_equal: bool
    lhs_sum: Scalar
    rhs_sum: Scalar
    violation: Optional[Tuple[Tuple[int, ...], Scalar, Optional[Scalar]]] = None

    @property
    def ok(self) -> bool:
        return self.reversals_valid and self.weights_equal


def check_reversal_bijection(a: ExactMatrix, inst: IdentityInstance,
                             limits: OracleLimits = DEFAULT_LIMITS) -> BijectionReport:
    g = digraph_of_matrix(a)
    walks = closed_walk_family(a, inst, limits)
    valid = equal = True
    violation = None
    lhs: Scalar = 0
    rhs: Scalar = 0
    for l in walks:
        w = walk_weight(g, l)
        lhs = lhs + w
        rev = reverse_walk(l)
        if not is_walk(g, rev):
            valid = False
            if violation is None:
                violation = (l.vertices, w, None)
            continue
        wr = walk_weight(g, rev)
        rhs = rhs + wr
        if w != wr:
            equal = False
            if violation is None:
                violation = (l.vertices, w, wr)
    return BijectionReport(len(walks), valid, equal, lhs, rhs, violation)
