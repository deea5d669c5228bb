"""Deciders for the sufficient conditions under which the cyclic identity holds.

* acyclic: D(A) has no directed cycle of length >= 3;
* triangle: all entries nonzero and, for 1 <= i < j <= n-1,
  ``A_ij A_{j,j+1} A_{j+1,i} == A_ji A_{j+1,j} A_{i,j+1}``;
* certificate: symmetric zero pattern plus a set of directed cycles forming a
  Z-basis of the cycle space of the underlying graph, each with
  ``w(c) == w(reverse c)``.

Every FAILS result carries a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .digraph import (digraph_of_matrix, is_acyclic, is_walk, reverse_walk,
                      rotate_min_first, underlying_graph, walk_weight)
from .exactring import Ratio, format_scalar
from .homology import Status, chain_of_cycle, fundamental_cycles, is_z_basis
from .matrix import ExactMatrix

VertexCycle = Tuple[int, ...]


@dataclass
class CheckResult:
    status: Status
    reason: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    certificate: Optional[List[VertexCycle]] = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"status": self.status.value}
        if self.reason:
            out["reason"] = self.reason
        if self.witness:
            out["witness"] = {k: _jsonable(k, v) for k, v in self.witness.items()}
        if self.certificate is not None:
            out["certificate"] = [list(c) + [c[0]] for c in self.certificate]
        return out


_SCALAR_KEYS = {"lhs", "rhs", "forward", "reverse"}


def _jsonable(key: str, v):
    if key in _SCALAR_KEYS:
        return format_scalar(v)
    if isinstance(v, tuple):
        return [_jsonable(key, x) for x in v]
    if isinstance(v, list):
        return [_jsonable(key, x) for x in v]
    return v


@dataclass
class HypothesisReport:
    acyclic: CheckResult
    triangle: CheckResult
    certificate: CheckResult

    @property
    def any_holds(self) -> bool:
        return self.acyclic.holds or self.triangle.holds or self.certificate.holds

    @property
    def all_fail(self) -> bool:
        return not self.any_holds

    def to_json(self) -> Dict[str, Any]:
        return {
            "acyclic": self.acyclic.to_json(),
            "triangle": self.triangle.to_json(),
            "certificate": self.certificate.to_json(),
        }


def check_acyclic_matrix(a: ExactMatrix) -> CheckResult:
    ok, witness = is_acyclic(digraph_of_matrix(a))
    if ok:
        return CheckResult(Status.HOLDS)
    return CheckResult(Status.FAILS, "directed cycle of length >= 3",
                       {"cycle": list(witness) + [witness[0]]})


def check_triangle_condition(a: ExactMatrix) -> CheckResult:
    n = a.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not a.at(i, j):
                return CheckResult(Status.FAILS, "zero entry", {"entry": [i, j]})
    for i in range(1, n):
        for j in range(i + 1, n):
            lhs = a.at(i, j) * a.at(j, j + 1) * a.at(j + 1, i)
            rhs = a.at(j, i) * a.at(j + 1, j) * a.at(i, j + 1)
            if lhs != rhs:
                return CheckResult(Status.FAILS, "triangle products differ",
                                   {"pair": [i, j], "lhs": lhs, "rhs": rhs})
    return CheckResult(Status.HOLDS)


def zero_pattern_violation(a: ExactMatrix) -> Optional[Tuple[int, int]]:
    """First (i, j), i != j, with exactly one of A_ij, A_ji zero."""
    for i in range(1, a.n + 1):
        for j in range(i + 1, a.n + 1):
            if bool(a.at(i, j)) != bool(a.at(j, i)):
                return (i, j)
    return None


def _open_cycle(cycle: Sequence[int]) -> VertexCycle:
    cyc = list(cycle)
    if len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc.pop()
    return tuple(cyc)


def cycle_ratio(a: ExactMatrix, cycle: Sequence[int]) -> Ratio:
    """``w(c) : w(reverse c)`` as an unreduced formal quotient."""
    g = digraph_of_matrix(a)
    cyc = _open_cycle(cycle)
    closed = cyc + cyc[:1]
    rev = reverse_walk(closed)
    if not is_walk(g, closed):
        raise ValueError(f"{closed} is not a directed cycle of D(A)")
    if not is_walk(g, rev):
        raise ValueError(f"reverse {rev} is not a directed cycle of D(A)")
    return Ratio(walk_weight(g, closed), walk_weight(g, rev))


def check_certificate(a: ExactMatrix, cycles: Sequence[Sequence[int]]) -> CheckResult:
    bad = zero_pattern_violation(a)
    if bad is not None:
        return CheckResult(Status.FAILS, "zero pattern not symmetric", {"entry": list(bad)})
    g = digraph_of_matrix(a)
    opened = [_open_cycle(c) for c in cycles]
    for c in opened:
        closed = c + c[:1]
        if len(c) < 3 or len(set(c)) != len(c):
            return CheckResult(Status.FAILS, "not a simple cycle of length >= 3", {"cycle": list(closed)})
        if not is_walk(g, closed) or not is_walk(g, reverse_walk(closed)):
            return CheckResult(Status.FAILS, "cycle or its reverse missing from D(A)", {"cycle": list(closed)})
        r = cycle_ratio(a, c)
        if not r.is_one():
            return CheckResult(Status.FAILS, "cycle weight differs from its reverse",
                               {"cycle": list(closed), "forward": r.num, "reverse": r.den})
    if not is_z_basis(underlying_graph(g), [chain_of_cycle(c) for c in opened]):
        return CheckResult(Status.FAILS, "cycles do not form a Z-basis of the cycle space",
                           {"cycles": [list(c) for c in opened]})
    return CheckResult(Status.HOLDS, certificate=opened)


def search_certificate(a: ExactMatrix) -> CheckResult:
    """Try the fundamental cycle basis of the underlying graph.

    ``c -> w(c)/w(reverse c)`` is a homomorphism from the cycle space into the
    multiplicative group of the fraction field, so it is trivial on every
    basis as soon as it is trivial on one.
    """
    bad = zero_pattern_violation(a)
    if bad is not None:
        return CheckResult(Status.FAILS, "zero pattern not symmetric", {"entry": list(bad)})
    ug = underlying_graph(digraph_of_matrix(a))
    cycles = fundamental_cycles(ug)
    for c in cycles:
        r = cycle_ratio(a, c)
        if not r.is_one():
            return CheckResult(Status.FAILS, "fundamental cycle weight differs from its reverse",
                               {"cycle": list(c) + [c[0]], "forward": r.num, "reverse": r.den})
    return CheckResult(Status.HOLDS, certificate=[rotate_min_first(c) for c in cycles])


def hypothesis_report(a: ExactMatrix) -> HypothesisReport:
    return HypothesisReport(check_acyclic_matrix(a), check_triangle_condition(a), search_certificate(a))
