"""The weighted digraph D(A) of a matrix, walks on it, and acyclicity.

Vertices are ``1..n``.  An edge ``(i, j)`` carries weight ``A[i][j]`` and
exists exactly when that entry is nonzero; loops are allowed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .exactring import Scalar
from .matrix import ExactMatrix

Edge = Tuple[int, int]


class OracleLimitError(ValueError):
    """Enumeration requested beyond the configured size limits."""


@dataclass(frozen=True)
class OracleLimits:
    max_order: int = 8
    max_length: int = 12
    max_walks: int = 2_000_000


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class WeightedDigraph:
    n: int
    edges: Dict[Edge, Scalar] = field(hash=False)

    def __post_init__(self):
        for (i, j), w in self.edges.items():
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {(i, j)} outside vertex range 1..{self.n}")
            if not w:
                raise ValueError(f"edge {(i, j)} has zero weight")
        succ = {v: [] for v in range(1, self.n + 1)}
        for i, j in sorted(self.edges):
            succ[i].append(j)
        object.__setattr__(self, "_succ", {v: tuple(s) for v, s in succ.items()})

    def successors(self, v: int) -> Tuple[int, ...]:
        return self._succ[v]

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def weight(self, i: int, j: int) -> Scalar:
        try:
            return self.edges[(i, j)]
        except KeyError:
            raise ValueError(f"({i}, {j}) is not an edge") from None


@dataclass(frozen=True)
class Walk:
    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def steps(self) -> Iterator[Edge]:
        return zip(self.vertices, self.vertices[1:])


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError("undirected graph must be loop-free")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {{{u}, {v}}} outside vertex range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def neighbors(self, v: int) -> List[int]:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def adjacency(self) -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj

    def components(self) -> List[List[int]]:
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def digraph_of_matrix(a: ExactMatrix) -> WeightedDigraph:
    edges = {}
    for i in range(1, a.n + 1):
        for j in range(1, a.n + 1):
            w = a.at(i, j)
            if w:
                edges[(i, j)] = w
    return WeightedDigraph(a.n, edges)


def is_walk(g: WeightedDigraph, seq: Sequence[int]) -> bool:
    if not seq or any(not (1 <= v <= g.n) for v in seq):
        return False
    return all(g.has_edge(u, v) for u, v in zip(seq, seq[1:]))


def make_walk(g: WeightedDigraph, seq: Sequence[int]) -> Walk:
    """Build a :class:`Walk`, checking each step against ``g``."""
    if not is_walk(g, seq):
        raise ValueError(f"{tuple(seq)} is not a walk in D(A)")
    return Walk(tuple(seq))


def walk_weight(g: WeightedDigraph, walk: Walk | Sequence[int]) -> Scalar:
    vertices = walk.vertices if isinstance(walk, Walk) else tuple(walk)
    acc: Scalar = 1
    for u, v in zip(vertices, vertices[1:]):
        acc = acc * g.weight(u, v)
    return acc


def reverse_walk(walk: Walk | Sequence[int]) -> Tuple[int, ...]:
    vertices = walk.vertices if isinstance(walk, Walk) else tuple(walk)
    return vertices[::-1]


def concat_walks(l1: Walk, l2: Walk) -> Walk:
    if l1.end != l2.start:
        raise ValueError(f"cannot concatenate: walk ends at {l1.end}, next starts at {l2.start}")
    return Walk(l1.vertices + l2.vertices[1:])


def _check_limits(g: WeightedDigraph, m: int, limits: OracleLimits) -> None:
    if g.n > limits.max_order:
        raise OracleLimitError(f"order {g.n} exceeds oracle limit {limits.max_order}")
    if m > limits.max_length:
        raise OracleLimitError(f"walk length {m} exceeds oracle limit {limits.max_length}")


def iter_walks(g: WeightedDigraph, u: int, v: Optional[int], m: int,
               limits: OracleLimits = DEFAULT_LIMITS) -> Iterator[Tuple[int, ...]]:
    """Depth-first, lexicographic enumeration of length-``m`` walks from ``u``.

    With ``v=None`` every endpoint is accepted.
    """
    _check_limits(g, m, limits)
    if m < 0:
        raise ValueError("walk length must be non-negative")
    path = [u]
    count = 0

    def rec(depth):
        nonlocal count
        if depth == m:
            if v is None or path[-1] == v:
                count += 1
                if count > limits.max_walks:
                    raise OracleLimitError(f"more than {limits.max_walks} walks")
                yield tuple(path)
            return
        for w in g.successors(path[-1]):
            path.append(w)
            yield from rec(depth + 1)
            path.pop()

    yield from rec(0)


def enumerate_walks(g: WeightedDigraph, u: int, v: int, m: int,
                    limits: OracleLimits = DEFAULT_LIMITS) -> List[Walk]:
    return [Walk(p) for p in iter_walks(g, u, v, m, limits)]


def underlying_graph(g: WeightedDigraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, frozenset((i, j) for (i, j) in g.edges if i != j))


def rotate_min_first(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate an open vertex cycle so its smallest vertex comes first."""
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def strongly_connected_components(g: WeightedDigraph) -> List[List[int]]:
    """Kosaraju's two-pass algorithm, iterative."""
    order: List[int] = []
    seen = set()
    for s in range(1, g.n + 1):
        if s in seen:
            continue
        seen.add(s)
        stack = [(s, iter(g.successors(s)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in seen:
                    seen.add(w)
                    stack.append((w, iter(g.successors(w))))
                    break
            else:
                stack.pop()
                order.append(v)
    pred: Dict[int, List[int]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in g.edges:
        pred[j].append(i)
    comps = []
    assigned = set()
    for s in reversed(order):
        if s in assigned:
            continue
        comp = [s]
        assigned.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in pred[v]:
                if w not in assigned:
                    assigned.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _shortest_path(adj: Dict[int, Sequence[int]], src: int, dst: int,
                   allowed: set) -> Optional[List[int]]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for w in adj[v]:
            if w in allowed and w not in prev:
                prev[w] = v
                queue.append(w)
    return None


def _undirected_cycle(vertices: List[int], edges: List[Edge]) -> Optional[List[int]]:
    """Return some cycle of a simple undirected graph, or None for a forest."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj: Dict[int, List[int]] = {v: [] for v in vertices}
    for a, b in sorted(edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            path = _shortest_path(adj, b, a, set(vertices))
            return path
        parent[ra] = rb
        adj[a].append(b)
        adj[b].append(a)
    return None


def is_acyclic(g: WeightedDigraph) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Decide whether ``g`` has a simple directed cycle of length >= 3.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is an
    open vertex cycle ``(v0, ..., v_{r-1})``, r >= 3, minimal vertex first.
    """
    for comp in strongly_connected_components(g):
        if len(comp) < 3:
            continue
        members = set(comp)
        inner = [(i, j) for (i, j) in sorted(g.edges) if i != j and i in members and j in members]
        for i, j in inner:
            if not g.has_edge(j, i):
                back = _shortest_path(g._succ, j, i, members)
                # back has >= 3 vertices since (j, i) is absent
                return False, rotate_min_first([i] + back[:-1])
        und = sorted({(min(i, j), max(i, j)) for i, j in inner})
        cyc = _undirected_cycle(comp, und)
        if cyc is not None:
            return False, rotate_min_first(cyc)
    return True, None


def enumerate_simple_cycles(g: WeightedDigraph, max_len: Optional[int] = None,
                            limits: OracleLimits = DEFAULT_LIMITS) -> List[Tuple[int, ...]]:
    """Brute-force list of simple directed cycles, each once, minimal vertex first."""
    if g.n > limits.max_order:
        raise OracleLimitError(f"order {g.n} exceeds oracle limit {limits.max_order}")
    max_len = g.n if max_len is None else max_len
    found: List[Tuple[int, ...]] = []
    for s in range(1, g.n + 1):
        path = [s]
        on_path = {s}

        def rec():
            v = path[-1]
            for w in g.successors(v):
                if w == s:
                    found.append(tuple(path))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    rec()
                    on_path.discard(w)
                    path.pop()

        if max_len >= 1:
            rec()
    return found
