"""Oriented simplices, integer chains, boundary maps and orientation-sensitive weights.

A q-simplex ``[a_0, ..., a_q]`` is stored as its sorted vertex tuple together
with the parity of the sorting permutation, and chains fold that sign into
their integer coefficients.  Swapping two vertices therefore negates the
simplex without any further bookkeeping.

Graph cycle spaces (H_1 of a 1-dimensional complex) are handled through a
spanning-forest coordinate system: a 1-cycle is determined by its
coefficients on the non-tree edges.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import (Callable, Dict, Iterable, List, Mapping, Optional, Sequence,
                    Tuple)

from .digraph import UndirectedGraph
from .exactring import Scalar, product
from .matrix import ExactMatrix

Simplex = Tuple[int, ...]


def orient(vertices: Sequence[int]) -> Tuple[Simplex, int]:
    """Canonical form ``(sorted vertices, sign)`` of an ordered simplex."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError(f"simplex {tuple(vs)} repeats a vertex")
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(vs)):
        j = i
        while j > 0 and vs[j - 1] > vs[j]:
            vs[j - 1], vs[j] = vs[j], vs[j - 1]
            sign = -sign
            j -= 1
    return tuple(vs), sign


class Chain:
    """Element of the free abelian group C_q on oriented q-simplices."""

    __slots__ = ("q", "_terms")

    def __init__(self, q: int, terms: Iterable[Tuple[int, Sequence[int]]] | Mapping = ()):
        if q < 0:
            raise ValueError("chain dimension must be non-negative")
        self.q = q
        acc: Dict[Simplex, int] = {}
        # a mapping goes simplex -> coefficient, an iterable yields (coefficient, simplex)
        items = ((c, s) for s, c in terms.items()) if isinstance(terms, Mapping) else terms
        for coef, verts in items:
            if len(verts) != q + 1:
                raise ValueError(f"simplex {tuple(verts)} is not {q}-dimensional")
            s, sign = orient(verts)
            acc[s] = acc.get(s, 0) + sign * coef
        self._terms = {s: c for s, c in sorted(acc.items()) if c}

    @classmethod
    def simplex(cls, *vertices: int) -> "Chain":
        return cls(len(vertices) - 1, [(1, vertices)])

    @classmethod
    def zero(cls, q: int) -> "Chain":
        return cls(q)

    @property
    def terms(self) -> Dict[Simplex, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, vertices: Sequence[int]) -> int:
        s, sign = orient(vertices)
        return sign * self._terms.get(s, 0)

    def _combine(self, other: "Chain", k: int) -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        if other.q != self.q:
            raise ValueError(f"cannot add a {self.q}-chain and a {other.q}-chain")
        acc = dict(self._terms)
        for s, c in other._terms.items():
            acc[s] = acc.get(s, 0) + k * c
        return Chain(self.q, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Chain(self.q, {s: -c for s, c in self._terms.items()})

    def __rmul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Chain(self.q, {s: k * c for s, c in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.q == other.q and self._terms == other._terms

    def __hash__(self):
        return hash((self.q, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        if not self._terms:
            return f"Chain({self.q}, 0)"
        parts = []
        for s, c in self._terms.items():
            body = "[" + ",".join(map(str, s)) + "]"
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(("-" if c < 0 else "+", mag + body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out


def chain_sum(chains: Iterable[Chain], q: int) -> Chain:
    out = Chain.zero(q)
    for c in chains:
        out = out + c
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its faces (sets of vertices)."""

    vertices: frozenset
    faces: frozenset

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces if f)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        for f in faces:
            if not f <= self.vertices:
                raise ValueError(f"face {sorted(f)} uses vertices outside V")
            for r in range(1, len(f)):
                for sub in combinations(sorted(f), r):
                    if frozenset(sub) not in faces:
                        raise ValueError(f"not downward closed: {sorted(f)} lacks face {sub}")

    @classmethod
    def from_maximal(cls, simplices: Iterable[Sequence[int]]) -> "SimplicialComplex":
        faces = set()
        verts = set()
        for s in simplices:
            verts.update(s)
            for r in range(1, len(s) + 1):
                faces.update(frozenset(c) for c in combinations(sorted(s), r))
        return cls(frozenset(verts), frozenset(faces))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)

    def simplices(self, q: int) -> List[Simplex]:
        return sorted(tuple(sorted(f)) for f in self.faces if len(f) == q + 1)

    def contains(self, c: Chain) -> bool:
        return all(frozenset(s) in self.faces for s in c.terms)


def boundary(c: Chain) -> Chain:
    if c.q < 1:
        raise ValueError("boundary is defined for chains of dimension >= 1")
    acc: Dict[Simplex, int] = {}
    for s, coef in c.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            # s is sorted, so each face is already canonical
            acc[face] = acc.get(face, 0) + (-1) ** i * coef
    return Chain(c.q - 1, acc)


def is_cycle(c: Chain) -> bool:
    return not boundary(c)


# --------------------------------------------------------------- weights

class WeightSystem:
    """A nonzero function on oriented simplices, ``f(sigma)`` and ``f(-sigma)`` independent."""

    def __init__(self, fn: Callable[[Simplex, int], Scalar]):
        self._fn = fn

    def __call__(self, vertices: Sequence[int], sign: int = 1) -> Scalar:
        s, parity = orient(vertices)
        value = self._fn(s, parity * sign)
        if not value:
            raise ValueError(f"weight system is zero on {'+' if parity * sign > 0 else '-'}{list(s)}")
        return value

    @classmethod
    def from_matrix(cls, a: ExactMatrix) -> "WeightSystem":
        """``f([i, j]) = A_ij`` on oriented edges of K_n."""

        def fn(s, sign):
            if len(s) != 2:
                raise ValueError("matrix weights are defined on 1-simplices only")
            i, j = s if sign > 0 else s[::-1]
            return a.at(i, j)

        return cls(fn)

    @classmethod
    def from_mapping(cls, table: Mapping[Tuple[Simplex, int], Scalar]) -> "WeightSystem":
        """Keys are ``(sorted simplex, sign)``."""

        def fn(s, sign):
            try:
                return table[(s, sign)]
            except KeyError:
                raise KeyError(f"weight undefined on {'+' if sign > 0 else '-'}{list(s)}") from None

        return cls(fn)


def chain_weight(f: WeightSystem, c: Chain) -> Scalar:
    """``W(c) = prod f(sign(a) * sigma) ** |a|``; the zero chain weighs 1."""
    return product(f(s, 1 if a > 0 else -1) ** abs(a) for s, a in c.items())


SimplexSequence = List[Tuple[int, Tuple[int, ...]]]


def negate_sequence(seq: SimplexSequence) -> SimplexSequence:
    return [(-b, s) for b, s in seq]


def sequence_sum(seq: SimplexSequence) -> Chain:
    if not seq:
        raise ValueError("empty sequence has no well-defined dimension; use chain_sum")
    return Chain(len(seq[0][1]) - 1, [(b, s) for b, s in seq])


def sequence_weight(f: WeightSystem, seq: SimplexSequence) -> Scalar:
    """Product of per-entry weights; unlike W, cancellations are not forgotten."""
    for b, _ in seq:
        if b == 0:
            raise ValueError("sequence coefficients must be nonzero")
    return product(f(s, 1 if b > 0 else -1) ** abs(b) for b, s in seq)


def walk_sequence(vertices: Sequence[int]) -> SimplexSequence:
    """The loop-free steps of a walk as a sequence of +1-weighted 1-simplices."""
    return [(1, (u, v)) for u, v in zip(vertices, vertices[1:]) if u != v]


def chain_of_cycle(vertices: Sequence[int]) -> Chain:
    """Sum of the 1-simplices ``[x_t, x_{t+1}]`` along a closed vertex sequence.

    The sequence may be given open (``v0..v_{r-1}``) or closed (ending in v0).
    """
    vs = list(vertices)
    if len(vs) > 1 and vs[0] != vs[-1]:
        vs.append(vs[0])
    return Chain(1, [(1, (u, v)) for u, v in zip(vs, vs[1:]) if u != v])


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class Prop31Report:
    status: Status
    failing_index: Optional[int]
    total: Optional[Chain]
    lhs: Optional[Scalar]
    rhs: Optional[Scalar]


@dataclass
class Lemma32Report:
    status: Status
    g: Chain
    weight_g: Scalar
    weight_neg_g: Scalar
    lhs: Optional[Scalar]
    rhs: Optional[Scalar]


def check_prop31(f: WeightSystem, coeffs: Sequence[int], chains: Sequence[Chain]) -> Prop31Report:
    """Check ``W(S) = W(-S)`` for ``S = sum s_i c_i`` given ``W(c_i) = W(-c_i)``.

    An instance violating the hypothesis is reported as NOT_APPLICABLE, so a
    FAILS status always means the conclusion itself was falsified.
    """
    if len(coeffs) != len(chains):
        raise ValueError("coefficients and chains must align")
    if any(s == 0 for s in coeffs):
        raise ValueError("coefficients must be nonzero")
    for idx, c in enumerate(chains):
        if chain_weight(f, c) != chain_weight(f, -c):
            return Prop31Report(Status.NOT_APPLICABLE, idx, None, None, None)
    q = chains[0].q if chains else 1
    total = chain_sum((s * c for s, c in zip(coeffs, chains)), q)
    lhs, rhs = chain_weight(f, total), chain_weight(f, -total)
    return Prop31Report(Status.HOLDS if lhs == rhs else Status.FAILS, None, total, lhs, rhs)


def check_lemma32(f: WeightSystem, seq: SimplexSequence, q: int = 1) -> Lemma32Report:
    g = sequence_sum(seq) if seq else Chain.zero(q)
    wg, wng = chain_weight(f, g), chain_weight(f, -g)
    if wg != wng:
        return Lemma32Report(Status.NOT_APPLICABLE, g, wg, wng, None, None)
    lhs, rhs = sequence_weight(f, seq), sequence_weight(f, negate_sequence(seq))
    return Lemma32Report(Status.HOLDS if lhs == rhs else Status.FAILS, g, wg, wng, lhs, rhs)


# --------------------------------------------------------- integer algebra

def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_integer(m: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None
                  ) -> Optional[List[int]]:
    """Some integer solution of ``M x = b``, or None if none exists.

    Column-style Hermite reduction: unimodular column operations bring M to
    lower echelon form H = M U, then H y = b is solved by forward
    substitution and x = U y.
    """
    rows = len(m)
    t = ncols if ncols is not None else (len(m[0]) if m else 0)
    h = [list(r) for r in m]
    u = [[int(i == j) for j in range(t)] for i in range(t)]

    def colop(p, j, a11, a12, a21, a22):
        # new_p = a11*col_p + a21*col_j ; new_j = a12*col_p + a22*col_j
        for mat in (h, u):
            for row in mat:
                cp, cj = row[p], row[j]
                row[p] = a11 * cp + a21 * cj
                row[j] = a12 * cp + a22 * cj

    pivots: Dict[int, int] = {}
    col = 0
    for i in range(rows):
        if col == t:
            break
        for j in range(col + 1, t):
            if h[i][j] == 0:
                continue
            a, bj = h[i][col], h[i][j]
            g, x, y = xgcd(a, bj)
            colop(col, j, x, -bj // g, y, a // g)
        if h[i][col] != 0:
            pivots[i] = col
            col += 1
    y_vec = [0] * t
    for i in range(rows):
        s = b[i] - sum(h[i][c] * y_vec[c] for c in range(col) if c != pivots.get(i))
        if i in pivots:
            p = pivots[i]
            if s % h[i][p]:
                return None
            y_vec[p] = s // h[i][p]
        elif s != 0:
            return None
    x_vec = [sum(u[r][c] * y_vec[c] for c in range(t)) for r in range(t)]
    if any(sum(m[i][c] * x_vec[c] for c in range(t)) != b[i] for i in range(rows)):
        raise AssertionError("integer solver produced a wrong solution")
    return x_vec


# ----------------------------------------------------------- cycle spaces

def cycle_space_rank(ug: UndirectedGraph) -> int:
    return len(ug.edges) - ug.n + len(ug.components())


def spanning_forest(ug: UndirectedGraph) -> Dict[int, Optional[int]]:
    """BFS parent map; roots are the smallest vertex of each component."""
    adj = ug.adjacency()
    parent: Dict[int, Optional[int]] = {}
    for root in range(1, ug.n + 1):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
    return parent


def _tree_edges(parent) -> set:
    return {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}


def non_tree_edges(ug: UndirectedGraph) -> List[Tuple[int, int]]:
    tree = _tree_edges(spanning_forest(ug))
    return sorted(e for e in ug.edges if e not in tree)


def _tree_path(parent, a: int, b: int) -> List[int]:
    up_a = [a]
    while parent[up_a[-1]] is not None:
        up_a.append(parent[up_a[-1]])
    depth_a = {v: k for k, v in enumerate(up_a)}
    path_b = [b]
    while path_b[-1] not in depth_a:
        path_b.append(parent[path_b[-1]])
    meet = path_b[-1]
    return up_a[: depth_a[meet] + 1] + path_b[-2::-1]


def fundamental_cycles(ug: UndirectedGraph) -> List[Tuple[int, ...]]:
    """One open vertex cycle per non-tree edge {u, v} (u < v), starting ``u, v, ...``."""
    parent = spanning_forest(ug)
    out = []
    for u, v in non_tree_edges(ug):
        back = _tree_path(parent, v, u)
        out.append(tuple([u] + back[:-1]))
    return out


def fundamental_cycle_basis(ug: UndirectedGraph) -> List[Chain]:
    return [chain_of_cycle(c) for c in fundamental_cycles(ug)]


def supported_on(c: Chain, ug: UndirectedGraph) -> bool:
    return c.q == 1 and all(s in ug.edges for s in c.terms)


def cycle_coordinates(ug: UndirectedGraph, c: Chain) -> List[int]:
    """Coordinates of a 1-cycle of ``ug`` in its fundamental cycle basis."""
    if not supported_on(c, ug) or not is_cycle(c):
        raise ValueError(f"{c!r} is not a 1-cycle of the graph")
    return [c.terms.get(e, 0) for e in non_tree_edges(ug)]


def kn_triangle_basis(n: int) -> List[Chain]:
    """Triangles ``[i,j] + [j,j+1] + [j+1,i]`` for ``1 <= i < j <= n-1``."""
    if n < 3:
        raise ValueError("K_n triangle basis needs n >= 3")
    return [chain_of_cycle((i, j, j + 1)) for i in range(1, n) for j in range(i + 1, n)]


def kn_triangle_cycles(n: int) -> List[Tuple[int, int, int]]:
    if n < 3:
        raise ValueError("K_n triangle basis needs n >= 3")
    return [(i, j, j + 1) for i in range(1, n) for j in range(i + 1, n)]


def express_in_basis(c: Chain, basis: Sequence[Chain]) -> Optional[List[int]]:
    """Integer coordinates ``lam`` with ``sum lam_t basis_t == c``, or None."""
    if c.q != 1 or not is_cycle(c):
        raise ValueError("input must be a 1-cycle")
    for b in basis:
        if b.q != 1 or not is_cycle(b):
            raise ValueError(f"basis element {b!r} is not a 1-cycle")
    edges = sorted(set(c.terms).union(*(b.terms for b in basis)))
    m = [[b.terms.get(e, 0) for b in basis] for e in edges]
    rhs = [c.terms.get(e, 0) for e in edges]
    lam = solve_integer(m, rhs, ncols=len(basis))
    if lam is None:
        return None
    if chain_sum((k * b for k, b in zip(lam, basis)), 1) != c:
        raise AssertionError("basis expansion does not reproduce the chain")
    return lam


def is_z_basis(ug: UndirectedGraph, candidate: Sequence[Chain]) -> bool:
    rows = [cycle_coordinates(ug, c) for c in candidate]
    if len(rows) != cycle_space_rank(ug):
        return False
    return abs(determinant(rows)) == 1


def chain_to_vertex_cycle(c: Chain) -> Optional[Tuple[int, ...]]:
    """Read a 1-chain as one consistently oriented simple cycle, if it is one."""
    if c.q != 1 or not c or any(abs(a) != 1 for _, a in c.items()):
        return None
    succ: Dict[int, int] = {}
    for (a, b), coef in c.items():
        u, v = (a, b) if coef > 0 else (b, a)
        if u in succ:
            return None
        succ[u] = v
    if sorted(succ) != sorted(succ.values()):
        return None
    start = min(succ)
    cyc = [start]
    while succ[cyc[-1]] != start:
        cyc.append(succ[cyc[-1]])
        if len(cyc) > len(succ):
            return None
    if len(cyc) != len(succ) or len(cyc) < 3:
        return None
    return tuple(cyc)


def recombined_cycle_basis(ug: UndirectedGraph, rng, moves: int = 400) -> List[Tuple[int, ...]]:
    """A random alternative Z-basis of simple cycles.

    Starts from the fundamental basis and applies elementary unimodular moves
    ``b_s <- b_s +/- b_t`` and ``b_s <- -b_s``, keeping a move only if every
    element stays a single consistently oriented cycle.
    """
    cur = fundamental_cycle_basis(ug)
    for _ in range(moves):
        if len(cur) < 2:
            break
        s, t = rng.sample(range(len(cur)), 2)
        cand = cur[s] + rng.choice((1, -1)) * cur[t]
        if chain_to_vertex_cycle(cand) is not None:
            cur[s] = cand
        if rng.random() < 0.1:
            cur[s] = -cur[s]
    return [chain_to_vertex_cycle(c) for c in cur]
