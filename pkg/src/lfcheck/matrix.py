"""Dense exact matrices, powers, and the cyclic products of power entries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

from .exactring import Scalar, common_domain, format_scalar


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix of exact scalars.  Indexing via :meth:`at` is 1-based."""

    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        common_domain(*(x for r in rows for x in r))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Scalar]) -> "ExactMatrix":
        """Build from ``fn(i, j)`` with 1-based indices."""
        return cls(tuple(tuple(fn(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def domain(self) -> str:
        return common_domain(*(x for r in self.rows for x in r))

    def at(self, i: int, j: int) -> Scalar:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) out of range for order {self.n}")
        return self.rows[i - 1][j - 1]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def to_strings(self):
        return [[format_scalar(x) for x in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def identity(n: int) -> ExactMatrix:
    return ExactMatrix.from_function(n, lambda i, j: 1 if i == j else 0)


def zeros(n: int) -> ExactMatrix:
    return ExactMatrix.from_function(n, lambda i, j: 0)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    cols = list(zip(*b.rows))
    out = []
    for row in a.rows:
        new_row = []
        for col in cols:
            acc: Scalar = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            new_row.append(acc)
        out.append(tuple(new_row))
    return ExactMatrix(tuple(out))


def mat_pow(a: ExactMatrix, m: int) -> ExactMatrix:
    """Binary exponentiation; ``A^0`` is the identity."""
    if not isinstance(m, int) or m < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = identity(a.n)
    base = a
    first = True
    while m:
        if m & 1:
            result = base if first else mat_mul(result, base)
            first = False
        m >>= 1
        if m:
            base = mat_mul(base, base)
    return result


@dataclass(frozen=True)
class IdentityInstance:
    """Exponents m_1..m_k and cyclic index sequence i_1..i_k (1-based)."""

    exponents: Tuple[int, ...]
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.exponents:
            raise ValueError("instance needs k >= 1")
        if len(self.exponents) != len(self.indices):
            raise ValueError("exponents and indices must have the same length")
        if any((not isinstance(m, int)) or m < 1 for m in self.exponents):
            raise ValueError("exponents must be positive integers")
        if any((not isinstance(i, int)) or i < 1 for i in self.indices):
            raise ValueError("indices must be positive integers")

    @property
    def k(self) -> int:
        return len(self.exponents)

    def segments(self):
        """Yield ``(m_t, i_t, i_{t+1})`` with the index sequence closed up."""
        k = self.k
        for t in range(k):
            yield self.exponents[t], self.indices[t], self.indices[(t + 1) % k]

    def validate(self, n: int) -> None:
        bad = [i for i in self.indices if i > n]
        if bad:
            raise IndexError(f"index {bad[0]} out of range for order {n}")

    def __str__(self):
        return ",".join(map(str, self.exponents)) + ";" + ",".join(map(str, self.indices))

    @classmethod
    def parse(cls, text: str) -> "IdentityInstance":
        """Parse ``"m1,m2,...;i1,i2,..."``."""
        try:
            ms, idx = text.split(";")
            return cls(tuple(int(x) for x in ms.split(",")), tuple(int(x) for x in idx.split(",")))
        except ValueError as exc:
            raise ValueError(f"invalid instance {text!r}: {exc}") from None


def cycle_product(a: ExactMatrix, inst: IdentityInstance, direction: str = "forward") -> Scalar:
    if direction not in ("forward", "reverse"):
        raise ValueError("direction must be 'forward' or 'reverse'")
    inst.validate(a.n)
    powers: Dict[int, ExactMatrix] = {}
    acc: Scalar = 1
    for m, i, j in inst.segments():
        if m not in powers:
            powers[m] = mat_pow(a, m)
        p = powers[m]
        entry = p.at(i, j) if direction == "forward" else p.at(j, i)
        acc = acc * entry
    return acc
