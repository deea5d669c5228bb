"""Exact scalars: Python ints, normalized Fractions and sparse integer polynomials.

Integers embed into both rationals and polynomials.  Rationals and
polynomials never mix.
"""

from __future__ import annotations

import re
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]


class DomainError(TypeError):
    """Raised when two scalars come from domains with no common embedding."""


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: Dict[str, int] = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m: Monomial):
    # graded, then lexicographic on (var, exp); fixes a total order for printing
    return (-sum(e for _, e in m), m)


class Poly:
    """Polynomial with integer coefficients in named indeterminates.

    Terms live in a dict keyed by monomials, a monomial being a sorted tuple
    of ``(variable, exponent)`` pairs with positive exponents.  Zero
    coefficients are never stored, so two equal polynomials always have
    equal term dicts.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise DomainError(f"polynomial coefficients must be int, got {c!r}")
                if c:
                    mono = tuple(sorted((v, e) for v, e in mono if e))
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._raw({((name, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(): c} if c else {})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly.const(other)
        raise DomainError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = factors
            else:
                body = f"{abs(c)}*{factors}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


Scalar = Union[int, Fraction, Poly]


def entry_var(i: int, j: int) -> Poly:
    """The indeterminate standing for matrix entry (i, j)."""
    return Poly.var(f"x{i}_{j}")


def domain_of(x: Scalar) -> str:
    if isinstance(x, bool):
        raise DomainError("bool is not a scalar")
    if isinstance(x, int):
        return "integer"
    if isinstance(x, Fraction):
        return "rational"
    if isinstance(x, Poly):
        return "polynomial"
    raise DomainError(f"unsupported scalar type {type(x).__name__}")


def common_domain(*xs: Scalar) -> str:
    kinds = {domain_of(x) for x in xs}
    kinds.discard("integer")
    if len(kinds) > 1:
        raise DomainError(f"no common embedding for domains {sorted(kinds)}")
    return kinds.pop() if kinds else "integer"


def add(a: Scalar, b: Scalar) -> Scalar:
    common_domain(a, b)
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    common_domain(a, b)
    return a * b


def neg(a: Scalar) -> Scalar:
    domain_of(a)
    return -a


def power(a: Scalar, k: int) -> Scalar:
    domain_of(a)
    if not isinstance(k, int) or k < 0:
        raise ValueError("exponent must be a non-negative integer")
    return a ** k


def is_zero(a: Scalar) -> bool:
    domain_of(a)
    return not a


def eq(a: Scalar, b: Scalar) -> bool:
    common_domain(a, b)
    return a == b


def product(xs: Iterable[Scalar]) -> Scalar:
    out: Scalar = 1
    for x in xs:
        out = out * x
    return out


def is_canonical(x: Scalar) -> bool:
    """Re-normalize `x` from its raw parts and compare representations."""
    kind = domain_of(x)
    if kind == "integer":
        return True
    if kind == "rational":
        return x.denominator >= 1 and gcd(abs(x.numerator), x.denominator) == 1
    rebuilt = Poly(x.terms)
    return rebuilt.terms == x.terms and all(c for c in x.terms.values()) and all(
        list(m) == sorted(m) and all(e > 0 for _, e in m) for m in x.terms
    )


@dataclass(frozen=True, eq=False)
class Ratio:
    """Formal quotient num/den in the fraction field; never reduced."""

    num: Scalar
    den: Scalar

    def __post_init__(self):
        common_domain(self.num, self.den)
        if is_zero(self.num) or is_zero(self.den):
            raise ValueError("ratio components must be nonzero")

    def __eq__(self, other):
        if not isinstance(other, Ratio):
            return NotImplemented
        return ratio_eq(self, other)

    __hash__ = None

    def is_one(self) -> bool:
        return self.num == self.den


def ratio_eq(r1: Ratio, r2: Ratio) -> bool:
    return eq(mul(r1.num, r2.den), mul(r2.num, r1.den))


_INT_RE = re.compile(r"-?[0-9]+")
_RAT_RE = re.compile(r"(-?[0-9]+)/([1-9][0-9]*)")


def parse_scalar(text: str) -> Scalar:
    """Parse an integer or rational literal; anything else is rejected."""
    if _INT_RE.fullmatch(text):
        return int(text)
    m = _RAT_RE.fullmatch(text)
    if m:
        q = Fraction(int(m.group(1)), int(m.group(2)))
        return q
    raise ValueError(f"malformed entry {text!r}: expected integer or p/q")


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)
