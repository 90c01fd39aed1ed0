# src/fieldcore/field.py
"""Exact arithmetic in the small fields GF(q), q in {2, 3, 4, 5, 7, 8, 9}.

Elements are canonical integers in [0, q). For q = p^m with m > 1 the integer
a encodes the polynomial sum(a_i x^i) whose coefficients a_i are the base-p
digits of a, reduced modulo a fixed monic irreducible polynomial.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from src.errors import DivisionByZero, FieldMismatch, NotPrimePower, UnsupportedOrder

logger = logging.getLogger("fieldcore")

MAX_ORDER = 9


def is_prime(n: int) -> bool:
    """Trial division; only ever called with small integers."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, m


def _to_digits(a: int, p: int, m: int) -> list[int]:
    return [(a // p**i) % p for i in range(m)]


def _from_digits(digits: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(digits))


def _has_root(coeffs: list[int], p: int) -> bool:
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree m (2 or 3) over GF(p).

    Candidates are ordered by the integer sum(c_i p^i) of their lower
    coefficients, so over GF(2) the cubic chosen is x^3 + x + 1. A polynomial of
    degree 2 or 3 is irreducible iff it has no root.
    """
    for low in range(p**m):
        coeffs = _to_digits(low, p, m) + [1]
        if coeffs[0] != 0 and not _has_root(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for t in range(len(prod) - 1, m - 1, -1):
        coef = prod[t]
        if coef:
            for i, c in enumerate(modulus):
                prod[t - m + i] = (prod[t - m + i] - coef * c) % p
    return prod[:m]


@dataclass(frozen=True)
class FieldSpec:
    q: int
    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[int, ...]

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.add_table[a].index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return self.inv_table[a]

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def validate(self) -> None:
        """Check every field axiom exhaustively over the tables."""
        q, add, mul = self.q, self.add_table, self.mul_table
        els = range(q)
        for a, b in itertools.product(els, repeat=2):
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise ValueError(f"GF({q}) tables are not commutative at ({a}, {b})")
        for a, b, c in itertools.product(els, repeat=3):
            if add[add[a][b]][c] != add[a][add[b][c]]:
                raise ValueError(f"GF({q}) addition not associative at ({a}, {b}, {c})")
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ValueError(f"GF({q}) multiplication not associative at ({a}, {b}, {c})")
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise ValueError(f"GF({q}) not distributive at ({a}, {b}, {c})")
        for a in els:
            if add[a][0] != a or mul[a][1] != a or 0 not in add[a]:
                raise ValueError(f"GF({q}) identity or additive inverse fails at {a}")
            if a and mul[a][self.inv_table[a]] != 1:
                raise ValueError(f"GF({q}) inverse table wrong at {a}")

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of GF({self.field.q})")

    def _check(self, other: "FieldElement") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"GF({self.field.q}) and GF({other.field.q}) elements mixed")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __int__(self) -> int:
        return self.value


@lru_cache(maxsize=None)
def field_new(q: int) -> FieldSpec:
    """Build and validate GF(q)."""
    p, m = prime_power(q)
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"GF({q}) is outside the supported orders (q <= {MAX_ORDER})")

    if m == 1:
        modulus: tuple[int, ...] = ()
        add_table = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul_table = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        modulus = smallest_irreducible(p, m)
        digits = [_to_digits(a, p, m) for a in range(q)]
        add_table = tuple(
            tuple(_from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
            for a in range(q)
        )
        mul_table = tuple(
            tuple(_from_digits(_poly_mul_mod(digits[a], digits[b], modulus, p), p) for b in range(q))
            for a in range(q)
        )
    inv_table = tuple([0] + [mul_table[a].index(1) for a in range(1, q)])

    spec = FieldSpec(q=q, p=p, m=m, modulus=modulus, add_table=add_table, mul_table=mul_table, inv_table=inv_table)
    spec.validate()
    logger.debug(f"Built GF({q}) with modulus {list(modulus)}")
    return spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.field, a.field.add(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.field, a.field.mul(a.value, b.value))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.neg(a.value))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def quadratic_residues(p: int) -> frozenset[int]:
    """Nonzero squares modulo an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"quadratic residues need an odd prime, got {p}")
    return frozenset(x * x % p for x in range(1, p))


def quadratic_character(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
