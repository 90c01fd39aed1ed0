# src/boundtab/arith.py
"""Exact integer helpers. Nothing in boundtab touches floating point."""
import math
from fractions import Fraction

from src.fieldcore import prime_power


def check_q(q: int) -> None:
    prime_power(q)


def check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_fraction(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


def floor_log(q: int, d: int) -> int:
    """Largest l with q**l <= d."""
    l, power = 0, q
    while power <= d:
        power *= q
        l += 1
    return l


def ceil_log2(x: int) -> int:
    """Smallest r with 2**r >= x."""
    return (x - 1).bit_length() if x > 1 else 0


def valuation(q: int, d: int) -> int:
    """Largest l with q**l dividing d."""
    l = 0
    while d % q == 0:
        d //= q
        l += 1
    return l


def floor_log2(x: Fraction) -> int:
    """floor(log2 x) for a positive rational."""
    if x <= 0:
        raise ValueError(f"log of non-positive value {x}")
    if x >= 1:
        return floor_fraction(x).bit_length() - 1
    l = -1
    while Fraction(1, 2 ** -l) > x:
        l -= 1
    return l


def sphere_volume(n: int, radius: int) -> int:
    return sum(math.comb(n, i) for i in range(radius + 1))
