# src/boundtab/bounds.py
"""Lower bounds on code length and upper bounds on code size, in exact arithmetic."""
import math
from fractions import Fraction
from typing import Optional

from src.boundtab.arith import (
    ceil_div,
    ceil_fraction,
    ceil_log2,
    check_positive,
    check_q,
    floor_fraction,
    floor_log,
    floor_log2,
    sphere_volume,
    valuation,
)
from src.boundtab.schemas import DistanceDecomposition
from src.errors import Inapplicable, OddDistance


def griesmer(q: int, k: int, d: int) -> int:
    """g_q(k, d) = sum of ceil(d / q^i) for i < k."""
    check_q(q)
    check_positive(k=k, d=d)
    return sum(ceil_div(d, q**i) for i in range(k))


def plotkin_min_length(q: int, M: int, d: int) -> int:
    check_q(q)
    check_positive(d=d)
    if M < 2:
        raise ValueError(f"Plotkin length bound needs M >= 2, got {M}")
    return ceil_fraction(Fraction(d * (M - 1) * q, M * (q - 1)))


def plotkin_max_size(q: int, n: int, d: int) -> int:
    """Largest possible size of an (n, M, d)_q code when n < qd/(q-1)."""
    check_q(q)
    check_positive(n=n, d=d)
    if n * (q - 1) >= q * d:
        raise Inapplicable(f"Plotkin size bound needs n < qd/(q-1); got n={n}, d={d}, q={q}")
    return floor_fraction(Fraction(d * q, d * q - (q - 1) * n))


def plotkin_griesmer_coincides(q: int, k: int, d: int) -> bool:
    check_q(q)
    check_positive(k=k, d=d)
    return d % q ** (k - 1) == 0


def plotkin_binary_max_size(n: int, d: int) -> Optional[int]:
    """Binary Plotkin size bound with the even/odd refinement; None where it does not apply.

    Even d: 2 floor(d / (2d - n)) for n < 2d and 4d at n = 2d.
    Odd d: the even bound at (n + 1, d + 1).
    """
    check_positive(n=n, d=d)
    if d % 2:
        return plotkin_binary_max_size(n + 1, d + 1)
    if n < 2 * d:
        return 2 * (d // (2 * d - n))
    if n == 2 * d:
        return 4 * d
    return None


def plotkin_binary_min_length(M: int, d: int) -> int:
    """Smallest n >= d with 2^n >= M that the binary Plotkin size bound leaves room for M words."""
    check_positive(d=d)
    if M < 2:
        raise ValueError(f"size must be >= 2, got {M}")
    n = max(d, ceil_log2(M))
    while True:
        size = plotkin_binary_max_size(n, d)
        if size is None or size >= M:
            return n
        n += 1


def singleton_min_length(q: int, k: int, d: int) -> int:
    check_q(q)
    check_positive(k=k, d=d)
    return d + k - 1


def bound_a(k: int, d: int) -> int:
    """Length lower bound for binary systematic codes: k + ceil(3d/2) - 2."""
    check_positive(k=k, d=d)
    return k + ceil_div(3 * d, 2) - 2


def decompose_d(q: int, d: int) -> DistanceDecomposition:
    check_q(q)
    check_positive(d=d)
    l = floor_log(q, d)
    r = d // q**l
    return DistanceDecomposition(q=q, d=d, l=l, r=r, s=d - q**l * r)


def bound_b(q: int, k: int, d: int) -> int:
    check_positive(k=k)
    dec = decompose_d(q, d)
    head = q**dec.l * dec.r
    return d + sum(ceil_div(head, q**i) for i in range(1, k))


def _binary_head(d: int) -> int:
    """2^r - 2^s with r = ceil(log2(d+1)) and s = ceil(log2(2^r - d))."""
    r = ceil_log2(d + 1)
    s = ceil_log2(2**r - d)
    return 2**r - 2**s


def bound_b_binary(k: int, d: int) -> int:
    check_positive(k=k, d=d)
    if d % 2:
        raise OddDistance(f"binary Bound B needs an even distance, got {d}")
    head = _binary_head(d)
    return d + sum(ceil_div(head, 2**i) for i in range(1, k))


def bound_b_binary_max_k(n: int, d: int) -> int:
    """Largest k whose binary Bound B still allows length n."""
    check_positive(n=n, d=d)
    if d % 2:
        raise OddDistance(f"binary Bound B needs an even distance, got {d}")
    if n < d:
        raise ValueError(f"length {n} is below the distance {d}")
    k = 1
    while bound_b_binary(k + 1, d) <= n:
        k += 1
    return k


def bound_c(q: int, k: int, d: int) -> int:
    check_q(q)
    check_positive(k=k, d=d)
    h = min(k - 1, valuation(q, d))
    return sum(ceil_div(d, q**i) for i in range(h + 1))


def bound_c_size(q: int, M: int, d: int) -> int:
    """Bound C for an arbitrary size, through the largest k with q^k <= M."""
    check_q(q)
    if M < 2:
        raise ValueError(f"size must be >= 2, got {M}")
    return bound_c(q, max(1, floor_log(q, M)), d)


def griesmer_increment(k: int, d: int) -> int:
    """g_2(k, d+1) - g_2(k, d)."""
    check_positive(k=k, d=d)
    return min(k, valuation(2, d) + 1)


def ls_sequence(s: int) -> list[int]:
    check_positive(s=s)
    return [valuation(2, delta) for delta in range(1, 2**s + 1)]


def ts_value(s: int) -> int:
    return sum(ls_sequence(s))


def n2_4(d: int) -> int:
    """Shortest length of a binary code with 4 words and distance d."""
    check_positive(d=d)
    return 3 * d // 2 if d % 2 == 0 else 3 * (d + 1) // 2 - 1


def n2_8(d: int) -> int:
    """Shortest length of a binary code with 8 words and distance d."""
    check_positive(d=d)
    h, rho = divmod(d, 4)
    return 7 * h + (0, 3, 4, 6)[rho]


def critical_dimensions(q: int, d: int) -> list[int]:
    """All k with q^(k-1) < d."""
    check_q(q)
    check_positive(d=d)
    dims, k = [], 1
    while q ** (k - 1) < d:
        dims.append(k)
        k += 1
    return dims


def _check_binary_query(n: int, d: int) -> None:
    check_positive(n=n, d=d)
    if d > n:
        raise ValueError(f"distance {d} exceeds length {n}")


def elias_max_dim(n: int, d: int) -> int:
    """floor(log2) of the binary Elias size bound, minimised over the radius w."""
    _check_binary_query(n, d)
    best = None
    for w in range(n // 2 + 1):
        denominator = 2 * w * w - 2 * n * w + n * d
        if denominator <= 0:
            continue
        value = Fraction(n * d, denominator) * Fraction(2**n, sphere_volume(n, w))
        if best is None or value < best:
            best = value
    if best is None:
        raise Inapplicable(f"no admissible Elias radius for n={n}, d={d}")
    return floor_log2(best)


def hamming_max_dim(n: int, d: int) -> int:
    _check_binary_query(n, d)
    return floor_log2(Fraction(2**n, sphere_volume(n, (d - 1) // 2)))


def johnson_max_dim(n: int, d: int) -> int:
    """floor(log2) of the restricted Johnson bound; even d goes through A(n-1, d-1)."""
    _check_binary_query(n, d)
    if d % 2 == 0:
        n, d = n - 1, d - 1
        if n < 1:
            return 0
    e = (d - 1) // 2
    excess = math.comb(n, e + 1) - math.comb(n, e) * ((n - e) // (e + 1))
    denominator = sphere_volume(n, e) + Fraction(max(0, excess), n // (e + 1))
    return floor_log2(Fraction(2**n) / denominator)
