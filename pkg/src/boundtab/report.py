# src/boundtab/report.py
"""Evaluate every applicable length bound at a query and tag each with the
widest code class it is valid for."""
import logging
from typing import Optional

from src.boundtab.bounds import (
    bound_a,
    bound_b,
    bound_b_binary,
    bound_c,
    bound_c_size,
    decompose_d,
    griesmer,
    plotkin_binary_min_length,
    plotkin_min_length,
    singleton_min_length,
)
from src.boundtab.arith import check_positive, check_q, floor_log
from src.boundtab.schemas import BestValues, BoundEntry, BoundQuery, BoundReport, GriesmerStatus

logger = logging.getLogger("boundtab")

ANY, SYSTEMATIC, LINEAR = "any", "systematic", "linear"


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _is_two_power_difference(d: int) -> bool:
    """d = 2^r - 2^s with r > s >= 1."""
    if d <= 0 or d % 2:
        return False
    low = d & -d
    return _is_power_of_two(d + low)


def _certified_family(q: int, k: int, d: int) -> Optional[str]:
    if k == 1:
        return "k = 1"
    if d <= 2 * q:
        return "d <= 2q"
    if d % q ** (k - 1) == 0:
        return "q^(k-1) divides d"
    if decompose_d(q, d).s == 0:
        return "d = q^l r with r < q"
    if q == 2:
        if k <= 3:
            return "binary k <= 3"
        if _is_two_power_difference(d):
            return "binary d = 2^r - 2^s"
        if d % 2 and (_is_power_of_two(d + 1) or _is_two_power_difference(d + 1)):
            return "binary odd companion of 2^r - 2^s"
    return None


def griesmer_systematic_status(q: int, k: int, d: int, check_construction: bool = True) -> GriesmerStatus:
    """Whether g_q(k, d) is known to bound systematic codes too.

    ``violated`` marks the binary distances 2^k + 1 and 2^k + 2 with k > 3,
    beaten by the concatenated simplex/Hadamard family whenever a Hadamard
    matrix of order 2^k + 4 exists.
    """
    check_q(q)
    check_positive(k=k, d=d)
    family = _certified_family(q, k, d)
    if family is not None:
        return GriesmerStatus(status="certified", family=family)
    if q == 2 and k > 3 and d in (2**k + 1, 2**k + 2):
        order = 2**k + 4
        constructible = None
        if check_construction:
            from src.buildkit.hadamard import hadamard_order_supported

            constructible = hadamard_order_supported(order)
        return GriesmerStatus(status="violated", family="simplex + Hadamard concatenation", hadamard_order=order, constructible=constructible)
    return GriesmerStatus(status="unknown")


def _best(entries: list[BoundEntry]) -> BestValues:
    def top(classes):
        return max(e.value for e in entries if e.bound_class in classes)

    best_any = top({ANY})
    best_sys = max(best_any, top({ANY, SYSTEMATIC}))
    best_lin = max(best_sys, top({ANY, SYSTEMATIC, LINEAR}))
    return BestValues(any=best_any, systematic=best_sys, linear=best_lin)


def _entry(bound: str, value: int, bound_class: str, ref: str) -> BoundEntry:
    return BoundEntry(bound=bound, value=value, bound_class=bound_class, ref=ref)


def _dimension_entries(q: int, k: int, d: int) -> list[BoundEntry]:
    entries = [
        _entry("singleton", singleton_min_length(q, k, d), ANY, "singleton-bound"),
        _entry("plotkin", plotkin_min_length(q, q**k, d), ANY, "plotkin-length-bound"),
        _entry("bound_c", bound_c(q, k, d), ANY, "bound-c"),
        _entry("bound_b", bound_b(q, k, d), SYSTEMATIC, "bound-b"),
    ]
    if q == 2:
        entries.append(_entry("plotkin_binary", plotkin_binary_min_length(2**k, d), ANY, "plotkin-binary"))
        if k >= 2:
            # needs a second systematic coordinate
            entries.append(_entry("bound_a", bound_a(k, d), SYSTEMATIC, "bound-a"))
        if d % 2 == 0:
            entries.append(_entry("bound_b_binary", bound_b_binary(k, d), SYSTEMATIC, "bound-b-binary"))
    status = griesmer_systematic_status(q, k, d, check_construction=False)
    g_class = SYSTEMATIC if status.status == "certified" else LINEAR
    entries.append(_entry("griesmer", griesmer(q, k, d), g_class, f"griesmer-bound ({status.family or status.status})"))
    return entries


def _size_entries(q: int, M: int, d: int) -> list[BoundEntry]:
    # ceil(log_q M) information symbols
    k = floor_log(q, M - 1) + 1 if M > 1 else 0
    entries = [
        _entry("singleton", singleton_min_length(q, k, d), ANY, "singleton-bound"),
        # two distinct words already need length d, which matters when M < q
        _entry("plotkin", max(d, plotkin_min_length(q, M, d)), ANY, "plotkin-length-bound"),
        _entry("bound_c", bound_c_size(q, M, d), ANY, "bound-c"),
    ]
    if q == 2:
        entries.append(_entry("plotkin_binary", plotkin_binary_min_length(M, d), ANY, "plotkin-binary"))
    return entries


def report(q: int, d: int, k: Optional[int] = None, M: Optional[int] = None) -> BoundReport:
    """Every applicable length lower bound for (q, k, d) or (q, M, d).

    A size that is a power of q is evaluated as the matching dimension, so
    systematic and linear bounds appear as well. For other sizes no systematic
    or linear code exists and the three maxima coincide.
    """
    if (k is None) == (M is None):
        raise ValueError("exactly one of k and M must be given")
    check_q(q)
    check_positive(d=d)
    query = BoundQuery(q=q, d=d, k=k, M=M)

    if M is not None:
        if M < 2:
            raise ValueError(f"size must be >= 2, got {M}")
        power = floor_log(q, M)
        if q**power == M:
            k = power
    if k is not None:
        check_positive(k=k)
        entries = _dimension_entries(q, k, d)
    else:
        entries = _size_entries(q, M, d)

    result = BoundReport(query=query, entries=entries, best=_best(entries))
    logger.debug(f"Bound report for q={q} d={d} k={k} M={M}: best={result.best}")
    return result
