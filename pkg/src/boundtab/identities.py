# src/boundtab/identities.py
"""Checks of the binary Griesmer-function identities and related coincidences.

Each ``*_holds`` function tests one instance; the ``run_*`` functions sweep a
parameter range and collect failures in a VerificationReport.
"""
import logging

from src.boundtab.bounds import (
    bound_b,
    decompose_d,
    griesmer,
    griesmer_increment,
    ls_sequence,
    n2_8,
    plotkin_binary_min_length,
    plotkin_griesmer_coincides,
    plotkin_min_length,
    ts_value,
)
from src.boundtab.schemas import VerificationReport

logger = logging.getLogger("boundtab")

# ls_sequence tables for s = 1..4 as printed alongside the increment identity.
PRINTED_LS_TABLES = {
    1: [0, 1],
    2: [0, 1, 0, 2],
    3: [0, 1, 0, 2, 0, 1, 0, 3],
    4: [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4],
}


def increment_holds(k: int, d: int) -> bool:
    return griesmer(2, k, d + 1) - griesmer(2, k, d) == griesmer_increment(k, d)


def doubling_holds(k: int, r: int) -> bool:
    """g_2(k, 2^(r+1)) = 2 g_2(k, 2^r) for k <= r + 1."""
    return griesmer(2, k, 2 ** (r + 1)) == 2 * griesmer(2, k, 2**r)


def difference_holds(k: int, r: int, s: int) -> bool:
    """g_2(k, 2^r) - g_2(k, 2^r - 2^s) = 2^(s+1) - 1 for r > s >= 1, k > s + 1."""
    return griesmer(2, k, 2**r) - griesmer(2, k, 2**r - 2**s) == 2 ** (s + 1) - 1


def power_bound_holds(k: int, r: int) -> bool:
    return griesmer(2, k, 2**r) < 2 ** (r + 1)


def ls_structure_holds(s: int) -> bool:
    """ls(s) is ls(s-1) twice over with the final entry raised by one."""
    if s == 1:
        return ls_sequence(1) == [0, 1]
    prev = ls_sequence(s - 1)
    expected = prev + prev[:-1] + [prev[-1] + 1]
    return ls_sequence(s) == expected and ts_value(s) == 2**s - 1


def run_lemma_suite(r_max: int = 12, k_max: int = 12, d_max: int = 512, s_max: int = 16) -> VerificationReport:
    report = VerificationReport(name="lemmas", passed=True)

    for k in range(1, k_max + 1):
        for d in range(1, d_max + 1):
            report.record(increment_holds(k, d), f"increment k={k} d={d}")

    for r in range(0, r_max + 1):
        for k in range(1, r + 2):
            report.record(doubling_holds(k, r), f"doubling k={k} r={r}")
        for k in range(1, r + 1):
            report.record(power_bound_holds(k, r), f"power bound k={k} r={r}")
        for s in range(1, r):
            for k in range(s + 2, max(k_max, s + 2) + 1):
                report.record(difference_holds(k, r, s), f"difference k={k} r={r} s={s}")

    for s, table in PRINTED_LS_TABLES.items():
        report.record(ls_sequence(s) == table, f"ls table s={s}")
    for s in range(1, s_max + 1):
        report.record(ls_structure_holds(s), f"ls structure s={s}")

    report.details = {"r_max": r_max, "k_max": k_max, "d_max": d_max, "s_max": s_max}
    logger.info(f"Lemma suite: {report.checks} checks, {len(report.failures)} failures")
    return report


def run_plotkin_suite(qs=(2, 3, 4, 5), k_max: int = 6, h_max: int = 8) -> VerificationReport:
    """Plotkin and Griesmer agree on M = q^k whenever q^(k-1) divides d."""
    report = VerificationReport(name="plotkin-griesmer", passed=True)
    for q in qs:
        for k in range(1, k_max + 1):
            for h in range(1, h_max + 1):
                d = q ** (k - 1) * h
                ok = plotkin_griesmer_coincides(q, k, d) and plotkin_min_length(q, q**k, d) == griesmer(q, k, d)
                report.record(ok, f"q={q} k={k} d={d}")
    report.details = {"qs": list(qs), "k_max": k_max, "h_max": h_max}
    return report


def run_bound_b_suite(q_max: int = 5, k_max: int = 8, d_max: int = 200) -> VerificationReport:
    """Bound B never exceeds Griesmer and meets it exactly when d = q^l r."""
    report = VerificationReport(name="bound-b", passed=True)
    for q in (2, 3, 4, 5):
        if q > q_max:
            continue
        for k in range(1, k_max + 1):
            for d in range(1, d_max + 1):
                b, g = bound_b(q, k, d), griesmer(q, k, d)
                exact = decompose_d(q, d).s == 0
                # with k = 1 both reduce to d
                ok = b <= g and (b == g) == (exact or k == 1)
                report.record(ok, f"q={q} k={k} d={d}")
    return report


def run_n2_8_suite(d_max: int = 1000) -> VerificationReport:
    """n2_8, the binary Plotkin length for 8 words, and g_2(3, d) all agree."""
    report = VerificationReport(name="n2-8", passed=True)
    for d in range(1, d_max + 1):
        ok = n2_8(d) == griesmer(2, 3, d) == plotkin_binary_min_length(8, d)
        report.record(ok, f"d={d}")
    report.details = {"d_max": d_max}
    return report
