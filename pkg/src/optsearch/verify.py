# src/optsearch/verify.py
import logging
from itertools import combinations
from typing import Optional

import numpy as np

from src.boundtab import VerificationReport, critical_dimensions, griesmer, n2_4, n2_8
from src.buildkit import counterexample_ck, dim3_optimal, hadamard_of_order, levenshtein_code, punctured_counterexample, simplex
from src.codekit import Code, analyze, canonical_form, is_linear, min_distance, puncture
from src.codekit.equivalence import DEFAULT_EXACT_PRODUCT, DEFAULT_MAX_STATES
from src.errors import OutOfRange
from src.fieldcore import field_new
from src.optsearch.clique import binary_candidates, min_length_exhaustive
from src.optsearch.schemas import FamilyEntry, FourWordClassification, GriesmerFamilyReport, SearchBudget
from src.optsearch.systematic import MAX_MESSAGES, MAX_REDUNDANCY, min_length_systematic

logger = logging.getLogger("optsearch")

MAX_FOUR_WORD_DISTANCE = 8
MAX_N8_DISTANCE = 6


def classify_optimal_four(
    d: int, exact_product: int = DEFAULT_EXACT_PRODUCT, max_states: int = DEFAULT_MAX_STATES
) -> FourWordClassification:
    """Enumerate every (n2_4(d), 4, d) binary code containing 0, up to equivalence.

    The lightest nonzero word is normalised to 1^w 0^(n-w); any code containing
    0 reaches that form by a coordinate permutation, which keeps linearity.
    """
    if not 1 <= d <= MAX_FOUR_WORD_DISTANCE:
        raise OutOfRange(f"d={d} outside [1, {MAX_FOUR_WORD_DISTANCE}]")
    n = n2_4(d)
    gf = field_new(2)
    zero = tuple([0] * n)
    classes: dict[frozenset, Code] = {}
    enumerated = 0
    all_linear = True
    for w in range(d, n + 1):
        lead = tuple([1] * w + [0] * (n - w))
        candidates = binary_candidates(n, d, w)
        if len(candidates) < 2:
            continue
        arr = np.array(candidates, dtype=np.uint8)
        for i, j in combinations(range(len(candidates)), 2):
            if int((arr[i] != arr[j]).sum()) < d:
                continue
            code = Code.from_words(gf, [zero, lead, candidates[i], candidates[j]], n=n)
            enumerated += 1
            all_linear = all_linear and is_linear(code)
            key = canonical_form(code, exact_product=exact_product, max_states=max_states).words
            classes.setdefault(key, code)
    logger.info(f"d={d}: {enumerated} normalised (n={n}, 4, {d}) codes in {len(classes)} classes")
    return FourWordClassification(
        d=d,
        n=n,
        codes_enumerated=enumerated,
        count_up_to_equivalence=len(classes),
        all_linear=all_linear,
        witnesses=list(classes.values()),
    )


def verify_n4(d_max: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> VerificationReport:
    result = VerificationReport(name="n4", passed=True)
    for d in range(1, d_max + 1):
        expected = n2_4(d)
        found = min_length_exhaustive(2, 4, d, expected, budget=budget, workers=workers).raise_for_budget()
        result.record(found.value == expected, f"N2(4,{d}): search gave {found.value}, expected {expected}")
        result.details[str(d)] = found.value
    return result


def verify_n8(d_max: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> VerificationReport:
    if d_max > MAX_N8_DISTANCE:
        raise OutOfRange(f"d_max={d_max} exceeds {MAX_N8_DISTANCE}")
    result = VerificationReport(name="n8", passed=True)
    for d in range(1, d_max + 1):
        expected = n2_8(d)
        found = min_length_exhaustive(2, 8, d, expected, budget=budget, workers=workers).raise_for_budget()
        result.record(found.value == expected, f"N2(8,{d}): search gave {found.value}, expected {expected}")
        span = dim3_optimal(d).span()
        witness_ok = span.n == expected and span.size == 8 and min_distance(span) == d
        result.record(witness_ok, f"dim3_optimal({d}) is not an ({expected}, 8, {d}) code")
        result.details[str(d)] = found.value
    return result


def verify_griesmer_family(
    q: int, d: int, k_max: int, budget: Optional[SearchBudget] = None, workers: int = 1
) -> GriesmerFamilyReport:
    """Compare S_q(k, d) with the Griesmer bound over the critical dimensions."""
    family = GriesmerFamilyReport(q=q, d=d)
    for k in critical_dimensions(q, d):
        if k > k_max:
            break
        g = griesmer(q, k, d)
        if q**k > MAX_MESSAGES or g - k > MAX_REDUNDANCY:
            family.entries.append(FamilyEntry(k=k, griesmer=g, status="out_of_range"))
            continue
        found = min_length_systematic(q, k, d, g, budget=budget, workers=workers)
        if found.status == "budget_exceeded":
            entry = FamilyEntry(k=k, griesmer=g, status="budget_exceeded")
        elif found.found and found.value < g:
            entry = FamilyEntry(k=k, griesmer=g, status="violated", value=found.value, witness=found.witness)
        else:
            entry = FamilyEntry(k=k, griesmer=g, status="confirmed", value=found.value)
        logger.info(f"S_{q}({k},{d}) vs Griesmer {g}: {entry.status}")
        family.entries.append(entry)
    return family


def verify_counterexample(k: int) -> VerificationReport:
    """Check the parameters of C_k and its puncture and the size of their Griesmer gap."""
    result = VerificationReport(name=f"counterexample C_{k}", passed=True)
    code = counterexample_ck(k)
    analysis = analyze(code)
    n, size, d = 2 ** (k + 1) + 2, 2**k, 2**k + 2
    params = analysis.params
    result.record((params.n, params.M, params.d) == (n, size, d), f"C_{k} has parameters {params.label()}")
    result.record(analysis.equidistant, f"C_{k} is not equidistant")
    result.record(analysis.systematic, f"C_{k} is not systematic")
    if k >= 3:
        result.record(not analysis.linear, f"C_{k} is linear")

    simplex_len = 2**k - 1
    head = puncture(code, range(simplex_len, n))
    result.record(head.words == simplex(k).span().words, f"puncturing C_{k} does not recover S_{k}")
    tail = puncture(code, range(simplex_len))
    expected_tail = levenshtein_code(hadamard_of_order(2**k + 4), 2**k)
    result.record(tail.words == expected_tail.words, f"puncturing C_{k} does not recover D_{k}")

    g = griesmer(2, k, d)
    result.record(g - n == k - 3, f"Griesmer gap for C_{k} is {g - n}, expected {k - 3}")

    shorter = analyze(punctured_counterexample(k))
    g_short = griesmer(2, k, d - 1)
    result.record(
        (shorter.params.n, shorter.params.d) == (n - 1, d - 1) and shorter.systematic,
        f"punctured C_{k} has parameters {shorter.params.label()}",
    )
    result.record(g_short - (n - 1) == k - 3, f"Griesmer gap for punctured C_{k} is {g_short - (n - 1)}")

    result.details = {
        "length": n,
        "griesmer": g,
        "gap": g - n,
        "summary": analysis.summary(),
        "comparison": f"{n} < {g}" if n < g else f"{n} >= {g}",
    }
    logger.info(f"C_{k}: {analysis.summary()}, Griesmer {g}")
    return result
