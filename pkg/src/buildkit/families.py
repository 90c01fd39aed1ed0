# src/buildkit/families.py
"""Code families: simplex generators, the dimension-3 Griesmer-attaining
generators, Levenshtein codes read off Hadamard matrices and the systematic
concatenations that beat the Griesmer bound."""
import logging
from typing import Union

import numpy as np

from src.buildkit.hadamard import (
    HadamardMatrix,
    hadamard_of_order,
    kronecker_hadamard,
    paley2_hadamard,
    paley_hadamard,
    sylvester_hadamard,
)
from src.buildkit.recipe import ConstructionRecipe
from src.codekit import Code, GeneratorMatrix, puncture, repeat
from src.errors import OutOfRange, SizeTooLarge
from src.fieldcore import field_new

logger = logging.getLogger("buildkit")

MAX_SIMPLEX_DIM = 16

I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
N3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
ONES3 = [[1], [1], [1]]


def _hcat(*blocks: list[list[int]]) -> list[list[int]]:
    return [sum((block[i] for block in blocks), []) for i in range(3)]


G3 = _hcat(I3, N3, ONES3)


def simplex(k: int) -> GeneratorMatrix:
    """k x (2^k - 1) matrix whose column j is j + 1 in binary, row 0 most significant."""
    if not 1 <= k <= MAX_SIMPLEX_DIM:
        raise OutOfRange(f"simplex dimension {k} outside [1, {MAX_SIMPLEX_DIM}]")
    columns = np.arange(1, 2**k, dtype=np.int64)
    rows = [((columns >> (k - 1 - i)) & 1).tolist() for i in range(k)]
    return GeneratorMatrix.from_rows(field_new(2), rows)


def simplex_identity_columns(k: int) -> tuple[int, ...]:
    """Columns of simplex(k) holding unit vectors, in increasing order."""
    return tuple(sorted(2 ** (k - 1 - i) - 1 for i in range(k)))


def dim3_optimal(d: int) -> GeneratorMatrix:
    """Binary [g_2(3, d), 3, d] generator, d = 4h + rho."""
    if d < 1:
        raise ValueError(f"distance must be >= 1, got {d}")
    h, rho = divmod(d, 4)
    blocks = [G3] * h
    blocks += {0: [], 1: [I3], 2: [I3, ONES3], 3: [I3, N3]}[rho]
    return GeneratorMatrix.from_rows(field_new(2), _hcat(*blocks))


def _levenshtein_rows(matrix: HadamardMatrix, size: int) -> list[tuple[int, ...]]:
    if matrix.order < 4:
        raise OutOfRange(f"Levenshtein codes need a Hadamard order >= 4, got {matrix.order}")
    if not 1 <= size <= matrix.order:
        raise SizeTooLarge(f"cannot take {size} words from a Hadamard matrix of order {matrix.order}")
    bits = (matrix.normalized() < 0).astype(np.int64)[:size, 1:]
    return [tuple(row) for row in bits.tolist()]


def levenshtein_code(matrix: HadamardMatrix, size: int) -> Code:
    """Equidistant (order - 1, size, order / 2) binary code from a normalized Hadamard matrix."""
    rows = _levenshtein_rows(matrix, size)
    return Code.from_words(field_new(2), rows, n=matrix.order - 1)


def counterexample_ck(k: int) -> Code:
    """Systematic (2^(k+1) + 2, 2^k, 2^k + 2) equidistant code.

    Simplex codewords in message order are paired with Levenshtein codewords
    from a Hadamard matrix of order 2^k + 4 in row order. The simplex unit
    columns are the systematic coordinates.
    """
    if k < 2:
        raise OutOfRange(f"the concatenated family starts at k = 2, got {k}")
    simplex_words = simplex(k).codewords()
    matrix = hadamard_of_order(2**k + 4)
    tail = _levenshtein_rows(matrix, 2**k)
    words = [s + t for s, t in zip(simplex_words, tail)]
    code = Code.from_words(field_new(2), words, n=2 ** (k + 1) + 2, systematic_coords=simplex_identity_columns(k))
    logger.info(f"Built C_{k} {code} with Hadamard {matrix.recipe.describe()}")
    return code


def punctured_counterexample(k: int) -> Code:
    """C_k with its last coordinate removed: (2^(k+1) + 1, 2^k, 2^k + 1), still systematic."""
    code = counterexample_ck(k)
    return puncture(code, [code.n - 1])


def simplex_sequence(k: int, h: int) -> Code:
    if h < 1:
        raise ValueError(f"repetition count must be >= 1, got {h}")
    return repeat(simplex(k).span(), h)


Construction = Union[Code, GeneratorMatrix, HadamardMatrix]


def build(recipe: ConstructionRecipe) -> Construction:
    """Dispatch a recipe to its constructor."""
    p = recipe.parameters
    builders = {
        "simplex": lambda: simplex(p["k"]),
        "dim3": lambda: dim3_optimal(p["d"]),
        "sylvester": lambda: sylvester_hadamard(p["m"]),
        "paley1": lambda: paley_hadamard(p["p"]),
        "paley2": lambda: paley2_hadamard(p["p"]),
        "kronecker": lambda: kronecker_hadamard(hadamard_of_order(p["a"]), hadamard_of_order(p["b"])),
        "hadamard": lambda: hadamard_of_order(p["n"]),
        "levenshtein": lambda: levenshtein_code(hadamard_of_order(p["order"]), p.get("size", p["order"])),
        "counterexample": lambda: counterexample_ck(p["k"]),
        "punctured_counterexample": lambda: punctured_counterexample(p["k"]),
        "simplex_sequence": lambda: simplex_sequence(p["k"], p["h"]),
    }
    if recipe.family not in builders:
        raise ValueError(f"Unsupported construction family: {recipe.family}")
    try:
        result = builders[recipe.family]()
    except KeyError as e:
        raise ValueError(f"{recipe.family} needs parameter {e.args[0]!r}") from None
    logger.info(f"Constructed {recipe.describe()}")
    return result
