# src/buildkit/hadamard.py
"""Hadamard matrices: Sylvester doubling, the two Paley constructions and
Kronecker products, plus the ``hadamard <n>`` text format."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from src.buildkit.recipe import ConstructionRecipe
from src.errors import BadPrime, CodeFileError, OutOfRange, UnknownOrder
from src.fieldcore import is_prime, quadratic_character

logger = logging.getLogger("buildkit")

MAX_ORDER = 1024


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    entries: np.ndarray
    recipe: ConstructionRecipe

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    def is_valid(self) -> bool:
        h = self.entries.astype(np.int64)
        n = self.order
        return (
            h.shape == (n, n)
            and bool(np.isin(h, (-1, 1)).all())
            and bool((h @ h.T == n * np.eye(n, dtype=np.int64)).all())
        )

    def normalized(self) -> np.ndarray:
        """Sign-flip columns, then rows, so the first row and first column are all +1."""
        h = self.entries.astype(np.int64)
        h = h * h[0, :][None, :]
        return h * h[:, 0][:, None]

    def __eq__(self, other) -> bool:
        return isinstance(other, HadamardMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())


def _verified(entries: np.ndarray, recipe: ConstructionRecipe) -> HadamardMatrix:
    matrix = HadamardMatrix(np.ascontiguousarray(entries, dtype=np.int8), recipe)
    if not matrix.is_valid():
        raise RuntimeError(f"{recipe.describe()} did not produce a Hadamard matrix")
    return matrix


def sylvester_hadamard(m: int) -> HadamardMatrix:
    if m < 0 or 2**m > MAX_ORDER:
        raise OutOfRange(f"Sylvester order 2^{m} outside [1, {MAX_ORDER}]")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        h = np.block([[h, h], [h, -h]])
    return _verified(h, ConstructionRecipe(family="sylvester", parameters={"m": m}, provenance="Sylvester doubling"))


def _jacobsthal(p: int) -> np.ndarray:
    """Q[i][j] = chi(j - i) over GF(p)."""
    chi = np.array([quadratic_character(a, p) for a in range(p)], dtype=np.int64)
    idx = np.arange(p)
    return chi[(idx[None, :] - idx[:, None]) % p]


def _check_prime(p: int, residue: int) -> None:
    if not is_prime(p) or p % 4 != residue:
        raise BadPrime(f"{p} is not a prime congruent to {residue} mod 4")


def paley_hadamard(p: int) -> HadamardMatrix:
    """Order p + 1 for a prime p = 3 mod 4: H = I + [[0, 1^T], [-1, Q]]."""
    _check_prime(p, 3)
    n = p + 1
    s = np.zeros((n, n), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = _jacobsthal(p)
    h = np.eye(n, dtype=np.int64) + s
    return _verified(h, ConstructionRecipe(family="paley1", parameters={"p": p}, provenance="Paley type I"))


def paley2_hadamard(p: int) -> HadamardMatrix:
    """Order 2(p + 1) for a prime p = 1 mod 4, from the symmetric conference matrix."""
    _check_prime(p, 1)
    n = p + 1
    c = np.zeros((n, n), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = 1
    c[1:, 1:] = _jacobsthal(p)
    plus = np.array([[1, 1], [1, -1]], dtype=np.int64)
    minus = np.array([[1, -1], [-1, -1]], dtype=np.int64)
    h = np.kron(c, plus) + np.kron(np.eye(n, dtype=np.int64), minus)
    return _verified(h, ConstructionRecipe(family="paley2", parameters={"p": p}, provenance="Paley type II"))


def kronecker_hadamard(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    if a.order * b.order > MAX_ORDER:
        raise OutOfRange(f"Kronecker order {a.order * b.order} exceeds {MAX_ORDER}")
    recipe = ConstructionRecipe(
        family="kronecker",
        parameters={"a": a.order, "b": b.order},
        provenance=f"{a.recipe.describe()} x {b.recipe.describe()}",
    )
    return _verified(np.kron(a.entries.astype(np.int64), b.entries.astype(np.int64)), recipe)


@lru_cache(maxsize=None)
def _construct(n: int) -> Optional[HadamardMatrix]:
    if n == 1:
        return sylvester_hadamard(0)
    if n == 2:
        return sylvester_hadamard(1)
    if n % 4:
        return None
    if n & (n - 1) == 0:
        return sylvester_hadamard(n.bit_length() - 1)
    if is_prime(n - 1) and (n - 1) % 4 == 3:
        return paley_hadamard(n - 1)
    if n % 2 == 0 and is_prime(n // 2 - 1) and (n // 2 - 1) % 4 == 1:
        return paley2_hadamard(n // 2 - 1)
    for a in range(2, n // 2 + 1):
        if n % a:
            continue
        left, right = _construct(a), _construct(n // a)
        if left is not None and right is not None:
            return kronecker_hadamard(left, right)
    return None


def hadamard_of_order(n: int) -> HadamardMatrix:
    """Try Sylvester, Paley I, Paley II, then Kronecker products of smaller orders."""
    if n < 1 or n > MAX_ORDER:
        raise UnknownOrder(f"Hadamard order {n} outside [1, {MAX_ORDER}]")
    matrix = _construct(n)
    if matrix is None:
        raise UnknownOrder(f"no supported construction reaches Hadamard order {n}")
    logger.debug(f"Hadamard order {n} via {matrix.recipe.describe()}")
    return matrix


def hadamard_order_supported(n: int) -> bool:
    try:
        hadamard_of_order(n)
    except UnknownOrder:
        return False
    return True


def format_hadamard(matrix: HadamardMatrix) -> str:
    rows = ["".join("+" if x > 0 else "-" for x in row) for row in matrix.entries.tolist()]
    return "\n".join([f"hadamard {matrix.order}", *rows]) + "\n"


def parse_hadamard(text: str) -> HadamardMatrix:
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    lines = [(i, line) for i, line in lines if line and not line.startswith("#")]
    if not lines:
        raise CodeFileError("empty Hadamard file", 1)
    first_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "hadamard" or not parts[1].isdigit():
        raise CodeFileError(f"expected 'hadamard <n>', got {header!r}", first_line)
    n = int(parts[1])
    body = lines[1:]
    if len(body) != n:
        raise CodeFileError(f"expected {n} rows, found {len(body)}", body[-1][0] if body else first_line)
    rows = []
    for lineno, line in body:
        if len(line) != n or set(line) - {"+", "-"}:
            raise CodeFileError(f"row must be {n} characters of '+' or '-'", lineno)
        rows.append([1 if ch == "+" else -1 for ch in line])
    matrix = HadamardMatrix(np.array(rows, dtype=np.int8), ConstructionRecipe(family="hadamard", parameters={"n": n}, provenance="file"))
    if not matrix.is_valid():
        raise CodeFileError(f"rows do not form a Hadamard matrix of order {n}")
    return matrix
