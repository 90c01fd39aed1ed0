# src/codekit/code.py
"""The code data model: explicit codeword sets, generator matrices and their analysis."""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from src.codekit.schemas import CodeAnalysis, CodeParams
from src.errors import FieldMismatch, LengthMismatch, NotSystematic, SizeNotPowerOfQ, TooFewWords
from src.fieldcore import FieldSpec, field_new

logger = logging.getLogger("codekit")

Word = tuple[int, ...]


def exact_log(q: int, size: int) -> Optional[int]:
    """k with q**k == size, or None."""
    k, power = 0, 1
    while power < size:
        power *= q
        k += 1
    return k if power == size else None


def weight(word: Sequence[int]) -> int:
    return sum(1 for x in word if x)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"words of length {len(u)} and {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


@dataclass(frozen=True)
class Code:
    field: FieldSpec
    n: int
    words: frozenset[Word]
    systematic_coords: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        q = self.field.q
        for w in self.words:
            if len(w) != self.n:
                raise LengthMismatch(f"word {w} has length {len(w)}, expected {self.n}")
            if any(not 0 <= x < q for x in w):
                raise ValueError(f"word {w} has symbols outside GF({q})")
        if self.systematic_coords is not None:
            self._check_systematic(self.systematic_coords)

    def _check_systematic(self, coords: tuple[int, ...]) -> None:
        k = len(coords)
        if len(set(coords)) != k or any(not 0 <= c < self.n for c in coords):
            raise NotSystematic(f"invalid systematic coordinates {coords} for length {self.n}")
        if len(self.words) != self.field.q**k:
            raise NotSystematic(f"{len(self.words)} words cannot be systematic on {k} coordinates")
        projections = {tuple(w[c] for c in coords) for w in self.words}
        if len(projections) != len(self.words):
            raise NotSystematic(f"projection onto {coords} is not a bijection")

    @classmethod
    def from_words(
        cls,
        field: FieldSpec,
        words: Iterable[Sequence[int]],
        n: Optional[int] = None,
        systematic_coords: Optional[Sequence[int]] = None,
    ) -> "Code":
        tuples = [tuple(int(x) for x in w) for w in words]
        if n is None:
            if not tuples:
                raise TooFewWords("cannot infer the length of an empty code")
            n = len(tuples[0])
        coords = None if systematic_coords is None else tuple(int(c) for c in systematic_coords)
        return cls(field=field, n=n, words=frozenset(tuples), systematic_coords=coords)

    @classmethod
    def binary(cls, words: Iterable[str | Sequence[int]], systematic_coords: Optional[Sequence[int]] = None) -> "Code":
        """Convenience constructor: ``Code.binary(["000", "111"])``."""
        return cls.from_words(field_new(2), [[int(ch) for ch in w] for w in words], systematic_coords=systematic_coords)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def dimension(self) -> Optional[int]:
        return exact_log(self.q, self.size)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Words as rows of a read-only uint8 array, in lexicographic order."""
        arr = np.array(self.sorted_words(), dtype=np.uint8).reshape(self.size, self.n)
        arr.setflags(write=False)
        return arr

    def contains(self, word: Sequence[int]) -> bool:
        return tuple(word) in self.words

    def with_systematic(self, coords: Optional[Sequence[int]]) -> "Code":
        return Code(self.field, self.n, self.words, None if coords is None else tuple(coords))

    def __str__(self) -> str:
        return f"Code(n={self.n}, M={self.size}, q={self.q})"


def _distance_rows(code: Code):
    """Yield, for each word i, the distances to words i+1..M-1."""
    arr = code.matrix
    if code.q == 2:
        packed = np.packbits(arr, axis=1)
        for i in range(code.size - 1):
            yield np.bitwise_count(packed[i + 1 :] ^ packed[i]).sum(axis=1, dtype=np.int64)
    else:
        for i in range(code.size - 1):
            yield (arr[i + 1 :] != arr[i]).sum(axis=1, dtype=np.int64)


def distance_range(code: Code) -> tuple[int, int]:
    """(minimum, maximum) distance over distinct pairs."""
    if code.size < 2:
        raise TooFewWords(f"a code with {code.size} word(s) has no distance")
    lo, hi = code.n + 1, -1
    for row in _distance_rows(code):
        lo = min(lo, int(row.min()))
        hi = max(hi, int(row.max()))
    return lo, hi


def min_distance(code: Code) -> int:
    return distance_range(code)[0]


def is_equidistant(code: Code) -> Optional[int]:
    lo, hi = distance_range(code)
    return lo if lo == hi else None


def _reduce(row: list[int], basis: list[tuple[int, list[int]]], field: FieldSpec) -> list[int]:
    for pivot, brow in basis:
        c = row[pivot]
        if c:
            factor = field.neg(c)
            row = [field.add(x, field.mul(factor, y)) for x, y in zip(row, brow)]
    return row


def echelon_basis(vectors: Iterable[Sequence[int]], field: FieldSpec) -> list[tuple[int, list[int]]]:
    """Row-reduced basis as (pivot, row) pairs; each row is 1 at its pivot."""
    basis: list[tuple[int, list[int]]] = []
    for v in vectors:
        row = _reduce(list(v), basis, field)
        pivot = next((i for i, x in enumerate(row) if x), None)
        if pivot is None:
            continue
        scale = field.inv(row[pivot])
        row = [field.mul(scale, x) for x in row]
        basis = [(p, _reduce(b, [(pivot, row)], field)) for p, b in basis]
        basis.append((pivot, row))
    return basis


def _pack(word: Sequence[int]) -> int:
    return int("".join(str(b) for b in word) or "0", 2)


def _xor_basis(values: Iterable[int]) -> list[int]:
    """Basis of the GF(2) span of packed words, keyed by leading bit."""
    basis: dict[int, int] = {}
    for x in values:
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                break
            x ^= basis[top]
    return list(basis.values())


def rank(vectors: Iterable[Sequence[int]], field: FieldSpec) -> int:
    if field.q == 2:
        return len(_xor_basis(_pack(v) for v in vectors))
    return len(echelon_basis(vectors, field))


def encode_messages(rows: Sequence[Sequence[int]], field: FieldSpec) -> np.ndarray:
    """All F_q-combinations of ``rows``, one per message, messages in lexicographic order."""
    k = len(rows)
    n = len(rows[0]) if k else 0
    gen = np.array(rows, dtype=np.int64).reshape(k, n)
    msgs = np.array(list(itertools.product(range(field.q), repeat=k)), dtype=np.int64).reshape(-1, k)
    add_tab = np.array(field.add_table, dtype=np.int64)
    mul_tab = np.array(field.mul_table, dtype=np.int64)
    acc = np.zeros((msgs.shape[0], n), dtype=np.int64)
    for i in range(k):
        acc = add_tab[acc, mul_tab[msgs[:, i][:, None], gen[i][None, :]]]
    return acc


@dataclass(frozen=True)
class GeneratorMatrix:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise LengthMismatch(f"generator rows have lengths {sorted(widths)}")
        if rank(self.entries, self.field) != self.k:
            raise ValueError(f"generator matrix rows are not independent (k={self.k})")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]]) -> "GeneratorMatrix":
        return cls(field, tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def codewords(self) -> list[Word]:
        """Codewords in message lexicographic order (message digit 0 most significant)."""
        return [tuple(int(x) for x in row) for row in encode_messages(self.entries, self.field)]

    def span(self) -> Code:
        return Code.from_words(self.field, self.codewords(), n=self.n)

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.entries)


def linear_span(generators: Sequence[Sequence[int]], field: FieldSpec) -> Code:
    if not generators:
        raise ValueError("linear_span needs at least one generator")
    lengths = {len(g) for g in generators}
    if len(lengths) > 1:
        raise LengthMismatch(f"generators have lengths {sorted(lengths)}")
    words = encode_messages(generators, field)
    return Code.from_words(field, words.tolist(), n=lengths.pop())


def is_linear(code: Code) -> bool:
    if tuple([0] * code.n) not in code.words:
        return False
    if code.q == 2:
        packed = {_pack(w) for w in code.words}
        span = {0}
        for b in _xor_basis(packed):
            span |= {x ^ b for x in span}
        return span == packed
    basis = [row for _, row in echelon_basis(code.words, code.field)]
    if code.q ** len(basis) != code.size:
        return False
    return all(tuple(w) in code.words for w in encode_messages(basis, code.field).tolist())


def find_information_set(code: Code) -> Optional[tuple[int, ...]]:
    """Lexicographically first coordinate set on which the code is systematic.

    A depth-first search over increasing coordinates; a partial set survives
    only if the words project uniformly onto it, which every subset of an
    information set must do.
    """
    k = code.dimension
    if k is None or k < 1:
        raise SizeNotPowerOfQ(f"{code.size} is not a power of {code.q}")
    words = code.sorted_words()
    q, size = code.q, code.size

    def uniform(coords: list[int]) -> bool:
        counts = Counter(tuple(w[c] for c in coords) for w in words)
        return len(counts) == q ** len(coords) and max(counts.values()) == size // q ** len(coords)

    def extend(chosen: list[int], start: int) -> Optional[list[int]]:
        if len(chosen) == k:
            return chosen
        for c in range(start, code.n - (k - len(chosen)) + 1):
            trial = chosen + [c]
            if uniform(trial):
                found = extend(trial, c + 1)
                if found is not None:
                    return found
        return None

    found = extend([], 0)
    return None if found is None else tuple(found)


def check_same_field(*codes: Code) -> None:
    fields = {c.field for c in codes}
    if len(fields) > 1:
        raise FieldMismatch("codes over different fields")


def analyze(code: Code) -> CodeAnalysis:
    lo, hi = distance_range(code)
    k = code.dimension
    info_set = code.systematic_coords
    if info_set is None and k is not None and k >= 1:
        info_set = find_information_set(code)
    params = CodeParams(n=code.n, M=code.size, d=lo, q=code.q, k=k)
    result = CodeAnalysis(
        params=params,
        linear=is_linear(code),
        equidistant=lo == hi,
        information_set=None if info_set is None else sorted(info_set),
    )
    logger.debug(f"Analyzed {params.label()}: linear={result.linear} equidistant={result.equidistant}")
    return result
