# src/codekit/transforms.py
"""Code transformations: puncture, shorten, parity extension, padding, repetition,
translation and distance reduction. Every function returns a new Code."""
import logging
from typing import Iterable, Optional, Sequence

from src.codekit.code import Code, min_distance
from src.errors import BadCoordinate, EmptyResult, LengthMismatch, NotBinary, NotSystematic, TargetTooLarge

logger = logging.getLogger("codekit")


def _check_coord(code: Code, coord: int) -> None:
    if not 0 <= coord < code.n:
        raise BadCoordinate(f"coordinate {coord} outside [0, {code.n})")


def puncture(code: Code, coords: Iterable[int]) -> Code:
    """Delete ``coords`` from every word; duplicates collapse silently."""
    removed = set(coords)
    for c in removed:
        _check_coord(code, c)
    if len(removed) >= code.n:
        raise BadCoordinate(f"cannot puncture {len(removed)} of {code.n} coordinates")
    keep = [i for i in range(code.n) if i not in removed]
    words = {tuple(w[i] for i in keep) for w in code.words}

    systematic: Optional[tuple[int, ...]] = None
    if code.systematic_coords is not None and not removed.intersection(code.systematic_coords):
        position = {old: new for new, old in enumerate(keep)}
        systematic = tuple(position[c] for c in code.systematic_coords)
    return Code(code.field, len(keep), frozenset(words), systematic)


def shorten(code: Code, coord: int, value: int) -> Code:
    """Keep the words holding ``value`` at ``coord``, then delete that coordinate."""
    _check_coord(code, coord)
    value = int(value)
    matching = [w for w in code.words if w[coord] == value]
    if not matching:
        raise EmptyResult(f"no word has symbol {value} at coordinate {coord}")
    words = frozenset(w[:coord] + w[coord + 1 :] for w in matching)

    systematic: Optional[tuple[int, ...]] = None
    if code.systematic_coords is not None and coord in code.systematic_coords:
        systematic = tuple(c if c < coord else c - 1 for c in code.systematic_coords if c != coord)
    return Code(code.field, code.n - 1, words, systematic)


def extend_parity(code: Code) -> Code:
    if code.q != 2:
        raise NotBinary(f"parity extension needs a binary code, got q={code.q}")
    words = frozenset(w + (sum(w) % 2,) for w in code.words)
    return Code(code.field, code.n + 1, words, code.systematic_coords)


def pad_zeros(code: Code, i: int) -> Code:
    if i < 0:
        raise ValueError(f"cannot pad {i} zeros")
    if i == 0:
        return code
    tail = (0,) * i
    return Code(code.field, code.n + i, frozenset(w + tail for w in code.words), code.systematic_coords)


def repeat(code: Code, t: int) -> Code:
    if t < 1:
        raise ValueError(f"repetition count must be >= 1, got {t}")
    return Code(code.field, code.n * t, frozenset(w * t for w in code.words), code.systematic_coords)


def translate(code: Code, c: Sequence[int]) -> Code:
    """Add ``c`` to every word."""
    if len(c) != code.n:
        raise LengthMismatch(f"translation vector has length {len(c)}, code has length {code.n}")
    shift = tuple(int(x) for x in c)
    if any(not 0 <= x < code.q for x in shift):
        raise ValueError(f"translation vector has symbols outside GF({code.q})")
    add = code.field.add
    words = frozenset(tuple(add(x, y) for x, y in zip(w, shift)) for w in code.words)
    return Code(code.field, code.n, words, code.systematic_coords)


def reduce_distance(code: Code, d_target: int) -> Code:
    """Lower the distance of a systematic code to exactly ``d_target`` at the same length.

    Non-systematic coordinates are punctured from the highest index down until
    the distance hits the target; each puncture costs at most one unit of
    distance. The result is padded back to length n with zero coordinates.
    """
    if code.systematic_coords is None:
        raise NotSystematic("reduce_distance needs a code with systematic coordinates")
    d = min_distance(code)
    if d_target < 1:
        raise ValueError(f"target distance must be >= 1, got {d_target}")
    if d_target > d:
        raise TargetTooLarge(f"target distance {d_target} exceeds the code distance {d}")

    systematic = set(code.systematic_coords)
    candidates = [c for c in reversed(range(code.n)) if c not in systematic]
    removed: list[int] = []
    current = code
    while d > d_target:
        removed.append(candidates[len(removed)])
        current = puncture(code, removed)
        d = min_distance(current)
    logger.debug(f"Punctured {len(removed)} coordinates to reach distance {d_target}")
    return pad_zeros(current, len(removed))
