"""
Unit tests for code transformations.
"""

import numpy as np
import pytest

from src.codekit import (
    Code,
    extend_parity,
    min_distance,
    pad_zeros,
    puncture,
    reduce_distance,
    repeat,
    shorten,
    translate,
)
from src.errors import BadCoordinate, EmptyResult, LengthMismatch, NotBinary, NotSystematic, TargetTooLarge
from src.fieldcore import field_new


class TestPuncture:
    """Deleting coordinates."""

    def test_drops_coordinate(self, even_weight3):
        result = puncture(even_weight3, [2])
        assert result.n == 2
        assert result.words == frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})
        assert result.systematic_coords == (0, 1)

    def test_collisions_shrink_code(self, repetition3):
        code = Code.binary(["000", "001"])
        assert puncture(code, [2]).size == 1
        assert puncture(repetition3, [0, 1]).words == frozenset({(0,), (1,)})

    def test_systematic_reindexed(self):
        code = Code.binary(["100", "111"], systematic_coords=[2])
        assert puncture(code, [0]).systematic_coords == (1,)

    def test_systematic_dropped_when_removed(self, even_weight3):
        assert puncture(even_weight3, [0]).systematic_coords is None

    def test_bad_coordinates(self, repetition3):
        with pytest.raises(BadCoordinate):
            puncture(repetition3, [3])
        with pytest.raises(BadCoordinate):
            puncture(repetition3, [0, 1, 2])

    @pytest.mark.parametrize("q", [2, 3, 4])
    @pytest.mark.parametrize("seed", range(4))
    def test_distance_drops_by_at_most_one(self, q, seed):
        rng = np.random.default_rng(3000 * q + seed)
        n = int(rng.integers(4, 13))
        spread = int(rng.integers(2, 5))
        words = [(0,) * n, (1,) * n]
        for row in rng.integers(0, q, size=(64, n)).tolist():
            if all(sum(a != b for a, b in zip(row, w)) >= spread for w in words):
                words.append(tuple(row))
        code = Code.from_words(field_new(q), words, n=n)
        d = min_distance(code)
        for c in range(n):
            punctured = puncture(code, {c})
            assert punctured.size == code.size
            assert d - 1 <= min_distance(punctured) <= d

    def test_known_codes_lose_at_most_one(self, simplex3, c4):
        for code in (simplex3, c4):
            d = min_distance(code)
            for c in range(code.n):
                assert min_distance(puncture(code, {c})) in (d - 1, d)


class TestShorten:
    """Fixing a coordinate value and deleting it."""

    def test_shorten_parity_code(self, even_weight3):
        result = shorten(even_weight3, 0, 0)
        assert result.words == frozenset({(0, 0), (1, 1)})
        assert result.systematic_coords == (0,)

    def test_non_systematic_coordinate(self, even_weight3):
        assert shorten(even_weight3, 2, 0).systematic_coords is None

    def test_no_match(self, repetition3):
        with pytest.raises(EmptyResult):
            shorten(Code.binary(["011", "010"]), 0, 1)
        with pytest.raises(BadCoordinate):
            shorten(repetition3, 5, 0)


class TestExtensions:
    """Parity extension, zero padding and repetition."""

    def test_parity_raises_odd_distance(self):
        code = Code.binary(["00000", "11100", "00111"])
        assert min_distance(code) == 3
        extended = extend_parity(code)
        assert extended.n == 6
        assert min_distance(extended) == 4

    def test_parity_needs_binary(self, gf3):
        with pytest.raises(NotBinary):
            extend_parity(Code.from_words(gf3, [[0, 1]]))

    def test_pad(self, repetition3):
        padded = pad_zeros(repetition3, 2)
        assert padded.words == frozenset({(0, 0, 0, 0, 0), (1, 1, 1, 0, 0)})
        assert pad_zeros(repetition3, 0) is repetition3
        with pytest.raises(ValueError):
            pad_zeros(repetition3, -1)

    def test_repeat(self, repetition3):
        assert min_distance(repeat(repetition3, 3)) == 9
        with pytest.raises(ValueError):
            repeat(repetition3, 0)


class TestTranslate:
    """Adding a fixed vector to every word."""

    def test_translate_keeps_distances(self, simplex3):
        shifted = translate(simplex3, [1, 0, 0, 0, 0, 0, 1])
        assert min_distance(shifted) == 4
        assert (0,) * 7 not in shifted.words

    def test_ternary(self, gf3):
        code = Code.from_words(gf3, [[0, 1], [2, 2]])
        assert translate(code, [1, 2]).words == frozenset({(1, 0), (0, 1)})

    def test_length_mismatch(self, repetition3):
        with pytest.raises(LengthMismatch):
            translate(repetition3, [1, 0])


class TestReduceDistance:
    """Lowering the distance of a systematic code to an exact target."""

    def test_repetition(self):
        code = Code.binary(["00000", "11111"], systematic_coords=[0])
        result = reduce_distance(code, 3)
        assert result.n == 5
        assert min_distance(result) == 3
        assert result.systematic_coords == (0,)

    def test_target_equal_is_identity(self, even_weight3):
        assert reduce_distance(even_weight3, 2) == even_weight3

    def test_c4_to_smaller_distance(self, c4):
        result = reduce_distance(c4, 16)
        assert result.n == c4.n
        assert min_distance(result) == 16
        assert result.systematic_coords is not None

    def test_errors(self, even_weight3, repetition3):
        with pytest.raises(NotSystematic):
            reduce_distance(repetition3, 2)
        with pytest.raises(TargetTooLarge):
            reduce_distance(even_weight3, 3)
        with pytest.raises(ValueError):
            reduce_distance(even_weight3, 0)
