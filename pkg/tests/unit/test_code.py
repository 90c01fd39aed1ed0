"""
Unit tests for the code data model: construction, distances, linearity,
information sets and generator matrices.
"""

import itertools

import numpy as np
import pytest

from src.codekit import (
    Code,
    GeneratorMatrix,
    analyze,
    distance_range,
    find_information_set,
    hamming_distance,
    is_equidistant,
    is_linear,
    linear_span,
    min_distance,
    weight,
)
from src.codekit.code import check_same_field, exact_log, rank
from src.errors import FieldMismatch, LengthMismatch, NotSystematic, SizeNotPowerOfQ, TooFewWords
from src.fieldcore import field_new


def random_code(rng: np.random.Generator, q: int, n: int, M: int) -> Code:
    """M random words over GF(q) plus the zero and all-ones words."""
    rows = rng.integers(0, q, size=(M, n)).tolist()
    return Code.from_words(field_new(q), rows + [[0] * n, [1] * n], n=n)


class TestWordHelpers:
    """Weight and Hamming distance on plain sequences."""

    def test_weight(self):
        assert weight((0, 1, 2, 0)) == 2
        assert weight(()) == 0

    def test_distance(self):
        assert hamming_distance((0, 1, 1), (1, 1, 0)) == 2

    def test_distance_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            hamming_distance((0, 1), (0, 1, 1))

    def test_exact_log(self):
        assert exact_log(2, 8) == 3
        assert exact_log(3, 1) == 0
        assert exact_log(2, 6) is None


class TestCodeConstruction:
    """Validation performed when a Code is built."""

    def test_binary_shortcut(self, repetition3):
        assert repetition3.n == 3
        assert repetition3.size == 2
        assert repetition3.q == 2
        assert str(repetition3) == "Code(n=3, M=2, q=2)"

    def test_duplicates_collapse(self, gf2):
        code = Code.from_words(gf2, [[0, 1], [0, 1], [1, 0]])
        assert code.size == 2

    def test_wrong_length_rejected(self, gf2):
        with pytest.raises(LengthMismatch):
            Code.from_words(gf2, [[0, 1], [1, 1, 1]])

    def test_symbol_out_of_range(self, gf3):
        with pytest.raises(ValueError):
            Code.from_words(gf3, [[0, 3]])

    def test_empty_needs_length(self, gf2):
        with pytest.raises(TooFewWords):
            Code.from_words(gf2, [])
        assert Code.from_words(gf2, [], n=4).size == 0

    def test_systematic_coords_checked(self):
        with pytest.raises(NotSystematic):
            Code.binary(["000", "011", "101", "110"], systematic_coords=[0])
        with pytest.raises(NotSystematic):
            Code.binary(["000", "001", "110", "111"], systematic_coords=[0, 1])

    def test_dimension(self, even_weight3, repetition3):
        assert even_weight3.dimension == 2
        assert repetition3.dimension == 1
        assert Code.binary(["000", "011", "101"]).dimension is None

    def test_matrix_is_sorted_and_read_only(self, even_weight3):
        m = even_weight3.matrix
        assert m.tolist() == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
        with pytest.raises(ValueError):
            m[0, 0] = 1

    def test_with_systematic(self, even_weight3):
        assert even_weight3.with_systematic([1, 2]).systematic_coords == (1, 2)
        assert even_weight3.with_systematic(None).systematic_coords is None

    def test_check_same_field(self, gf2, gf3):
        check_same_field(Code.from_words(gf2, [[0]]), Code.from_words(gf2, [[1]]))
        with pytest.raises(FieldMismatch):
            check_same_field(Code.from_words(gf2, [[0]]), Code.from_words(gf3, [[2]]))


class TestDistances:
    """Minimum distance and equidistance."""

    def test_repetition(self, repetition3):
        assert min_distance(repetition3) == 3
        assert is_equidistant(repetition3) == 3

    def test_range(self):
        code = Code.binary(["0000", "1100", "1111"])
        assert distance_range(code) == (2, 4)
        assert is_equidistant(code) is None

    def test_single_word_has_no_distance(self):
        with pytest.raises(TooFewWords):
            min_distance(Code.binary(["0101"]))

    def test_ternary(self, gf3):
        code = Code.from_words(gf3, [[0, 0, 0], [1, 1, 1], [2, 2, 2]])
        assert min_distance(code) == 3

    def test_simplex_is_equidistant(self, simplex3):
        assert is_equidistant(simplex3) == 4


class TestLinearity:
    """Closure under addition and scalar multiplication."""

    def test_linear_codes(self, even_weight3, simplex3):
        assert is_linear(even_weight3)
        assert is_linear(simplex3)

    def test_missing_zero(self):
        assert not is_linear(Code.binary(["001", "110"]))

    def test_not_closed(self):
        assert not is_linear(Code.binary(["000", "011", "101"]))
        assert not is_linear(Code.binary(["0000", "1100", "1010", "1111"]))

    def test_ternary_needs_scalar_closure(self, gf3):
        assert not is_linear(Code.from_words(gf3, [[0, 0], [1, 1]]))
        assert is_linear(Code.from_words(gf3, [[0, 0], [1, 1], [2, 2]]))

    def test_gf4_span(self, gf4):
        code = linear_span([[1, 2]], gf4)
        assert code.words == frozenset({(0, 0), (1, 2), (2, 3), (3, 1)})
        assert is_linear(code)

    def test_rank(self, gf2, gf3):
        assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], gf2) == 2
        assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], gf3) == 3


class TestGeneratorMatrix:
    """Encoding with an explicit generator."""

    def test_codewords_in_message_order(self, gf2):
        gen = GeneratorMatrix.from_rows(gf2, [[1, 0, 1], [0, 1, 1]])
        assert gen.k == 2 and gen.n == 3
        assert gen.codewords() == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
        assert str(gen) == "101\n011"

    def test_dependent_rows_rejected(self, gf2):
        with pytest.raises(ValueError):
            GeneratorMatrix.from_rows(gf2, [[1, 1], [1, 1]])

    def test_ragged_rows_rejected(self, gf2):
        with pytest.raises(LengthMismatch):
            GeneratorMatrix.from_rows(gf2, [[1, 1], [1]])

    def test_span_size(self, gf3):
        code = GeneratorMatrix.from_rows(gf3, [[1, 0, 1, 1], [0, 1, 1, 2]]).span()
        assert code.size == 9
        assert min_distance(code) == 3

    def test_linear_span_errors(self, gf2):
        with pytest.raises(ValueError):
            linear_span([], gf2)
        with pytest.raises(LengthMismatch):
            linear_span([[1, 0], [1]], gf2)


class TestInformationSets:
    """Systematic coordinate discovery."""

    def test_first_set_found(self, even_weight3):
        assert find_information_set(even_weight3) == (0, 1)

    def test_skips_dependent_coordinates(self):
        code = Code.binary(["0000", "0011", "1100", "1111"])
        assert find_information_set(code) == (0, 2)

    def test_later_coordinates(self):
        assert find_information_set(Code.binary(["000", "001", "110", "111"])) == (0, 2)
        assert find_information_set(Code.binary(["0000", "0001", "0010", "0011"])) == (2, 3)

    def test_none_when_not_systematic(self):
        assert find_information_set(Code.binary(["000", "100", "010", "001"])) is None

    def test_size_must_be_power(self):
        with pytest.raises(SizeNotPowerOfQ):
            find_information_set(Code.binary(["000", "011", "101"]))


class TestAnalyze:
    """The combined analysis report."""

    def test_simplex(self, simplex3):
        result = analyze(simplex3)
        assert result.params.label() == "(7,8,4)_2"
        assert result.linear and result.equidistant and result.systematic
        assert result.summary() == "(7,8,4)_2 linear systematic equidistant"

    def test_uses_declared_systematic_coords(self, gf2):
        code = Code.binary(["000", "011", "101", "110"], systematic_coords=[2, 1])
        assert analyze(code).information_set == [1, 2]

    def test_nonlinear_non_systematic(self):
        result = analyze(Code.binary(["0000", "1100", "1111"]))
        assert result.params.k is None
        assert not result.linear
        assert not result.systematic
        assert result.summary() == "(4,3,2)_2 nonlinear non-systematic"

    def test_analysis_serializes(self, simplex3):
        result = analyze(simplex3)
        assert type(result).model_validate_json(result.model_dump_json()) == result


class TestRandomCodes:
    """Distances and spans of random codes, checked against brute force."""

    @pytest.mark.parametrize("q", [2, 3, 4])
    @pytest.mark.parametrize("seed", range(5))
    def test_min_distance_matches_pairwise_scan(self, q, seed):
        rng = np.random.default_rng(1000 * q + seed)
        n = int(rng.integers(1, 17))
        M = int(rng.integers(2, 63))
        code = random_code(rng, q, n, M)
        pairs = itertools.combinations(code.words, 2)
        distances = [hamming_distance(u, v) for u, v in pairs]
        assert min_distance(code) == min(distances)
        assert distance_range(code) == (min(distances), max(distances))
        assert is_equidistant(code) == (distances[0] if len(set(distances)) == 1 else None)

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
    @pytest.mark.parametrize("seed", range(4))
    def test_span_is_linear(self, q, seed):
        rng = np.random.default_rng(2000 * q + seed)
        k = int(rng.integers(1, 4))
        n = int(rng.integers(k, 9))
        gf = field_new(q)
        rows = rng.integers(0, q, size=(k, n)).tolist()
        rows[0][0] = 1
        code = linear_span(rows, gf)
        assert is_linear(code)
        assert code.size == q ** rank(rows, gf)
