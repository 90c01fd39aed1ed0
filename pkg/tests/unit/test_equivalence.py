"""
Unit tests for canonical forms under coordinate and per-coordinate symbol permutations.
"""

import pytest

from src.codekit import Code, are_equivalent, canonical_form, translate
from src.errors import TooLarge


class TestCanonicalForm:
    """Representatives of equivalence classes."""

    def test_contains_zero(self, simplex3):
        canon = canonical_form(simplex3)
        assert (0,) * 7 in canon.words
        assert canon.size == 8 and canon.n == 7

    def test_idempotent(self, simplex3):
        canon = canonical_form(simplex3)
        assert canonical_form(canon) == canon

    def test_coordinate_permutation_invariant(self):
        a = Code.binary(["0000", "1100", "0011"])
        b = Code.binary(["0000", "1010", "0101"])
        assert canonical_form(a) == canonical_form(b)

    def test_translation_invariant(self, simplex3):
        shifted = translate(simplex3, [1, 1, 0, 0, 1, 0, 1])
        assert are_equivalent(simplex3, shifted)

    def test_ternary_symbol_relabelling(self, gf3):
        a = Code.from_words(gf3, [[0, 1], [1, 2], [2, 0]])
        b = Code.from_words(gf3, [[1, 2], [2, 1], [0, 0]])
        assert are_equivalent(a, b)

    def test_distinct_classes(self):
        a = Code.binary(["0000", "1100", "0011"])
        b = Code.binary(["0000", "1100", "1110"])
        assert not are_equivalent(a, b)

    def test_different_parameters(self, repetition3, simplex3):
        assert not are_equivalent(repetition3, simplex3)

    def test_empty_code(self, gf2):
        empty = Code.from_words(gf2, [], n=3)
        assert canonical_form(empty) is empty

    def test_state_budget(self, c4):
        with pytest.raises(TooLarge):
            canonical_form(c4, exact_product=1, max_states=1)
