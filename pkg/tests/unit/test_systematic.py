"""
Unit tests for the minimum-length search over systematic codes.
"""

import pytest

from src.codekit import Code, analyze, min_distance
from src.errors import BudgetExceeded, FieldMismatch, TooLarge
from src.optsearch import SearchBudget, min_length_systematic
from src.optsearch.systematic import _column_capacity, _root_prefixes


class TestHelpers:
    """Column capacity and root prefixes."""

    def test_column_capacity(self):
        assert _column_capacity(4, 2) == 4
        assert _column_capacity(8, 2) == 16
        assert _column_capacity(9, 3) == 27

    def test_root_prefixes_are_canonical(self):
        prefixes = _root_prefixes(2, 8)
        assert len(prefixes) == 16
        assert all(p[0] == 0 and len(p) == 5 for p in prefixes)
        assert _root_prefixes(3, 2) == [(0, 0), (0, 1)]


class TestSearch:
    """Exact minimum lengths of systematic codes."""

    @pytest.mark.parametrize("q, k, d, expected", [(2, 2, 3, 5), (2, 3, 4, 7), (2, 4, 3, 7), (3, 2, 3, 4)])
    def test_known_lengths(self, q, k, d, expected):
        result = min_length_systematic(q, k, d, expected + 1)
        assert result.status == "found"
        assert result.value == result.lower_bound == expected
        analysis = analyze(result.witness)
        assert analysis.params.d == d
        assert result.witness.systematic_coords == tuple(range(k))

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_single_message_symbol(self, d):
        assert min_length_systematic(2, 1, d, d).value == d

    def test_exhausted(self):
        result = min_length_systematic(2, 3, 4, 6)
        assert result.status == "exhausted"
        assert result.lower_bound == 7

    def test_budget(self):
        result = min_length_systematic(2, 4, 5, 12, budget=SearchBudget(max_nodes=1))
        assert result.status == "budget_exceeded"
        assert result.lower_bound >= 5
        with pytest.raises(BudgetExceeded):
            result.raise_for_budget()


class TestWorkerCount:
    """Results do not depend on how many workers split the root prefixes."""

    @pytest.mark.parametrize("q, k, d, n_limit", [(2, 3, 4, 8), (2, 3, 4, 6)])
    def test_same_result_for_one_and_two_workers(self, q, k, d, n_limit):
        one = min_length_systematic(q, k, d, n_limit, workers=1)
        two = min_length_systematic(q, k, d, n_limit, workers=2)
        assert (one.status, one.value, one.lower_bound) == (two.status, two.value, two.lower_bound)
        assert one.witness == two.witness
        assert one.nodes_explored == two.nodes_explored


class TestHint:
    """Seeding the search with a known systematic code."""

    def test_concatenated_code(self, c4):
        result = min_length_systematic(2, 4, 18, 35, hint=c4)
        assert result.status == "found"
        assert result.value == 34
        assert result.lower_bound == 34
        assert min_distance(result.witness) == 18
        assert result.witness.systematic_coords == (0, 1, 2, 3)

    def test_hint_is_reduced(self, c4):
        result = min_length_systematic(2, 4, 16, 34, hint=c4)
        assert result.witness.n == 34
        assert min_distance(result.witness) == 16

    def test_bad_hints(self, c4, gf3):
        with pytest.raises(ValueError):
            min_length_systematic(2, 4, 18, 30, hint=c4)
        with pytest.raises(ValueError):
            min_length_systematic(2, 4, 19, 40, hint=c4)
        with pytest.raises(ValueError):
            min_length_systematic(2, 3, 18, 40, hint=c4)
        ternary = Code.from_words(gf3, [[0, 0], [1, 1], [2, 2]], systematic_coords=[0])
        with pytest.raises(FieldMismatch):
            min_length_systematic(2, 1, 2, 4, hint=ternary)


class TestLimits:
    """Argument checks."""

    def test_limits(self):
        with pytest.raises(TooLarge):
            min_length_systematic(2, 9, 3, 12)
        with pytest.raises(TooLarge):
            min_length_systematic(2, 4, 18, 35)
        with pytest.raises(ValueError):
            min_length_systematic(2, 3, 4, 3)
        with pytest.raises(ValueError):
            min_length_systematic(2, 0, 4, 8)
