# src/codekit/equivalence.py
"""Canonical representatives under coordinate permutations combined with an
independent symbol permutation on every coordinate.

For a fixed ordering of the words, the cheapest relabelling of a column names
symbols in order of first appearance, and the cheapest coordinate order sorts
the relabelled columns. The canonical form is the ordering whose resulting
matrix, read row by row, is smallest. Rows are chosen one at a time and only
the orderings whose block so far is minimal are kept, so the search is exact
whenever it finishes inside the state budget.
"""
import logging

from src.codekit.code import Code
from src.errors import TooLarge

logger = logging.getLogger("codekit")

DEFAULT_EXACT_PRODUCT = 64
DEFAULT_MAX_STATES = 200_000


class _Partial:
    """An ordered prefix of rows with the per-column relabelling it induces."""

    __slots__ = ("chosen", "columns", "maps")

    def __init__(self, chosen: tuple[int, ...], columns: list[tuple[int, ...]], maps: list[dict[int, int]]):
        self.chosen = chosen
        self.columns = columns
        self.maps = maps

    def extend(self, row_index: int, word: tuple[int, ...]) -> "_Partial":
        columns, maps = [], []
        for col, mapping, sym in zip(self.columns, self.maps, word):
            label = mapping.get(sym)
            if label is None:
                label = len(mapping)
                mapping = {**mapping, sym: label}
            columns.append(col + (label,))
            maps.append(mapping)
        return _Partial(self.chosen + (row_index,), columns, maps)

    def last_row(self) -> tuple[int, ...]:
        return tuple(col[-1] for col in sorted(self.columns))

    def signature(self):
        return frozenset(self.chosen), tuple(
            (col, tuple(sorted(m.items()))) for col, m in zip(self.columns, self.maps)
        )


def canonical_form(
    code: Code,
    exact_product: int = DEFAULT_EXACT_PRODUCT,
    max_states: int = DEFAULT_MAX_STATES,
) -> Code:
    """Return the canonical representative of ``code``'s equivalence class.

    The result always contains the zero word and carries no systematic
    coordinates. Codes with ``M * n <= exact_product`` are never cut off;
    larger codes raise TooLarge once more than ``max_states`` partial
    orderings tie.
    """
    words = code.sorted_words()
    size = len(words)
    if size == 0:
        return code
    bounded = size * code.n > exact_product

    states = [_Partial((), [()] * code.n, [{}] * code.n)]
    for level in range(size):
        best_row = None
        survivors: dict = {}
        for state in states:
            used = set(state.chosen)
            for r in range(size):
                if r in used:
                    continue
                nxt = state.extend(r, words[r])
                row = nxt.last_row()
                if best_row is None or row < best_row:
                    best_row = row
                    survivors = {}
                if row == best_row:
                    survivors.setdefault(nxt.signature(), nxt)
        states = list(survivors.values())
        if bounded and len(states) > max_states:
            raise TooLarge(
                f"canonical form of an (n={code.n}, M={size}) code needs more than {max_states} states at level {level + 1}"
            )

    final = sorted(states[0].columns)
    rows = frozenset(tuple(col[i] for col in final) for i in range(size))
    logger.debug(f"Canonical form computed for n={code.n}, M={size} with {len(states)} tied orderings")
    return Code(code.field, code.n, rows)


def are_equivalent(a: Code, b: Code, **budget) -> bool:
    if a.field != b.field or a.n != b.n or a.size != b.size:
        return False
    return canonical_form(a, **budget).words == canonical_form(b, **budget).words
