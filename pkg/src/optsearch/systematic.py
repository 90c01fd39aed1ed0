# src/optsearch/systematic.py
"""Minimum length of codes systematic on their first k coordinates.

Words are the q^k messages, extended one redundancy column at a time. A
column is filled entry by entry (one entry per message); after each entry the
pairs it touches must still be able to reach distance d with the columns
left. Columns are kept in canonical symbol order (first appearance 0, 1, ...)
and lexicographically non-decreasing, and the all-zero column is never used.
"""
import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

from joblib import Parallel, delayed

from src.boundtab import report
from src.codekit import Code, analyze, find_information_set, min_distance, reduce_distance
from src.errors import FieldMismatch, NotSystematic, TooLarge
from src.fieldcore import field_new
from src.optsearch.schemas import SearchBudget, SearchResult

logger = logging.getLogger("optsearch")

MAX_MESSAGES = 256
MAX_REDUNDANCY = 12
ROOT_DEPTH = 5


class _OutOfBudget(Exception):
    pass


@dataclass
class _PrefixOutcome:
    prefix: tuple[int, ...]
    status: str
    columns: list = field(default_factory=list)
    nodes: int = 0


def _column_capacity(size: int, q: int) -> int:
    """Most pairs a single column can separate: symbols spread evenly."""
    base, extra = divmod(size, q)
    same = extra * (base + 1) ** 2 + (q - extra) * base**2
    return (size * size - same) // 2


class _ColumnSearch:
    def __init__(self, q: int, k: int, r: int, d: int, max_nodes: int, deadline: float):
        self.q, self.r, self.d = q, r, d
        self.messages = list(itertools.product(range(q), repeat=k))
        self.size = len(self.messages)
        self.dist = [
            [sum(a != b for a, b in zip(self.messages[i], self.messages[j])) for j in range(i)]
            for i in range(self.size)
        ]
        self.columns = [[0] * self.size for _ in range(r)]
        self.placed = [False] * (r * self.size)
        self.capacity = _column_capacity(self.size, q)
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.nodes % 4096 == 0 and time.time() > self.deadline:
            raise _OutOfBudget

    def _candidates(self, p: int) -> list[int]:
        c, i = divmod(p, self.size)
        if i == 0:
            return [0]
        column = self.columns[c]
        top = min(self.q - 1, max(column[:i]) + 1)
        low = 0
        if c > 0 and column[:i] == self.columns[c - 1][:i]:
            low = self.columns[c - 1][i]
        return list(range(low, top + 1))

    def _assign(self, p: int, v: int) -> bool:
        c, i = divmod(p, self.size)
        column, row = self.columns[c], self.dist[i]
        column[i] = v
        self.placed[p] = True
        left = self.r - c - 1
        feasible = True
        for j in range(i):
            if column[j] != v:
                row[j] += 1
            if row[j] + left < self.d:
                feasible = False
        if feasible and i == self.size - 1:
            feasible = max(column) > 0 and self._deficit() <= left * self.capacity
        return feasible

    def _undo(self, p: int) -> None:
        c, i = divmod(p, self.size)
        column, row = self.columns[c], self.dist[i]
        v = column[i]
        for j in range(i):
            if column[j] != v:
                row[j] -= 1
        self.placed[p] = False

    def _deficit(self) -> int:
        return sum(max(0, self.d - x) for row in self.dist for x in row)

    def run(self, prefix: tuple[int, ...]) -> Optional[list[list[int]]]:
        total = self.r * self.size
        for p, v in enumerate(prefix):
            if not self._assign(p, v):
                return None
        start = len(prefix)
        if start == total:
            return self.columns
        stack = [self._candidates(start)]
        while stack:
            p = start + len(stack) - 1
            if self.placed[p]:
                self._undo(p)
            choices = stack[-1]
            if not choices:
                stack.pop()
                continue
            v = choices.pop(0)
            self._tick()
            if not self._assign(p, v):
                continue
            if p + 1 == total:
                return self.columns
            stack.append(self._candidates(p + 1))
        return None


def _root_prefixes(q: int, size: int) -> list[tuple[int, ...]]:
    """Canonical (restricted-growth) first-column prefixes, in lexicographic order."""
    depth = min(size, ROOT_DEPTH)
    prefixes = [(0,)]
    for _ in range(depth - 1):
        prefixes = [p + (v,) for p in prefixes for v in range(min(q - 1, max(p) + 1) + 1)]
    return prefixes


def _search_prefix(
    q: int, k: int, r: int, d: int, prefix: tuple[int, ...], max_nodes: int, deadline: float
) -> _PrefixOutcome:
    search = _ColumnSearch(q, k, r, d, max_nodes, deadline)
    try:
        columns = search.run(prefix)
    except _OutOfBudget:
        return _PrefixOutcome(prefix, "budget_exceeded", nodes=search.nodes)
    if columns is None:
        return _PrefixOutcome(prefix, "exhausted", nodes=search.nodes)
    return _PrefixOutcome(prefix, "found", columns=[list(c) for c in columns], nodes=search.nodes)


def _search_length(q: int, k: int, n: int, d: int, budget: SearchBudget, deadline: float, workers: int):
    """(status, witness or None, nodes) for systematic codes of length exactly n."""
    gf = field_new(q)
    messages = list(itertools.product(range(q), repeat=k))
    r = n - k
    if r == 0:
        code = Code.from_words(gf, messages, n=n, systematic_coords=range(k))
        return ("found", code, 0) if d <= 1 else ("exhausted", None, 0)

    tasks = (
        delayed(_search_prefix)(q, k, r, d, prefix, budget.max_nodes, deadline)
        for prefix in _root_prefixes(q, len(messages))
    )
    nodes = 0
    over_budget = False
    with Parallel(n_jobs=workers, return_as="generator") as parallel:
        for outcome in parallel(tasks):
            nodes += outcome.nodes
            logger.debug(f"prefix {outcome.prefix} at n={n}: {outcome.status} after {outcome.nodes} nodes")
            if outcome.status == "found":
                words = [m + tuple(col[i] for col in outcome.columns) for i, m in enumerate(messages)]
                return "found", Code.from_words(gf, words, n=n, systematic_coords=range(k)), nodes
            over_budget = over_budget or outcome.status == "budget_exceeded"
    return ("budget_exceeded" if over_budget else "exhausted"), None, nodes


def _prepare_hint(hint: Code, q: int, k: int, d: int) -> Code:
    """Re-verify a hint, move its information set to the front and lower its distance to d."""
    if hint.q != q:
        raise FieldMismatch(f"hint is over GF({hint.q}), query is over GF({q})")
    if hint.size != q**k:
        raise ValueError(f"hint has {hint.size} words, expected {q**k}")
    if min_distance(hint) < d:
        raise ValueError(f"hint distance {min_distance(hint)} is below {d}")
    info = hint.systematic_coords or find_information_set(hint)
    if info is None:
        raise NotSystematic("hint code has no information set")
    perm = list(info) + [c for c in range(hint.n) if c not in info]
    moved = Code.from_words(hint.field, [[w[c] for c in perm] for w in hint.words], n=hint.n, systematic_coords=range(k))
    return reduce_distance(moved, d)


def _verified(code: Code, d: int) -> Code:
    analysis = analyze(code)
    if analysis.params.d < d or not analysis.systematic:
        raise RuntimeError(f"search produced an invalid witness {analysis.summary()}")
    return reduce_distance(code, d)


def min_length_systematic(
    q: int,
    k: int,
    d: int,
    n_limit: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
    hint: Optional[Code] = None,
) -> SearchResult:
    """Smallest n <= n_limit carrying a code systematic on k coordinates with distance d."""
    if k < 1 or d < 1:
        raise ValueError(f"dimension and distance must be positive, got k={k} d={d}")
    if q**k > MAX_MESSAGES:
        raise TooLarge(f"{q}^{k} messages exceed the systematic search limit of {MAX_MESSAGES}")
    if n_limit < max(k, d):
        raise ValueError(f"n_limit {n_limit} is below max(k, d) = {max(k, d)}")
    if hint is None and n_limit - k > MAX_REDUNDANCY:
        raise TooLarge(f"{n_limit - k} redundancy columns exceed the limit of {MAX_REDUNDANCY}")
    budget = budget or SearchBudget()
    start = time.time()
    deadline = start + budget.max_seconds

    ceiling = n_limit
    if hint is not None:
        hint = _prepare_hint(hint, q, k, d)
        if hint.n > n_limit:
            raise ValueError(f"hint length {hint.n} exceeds n_limit {n_limit}")
        ceiling = min(hint.n - 1, k + MAX_REDUNDANCY)

    nodes = 0
    excluded = max(k, d)
    status = "exhausted"
    for n in range(max(k, d), ceiling + 1):
        status, witness, used = _search_length(q, k, n, d, budget, deadline, workers)
        nodes += used
        logger.info(f"Systematic length {n} for k={k} d={d} over GF({q}): {status}")
        if status == "found":
            return SearchResult(
                status="found",
                value=n,
                witness=_verified(witness, d),
                nodes_explored=nodes,
                duration_ms=(time.time() - start) * 1000,
                lower_bound=n,
            )
        if status == "budget_exceeded":
            break
        excluded = n + 1

    duration = (time.time() - start) * 1000
    if hint is not None:
        floor = report(q, d, k=k).best.systematic
        lower = max(excluded, floor)
        if status == "budget_exceeded":
            logger.warning(f"Budget ran out at length {excluded}; falling back to the hint of length {hint.n}")
        return SearchResult(
            status="found", value=hint.n, witness=hint, nodes_explored=nodes, duration_ms=duration, lower_bound=min(lower, hint.n)
        )
    if status == "budget_exceeded":
        logger.warning(f"Systematic search for k={k} d={d} ran out of budget at length {excluded}")
        return SearchResult(status="budget_exceeded", nodes_explored=nodes, duration_ms=duration, lower_bound=excluded)
    return SearchResult(status="exhausted", nodes_explored=nodes, duration_ms=duration, lower_bound=n_limit + 1)
