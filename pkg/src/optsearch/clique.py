# src/optsearch/clique.py
"""Exhaustive search for unrestricted codes as cliques in the distance graph.

The zero word is always in the code. The search branches at the root on the
weight w of the lightest nonzero word, which up to equivalence is 1^w 0^(n-w);
every other word then has weight >= w. Each root is an independent clique
problem solved with a greedy-colouring bound over Python-int bitsets.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from src.codekit import Code, analyze
from src.errors import TooLarge
from src.fieldcore import field_new
from src.optsearch.schemas import SearchBudget, SearchResult

logger = logging.getLogger("optsearch")

MAX_BINARY_LENGTH = 24
MAX_LENGTH = 12
MAX_WORDS = 2**20
DEFAULT_MAX_VERTICES = 20_000


class _OutOfBudget(Exception):
    pass


@dataclass
class _RootOutcome:
    weight: int
    status: str
    clique: list = field(default_factory=list)
    best: list = field(default_factory=list)
    nodes: int = 0


def check_limits(q: int, n: int) -> None:
    field_new(q)
    limit = MAX_BINARY_LENGTH if q == 2 else MAX_LENGTH
    if n > limit or (q > 2 and q**n > MAX_WORDS):
        raise TooLarge(f"exhaustive search over GF({q})^{n} is beyond the supported size")


def binary_candidates(n: int, d: int, w: int) -> list[tuple[int, ...]]:
    """Words of weight >= w at distance >= d from 1^w 0^(n-w), ordered by (weight, lex)."""
    xs = np.arange(2**n, dtype=np.uint32)
    lead = np.uint32(((1 << w) - 1) << (n - w))
    wt = np.bitwise_count(xs)
    keep = (wt >= w) & (np.bitwise_count(xs ^ lead) >= d)
    xs, wt = xs[keep], wt[keep]
    order = np.lexsort((xs, wt))
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint32)
    return [tuple(row) for row in ((xs[order][:, None] >> shifts) & 1).astype(np.int64).tolist()]


def _qary_candidates(q: int, n: int, d: int, w: int) -> list[tuple[int, ...]]:
    idx = np.arange(q**n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % q
    lead = np.array([1] * w + [0] * (n - w), dtype=np.int64)
    wt = (digits != 0).sum(axis=1)
    keep = (wt >= w) & ((digits != lead).sum(axis=1) >= d)
    order = np.lexsort((idx[keep], wt[keep]))
    return [tuple(row) for row in digits[keep][order].tolist()]


def _adjacency(words: list[tuple[int, ...]], d: int) -> list[int]:
    """Bitset of neighbours (distance >= d) for every vertex."""
    if not words:
        return []
    arr = np.array(words, dtype=np.uint8)
    adj = []
    for i in range(len(words)):
        row = (arr != arr[i]).sum(axis=1) >= d
        adj.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return adj


class _CliqueSearch:
    """Decides whether the graph holds a clique of ``target`` vertices."""

    def __init__(self, adj: list[int], target: int, max_nodes: int, deadline: float):
        self.adj = adj
        self.target = target
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.best: list[int] = []
        self._current: list[int] = []

    def _colour_order(self, pool: int) -> tuple[list[int], list[int]]:
        order, colours = [], []
        colour = 0
        uncoloured = pool
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = (available & -available).bit_length() - 1
                available &= ~self.adj[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append(v)
                colours.append(colour)
        return order, colours

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.nodes % 4096 == 0 and time.time() > self.deadline:
            raise _OutOfBudget

    def _expand(self, pool: int) -> bool:
        self._tick()
        if len(self._current) > len(self.best):
            self.best = list(self._current)
        if len(self._current) >= self.target:
            return True
        order, colours = self._colour_order(pool)
        for v, colour in zip(reversed(order), reversed(colours)):
            if len(self._current) + colour < self.target:
                return False
            self._current.append(v)
            if self._expand(pool & self.adj[v]):
                return True
            self._current.pop()
            pool &= ~(1 << v)
        return False

    def run(self) -> Optional[list[int]]:
        everything = (1 << len(self.adj)) - 1
        if self._expand(everything):
            return list(self._current)
        return None


def _search_root(
    q: int, n: int, d: int, w: int, size_goal: int, max_nodes: int, deadline: float, max_vertices: int
) -> _RootOutcome:
    lead = tuple([1] * w + [0] * (n - w))
    words = binary_candidates(n, d, w) if q == 2 else _qary_candidates(q, n, d, w)
    if len(words) > max_vertices:
        raise TooLarge(f"root w={w} has {len(words)} candidate words, limit is {max_vertices}")
    search = _CliqueSearch(_adjacency(words, d), size_goal - 2, max_nodes, deadline)
    try:
        clique = search.run()
    except _OutOfBudget:
        return _RootOutcome(w, "budget_exceeded", best=[lead] + [words[v] for v in search.best], nodes=search.nodes)
    best = [lead] + [words[v] for v in search.best]
    if clique is None:
        return _RootOutcome(w, "exhausted", best=best, nodes=search.nodes)
    return _RootOutcome(w, "found", clique=[lead] + [words[v] for v in clique], best=best, nodes=search.nodes)


def _verified_witness(q: int, n: int, d: int, words: list[tuple[int, ...]], size_goal: int) -> Code:
    code = Code.from_words(field_new(q), words, n=n)
    if code.size >= 2:
        params = analyze(code).params
        if params.d < d or params.M < size_goal:
            raise RuntimeError(f"search produced an invalid witness {params.label()}")
    return code


def _decide(
    q: int,
    n: int,
    d: int,
    size_goal: int,
    budget: SearchBudget,
    deadline: float,
    workers: int,
    max_vertices: int,
) -> tuple[str, list[tuple[int, ...]], list[tuple[int, ...]], int]:
    """(status, clique, largest clique seen, nodes) for one size goal; words exclude the zero word."""
    tasks = (
        delayed(_search_root)(q, n, d, w, size_goal, budget.max_nodes, deadline, max_vertices)
        for w in range(d, n + 1)
    )
    nodes = 0
    best: list[tuple[int, ...]] = []
    over_budget = False
    with Parallel(n_jobs=workers, return_as="generator") as parallel:
        for outcome in parallel(tasks):
            nodes += outcome.nodes
            logger.debug(f"root w={outcome.weight} of ({n},{size_goal},{d})_{q}: {outcome.status} after {outcome.nodes} nodes")
            if len(outcome.best) > len(best):
                best = outcome.best
            if outcome.status == "found":
                return "found", outcome.clique, outcome.clique, nodes
            over_budget = over_budget or outcome.status == "budget_exceeded"
    return ("budget_exceeded" if over_budget else "exhausted"), [], best, nodes


def max_code_size(
    q: int,
    n: int,
    d: int,
    size_goal: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    settle_maximum: bool = True,
) -> SearchResult:
    """Look for an (n, size_goal, d)_q code; exhausted means none exists.

    When no such code exists and ``settle_maximum`` is set, the search climbs
    from the largest code it met until the next size fails, so ``value`` is the
    largest size of any (n, M, d)_q code. Without it an exhausted result carries
    no value.
    """
    check_limits(q, n)
    if d < 1 or size_goal < 1:
        raise ValueError(f"distance and size goal must be positive, got d={d} size_goal={size_goal}")
    budget = budget or SearchBudget()
    start = time.time()
    zero = tuple([0] * n)

    def elapsed() -> float:
        return (time.time() - start) * 1000

    if size_goal == 1 or d > n:
        status = "found" if size_goal == 1 else "exhausted"
        witness = Code.from_words(field_new(q), [zero], n=n)
        return SearchResult(status=status, value=1, witness=witness, duration_ms=elapsed())

    deadline = start + budget.max_seconds
    status, clique, best, nodes = _decide(q, n, d, size_goal, budget, deadline, workers, max_vertices)
    if status == "found":
        witness = _verified_witness(q, n, d, [zero] + clique, size_goal)
        return SearchResult(status="found", value=witness.size, witness=witness, nodes_explored=nodes, duration_ms=elapsed())
    if status == "exhausted" and not settle_maximum:
        return SearchResult(status="exhausted", nodes_explored=nodes, duration_ms=elapsed())

    # one size at a time; every size below a found code is attainable
    while status == "exhausted" and len(best) + 2 < size_goal:
        status, clique, seen, used = _decide(q, n, d, len(best) + 2, budget, deadline, workers, max_vertices)
        nodes += used
        if status == "found":
            best, status = clique, "exhausted"
        elif status == "exhausted":
            break
        elif len(seen) > len(best):
            best = seen

    partial = _verified_witness(q, n, d, [zero] + best, len(best) + 1)
    if status == "budget_exceeded":
        logger.warning(f"Search for ({n},{size_goal},{d})_{q} ran out of budget; best size {partial.size}")
        return SearchResult(
            status="budget_exceeded", value=partial.size, witness=partial, nodes_explored=nodes, duration_ms=elapsed()
        )
    logger.info(f"No ({n},{size_goal},{d})_{q} code; largest size is {partial.size}")
    return SearchResult(status="exhausted", value=partial.size, witness=partial, nodes_explored=nodes, duration_ms=elapsed())


def min_length_exhaustive(
    q: int,
    M: int,
    d: int,
    n_limit: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SearchResult:
    """Smallest n <= n_limit carrying an (n, M, d)_q code."""
    if M < 2:
        raise ValueError(f"minimum length needs at least two words, got M={M}")
    if n_limit < d:
        raise ValueError(f"n_limit {n_limit} is below the distance {d}")
    check_limits(q, n_limit)
    start = time.time()
    nodes = 0
    for n in range(d, n_limit + 1):
        result = max_code_size(
            q, n, d, M, budget=budget, workers=workers, max_vertices=max_vertices, settle_maximum=False
        )
        nodes += result.nodes_explored
        logger.info(f"Length {n} for ({M},{d})_{q}: {result.status}")
        duration = (time.time() - start) * 1000
        if result.status == "found":
            return SearchResult(
                status="found", value=n, witness=result.witness, nodes_explored=nodes, duration_ms=duration, lower_bound=n
            )
        if result.status == "budget_exceeded":
            return SearchResult(status="budget_exceeded", nodes_explored=nodes, duration_ms=duration, lower_bound=n)
    return SearchResult(
        status="exhausted", nodes_explored=nodes, duration_ms=(time.time() - start) * 1000, lower_bound=n_limit + 1
    )
