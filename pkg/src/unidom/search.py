"""Exhaustive enumeration oracles over small bipartite graphs.

The searches here are independent of the closed-form bounds: they iterate
raw cross-edge masks, filter with the exact solver, and report what they
find.  Side assignments are deduplicated up to relabeling: every bipartite
graph on n vertices can be relabeled so one side is {0..k-1} with
k <= n/2, and both quantities computed here (maximum size, set of
isomorphism classes) are invariant under relabeling.  The coverage
bookkeeping below is asserted against that reduced space.

Work is split into (side size, edge count) blocks processed from dense to
sparse so the best-so-far size prunes whole blocks; blocks share only the
immutable parameters and the guarded best value, so any number of workers
may process them.
"""

from __future__ import annotations

import os
import threading
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .bounds import min_forest_edges
from .domination import _enumerate_covers, _exists_cover
from .graph import Graph, are_isomorphic, emit_graph6, iter_bits

HARD_CAP = 10
_CHECK_EVERY = 4096


def _thread_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("UNIDOM_THREADS")
    return max(1, int(env)) if env else 1


@dataclass
class SearchResult:
    n: int
    gamma: int
    max_size: Optional[int]
    witnesses: list[str]
    graphs_scanned: int
    elapsed: float
    complete: bool

    def to_json(self) -> dict:
        return {
            "schema": "unidom/1",
            "kind": "search",
            "n": self.n,
            "gamma": self.gamma,
            "max_size": self.max_size,
            "witnesses": self.witnesses,
            "graphs_scanned": self.graphs_scanned,
            "elapsed": self.elapsed,
            "complete": self.complete,
        }


@dataclass
class WitnessCount:
    n: int
    gamma: int
    size: int
    count: int
    witnesses: list[str]
    graphs_scanned: int
    elapsed: float
    complete: bool

    def to_json(self) -> dict:
        return {
            "schema": "unidom/1",
            "kind": "witness_count",
            "n": self.n,
            "gamma": self.gamma,
            "size": self.size,
            "count": self.count,
            "witnesses": self.witnesses,
            "graphs_scanned": self.graphs_scanned,
            "elapsed": self.elapsed,
            "complete": self.complete,
        }


def _assert_unique_domination_properties(g: Graph, gamma: int, dset: int) -> None:
    # any isolated-free graph with a unique minimum dominating set must
    # satisfy these; a violation found here would refute the theory
    if g.n < 3 * gamma:
        raise AssertionError(
            f"unique minimum dominating set on n={g.n} < 3*gamma={3 * gamma}"
        )
    for v in iter_bits(dset):
        target = 1 << v
        count = 0
        for u in iter_bits(g.full_mask & ~dset):
            if g.adj[u] & dset == target:
                count += 1
        if count < 2:
            raise AssertionError(
                f"dominator {v} has {count} exterior private neighbors"
            )


def _scan_block(n: int, k: int, s: int, gamma: int, *, stop_on_first: bool,
                deadline: Optional[float]) -> tuple[list[tuple[str, Graph]], int, bool]:
    """Enumerate all k x (n-k) cross-edge masks with exactly s edges.

    Returns (witnesses found, masks visited, timed out).  A witness is an
    isolated-vertex-free graph whose domination number is exactly ``gamma``
    realized by a unique minimum set.
    """
    q = n - k
    cells = k * q
    full = (1 << n) - 1
    col_full = (1 << q) - 1
    found: list[tuple[str, Graph]] = []
    visited = 0
    if deadline is not None and time.monotonic() >= deadline:
        return found, visited, True
    for combo in combinations(range(cells), s):
        visited += 1
        if deadline is not None and visited % _CHECK_EVERY == 0:
            if time.monotonic() >= deadline:
                return found, visited, True
        rows = [0] * k
        for cell in combo:
            rows[cell // q] |= 1 << (cell % q)
        col_or = 0
        ok = True
        for r in rows:
            if r == 0:
                ok = False
                break
            col_or |= r
        if not ok or col_or != col_full:
            continue
        cols = [0] * q
        for i, r in enumerate(rows):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        closed = [0] * n
        for i in range(k):
            closed[i] = (rows[i] << k) | (1 << i)
        for j in range(q):
            closed[k + j] = cols[j] | (1 << (k + j))
        # domination number must be exactly gamma, with a unique witness
        if gamma > 1 and _exists_cover(closed, full, gamma - 1):
            continue
        sets = _enumerate_covers(closed, full, gamma, cap=2)
        if len(sets) != 1:
            continue
        adj = tuple(
            (rows[v] << k) if v < k else cols[v - k] for v in range(n)
        )
        g = Graph(n, adj)
        _assert_unique_domination_properties(g, gamma, sets[0])
        found.append((emit_graph6(g), g))
        if stop_on_first:
            return found, visited, False
    return found, visited, False


@dataclass
class _SharedState:
    lock: threading.Lock = field(default_factory=threading.Lock)
    best: int = -1
    scanned: int = 0
    classes: list[tuple[str, Graph]] = field(default_factory=list)
    timed_out: bool = False


def _merge_classes(classes: list[tuple[str, Graph]],
                   found: list[tuple[str, Graph]]) -> None:
    for g6, g in found:
        if not any(are_isomorphic(g, rep) for _, rep in classes):
            classes.append((g6, g))


def _run_blocks(blocks: list, handler: Callable, threads: int) -> None:
    """Drain the block queue with ``threads`` workers; handler returns False
    to stop issuing further work (budget exhausted)."""
    pending = deque(blocks)
    if threads <= 1:
        while pending:
            if not handler(pending.popleft()):
                break
        return
    guard = threading.Lock()
    stop = threading.Event()

    def worker():
        while not stop.is_set():
            with guard:
                if not pending:
                    return
                block = pending.popleft()
            if not handler(block):
                stop.set()

    pool = [threading.Thread(target=worker) for _ in range(threads)]
    for t in pool:
        t.start()
    for t in pool:
        t.join()


def _reduced_space_size(n: int) -> int:
    return sum(1 << (k * (n - k)) for k in range(n // 2 + 1))


def max_umd_bipartite_size(n: int, gamma: int, budget: Optional[float] = None, *,
                           collect_witnesses: bool = True,
                           threads: Optional[int] = None,
                           progress: Optional[Callable[[int, int], None]] = None,
                           ) -> SearchResult:
    """Exact maximum size over all isolated-vertex-free bipartite graphs of
    order ``n`` whose domination number ``gamma`` is realized by a unique
    minimum dominating set.

    ``budget`` is a wall-clock limit in seconds; when it runs out the result
    comes back with ``complete=False`` and the best value seen so far.
    """
    if not 1 <= n <= HARD_CAP:
        raise ValueError(f"order must be between 1 and {HARD_CAP}")
    if gamma < 2:
        raise ValueError("search requires gamma >= 2")
    start = time.monotonic()
    deadline = start + budget if budget is not None else None
    state = _SharedState()
    nthreads = _thread_count(threads)

    blocks = []
    for k in range(n // 2 + 1):
        cells = k * (n - k)
        blocks.extend((k, s) for s in range(cells, -1, -1))

    def handle(block) -> bool:
        k, s = block
        cells = k * (n - k)
        block_size = comb(cells, s)
        with state.lock:
            skip = s < state.best if collect_witnesses else s <= state.best
            if skip:
                state.scanned += block_size
                if progress:
                    progress(state.scanned, state.best)
                return True
        found, visited, timed_out = _scan_block(
            n, k, s, gamma,
            stop_on_first=not collect_witnesses,
            deadline=deadline,
        )
        with state.lock:
            if timed_out:
                state.scanned += visited
                state.timed_out = True
            else:
                # a block aborted after its first find still counts in full:
                # its remaining masks share the same size and cannot move the max
                state.scanned += block_size
            if found:
                if s > state.best:
                    state.best = s
                    state.classes = []
                if s == state.best:
                    _merge_classes(state.classes, found)
            if progress:
                progress(state.scanned, state.best)
        return not timed_out

    _run_blocks(blocks, handle, nthreads)

    complete = not state.timed_out
    if complete and state.scanned != _reduced_space_size(n):
        raise AssertionError(
            f"coverage bookkeeping off: scanned {state.scanned}, "
            f"space {_reduced_space_size(n)}"
        )
    witnesses = sorted(g6 for g6, _ in state.classes)
    return SearchResult(
        n=n,
        gamma=gamma,
        max_size=state.best if state.best >= 0 else None,
        witnesses=witnesses,
        graphs_scanned=state.scanned,
        elapsed=time.monotonic() - start,
        complete=complete,
    )


def count_extremal_witnesses(n: int, gamma: int, size: int,
                             budget: Optional[float] = None, *,
                             threads: Optional[int] = None,
                             progress: Optional[Callable[[int, int], None]] = None,
                             ) -> WitnessCount:
    """Count isomorphism classes of bipartite graphs with the given order,
    domination number, unique minimum dominating set, and exact size."""
    if not 1 <= n <= HARD_CAP:
        raise ValueError(f"order must be between 1 and {HARD_CAP}")
    if gamma < 2:
        raise ValueError("search requires gamma >= 2")
    if size < 0:
        raise ValueError("size must be nonnegative")
    start = time.monotonic()
    deadline = start + budget if budget is not None else None
    state = _SharedState()
    nthreads = _thread_count(threads)

    blocks = [(k, size) for k in range(n // 2 + 1) if size <= k * (n - k)]

    def handle(block) -> bool:
        k, s = block
        found, visited, timed_out = _scan_block(
            n, k, s, gamma, stop_on_first=False, deadline=deadline,
        )
        with state.lock:
            state.scanned += visited
            if timed_out:
                state.timed_out = True
            if found:
                _merge_classes(state.classes, found)
            if progress:
                progress(state.scanned, s)
        return not timed_out

    _run_blocks(blocks, handle, nthreads)

    witnesses = sorted(g6 for g6, _ in state.classes)
    return WitnessCount(
        n=n,
        gamma=gamma,
        size=size,
        count=len(state.classes),
        witnesses=witnesses,
        graphs_scanned=state.scanned,
        elapsed=time.monotonic() - start,
        complete=not state.timed_out,
    )


# ---------------------------------------------------------------------------
# forest minimum check


def _components_ok(n: int, edge_set: tuple[tuple[int, int], ...]) -> bool:
    # qualifies iff no isolated vertex and no two-vertex component
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = 0
    for u, v in edge_set:
        touched |= (1 << u) | (1 << v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    if touched != (1 << n) - 1:
        return False
    sizes: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return all(c >= 3 for c in sizes.values())


def verify_forest_lemma(n: int) -> bool:
    """Brute-force the minimum size over all labeled order-n graphs with no
    isolated vertices and no two-vertex components; compare to the formula."""
    if not 3 <= n <= 7:
        raise ValueError("brute force supported for 3 <= n <= 7")
    pairs = list(combinations(range(n), 2))
    for s in range(len(pairs) + 1):
        for edge_set in combinations(pairs, s):
            if _components_ok(n, edge_set):
                return s == min_forest_edges(n)
    raise AssertionError("no qualifying graph found")  # unreachable for n >= 3
