"""Depth-first search over partial permutations with exact integer partial sums."""
from __future__ import annotations

import time
from bisect import insort
from fractions import Fraction
from typing import Callable, Iterable

from ..functionals import Functional
from ._scaled import ScaledTerms
from ._types import Progress

_CHECK_MASK = 4095


class BudgetExhausted(Exception):
    pass


class Aborted(Exception):
    """Another worker made this subtree irrelevant."""


class Budget:
    """Time and node limits, optionally shared with other worker processes.

    ``shared_nodes`` is a multiprocessing Value holding the running total;
    ``found_index`` holds the smallest task index that produced a witness, so a
    worker can abandon tasks that come after it in the canonical order.
    """

    def __init__(self, deadline=None, node_budget=None, shared_nodes=None, found_index=None):
        self.deadline = deadline
        self.node_budget = node_budget
        self.shared_nodes = shared_nodes
        self.found_index = found_index
        self.task_index = None
        self._flushed = 0

    def check(self, nodes: int) -> None:
        total = nodes
        if self.shared_nodes is not None:
            with self.shared_nodes.get_lock():
                self.shared_nodes.value += nodes - self._flushed
                total = self.shared_nodes.value
            self._flushed = nodes
        if self.node_budget is not None and total >= self.node_budget:
            raise BudgetExhausted
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise BudgetExhausted
        if self.found_index is not None and self.task_index is not None:
            if self.found_index.value < self.task_index:
                raise Aborted

    def flush(self, nodes: int) -> None:
        if self.shared_nodes is not None:
            with self.shared_nodes.get_lock():
                self.shared_nodes.value += nodes - self._flushed
            self._flushed = nodes


class DepthFirst:
    """Extend a prefix position by position, calling ``on_leaf`` on every complete
    permutation whose scaled value lies in ``accept`` (or on every leaf when
    ``accept`` is None). ``on_leaf`` returns True to stop the search.

    With ``ends_ordered`` only permutations with p(anchor) < p(n) are visited,
    where the anchor is position 2 for cyclic functionals and 1 otherwise.
    """

    def __init__(
        self,
        f: Functional,
        n: int,
        terms: ScaledTerms,
        on_leaf: Callable[[tuple, int], bool],
        accept: Iterable[int] | None = None,
        ends_ordered: bool = False,
        pruning: bool = True,
        heuristic: bool = False,
        budget: Budget | None = None,
        progress: Callable[[Progress], None] | None = None,
        progress_interval: int = 200_000,
    ):
        self.f = f
        self.n = n
        self.terms = terms
        self.on_leaf = on_leaf
        self.accept = None if accept is None else tuple(sorted(set(accept)))
        self.ends_ordered = ends_ordered
        self.pruning = pruning and self.accept is not None
        self.heuristic = heuristic and self.accept is not None
        self.budget = budget or Budget()
        self.progress = progress
        self.progress_interval = progress_interval
        self.nodes = 0
        self.best = None
        self._t0 = time.monotonic()

    def run(self, prefix: tuple[int, ...]) -> bool:
        """Search below ``prefix``; True if ``on_leaf`` asked to stop."""
        n, f = self.n, self.f
        T = self.terms.table
        cyclic = f.cyclic
        accept = self.accept
        aim = accept[len(accept) // 2] if accept else 0
        budget = self.budget
        on_leaf = self.on_leaf
        heuristic = self.heuristic
        anchor_pos = 1 if cyclic else 0
        ends_ordered = self.ends_ordered
        progress = self.progress
        interval = self.progress_interval
        next_report = (self.nodes // interval + 1) * interval

        prune = self.pruning
        const_bounds = None
        if f in (Functional.DIF, Functional.CYCDIF):
            const_bounds = self.terms.term_bounds(1, 2, 1, 2)
        term_bounds = self.terms.term_bounds

        path = list(prefix)
        if len(set(path)) != len(path) or any(not 1 <= v <= n for v in path):
            raise ValueError(f"bad prefix {prefix}")
        free = sorted(set(range(1, n + 1)) - set(path))
        first = path[0]
        partial0 = sum(T[a][b] for a, b in zip(path, path[1:]))

        if not free:
            total = partial0 + (T[path[-1]][first] if cyclic else 0)
            self.nodes += 1
            if accept is None or total in accept:
                return bool(on_leaf(tuple(path), total))
            return False

        def rec(last, partial):
            nonlocal next_report
            if len(free) == 1:
                z = free[0]
                if ends_ordered and len(path) > anchor_pos and z < path[anchor_pos]:
                    return False
                self.nodes += 1
                total = partial + T[last][z]
                if cyclic:
                    total += T[z][first]
                if accept is not None:
                    dev = abs(total - aim)
                    if self.best is None or dev < self.best:
                        self.best = dev
                    if total not in accept:
                        return False
                path.append(z)
                try:
                    return bool(on_leaf(tuple(path), total))
                finally:
                    path.pop()

            if ends_ordered and len(path) > anchor_pos and free[-1] < path[anchor_pos]:
                return False
            if prune:
                r = len(free) + cyclic
                if const_bounds is not None:
                    lo, hi = const_bounds
                else:
                    ext = [free[0], free[1], free[-2], free[-1], last]
                    if cyclic:
                        ext.append(first)
                    ext.sort()
                    lo, hi = term_bounds(ext[0], ext[1], ext[-2], ext[-1])
                lo_tot = partial + r * lo
                hi_tot = partial + r * hi
                for t in accept:
                    if lo_tot <= t <= hi_tot:
                        break
                else:
                    return False

            row = T[last]
            if heuristic:
                order = sorted(free, key=lambda z: abs(aim - partial - row[z]))
            else:
                order = tuple(free)
            for z in order:
                self.nodes += 1
                if not self.nodes & _CHECK_MASK:
                    budget.check(self.nodes)
                if progress is not None and self.nodes >= next_report:
                    next_report += interval
                    progress(self._snapshot(len(path)))
                free.remove(z)
                path.append(z)
                stop = rec(z, partial + row[z])
                path.pop()
                insort(free, z)
                if stop:
                    return True
            return False

        return rec(path[-1], partial0)

    def _snapshot(self, depth: int) -> Progress:
        best = None if self.best is None else Fraction(self.best, self.terms.L)
        return Progress(self.nodes, depth, best, time.monotonic() - self._t0)
