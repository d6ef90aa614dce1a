"""Witness search and exact value-set enumeration.

Two engines sit behind :func:`find_witness`:

* a depth-first search (``strategy="dfs"``) extending a prefix one entry at
  a time with exact integer partial sums and admissible bound pruning;
* a meet-in-the-middle join (``strategy="mitm"``) for larger n, which
  enumerates the two halves of the permutation around a middle entry with
  numpy and joins them on hashed partial sums.

Symmetry reduction relies on two facts. Every cyclic functional is invariant
under rotation, so p(1) = 1 can be fixed. Reversal either preserves the
value (products and sums) or negates it (differences and square
differences), so it is enough to visit permutations whose end entries are
in increasing order, accepting the negated target and reversing.
"""
from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from ..constructors import admissible_integers, integer_witness, ConstructionError
from ..functionals import Functional, Witness, evaluate
from ._dfs import Aborted, Budget, BudgetExhausted, DepthFirst
from ._mitm import MAX_INTERIOR, MeetInTheMiddle, total_rows
from ._scaled import ScaledTerms
from ._types import (
    PartialResultError,
    Progress,
    SearchOptions,
    SearchResult,
    Status,
    ValueSet,
)

__all__ = [
    "SearchOptions",
    "SearchResult",
    "Status",
    "Progress",
    "ValueSet",
    "PartialResultError",
    "find_witness",
    "all_witnesses",
    "enumerate_values",
    "integer_values",
    "choose_strategy",
]

# Largest n the plain depth-first engine is chosen for automatically.
DFS_AUTO_MAX_N = 9
# Row cap for one materialised block of the meet-in-the-middle join.
MITM_MAX_ROWS = 4_000_000
# Above this many generated rows a full join is not worth starting automatically.
MITM_AUTO_MAX_TOTAL = 2_000_000_000


def _check_n(f: Functional, n: int) -> None:
    if int(n) != n or n < f.min_n:
        raise ValueError(f"{f} needs an integer n >= {f.min_n}, got {n}")


def choose_strategy(f, n: int, opts: SearchOptions | None = None) -> str:
    f = Functional.parse(f)
    opts = opts or SearchOptions()
    if opts.strategy != "auto":
        return opts.strategy
    if n <= DFS_AUTO_MAX_N:
        return "dfs"
    m = n - 2 if f.cyclic else n - 1
    if m <= MAX_INTERIOR and total_rows(f, n, MITM_MAX_ROWS) <= MITM_AUTO_MAX_TOTAL:
        return "mitm"
    return "dfs"


def _roots(f: Functional, n: int, sym: bool) -> list[tuple[int, ...]]:
    if f.cyclic and sym:
        return [(1,)]
    return [(v,) for v in range(1, n + 1)]


def _expand(roots, n, want):
    tasks = list(roots)
    while len(tasks) < want and len(tasks[0]) < n - 1:
        tasks = [t + (v,) for t in tasks for v in range(1, n + 1) if v not in t]
    return tasks


def _reverse_back(f: Functional, path: tuple[int, ...]) -> tuple[int, ...]:
    rev = path[::-1]
    if f.cyclic:
        i = rev.index(path[0])
        rev = rev[i:] + rev[:i]
    return rev


def _orbit(f: Functional, perm: tuple[int, ...], value_preserving_reversal: bool):
    """All permutations with the same value reachable by rotation and reversal."""
    bases = [perm]
    if value_preserving_reversal:
        bases.append(perm[::-1])
    out = set()
    for b in bases:
        if f.cyclic:
            out.update(b[i:] + b[:i] for i in range(len(b)))
        else:
            out.add(b)
    return out


# ----------------------------------------------------------------------------
# worker plumbing: module-level so forked workers can unpickle the task function

_shared = {}


def _init_worker(shared_nodes, found_index):
    _shared["nodes"] = shared_nodes
    _shared["found"] = found_index


def _run_task(job):
    """Run one DFS subtree. Returns (index, payload, nodes, outcome)."""
    (index, prefix, f, n, accept, ends_ordered, mode, pruning, heuristic,
     deadline, node_budget) = job
    shared_nodes = _shared.get("nodes")
    found_index = _shared.get("found")
    budget = Budget(deadline, node_budget, shared_nodes, found_index)
    budget.task_index = index
    if found_index is not None and found_index.value < index:
        return index, [], 0, "aborted"
    terms = ScaledTerms(f, n)
    payload = []

    def on_leaf(path, total):
        payload.append(path if mode != "values" else total)
        if mode == "first":
            if found_index is not None:
                with found_index.get_lock():
                    found_index.value = min(found_index.value, index)
            return True
        return False

    engine = DepthFirst(f, n, terms, on_leaf, accept=accept, ends_ordered=ends_ordered,
                        pruning=pruning, heuristic=heuristic, budget=budget)
    outcome = "done"
    try:
        engine.run(prefix)
    except BudgetExhausted:
        outcome = "budget"
    except Aborted:
        outcome = "aborted"
    budget.flush(engine.nodes)
    if mode == "values":
        payload = sorted(set(payload))
    return index, payload, engine.nodes, outcome


def _run_dfs(f, n, accept, opts, mode, deadline):
    """Run the DFS over all root subtrees; returns (payload list, nodes, hit_budget)."""
    sym = opts.symmetry_reduction
    roots = _roots(f, n, sym)
    terms = ScaledTerms(f, n)
    payload = []
    if opts.worker_count == 1:
        budget = Budget(deadline, opts.node_budget)

        def on_leaf(path, total):
            payload.append(path if mode != "values" else total)
            return mode == "first"

        engine = DepthFirst(f, n, terms, on_leaf, accept=accept, ends_ordered=sym,
                            pruning=opts.pruning, heuristic=opts.heuristic, budget=budget,
                            progress=opts.progress, progress_interval=opts.progress_interval)
        try:
            for root in roots:
                if engine.run(root):
                    break
        except BudgetExhausted:
            return payload, engine.nodes, True
        return payload, engine.nodes, False

    tasks = _expand(roots, n, 4 * opts.worker_count)
    ctx = mp.get_context("fork")
    shared_nodes = ctx.Value("q", 0)
    found_index = ctx.Value("q", len(tasks) + 1)
    jobs = [
        (i, t, f, n, accept, sym, mode, opts.pruning, opts.heuristic, deadline, opts.node_budget)
        for i, t in enumerate(tasks)
    ]
    results = []
    with ProcessPoolExecutor(opts.worker_count, mp_context=ctx, initializer=_init_worker,
                             initargs=(shared_nodes, found_index)) as pool:
        for res in pool.map(_run_task, jobs):
            results.append(res)
    results.sort(key=lambda r: r[0])
    nodes = sum(r[2] for r in results)
    hit_budget = False
    for index, items, _, outcome in results:
        if mode == "first" and items:
            return items[:1], nodes, False
        if outcome == "budget":
            hit_budget = True
        payload.extend(items)
    return payload, nodes, hit_budget


def _accept_set(f: Functional, t: int, sym: bool) -> set[int]:
    if sym and f.antisymmetric:
        return {t, -t}
    return {t}


def _to_witness(f, target, t, terms, path, total):
    perm = path if total == t else _reverse_back(f, path)
    return Witness(perm, f, claimed=target)


def find_witness(f, n: int, target, opts: SearchOptions | None = None) -> SearchResult:
    """Search for a permutation of size n on which ``f`` equals ``target`` exactly.

    Nonexistence is a result, not an error: the returned status tells apart a
    completed search that found nothing from one stopped by a budget.
    """
    f = Functional.parse(f)
    _check_n(f, n)
    target = Fraction(target)
    opts = opts or SearchOptions()
    t0 = time.monotonic()
    deadline = None if opts.time_budget is None else t0 + opts.time_budget
    terms = ScaledTerms(f, n)
    t = terms.scale(target)
    strategy = choose_strategy(f, n, opts)

    def result(status, witness=None, nodes=0):
        return SearchResult(f, n, target, status, witness, nodes, time.monotonic() - t0, strategy)

    if t is None:
        # Every value is a multiple of 1/L, so this target is out of reach.
        return result(Status.EXHAUSTED)

    if strategy == "mitm":
        return _find_mitm(f, n, target, t, terms, opts, deadline, result)

    sym = opts.symmetry_reduction
    accept = _accept_set(f, t, sym)
    mode = "first" if opts.first_only else "all"
    paths, nodes, hit_budget = _run_dfs(f, n, accept, opts, mode, deadline)
    witnesses = []
    for path in paths:
        total = sum(terms.table[a][b] for a, b in zip(path, path[1:]))
        if f.cyclic:
            total += terms.table[path[-1]][path[0]]
        witnesses.append(_to_witness(f, target, t, terms, path, total))
    if witnesses:
        best = witnesses[0] if opts.first_only else min(witnesses, key=lambda w: w.perm.entries)
        return result(Status.FOUND, best, nodes)
    return result(Status.BUDGET if hit_budget else Status.EXHAUSTED, None, nodes)


def _find_mitm(f, n, target, t, terms, opts, deadline, result):
    budget = Budget(deadline, opts.node_budget)
    t0 = time.monotonic()
    progress = None
    if opts.progress is not None:
        def progress(nodes):
            opts.progress(Progress(nodes, n, None, time.monotonic() - t0))

    engine = MeetInTheMiddle(f, n, terms, budget, progress, MITM_MAX_ROWS)
    T = terms.table
    found = []

    def on_candidate(perm):
        if len(set(perm)) != n:
            return False
        total = sum(T[a][b] for a, b in zip(perm, perm[1:]))
        if f.cyclic:
            total += T[perm[-1]][perm[0]]
        if total != t:
            return False
        found.append(Witness(perm, f, claimed=target))
        return opts.first_only

    try:
        engine.search(t, on_candidate)
    except BudgetExhausted:
        if not found:
            return result(Status.BUDGET, None, engine.nodes)
    if found:
        best = found[0] if opts.first_only else min(found, key=lambda w: w.perm.entries)
        return result(Status.FOUND, best, engine.nodes)
    return result(Status.EXHAUSTED, None, engine.nodes)


def all_witnesses(f, n: int, target, opts: SearchOptions | None = None) -> list[Witness]:
    """Every permutation of size n with ``f`` equal to ``target``, sorted.

    Runs the depth-first engine to completion. With symmetry reduction the
    search visits one representative per rotation/reversal class and the
    classes are expanded afterwards, so the result does not depend on the
    flag. Raises :class:`PartialResultError` if a budget stops the search.
    """
    f = Functional.parse(f)
    _check_n(f, n)
    target = Fraction(target)
    opts = opts or SearchOptions()
    deadline = None if opts.time_budget is None else time.monotonic() + opts.time_budget
    terms = ScaledTerms(f, n)
    t = terms.scale(target)
    if t is None:
        return []
    sym = opts.symmetry_reduction
    paths, nodes, hit_budget = _run_dfs(f, n, _accept_set(f, t, sym), opts, "all", deadline)
    if hit_budget:
        raise PartialResultError(f"budget exhausted after {nodes} nodes", f, n, set(), nodes)
    perms = set()
    preserving = f.positive or t == 0
    for path in paths:
        total = sum(terms.table[a][b] for a, b in zip(path, path[1:]))
        if f.cyclic:
            total += terms.table[path[-1]][path[0]]
        base = path if total == t else _reverse_back(f, path)
        perms |= _orbit(f, base, preserving) if sym else {base}
    return [Witness(p, f, claimed=target) for p in sorted(perms)]


def enumerate_values(f, n: int, opts: SearchOptions | None = None) -> ValueSet:
    """The exact set of values ``f`` takes over all permutations of size n."""
    f = Functional.parse(f)
    _check_n(f, n)
    opts = opts or SearchOptions()
    deadline = None if opts.time_budget is None else time.monotonic() + opts.time_budget
    terms = ScaledTerms(f, n)
    totals, nodes, hit_budget = _run_dfs(f, n, None, opts, "values", deadline)
    values = {terms.unscale(v) for v in totals}
    if opts.symmetry_reduction and f.antisymmetric:
        values |= {-v for v in values}
    if hit_budget:
        raise PartialResultError(
            f"enumeration of {f} at n={n} stopped by budget after {nodes} nodes "
            f"with {len(values)} values seen",
            f, n, values, nodes,
        )
    return ValueSet(n, f, tuple(values))


def integer_values(n: int, bound: int | None = None, method: str = "auto",
                   opts: SearchOptions | None = None) -> list[int]:
    """All integer values of the difference sum over permutations of size n.

    ``method="exhaustive"`` enumerates every permutation; ``"constructive"``
    builds and re-evaluates a witness for each admissible integer. ``"auto"``
    enumerates when n <= ``bound`` (default 9) and constructs otherwise.
    """
    if n < 2:
        raise ValueError(f"integer_values needs n >= 2, got {n}")
    if method == "auto":
        method = "exhaustive" if n <= (DFS_AUTO_MAX_N if bound is None else bound) else "constructive"
    if method == "exhaustive":
        return enumerate_values(Functional.DIF, n, opts).integers()
    if method != "constructive":
        raise ValueError(f"unknown method {method!r}")
    out = []
    for m in admissible_integers(n):
        p = integer_witness(n, m)
        if evaluate(Functional.DIF, p) != m:
            raise ConstructionError(f"witness {p} for {m} at n={n} does not re-evaluate to {m}")
        out.append(m)
    return out
