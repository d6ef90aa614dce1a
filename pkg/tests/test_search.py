from fractions import Fraction

import pytest

from permsum import SearchOptions, Status, all_witnesses, enumerate_values, evaluate, find_witness, integer_values
from permsum.search import PartialResultError, choose_strategy
from permsum.search._mitm import arrangements, plan

from . import oracle

SMALL = [(name, n) for name in oracle.NAMES for n in range(oracle.min_n(name), 7)]
TARGETS = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)]


@pytest.mark.parametrize("name, n", SMALL)
@pytest.mark.parametrize("sym", [True, False])
def test_all_witnesses_equal_brute_force(name, n, sym):
    truth = oracle.table(name, n)
    probes = TARGETS + sorted(truth)[:3] + sorted(truth)[-2:]
    for t in probes:
        got = all_witnesses(name, n, t, SearchOptions(symmetry_reduction=sym))
        assert {w.perm.entries for w in got} == oracle.witnesses(name, n, t), t
        assert all(w.value == t for w in got)


@pytest.mark.parametrize("name, n", SMALL)
def test_enumerate_values_equal_brute_force(name, n):
    assert set(enumerate_values(name, n)) == oracle.values(name, n)
    assert set(enumerate_values(name, n, SearchOptions(symmetry_reduction=False))) == oracle.values(name, n)


@pytest.mark.parametrize("name", oracle.NAMES)
@pytest.mark.parametrize("heuristic", [False, True])
def test_find_witness_verdicts(name, heuristic):
    n = 6
    truth = oracle.table(name, n)
    for t in TARGETS + sorted(truth)[::7]:
        res = find_witness(name, n, t, SearchOptions(heuristic=heuristic))
        assert res.found == (t in truth)
        assert res.status is (Status.FOUND if t in truth else Status.EXHAUSTED)
        if res.found:
            assert res.witness.perm.entries in truth[t]
            assert res.witness.value == t


def test_canonical_witness_is_lexicographically_least():
    truth = oracle.witnesses("dif", 6, 0)
    res = find_witness("dif", 6, 0, SearchOptions(first_only=False))
    assert res.witness.perm.entries == min(truth)


def test_unreachable_denominator_needs_no_search():
    res = find_witness("dif", 5, Fraction(1, 7))
    assert res.status is Status.EXHAUSTED and res.nodes == 0


@pytest.mark.parametrize("name, n, t", [
    ("dif", 9, 0), ("cycsqdif", 9, 0), ("sum", 8, 1), ("cycdif", 9, Fraction(1, 2)), ("prod", 9, 1),
])
def test_engines_agree(name, n, t):
    dfs = find_witness(name, n, t, SearchOptions(strategy="dfs"))
    mitm = find_witness(name, n, t, SearchOptions(strategy="mitm"))
    assert dfs.status is mitm.status
    for r in (dfs, mitm):
        if r.found:
            assert evaluate(name, r.witness.perm) == t


def test_mitm_exhausts_where_dfs_does():
    for n in (7, 8, 9):
        res = find_witness("cycsqdif", n, 0, SearchOptions(strategy="mitm"))
        assert res.status is Status.EXHAUSTED and res.strategy == "mitm"


@pytest.mark.parametrize("workers", [2, 3])
def test_workers_are_deterministic(workers):
    for name, n, t in [("dif", 8, 0), ("cycsqdif", 9, 0), ("sum", 8, 1), ("dif", 8, Fraction(1, 2))]:
        one = find_witness(name, n, t, SearchOptions(first_only=False))
        many = find_witness(name, n, t, SearchOptions(first_only=False, worker_count=workers))
        assert one.status is many.status
        if one.found:
            assert one.witness.perm == many.witness.perm
    first = find_witness("dif", 8, 0)
    assert find_witness("dif", 8, 0, SearchOptions(worker_count=workers)).witness.perm == first.witness.perm


def test_all_witnesses_with_workers():
    serial = all_witnesses("sqdif", 7, 0)
    assert all_witnesses("sqdif", 7, 0, SearchOptions(worker_count=2)) == serial


def test_node_budget_reports_budget_exceeded():
    res = find_witness("cycsqdif", 11, 0, SearchOptions(strategy="dfs", node_budget=5000))
    assert res.status is Status.BUDGET and not res.found and res.witness is None


def test_time_budget_reports_budget_exceeded():
    res = find_witness("cycsqdif", 16, 0, SearchOptions(strategy="dfs", time_budget=0.2))
    assert res.status is Status.BUDGET
    assert res.elapsed < 5


def test_enumeration_budget_raises_with_partial_values():
    with pytest.raises(PartialResultError) as info:
        enumerate_values("dif", 9, SearchOptions(node_budget=10_000))
    err = info.value
    assert err.partial and err.partial <= oracle.values("dif", 7) | set(enumerate_values("dif", 9))


def test_progress_reports():
    seen = []
    opts = SearchOptions(progress=seen.append, progress_interval=1000, strategy="dfs")
    find_witness("cycsqdif", 9, 0, opts)
    assert seen and seen[-1].nodes >= 1000
    assert all(s.best_deviation is None or s.best_deviation >= 0 for s in seen)


def test_options_validated():
    with pytest.raises(ValueError):
        SearchOptions(worker_count=0)
    with pytest.raises(ValueError):
        SearchOptions(strategy="magic")
    with pytest.raises(ValueError):
        find_witness("cycdif", 2, 0)


def test_strategy_choice():
    assert choose_strategy("dif", 8) == "dfs"
    assert choose_strategy("cycsqdif", 14) == "mitm"
    assert choose_strategy("cycsqdif", 30) == "dfs"
    assert choose_strategy("cycsqdif", 14, SearchOptions(strategy="dfs")) == "dfs"


def test_mitm_tables():
    a = arrangements(5, 2)
    assert a.shape == (20, 2) and len({tuple(r) for r in a.tolist()}) == 20
    p, q, b = plan(14, 4_000_000)
    assert p + q == 14 and 1 <= b <= q


def test_v5_nonnegative_part():
    expected = [Fraction(x) for x in (
        "1/12 1/6 1/4 1/3 1/2 7/12 2/3 3/4 1 7/6 4/3 3/2 19/12 7/4 11/6 23/12 2 13/6 11/4 4").split()]
    assert list(enumerate_values("dif", 5).nonnegative()) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_integer_values_methods_agree(n):
    exhaustive = integer_values(n, method="exhaustive")
    if n <= 7:
        assert exhaustive == sorted(int(v) for v in oracle.values("dif", n) if v.denominator == 1)
    assert integer_values(n, method="constructive") == exhaustive
    assert integer_values(n) == exhaustive


def test_integer_values_bad_method():
    with pytest.raises(ValueError):
        integer_values(5, method="guess")
