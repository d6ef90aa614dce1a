from fractions import Fraction

import pytest

from permsum import (
    ConstructionError,
    ExcludedValueError,
    OutOfRangeError,
    SeedError,
    evaluate,
    integer_witness,
    link,
    prod_one,
    verify_seeds,
    zero_cycdif,
    zero_dif_end_shy,
    zero_dif_fixed_ends,
)
from permsum import constructors as C
from permsum.perm import Permutation

from . import oracle


def test_builtin_seeds_verify():
    verify_seeds()
    verify_seeds(C.SEEDS + C.PAPER_SEEDS)
    assert len(C.PAPER_SEEDS) == 16


def test_bad_seed_is_named():
    bad = C._seed("alpha_8", (1, 2, 4, 8, 6, 5, 7, 3), "dif", 0, first=1, last=7)
    with pytest.raises(SeedError, match="alpha_8"):
        verify_seeds([bad])
    bad_value = C._seed("delta_6", (2, 1, 3, 4, 5, 6), "prod", Fraction(1, 2))
    with pytest.raises(SeedError, match="delta_6"):
        verify_seeds([bad_value])


def test_alpha_seeds_are_not_cyclic_zero():
    # the end-shy seeds give zero for the open sum only
    for a in C.ALPHA.values():
        assert evaluate("dif", a) == 0
        assert evaluate("cycdif", a) != 0


@pytest.mark.parametrize("n, expected", [
    (6, (1, 4, 2, 5, 3, 6)),
    (7, (1, 3, 2, 4, 6, 5, 7)),
    (9, (1, 4, 2, 5, 3, 6, 8, 7, 9)),
    (11, (1, 3, 6, 4, 7, 5, 2, 8, 10, 9, 11)),
])
def test_zero_dif_fixed_ends_examples(n, expected):
    assert zero_dif_fixed_ends(n) == expected


def test_zero_dif_fixed_ends_is_a_chain_of_links():
    p = zero_dif_fixed_ends(30)
    assert link(p, Permutation(C.TAU)) == zero_dif_fixed_ends(33)


@pytest.mark.parametrize("n, expected", [
    (8, (1, 2, 4, 8, 6, 5, 3, 7)),
    (13, (1, 4, 2, 5, 3, 6, 7, 9, 13, 11, 10, 8, 12)),
])
def test_zero_dif_end_shy_examples(n, expected):
    assert zero_dif_end_shy(n) == expected


@pytest.mark.parametrize("n", range(8, 61))
def test_zero_dif_end_shy_contract(n):
    p = zero_dif_end_shy(n)
    assert p(1) == 1 and p(n) == n - 1 and evaluate("dif", p) == 0


@pytest.mark.parametrize("n, expected", [
    (8, (1, 2, 3, 4, 8, 7, 6, 5)),
    (9, (2, 1, 4, 5, 9, 3, 7, 6, 8)),
    (15, (1, 3, 2, 4, 6, 5, 7, 14, 10, 12, 13, 15, 11, 9, 8)),
])
def test_zero_cycdif_examples(n, expected):
    assert zero_cycdif(n) == expected


def test_zero_cycdif_large():
    assert evaluate("cycdif", zero_cycdif(101)) == 0


@pytest.mark.parametrize("n, expected", [
    (6, (2, 1, 3, 4, 5, 6)),
    (9, (6, 4, 1, 2, 9, 7, 5, 3, 8)),
    (11, (6, 10, 4, 1, 2, 11, 9, 7, 5, 3, 8)),
    (32, C.DELTA[32]),
])
def test_prod_one_examples(n, expected):
    assert prod_one(n) == expected
    assert evaluate("prod", expected) == 1


def test_prod_one_checked_steps():
    assert evaluate("prod", prod_one(60, check_steps=True)) == 1


def test_prod_one_stuck_is_loud(monkeypatch):
    monkeypatch.setitem(C.DELTA, 8, (8, 6, 4, 2, 1, 3, 5, 7))  # no adjacent pair sums to 9
    with pytest.raises(ConstructionError, match="cannot insert 9"):
        prod_one(9)


@pytest.mark.parametrize("f", [zero_dif_fixed_ends, zero_dif_end_shy, zero_cycdif, prod_one])
def test_small_sizes_rejected(f):
    with pytest.raises(OutOfRangeError):
        f(5)


@pytest.mark.parametrize("n", range(2, 8))
def test_admissible_integers_match_brute_force(n):
    ints = sorted(int(v) for v in oracle.values("dif", n) if v.denominator == 1)
    assert C.admissible_integers(n) == ints


@pytest.mark.parametrize("n", range(2, 13))
def test_integer_witness_all_values(n):
    for m in C.admissible_integers(n):
        p = integer_witness(n, m)
        assert evaluate("dif", p) == m
        if m <= 0:
            assert p(n) == n


def test_integer_witness_named_cases():
    assert integer_witness(7, 0) == (1, 3, 2, 4, 6, 5, 7)
    assert integer_witness(9, -8) == tuple(range(1, 10))
    assert integer_witness(9, 8) == tuple(range(9, 0, -1))
    assert evaluate("dif", integer_witness(5, 4)) == 4


def test_integer_witness_errors_are_distinguished():
    with pytest.raises(ExcludedValueError, match="excluded"):
        integer_witness(6, 4)
    with pytest.raises(ExcludedValueError):
        integer_witness(5, 3)
    with pytest.raises(ExcludedValueError):
        integer_witness(3, 0)
    with pytest.raises(OutOfRangeError):
        integer_witness(6, 6)
    with pytest.raises(OutOfRangeError):
        integer_witness(1, 0)
