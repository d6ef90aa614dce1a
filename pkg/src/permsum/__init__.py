"""Permutations with prescribed exact sums of reciprocals over adjacent entries."""
from .constructors import (
    ConstructionError,
    ExcludedValueError,
    OutOfRangeError,
    SeedError,
    integer_witness,
    prod_one,
    verify_seeds,
    zero_cycdif,
    zero_dif_end_shy,
    zero_dif_fixed_ends,
)
from .functionals import Functional, Witness, evaluate, evaluate_prefix, format_rational
from .perm import Permutation, complement, insert_letter, link, reverse, shift_reverse_concat, validate
from .search import (
    SearchOptions,
    SearchResult,
    Status,
    ValueSet,
    all_witnesses,
    enumerate_values,
    find_witness,
    integer_values,
)

__version__ = "0.1.0"
