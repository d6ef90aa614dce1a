"""Exact rational-valued functionals over adjacent pairs of a permutation.

Every functional sums ``1 / d(a, b)`` over adjacent pairs ``(a, b)`` read left
to right, where ``d`` is a difference, product, sum or square difference.
The cyclic variants also include the wrap-around pair ``(p(n), p(1))``.

Values are :class:`fractions.Fraction`, always reduced with a positive
denominator.
"""
from __future__ import annotations

import enum
import operator
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .perm import Permutation

__all__ = [
    "Functional",
    "Witness",
    "evaluate",
    "evaluate_prefix",
    "format_rational",
    "parse_rational",
    "rational_to_json",
    "rational_from_json",
]


class Functional(enum.Enum):
    DIF = "dif"
    CYCDIF = "cycdif"
    PROD = "prod"
    SUM = "sum"
    CYCSUM = "cycsum"
    SQDIF = "sqdif"
    CYCSQDIF = "cycsqdif"

    @classmethod
    def parse(cls, tag) -> Functional:
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown functional {tag!r} (expected one of {names})") from None

    @property
    def cyclic(self) -> bool:
        return self in (Functional.CYCDIF, Functional.CYCSUM, Functional.CYCSQDIF)

    @property
    def antisymmetric(self) -> bool:
        """True when d(b, a) = -d(a, b), so reversal negates the value."""
        return self in (Functional.DIF, Functional.CYCDIF, Functional.SQDIF, Functional.CYCSQDIF)

    @property
    def positive(self) -> bool:
        """True when every term is strictly positive."""
        return not self.antisymmetric

    @property
    def min_n(self) -> int:
        return 3 if self.cyclic else 2

    def denominator(self, a: int, b: int) -> int:
        return _DENOMINATORS[self](a, b)

    def term(self, a: int, b: int) -> Fraction:
        return Fraction(1, self.denominator(a, b))

    def __str__(self) -> str:
        return self.value


_DENOMINATORS = {
    Functional.DIF: operator.sub,
    Functional.CYCDIF: operator.sub,
    Functional.PROD: operator.mul,
    Functional.SUM: operator.add,
    Functional.CYCSUM: operator.add,
    Functional.SQDIF: lambda a, b: a * a - b * b,
    Functional.CYCSQDIF: lambda a, b: a * a - b * b,
}


def _check_size(f: Functional, n: int) -> None:
    if n < f.min_n:
        raise ValueError(f"{f} needs n >= {f.min_n}, got a permutation of length {n}")


def evaluate(f, p) -> Fraction:
    """Exact value of functional ``f`` on permutation ``p``."""
    f = Functional.parse(f)
    if not isinstance(p, Permutation):
        p = Permutation(p)
    _check_size(f, p.n)
    e = p.entries
    heads, tails = e[:-1], e[1:]
    if f.cyclic:
        heads, tails = e, tails + e[:1]
    # structured witnesses repeat a few denominators many times
    counts = Counter(map(_DENOMINATORS[f], heads, tails))
    total = Fraction(0)
    for d in sorted(counts):
        total += Fraction(counts[d], d)
    return total


def evaluate_prefix(f, prefix: Sequence[int]) -> Fraction:
    """Sum of the terms over consecutive pairs of ``prefix``; never adds the wrap term."""
    f = Functional.parse(f)
    prefix = tuple(prefix)
    if not prefix:
        raise ValueError("prefix must be non-empty")
    if len(set(prefix)) != len(prefix):
        raise ValueError(f"prefix {prefix} has duplicate entries")
    if min(prefix) < 1:
        raise ValueError("prefix entries must be positive")
    total = Fraction(0)
    for a, b in zip(prefix, prefix[1:]):
        total += f.term(a, b)
    return total


@dataclass(frozen=True)
class Witness:
    """A permutation together with the exact value a functional takes on it.

    The value is always recomputed; passing ``claimed`` makes construction
    fail unless it matches.
    """

    perm: Permutation
    functional: Functional
    value: Fraction = field(init=False)
    claimed: Fraction | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        perm = self.perm if isinstance(self.perm, Permutation) else Permutation(self.perm)
        functional = Functional.parse(self.functional)
        value = evaluate(functional, perm)
        if self.claimed is not None and Fraction(self.claimed) != value:
            raise ValueError(
                f"{functional}({perm}) = {format_rational(value)}, "
                f"not the claimed {format_rational(Fraction(self.claimed))}"
            )
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "functional", functional)
        object.__setattr__(self, "value", value)

    @property
    def n(self) -> int:
        return self.perm.n


def format_rational(x) -> str:
    """``num/den`` in lowest terms, or the bare integer when den is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None


def rational_to_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
