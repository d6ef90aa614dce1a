"""Integer term tables: every term 1/d(a, b) scaled by the lcm L of all |d|.

Sums of scaled terms are exact integers, so the search never touches
Fraction objects in its inner loops. A target t is reachable only if t * L
is an integer.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..functionals import Functional


class ScaledTerms:
    def __init__(self, f: Functional, n: int):
        self.f = f
        self.n = n
        denoms = [f.denominator(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
        self.L = lcm(*(abs(d) for d in denoms)) if denoms else 1
        L = self.L
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for a in range(1, n + 1):
            row = table[a]
            for b in range(1, n + 1):
                if a != b:
                    d = f.denominator(a, b)
                    row[b] = L // d if d > 0 else -(L // -d)
        self.table = table

    def scale(self, target: Fraction) -> int | None:
        """``target * L`` as an int, or None when no sum of terms can equal target."""
        x = Fraction(target) * self.L
        return x.numerator if x.denominator == 1 else None

    def unscale(self, value: int) -> Fraction:
        return Fraction(value, self.L)

    def term_bounds(self, s1: int, s2: int, b2: int, b1: int) -> tuple[int, int]:
        """Bounds on one scaled term over pairs drawn from a set of values.

        ``s1 < s2`` are the two smallest and ``b2 < b1`` the two largest values
        of the set. Every bound is itself an exact scaled term, so no rounding.
        """
        f, L = self.f, self.L
        if f is Functional.PROD:
            return L // (b1 * b2), L // (s1 * s2)
        if f in (Functional.SUM, Functional.CYCSUM):
            return L // (b1 + b2), L // (s1 + s2)
        if f in (Functional.DIF, Functional.CYCDIF):
            return -L, L
        # |a^2 - b^2| >= (s1 + 1)^2 - s1^2 for distinct a, b >= s1.
        m = L // (2 * s1 + 1)
        return -m, m
