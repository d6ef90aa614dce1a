"""Permutations of {1..n} and the structural operators used by the constructions.

Positions are 1-based on the public surface: ``p(k)`` is the value at
position ``k``. Iteration yields the one-line notation left to right.
"""
from __future__ import annotations

import operator
from typing import Iterable, Iterator


class Permutation:
    """An immutable bijection on {1, ..., n}, stored in one-line notation."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        try:
            entries = tuple(map(operator.index, entries))
        except TypeError:
            raise ValueError("permutation entries must be integers") from None
        n = len(entries)
        if n == 0:
            raise ValueError("a permutation needs at least one entry")
        if set(entries) == set(range(1, n + 1)):
            object.__setattr__(self, "_entries", entries)
            return
        seen = set()
        for v in entries:
            if not 1 <= v <= n:
                raise ValueError(f"entry {v} outside 1..{n}")
            if v in seen:
                raise ValueError(f"duplicate entry {v}")
            seen.add(v)
        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read the comma-separated wire format, e.g. ``"1,4,2,5,3,6"``."""
        parts = [s.strip() for s in text.strip().strip("()").split(",")]
        try:
            return cls(int(s) for s in parts if s)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __call__(self, k: int) -> int:
        if not 1 <= k <= len(self._entries):
            raise IndexError(f"position {k} outside 1..{len(self._entries)}")
        return self._entries[k - 1]

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self._entries == other._entries
        if isinstance(other, tuple):
            return self._entries == other
        return NotImplemented

    def __lt__(self, other: Permutation) -> bool:
        return self._entries < other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __str__(self) -> str:
        return ",".join(map(str, self._entries))

    def __repr__(self) -> str:
        return f"Permutation(({str(self)}))"


def validate(raw: Iterable[int]) -> Permutation:
    return Permutation(raw)


def reverse(p: Permutation) -> Permutation:
    return Permutation(reversed(p.entries))


def complement(p: Permutation) -> Permutation:
    """Send each entry v to n + 1 - v."""
    m = p.n + 1
    return Permutation(m - v for v in p)


def link(sigma: Permutation, tau: Permutation) -> Permutation:
    """Join ``sigma`` (ending at its maximum) to ``tau`` (starting at 1).

    The result has length s + t - 1: sigma followed by tau(2..t), each shifted
    up by s - 1, so the two pieces share the junction value s. Every adjacent
    pair of the result is an adjacent pair of sigma or a shifted pair of tau,
    hence difference-type sums add across the junction.
    """
    s = sigma.n
    if sigma(s) != s:
        raise ValueError(f"link needs sigma to end in {s}, got {sigma(s)}")
    if tau(1) != 1:
        raise ValueError(f"link needs tau to start with 1, got {tau(1)}")
    return Permutation(sigma.entries + tuple(s - 1 + v for v in tau.entries[1:]))


def insert_letter(sigma: Permutation, j: int) -> Permutation:
    """Insert the new maximum n = |sigma| + 1 right after position ``j``.

    Only interior positions 1 <= j <= n - 2 are allowed.
    """
    n = sigma.n + 1
    if not 1 <= j <= n - 2:
        raise ValueError(f"insertion position {j} outside 1..{n - 2}")
    e = sigma.entries
    return Permutation(e[:j] + (n,) + e[j:])


def shift_reverse_concat(sigma, tau) -> Permutation:
    """Concatenate sigma (length k) with tau (length k + 1) reversed and shifted by k.

    Accepts Permutations or plain integer sequences; the result is validated,
    so it is a Permutation exactly when sigma covers {1..k} and tau covers
    {1..k+1}.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    k, m = len(sigma), len(tau)
    if m != k + 1:
        raise ValueError(f"tau must have length {k + 1}, got {m}")
    return Permutation(sigma + tuple(k + v for v in reversed(tau)))
