from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..functionals import Functional, Witness, format_rational

STRATEGIES = ("auto", "dfs", "mitm")


class Status(enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted-nonexistent"
    BUDGET = "budget-exceeded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Progress:
    """Snapshot handed to the progress callback during long searches."""

    nodes: int
    depth: int
    best_deviation: Fraction | None
    elapsed: float


@dataclass
class SearchOptions:
    """Budgets and switches for :func:`find_witness` and :func:`enumerate_values`.

    Both budgets default to None, which means the search runs to completion.
    ``strategy`` picks the engine: plain depth-first search, the
    meet-in-the-middle join, or ``"auto"`` to choose by size.
    """

    time_budget: float | None = None
    node_budget: int | None = None
    worker_count: int = 1
    symmetry_reduction: bool = True
    first_only: bool = True
    pruning: bool = True
    heuristic: bool = False
    strategy: str = "auto"
    progress: Callable[[Progress], None] | None = None
    progress_interval: int = 200_000

    def __post_init__(self):
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError(f"time_budget must be positive, got {self.time_budget}")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError(f"node_budget must be positive, got {self.node_budget}")
        if int(self.worker_count) != self.worker_count or self.worker_count < 1:
            raise ValueError(f"worker_count must be a positive integer, got {self.worker_count}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.progress_interval < 1:
            raise ValueError("progress_interval must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a witness search.

    ``witness`` is set only when ``status`` is FOUND. EXHAUSTED means the
    whole (symmetry-reduced) space was covered and nothing matched, which
    is a proof of nonexistence; BUDGET means the search stopped early.
    """

    functional: Functional
    n: int
    target: Fraction
    status: Status
    witness: Witness | None = None
    nodes: int = 0
    elapsed: float = 0.0
    strategy: str = "dfs"

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def __str__(self) -> str:
        head = f"{self.functional} n={self.n} target={format_rational(self.target)}: {self.status}"
        if self.witness is not None:
            head += f" {self.witness.perm}"
        return head


@dataclass(frozen=True)
class ValueSet:
    """All values a functional attains over the permutations of size n, ascending."""

    n: int
    functional: Functional
    values: tuple[Fraction, ...] = field(repr=False)

    def __post_init__(self):
        vals = tuple(sorted(set(Fraction(v) for v in self.values)))
        object.__setattr__(self, "values", vals)
        if self.functional.antisymmetric:
            present = set(vals)
            missing = [v for v in vals if -v not in present]
            if missing:
                raise AssertionError(
                    f"value set of {self.functional} at n={self.n} is not closed under negation: "
                    f"{format_rational(missing[0])} has no partner"
                )

    def __contains__(self, x) -> bool:
        return Fraction(x) in set(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def nonnegative(self) -> tuple[Fraction, ...]:
        return tuple(v for v in self.values if v >= 0)

    def integers(self) -> list[int]:
        return [int(v) for v in self.values if v.denominator == 1]


class PartialResultError(RuntimeError):
    """Raised when an enumeration runs out of budget; carries what was seen so far."""

    def __init__(self, message: str, functional: Functional, n: int, partial: set[Fraction], nodes: int):
        super().__init__(message)
        self.functional = functional
        self.n = n
        self.partial = partial
        self.nodes = nodes
