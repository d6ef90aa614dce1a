"""Meet-in-the-middle join for witness search at sizes beyond plain DFS.

Fix the entry ``x`` at a middle position. The permutation splits into a
left half ending at ``x`` and a right half starting at ``x`` (for cyclic
functionals the right half closes the cycle back to the fixed first entry
1). Both halves are enumerated as numpy arrays of indices into the values
other than ``x``; each half is keyed by (set of interior values, partial sum
mod a 61-bit prime). A key match is a candidate only: every candidate is
rebuilt and checked with exact integer arithmetic, so residue collisions
cost time but never produce a wrong answer, and a genuine solution always
collides with itself, so an empty join proves nonexistence.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..functionals import Functional
from ._dfs import Budget, BudgetExhausted
from ._scaled import ScaledTerms

MODULUS = (1 << 61) - 1
_MIX = 0x9E3779B1  # odd multiplier spreading interior masks over the residues
# mask * _MIX + residue must stay below 2**63, so at most 30 interior values.
MAX_INTERIOR = 30


@lru_cache(maxsize=8)
def arrangements(m: int, k: int) -> np.ndarray:
    """All ordered selections of k distinct indices from range(m), one per row."""
    rows = np.zeros((1, 0), dtype=np.int8)
    for _ in range(k):
        blocks = []
        for v in range(m):
            keep = ~np.any(rows == v, axis=1)
            if keep.any():
                sel = rows[keep]
                blocks.append(np.hstack([sel, np.full((len(sel), 1), v, dtype=np.int8)]))
        rows = np.vstack(blocks) if blocks else np.zeros((0, rows.shape[1] + 1), dtype=np.int8)
    rows.setflags(write=False)
    return rows


def _falling(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
    return out


def plan(m: int, max_rows: int) -> tuple[int, int, int]:
    """Split m interior values into a stored left half of p entries and a right
    half of q entries streamed in blocks sharing their first b entries.

    Keeps the stored half and each block at most ``max_rows`` rows where possible.
    """
    p = m // 2
    while p > 1 and _falling(m, p) > max_rows:
        p -= 1
    q = m - p
    b = 1
    while b < q and _falling(m - b, q - b) > max_rows:
        b += 1
    return p, q, b


def total_rows(f: Functional, n: int, max_rows: int) -> int:
    """Rows generated by a full join, summed over all junction values."""
    m = n - 2 if f.cyclic else n - 1
    p, q, _ = plan(m, max_rows)
    return (m + 1) * (_falling(m, p) + _falling(m, q))


class MeetInTheMiddle:
    def __init__(self, f: Functional, n: int, terms: ScaledTerms, budget: Budget | None = None,
                 progress=None, max_rows: int = 4_000_000):
        if n < 4:
            raise ValueError("meet-in-the-middle needs n >= 4")
        self.f = f
        self.n = n
        self.terms = terms
        self.budget = budget or Budget()
        self.progress = progress
        self.max_rows = max_rows
        self.nodes = 0
        self.candidates = 0
        table = np.zeros((n + 1, n + 1), dtype=np.int64)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a != b:
                    table[a, b] = terms.table[a][b] % MODULUS
        self.table_mod = table

    def _check(self):
        self.budget.check(self.nodes)

    def _chain_value(self, cols, head, tail):
        """Residue of the path head -> cols[:,0] -> ... -> cols[:,-1] -> tail (head/tail may be None)."""
        T = self.table_mod
        rows = cols.shape[0]
        acc = np.zeros(rows, dtype=np.int64)
        if cols.shape[1] == 0:
            if head is not None and tail is not None:
                acc += T[head, tail]
            return acc
        if head is not None:
            acc += T[head, cols[:, 0]]
        for i in range(cols.shape[1] - 1):
            acc = (acc + T[cols[:, i], cols[:, i + 1]]) % MODULUS
        if tail is not None:
            acc = (acc + T[cols[:, -1], tail]) % MODULUS
        return acc % MODULUS

    @staticmethod
    def _masks(idx: np.ndarray) -> np.ndarray:
        if idx.shape[1] == 0:
            return np.zeros(idx.shape[0], dtype=np.int64)
        return np.sum(np.left_shift(np.int64(1), idx.astype(np.int64)), axis=1)

    def search(self, target: int, on_candidate) -> bool:
        """Run the join; ``on_candidate(perm_tuple)`` returns True to stop. True if stopped."""
        f, n = self.f, self.n
        cyclic = f.cyclic
        start = 1 if cyclic else None
        values = list(range(2, n + 1)) if cyclic else list(range(1, n + 1))
        m = len(values) - 1
        if m > MAX_INTERIOR:
            raise ValueError(f"n = {n} is too large for the meet-in-the-middle join")
        p, q, b = plan(m, self.max_rows)
        left_idx = arrangements(m, p)
        heads = arrangements(m, b)
        right_tail = arrangements(m - b, q - b)
        left_masks = self._masks(left_idx) * _MIX
        full = (1 << m) - 1
        t_mod = target % MODULUS
        for x in values:
            pool = np.array([v for v in values if v != x], dtype=np.int64)
            left = pool[left_idx]
            self.nodes += len(left)
            lkey = (self._chain_value(left, start, x) + left_masks) % MODULUS
            order = np.argsort(lkey, kind="stable")
            skey = lkey[order]
            self._check()
            for head in heads:
                # right halves whose first b interior entries are pool[head]
                rest = np.array([i for i in range(m) if i not in set(head.tolist())], dtype=np.int64)
                ridx = np.hstack([np.broadcast_to(head.astype(np.int64), (len(right_tail), b)),
                                  rest[right_tail]])
                right = pool[ridx]
                self.nodes += len(right)
                rval = (self.table_mod[x, right[:, 0]] + self._chain_value(right, None, start)) % MODULUS
                need_mask = full ^ self._masks(ridx)
                need = ((t_mod - rval) % MODULUS + need_mask * _MIX) % MODULUS
                lo = np.searchsorted(skey, need, side="left")
                hi = np.searchsorted(skey, need, side="right")
                for r in np.nonzero(hi > lo)[0]:
                    for k in range(lo[r], hi[r]):
                        self.candidates += 1
                        perm = (*([start] if cyclic else []), *left[order[k]].tolist(), x,
                                *right[r].tolist())
                        if on_candidate(perm):
                            return True
                self._check()
                if self.progress is not None:
                    self.progress(self.nodes)
        return False


__all__ = ["MeetInTheMiddle", "BudgetExhausted", "arrangements", "plan", "total_rows", "MODULUS"]
