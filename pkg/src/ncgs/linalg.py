"""Exact sparse row reduction over Q or GF(p).

Vectors are dicts ``column -> coefficient``.  Each stored row is monic at
its pivot, the pivot being the row's largest column under ``key``; a
vector is reduced by repeatedly cancelling its largest pivot column.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


class Echelon:
    def __init__(self, key=None):
        self.key = key if key is not None else (lambda c: c)
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` with no pivot column in its support."""
        key = self.key
        rows = self.rows
        work = {c: v for c, v in vec.items() if v}
        heap = [(_Desc(key(c)), c) for c in work if c in rows]
        heapq.heapify(heap)
        while heap:
            _, col = heapq.heappop(heap)
            a = work.pop(col, None)
            if a is None:
                continue
            for c, v in rows[col].items():
                if c == col:
                    continue
                old = work.get(c)
                if old is None:
                    work[c] = -a * v
                    if c in rows:
                        heapq.heappush(heap, (_Desc(key(c)), c))
                else:
                    s = old - a * v
                    if s:
                        work[c] = s
                    else:
                        del work[c]
        return work

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True if it was independent of the rows."""
        rem = self.reduce(vec)
        if not rem:
            return False
        pivot = max(rem, key=self.key)
        inv = _inverse(rem[pivot])
        self.rows[pivot] = {c: v * inv for c, v in rem.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def _inverse(x):
    # plain ints would divide to floats
    return Fraction(1, x) if type(x) is int else 1 / x


class _Desc:
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k

    def __eq__(self, other):
        return self.k == other.k


def rank(vectors, key=None) -> int:
    ech = Echelon(key)
    for v in vectors:
        ech.add(v)
    return ech.rank
