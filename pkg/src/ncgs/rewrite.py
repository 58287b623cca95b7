"""Reduction of polynomials modulo a list of monic rules.

Two engines:

* :func:`reduce_max` is classical rewriting: the largest reducible term is
  replaced by smaller terms until no term contains a leading word.
* :func:`reduce_min` works on the power-series side.  It repeatedly kills
  the *smallest* term whenever that term is divisible by a rule's minimal
  word, pushing the support upward in an N-order.  A weight bound makes it
  terminate.

Rule choice is fixed: the leftmost occurrence of any leading word, and
among rules leading at that position the one with the lowest index.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .poly import Poly, PolyError
from .words import OrderError, OrderSpec, Word

#: Default cap on reduction steps for one call of :func:`reduce_min`.
MAX_MIN_STEPS = 200_000
#: Largest accepted weight bound for :func:`reduce_min`.
WEIGHT_BOUND_CAP = 10_000


class CapExceeded(RuntimeError):
    """A configured safety cap was hit."""


class Status(str, Enum):
    REDUCED_TO_ZERO = "reduced-to-zero"
    NORMAL_FORM = "normal-form"
    IRREDUCIBLE_MIN_TERM = "irreducible-min-term-below-bound"
    TRUNCATED_AT_BOUND = "truncated-at-bound"


@dataclass(frozen=True)
class Step:
    rule: int
    position: int
    left: Word
    right: Word
    coeff: object

    def to_dict(self, alphabet, field) -> dict:
        return {
            "rule": self.rule,
            "position": self.position,
            "left": alphabet.format(self.left),
            "right": alphabet.format(self.right),
            "coefficient": field.format(self.coeff),
        }


class LeadIndex:
    """Lookup of leading words as factors of a word."""

    def __init__(self, leads: Sequence[Word]):
        self.first: dict[Word, int] = {}
        for i, w in enumerate(leads):
            if not w:
                raise PolyError("a rule with leading word 1 makes every word reducible")
            self.first.setdefault(w, i)
        self.lengths = sorted({len(w) for w in self.first})

    def find(self, w: Word):
        """Leftmost ``(position, rule)`` with the rule's leading word at that position."""
        first = self.first
        n = len(w)
        for i in range(n):
            best = None
            for k in self.lengths:
                if i + k > n:
                    break
                r = first.get(w[i : i + k])
                if r is not None and (best is None or r < best):
                    best = r
            if best is not None:
                return i, best
        return None

    def reducible(self, w: Word) -> bool:
        return self.find(w) is not None


class RewriteSystem:
    """An immutable list of monic rules with an order and a mode.

    In ``max`` mode the order must be admissible, in ``min`` mode it must
    be an admissible N-order.  Rules are made monic on construction unless
    ``normalize=False``, in which case non-monic rules are an error.
    """

    def __init__(self, rules: Sequence[Poly], order: OrderSpec, mode: str = "max", normalize=True):
        if mode not in ("max", "min"):
            raise ValueError(f"mode must be 'max' or 'min', not {mode!r}")
        if not order.admissible:
            raise OrderError(f"{order.describe()} is not admissible and cannot drive rewriting")
        if mode == "min" and not order.n_order:
            raise OrderError(f"{order.describe()} is not an N-order")
        prepared = []
        for r in rules:
            if not r:
                raise PolyError("zero rule")
            if not r.is_monic(order, mode):
                if not normalize:
                    raise PolyError(f"rule {r} is not monic in {mode} mode")
                r = r.make_monic(order, mode)
            prepared.append(r)
        self.rules = tuple(prepared)
        self.order = order
        self.mode = mode
        self.leads = tuple(r.lead(order, mode)[0] for r in self.rules)
        self.index = LeadIndex(self.leads)
        # rule tails as (word, -coeff) lists: lead word -> -tail
        self._neg_tails = tuple(
            tuple((w, -c) for w, c in r.terms.items() if w != lead)
            for r, lead in zip(self.rules, self.leads)
        )

    @property
    def alphabet(self):
        return self.order.alphabet

    def __len__(self):
        return len(self.rules)


@dataclass
class ReductionResult:
    """Outcome of a reduction: ``input = remainder + sum(c * u * rule * v)``."""

    remainder: Poly
    status: Status
    steps: int = 0
    trace: list[Step] | None = None
    stop_word: Word | None = None

    def cofactor_sum(self, system: RewriteSystem) -> Poly:
        if self.trace is None:
            raise ValueError("reduction was run without recording cofactors")
        acc: dict = {}
        for s in self.trace:
            for w, c in system.rules[s.rule].terms.items():
                key = s.left + w + s.right
                v = acc.get(key, 0) + s.coeff * c
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return Poly(self.remainder.alphabet, acc, self.remainder.field, _trusted=True)

    def verify(self, original: Poly, system: RewriteSystem, length_cap: int | None = None) -> bool:
        """Re-expand the cofactors and compare with the input."""
        rebuilt = self.remainder + self.cofactor_sum(system)
        if length_cap is not None:
            return rebuilt.drop_from(length_cap) == original.drop_from(length_cap)
        return rebuilt == original

    def to_dict(self, system: RewriteSystem, include_trace=False) -> dict:
        alphabet = system.alphabet
        d = {
            "status": self.status.value,
            "steps": self.steps,
            "remainder": str(self.remainder),
        }
        if self.stop_word is not None:
            d["stop_word"] = alphabet.format(self.stop_word)
        if include_trace and self.trace is not None:
            d["trace"] = [s.to_dict(alphabet, self.remainder.field) for s in self.trace]
        return d


def reduce_max(
    f: Poly,
    system: RewriteSystem,
    trace: bool = False,
    length_cap: int | None = None,
) -> ReductionResult:
    """Classical normal form of ``f`` modulo ``system``.

    With ``length_cap`` every term of length ``>= length_cap`` is
    discarded as soon as it appears, i.e. the computation happens modulo
    all words of that length.
    """
    if system.mode != "max":
        raise ValueError("reduce_max needs a max-mode rewrite system")
    key = system.order.key
    find = system.index.find
    leads = system.leads
    tails = system._neg_tails
    work = dict(f.terms) if length_cap is None else {
        w: c for w, c in f.terms.items() if len(w) < length_cap
    }
    heap = [(_Neg(key(w)), w) for w in work]
    heapq.heapify(heap)
    remainder: dict = {}
    steps: list[Step] | None = [] if trace else None
    count = 0
    while heap:
        _, w = heapq.heappop(heap)
        c = work.pop(w, None)
        if c is None:
            continue
        hit = find(w)
        if hit is None:
            remainder[w] = c
            continue
        pos, r = hit
        lead = leads[r]
        u, v = w[:pos], w[pos + len(lead) :]
        count += 1
        if steps is not None:
            steps.append(Step(r, pos, u, v, c))
        for t, k in tails[r]:
            nw = u + t + v
            if length_cap is not None and len(nw) >= length_cap:
                continue
            old = work.get(nw)
            if old is None:
                work[nw] = c * k
                heapq.heappush(heap, (_Neg(key(nw)), nw))
            else:
                s = old + c * k
                if s:
                    work[nw] = s
                else:
                    del work[nw]
    status = Status.NORMAL_FORM if remainder else Status.REDUCED_TO_ZERO
    rem = Poly(f.alphabet, remainder, f.field, _trusted=True)
    return ReductionResult(rem, status, count, steps)


def normal_form(f: Poly, system: RewriteSystem, length_cap: int | None = None) -> Poly:
    return reduce_max(f, system, length_cap=length_cap).remainder


def reduce_min(
    f: Poly,
    system: RewriteSystem,
    weight_bound: int,
    trace: bool = False,
    max_steps: int = MAX_MIN_STEPS,
) -> ReductionResult:
    """Eliminate the smallest reducible term while it is below the bound.

    The minimal term of the remainder strictly increases at every step.
    Stops with

    * ``REDUCED_TO_ZERO`` when the remainder is exactly zero;
    * ``IRREDUCIBLE_MIN_TERM`` when the minimal term has weight below the
      bound but contains no rule's minimal word (a definitive failure);
    * ``TRUNCATED_AT_BOUND`` when every remaining term has weight at
      least ``weight_bound`` (success only up to the bound).

    Weights are the order's theta weights (lengths for deg-lex).
    """
    if system.mode != "min":
        raise ValueError("reduce_min needs a min-mode rewrite system")
    if weight_bound < 1:
        raise ValueError("weight_bound must be >= 1")
    if weight_bound > WEIGHT_BOUND_CAP:
        raise CapExceeded(f"weight bound {weight_bound} exceeds cap {WEIGHT_BOUND_CAP}")
    order = system.order
    key = order.key
    theta = order.theta
    find = system.index.find
    leads = system.leads
    tails = system._neg_tails
    work = dict(f.terms)
    heap = [(key(w), w) for w in work]
    heapq.heapify(heap)
    steps: list[Step] | None = [] if trace else None
    count = 0
    last_key = None
    while True:
        while heap and heap[0][1] not in work:
            heapq.heappop(heap)
        if not heap:
            status, stop = Status.REDUCED_TO_ZERO, None
            break
        k0, w = heap[0]
        if last_key is not None and not last_key < k0:
            raise AssertionError("minimal term failed to increase during reduce_min")
        if theta(w) >= weight_bound:
            status, stop = Status.TRUNCATED_AT_BOUND, w
            break
        hit = find(w)
        if hit is None:
            status, stop = Status.IRREDUCIBLE_MIN_TERM, w
            break
        if count >= max_steps:
            raise CapExceeded(f"reduce_min exceeded {max_steps} steps")
        heapq.heappop(heap)
        last_key = k0
        c = work.pop(w)
        pos, r = hit
        lead = leads[r]
        u, v = w[:pos], w[pos + len(lead) :]
        count += 1
        if steps is not None:
            steps.append(Step(r, pos, u, v, c))
        for t, k in tails[r]:
            nw = u + t + v
            old = work.get(nw)
            if old is None:
                work[nw] = c * k
                heapq.heappush(heap, (key(nw), nw))
            else:
                s = old + c * k
                if s:
                    work[nw] = s
                else:
                    del work[nw]
    rem = Poly(f.alphabet, work, f.field, _trusted=True)
    return ReductionResult(rem, status, count, steps, stop)


class _Neg:
    """Wraps a sort key so that :mod:`heapq` pops the largest first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k

    def __eq__(self, other):
        return self.k == other.k
