"""Compositions, Gröbner–Shirshov basis checks, completion and normal words."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .poly import Poly, PolyError
from .rewrite import (
    CapExceeded,
    ReductionResult,
    RewriteSystem,
    Status,
    reduce_max,
    reduce_min,
)
from .words import Alphabet, OrderSpec, Word, has_factor, words_of_length


def leading_words(rules: Sequence[Poly], order: OrderSpec, mode: str) -> set[Word]:
    out = set()
    for r in rules:
        if not r:
            raise PolyError("zero rule has no leading word")
        out.add(r.lead(order, mode)[0])
    return out


def overlaps(a: Word, b: Word) -> list[int]:
    """Lengths ``k`` of proper overlaps: a suffix of ``a`` equals a prefix of ``b``.

    Both cofactors must be nonempty, so ``1 <= k < min(len(a), len(b))``
    is not quite it: ``k < len(a)`` and ``k < len(b)``.
    """
    return [k for k in range(1, min(len(a), len(b))) if a[len(a) - k :] == b[:k]]


@dataclass
class Composition:
    """An ambiguity between two rules and the resulting element.

    ``intersection``: ``w = lead(f) u = v lead(g)`` and ``poly = f u - v g``.
    ``inclusion``: ``w = lead(f) = u lead(g) v`` and ``poly = f - u g v``.
    """

    kind: str
    w: Word
    left: int
    right: int
    u: Word
    v: Word
    poly: Poly

    def cofactors(self) -> list[tuple[int, Word, Word, int]]:
        """``poly`` as ``sum(c * a * rule * b)``: entries ``(rule, a, b, c)``."""
        if self.kind == "intersection":
            return [(self.left, (), self.u, 1), (self.right, self.v, (), -1)]
        return [(self.left, (), (), 1), (self.right, self.u, self.v, -1)]

    def describe(self, alphabet: Alphabet) -> dict:
        return {
            "kind": self.kind,
            "w": alphabet.format(self.w),
            "rules": [self.left, self.right],
            "poly": str(self.poly),
        }


def find_compositions(rules: Sequence[Poly], order: OrderSpec, mode: str) -> list[Composition]:
    """All intersection and inclusion compositions among monic rules.

    Self-overlaps are included.  The list is sorted by ambiguity word in
    the active order, then by rule indices.
    """
    leads = []
    for r in rules:
        if not r.is_monic(order, mode):
            raise PolyError(f"rule {r} is not monic in {mode} mode")
        leads.append(r.lead(order, mode)[0])
    for i in range(len(rules)):
        for j in range(i):
            if rules[i] == rules[j]:
                raise PolyError(f"duplicate rule {rules[i]}")
    out = []
    for i, (f, a) in enumerate(zip(rules, leads)):
        for j, (g, b) in enumerate(zip(rules, leads)):
            for k in overlaps(a, b):
                u, v = b[k:], a[: len(a) - k]
                poly = f.rmul_word(u) - g.lmul_word(v)
                out.append(Composition("intersection", a + u, i, j, u, v, poly))
            if i != j and len(b) <= len(a):
                for p in range(len(a) - len(b) + 1):
                    if a[p : p + len(b)] == b:
                        u, v = a[:p], a[p + len(b) :]
                        out.append(Composition("inclusion", a, i, j, u, v, f - g.sandwich(u, v)))
    key = order.key
    out.sort(key=lambda c: (key(c.w), c.left, c.right, c.kind, len(c.u)))
    if mode == "min":
        for c in out:
            if c.poly and not key(c.w) < key(c.poly.min_term(order)[0]):
                raise AssertionError(f"composition at {c.w} has minimal term below w")
    return out


@dataclass
class CompositionCheck:
    composition: Composition
    result: ReductionResult


@dataclass
class GSReport:
    mode: str
    order: str
    verdict: str  # "is-GS" | "not-GS" | "GS-up-to-bound"
    checks: list[CompositionCheck] = field(default_factory=list)
    bound: int | None = None
    system: RewriteSystem | None = field(default=None, repr=False)

    @property
    def is_gs(self) -> bool:
        return self.verdict == "is-GS"

    def counts(self) -> dict:
        kinds = [c.composition.kind for c in self.checks]
        return {
            "intersection": kinds.count("intersection"),
            "inclusion": kinds.count("inclusion"),
        }

    def to_dict(self, include_trace=False) -> dict:
        alphabet = self.system.alphabet
        d = {
            "mode": self.mode,
            "order": self.order,
            "verdict": self.verdict,
            "compositions": self.counts(),
            "checks": [
                {
                    **c.composition.describe(alphabet),
                    **c.result.to_dict(self.system, include_trace),
                }
                for c in self.checks
            ],
        }
        if self.bound is not None:
            d["weight_bound"] = self.bound
        return d


def check_gs_classical(rules: Sequence[Poly], order: OrderSpec, trace=False) -> GSReport:
    """Reduce every composition with :func:`reduce_max` against all rules."""
    system = RewriteSystem(rules, order, "max")
    checks = []
    for comp in find_compositions(system.rules, order, "max"):
        res = reduce_max(comp.poly, system, trace=trace)
        checks.append(CompositionCheck(comp, res))
    ok = all(c.result.status is Status.REDUCED_TO_ZERO for c in checks)
    return GSReport("max", order.describe(), "is-GS" if ok else "not-GS", checks, system=system)


def check_gs_series(rules: Sequence[Poly], order: OrderSpec, weight_bound: int, trace=False) -> GSReport:
    """Reduce every composition with :func:`reduce_min`.

    Verdict ``is-GS`` needs every composition to reach exact zero;
    any irreducible minimal term below the bound gives ``not-GS``;
    anything else is only ``GS-up-to-bound``.
    """
    system = RewriteSystem(rules, order, "min")
    checks = []
    for comp in find_compositions(system.rules, order, "min"):
        res = reduce_min(comp.poly, system, weight_bound, trace=trace)
        checks.append(CompositionCheck(comp, res))
    statuses = {c.result.status for c in checks}
    if Status.IRREDUCIBLE_MIN_TERM in statuses:
        verdict = "not-GS"
    elif statuses <= {Status.REDUCED_TO_ZERO}:
        verdict = "is-GS"
    else:
        verdict = "GS-up-to-bound"
    return GSReport("min", order.describe(), verdict, checks, weight_bound, system)


# -- completion ---------------------------------------------------------------


@dataclass
class Completion:
    rules: list[Poly]
    verdict: str  # "complete" | "cap-exceeded"
    degree_cap: int
    system: RewriteSystem | None = field(default=None, repr=False)

    def normal_words(self) -> list[Word]:
        leads = {r.max_term(self.system.order)[0] for r in self.rules}
        return normal_words(self.system.alphabet, leads, self.degree_cap - 1)


def complete_classical(
    rules: Sequence[Poly],
    order: OrderSpec,
    degree_cap: int,
    max_rules: int = 100_000,
) -> Completion:
    """Buchberger–Shirshov completion modulo all words of length ``degree_cap``.

    The word-cap rules are implicit: every term of length ``>= degree_cap``
    is discarded.  Compositions among the rules are reduced, and so are
    the compositions with the cap words, which amount to ``u g v`` with
    ``|u lead(g) v| = degree_cap`` after truncation.  Nonzero normal forms
    are made monic and adjoined.  On return the output, together with the
    cap words, is a Gröbner–Shirshov basis of ``(rules) + I^degree_cap``.

    Raises :class:`CapExceeded` if more than ``max_rules`` rules accumulate.
    """
    if degree_cap < 1:
        raise ValueError("degree_cap must be >= 1")
    if not order.admissible:
        raise PolyError(f"{order.describe()} is not admissible")
    cap = degree_cap
    alphabet = order.alphabet
    pending = [r.drop_from(cap) for r in rules]
    basis: list[Poly] = []
    system = RewriteSystem([], order, "max")

    def reduce(p: Poly) -> Poly:
        return reduce_max(p, system, length_cap=cap).remainder

    n_letters = len(alphabet)
    while pending:
        p = pending.pop()
        p = reduce(p)
        if not p:
            continue
        g = p.make_monic(order, "max")
        lead = g.max_term(order)[0]
        # inter-reduce: older rules whose leading word contains the new one
        # are moved back to pending so the basis stays reduced
        keep = []
        for h in basis:
            hl = h.max_term(order)[0]
            if _contains(hl, lead):
                pending.append(h)
            else:
                keep.append(h)
        basis = keep + [g]
        if len(basis) > max_rules:
            raise CapExceeded(f"completion exceeded {max_rules} rules")
        system = RewriteSystem(basis, order, "max", normalize=False)
        # compositions of g with the basis (both sides, self included)
        for h in basis:
            hl = h.max_term(order)[0]
            for f1, a, f2, b in ((g, lead, h, hl), (h, hl, g, lead)):
                for k in overlaps(a, b):
                    u, v = b[k:], a[: len(a) - k]
                    if len(a) + len(u) >= cap:
                        continue  # ambiguity word itself is capped; covered below
                    pending.append(f1.rmul_word(u) - f2.lmul_word(v))
        # compositions with cap words: u g v truncated, |u lead v| = cap
        short = g.drop_from(len(lead)) if _degree_compatible(order) else g
        if short:
            room = cap - len(lead)
            for lu in range(room + 1):
                for u in words_of_length(n_letters, lu):
                    for v in words_of_length(n_letters, room - lu):
                        q = short.sandwich(u, v).drop_from(cap)
                        if q:
                            pending.append(q)
    basis.sort(key=lambda r: order.key(r.max_term(order)[0]))
    system = RewriteSystem(basis, order, "max", normalize=False)
    return Completion(basis, "complete", cap, system)


def _contains(w: Word, pattern: Word) -> bool:
    k = len(pattern)
    return any(w[i : i + k] == pattern for i in range(len(w) - k + 1))


def _degree_compatible(order: OrderSpec) -> bool:
    return order.kind == "deg-lex"


def normal_words(
    alphabet: Alphabet,
    leading: set[Word],
    bound: int,
    mode: str = "by-length",
) -> list[Word]:
    """Words within ``bound`` having no element of ``leading`` as a factor.

    Built by extending normal words one letter at a time (every prefix of
    a normal word is normal), sorted by length (or weight) then letters.
    """
    leading = set(leading)
    if () in leading:
        return []
    n = len(alphabet)
    ws = alphabet.weights if mode == "by-weight" else (1,) * n
    maxlen = max((len(w) for w in leading), default=0)
    out = [()]
    frontier = [((), 0)]
    while frontier:
        nxt = []
        for w, wt in frontier:
            for a in range(n):
                t = wt + ws[a]
                if t > bound:
                    continue
                nw = w + (a,)
                # only suffixes of nw can be new factors
                if any(nw[len(nw) - k :] in leading for k in range(1, min(maxlen, len(nw)) + 1)):
                    continue
                nxt.append((nw, t))
        out.extend(w for w, _ in nxt)
        frontier = nxt
    out.sort(key=lambda w: (sum(ws[a] for a in w), w))
    return out


def normal_word_counts(alphabet: Alphabet, leading: set[Word], max_length: int) -> list[int]:
    counts = [0] * (max_length + 1)
    for w in normal_words(alphabet, leading, max_length):
        counts[len(w)] += 1
    return counts


def brute_force_normal_word_counts(n_letters: int, leading: set[Word], max_length: int) -> list[int]:
    """Independent check: test every word for every forbidden factor."""
    return [
        sum(1 for w in words_of_length(n_letters, k) if not has_factor(w, leading))
        for k in range(max_length + 1)
    ]
