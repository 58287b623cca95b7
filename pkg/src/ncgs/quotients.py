"""Truncated quotients ``A / I(A)^n`` and invariants computed from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .gsbases import Completion, complete_classical
from .linalg import Echelon, rank
from .poly import Poly
from .presentation import Presentation, PresentationError
from .rewrite import normal_form
from .words import Word, enumerate_words, words_of_length


@dataclass
class TruncatedQuotient:
    """``k<X> / ((R) + I^n)`` with a normal-word basis.

    Elements are polynomials in normal form; multiplication is
    concatenation followed by reduction modulo the completed rules and the
    words of length ``n``.
    """

    presentation: Presentation
    n: int
    completion: Completion
    basis: list[Word] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rules(self) -> list[Poly]:
        return self.completion.rules

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.completion.system, length_cap=self.n)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def element(self, text: str) -> Poly:
        return self.reduce(self.presentation.poly(text))

    def augmentation(self, a: Poly):
        return a.constant()

    def vector(self, f: Poly) -> dict:
        return dict(self.reduce(f).terms)


def build_truncated_quotient(p: Presentation, n: int, max_rules: int = 100_000) -> TruncatedQuotient:
    if n < 1:
        raise ValueError("n must be >= 1")
    comp = complete_classical(p.relations, p.order_max, n, max_rules=max_rules)
    return TruncatedQuotient(p, n, comp, comp.normal_words())


def _ideal_power_images(q: TruncatedQuotient) -> list[Echelon]:
    """Echelon forms of the images of ``I^k`` for ``k = 0..n``."""
    p = q.presentation
    key = lambda w: (len(w), w)
    whole = Echelon(key)
    for w in q.basis:
        whole.add({w: p.field.one})
    levels = [whole]
    if q.n == 0:
        return levels
    # I is spanned by the nonempty normal words
    current = Echelon(key)
    for w in q.basis:
        if w:
            current.add({w: p.field.one})
    levels.append(current)
    letters = [Poly.letter(p.alphabet, name, p.field) for name in p.alphabet.names]
    for _ in range(2, q.n + 1):
        nxt = Echelon(key)
        for row in list(current.rows.values()):
            elt = Poly(p.alphabet, dict(row), p.field)
            for x in letters:
                nxt.add(q.vector(x * elt))
        levels.append(nxt)
        current = nxt
    return levels


def filtration_dims(q: TruncatedQuotient) -> list[int]:
    """``dim I^k / I^(k+1)`` for ``k < n``, computed inside the quotient."""
    levels = _ideal_power_images(q)
    ranks = [e.rank for e in levels] + [0]
    return [ranks[k] - ranks[k + 1] for k in range(q.n)]


@dataclass
class ParaequivalenceTable:
    passed: bool
    free_rank: int
    n: int
    dims: list[int]
    gr_dims: list[int]
    expected_gr: list[int]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "free_rank": self.free_rank,
            "n": self.n,
            "quotient_dims": self.dims,
            "gr_dims": self.gr_dims,
            "expected_gr_dims": self.expected_gr,
        }


def quotient_dims(p: Presentation, n: int, max_rules: int = 100_000) -> tuple[list[int], list[int]]:
    """``dim A/I^m`` for ``m = 1..n`` and ``dim Gr_k`` for ``k < n``."""
    q = build_truncated_quotient(p, n, max_rules)
    gr = filtration_dims(q)
    dims = [sum(gr[:m]) for m in range(1, n + 1)]
    return dims, gr


def paraequivalence_check(p: Presentation, free_rank: int, n: int) -> ParaequivalenceTable:
    """True iff ``dim Gr_k = free_rank^k`` for every ``k < n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dims, gr = quotient_dims(p, n)
    expected = [free_rank**k for k in range(n)]
    return ParaequivalenceTable(gr == expected, free_rank, n, dims, gr, expected)


def gr1_dependence(p: Presentation, elements: Sequence[Poly]) -> int:
    """Rank of the images of ``elements`` in ``I / I^2``."""
    q = build_truncated_quotient(p, 2)
    for e in elements:
        if e.constant():
            raise ValueError(f"{e} is not in the augmentation ideal")
    return rank((q.vector(e) for e in elements), key=lambda w: (len(w), w))


def hopf_h2_graded(p: Presentation, d: int) -> int:
    """Dimension of the weight-``d`` part of ``(r ∩ I^2) / (I r + r I)``.

    Needs every relation homogeneous for the generator weights.  The
    numerator is the weight-``d`` slice of the ideal intersected with
    ``I^2``; the denominator is spanned by ``u r v`` with ``uv != 1``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not p.is_weight_homogeneous():
        raise PresentationError("hopf_h2_graded needs weight-homogeneous relations")
    alphabet = p.alphabet
    ws = alphabet.weights
    wt = lambda w: sum(ws[a] for a in w)
    by_weight: dict[int, list[Word]] = {}
    for w in enumerate_words(alphabet, d, "by-weight"):
        by_weight.setdefault(wt(w), []).append(w)
    key = lambda w: (len(w), w)
    ideal = Echelon(key)
    decomposable = Echelon(key)
    for r in p.relations:
        if not r:
            continue
        rw = wt(next(iter(r.terms)))
        room = d - rw
        if room < 0:
            continue
        for wu in range(room + 1):
            for u in by_weight.get(wu, []):
                for v in by_weight.get(room - wu, []):
                    vec = dict(r.sandwich(u, v).terms)
                    ideal.add(vec)
                    if u or v:
                        decomposable.add(vec)
    # project the ideal slice onto the length-1 words to cut out I^2
    linear = rank(
        ({w: c for w, c in row.items() if len(w) == 1} for row in ideal.rows.values()), key
    )
    return ideal.rank - linear - decomposable.rank


def quotient_dim_bruteforce(p: Presentation, n: int) -> int:
    """``dim k<X>/((R) + I^n)`` by plain linear algebra (no rewriting).

    The ideal modulo ``I^n`` is spanned by the truncations of ``u r v``;
    words of length at least ``n`` are zero.
    """
    k = len(p.alphabet)
    total = sum(k**m for m in range(n))
    ech = Echelon(lambda w: (len(w), w))
    for r in p.relations:
        lo = r.min_length()
        if lo < 0:
            continue
        for m in range(n - lo):
            for lu in range(m + 1):
                for u in words_of_length(k, lu):
                    for v in words_of_length(k, m - lu):
                        vec = {w: c for w, c in r.sandwich(u, v).terms.items() if len(w) < n}
                        if vec:
                            ech.add(vec)
    return total - ech.rank
