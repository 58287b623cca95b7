"""Noncommutative polynomials with exact coefficients.

:class:`Poly` is a finitely supported map from words to nonzero
coefficients.  Power series never appear explicitly: computations on the
series side work with :class:`TruncatedPoly`, which drops every term at or
beyond a length (or weight) bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ
from .words import ONE, Alphabet, OrderSpec, Word


class PolyError(ValueError):
    pass


def _add_into(acc: dict, terms, scale=1) -> None:
    """``acc += scale * terms`` in place, dropping zeros."""
    for w, c in terms.items() if isinstance(terms, dict) else terms:
        v = acc.get(w)
        v = c * scale if v is None else v + c * scale
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


class Poly:
    """Element of the free associative algebra over ``alphabet``.

    Supports ``+``, ``-``, ``*`` (polynomial or scalar), ``**`` and ``==``.
    Iteration yields ``(word, coefficient)`` in a fixed canonical order
    (length, then letter indices), so printing is deterministic.
    """

    __slots__ = ("terms", "alphabet", "field")

    def __init__(self, alphabet: Alphabet, terms=None, field=QQ, *, _trusted=False):
        self.alphabet = alphabet
        self.field = field
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            c = field(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alphabet, field=QQ):
        return cls(alphabet, {}, field, _trusted=True)

    @classmethod
    def one(cls, alphabet, field=QQ):
        return cls(alphabet, {ONE: field.one}, field, _trusted=True)

    @classmethod
    def word(cls, alphabet, w: Word, coeff=1, field=QQ):
        return cls(alphabet, {tuple(w): coeff}, field)

    @classmethod
    def letter(cls, alphabet, name: str, field=QQ):
        return cls(alphabet, {(alphabet.index(name),): field.one}, field, _trusted=True)

    def _new(self, terms: dict) -> Poly:
        return Poly(self.alphabet, terms, self.field, _trusted=True)

    def _check(self, other: Poly) -> None:
        if other.alphabet is not self.alphabet and other.alphabet != self.alphabet:
            raise PolyError("polynomials over different alphabets")
        if other.field is not self.field and other.field != self.field:
            raise PolyError("polynomials over different coefficient fields")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            c = self.field(other)
            return self._new({ONE: c} if c else {})
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return self._new(acc)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            acc: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    c = acc.get(w)
                    c = a * b if c is None else c + a * b
                    if c:
                        acc[w] = c
                    else:
                        del acc[w]
            return self._new(acc)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return other.__mul__(self)
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise PolyError("negative exponent")
        out = Poly.one(self.alphabet, self.field)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c) -> Poly:
        c = self.field(c)
        if not c:
            return self._new({})
        return self._new({w: c * v for w, v in self.terms.items()})

    def lmul_word(self, u: Word) -> Poly:
        return self._new({u + w: c for w, c in self.terms.items()})

    def rmul_word(self, v: Word) -> Poly:
        return self._new({w + v: c for w, c in self.terms.items()})

    def sandwich(self, u: Word, v: Word, c=1) -> Poly:
        """``c * u * self * v`` for words ``u``, ``v``."""
        c = self.field(c)
        return self._new({u + w + v: c * k for w, k in self.terms.items()})

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms and self.alphabet == other.alphabet
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])))

    def __len__(self):
        return len(self.terms)

    def support(self) -> set[Word]:
        return set(self.terms)

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), self.field.zero)

    def constant(self):
        return self.terms.get(ONE, self.field.zero)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def min_length(self) -> int:
        return min((len(w) for w in self.terms), default=-1)

    def max_term(self, order: OrderSpec):
        """``(word, coefficient)`` of the largest word in the support."""
        if not self.terms:
            raise PolyError("the zero polynomial has no maximal term")
        w = max(self.terms, key=order.key)
        return w, self.terms[w]

    def min_term(self, order: OrderSpec):
        """``(word, coefficient)`` of the smallest word in the support."""
        if not self.terms:
            raise PolyError("the zero polynomial has no minimal term")
        w = min(self.terms, key=order.key)
        return w, self.terms[w]

    def lead(self, order: OrderSpec, mode: str):
        if mode == "max":
            return self.max_term(order)
        if mode == "min":
            return self.min_term(order)
        raise ValueError(f"mode must be 'max' or 'min', not {mode!r}")

    def make_monic(self, order: OrderSpec, mode: str = "max") -> Poly:
        _, c = self.lead(order, mode)
        if c == 1:
            return self
        return self.scale(self.field.one / c)

    def is_monic(self, order: OrderSpec, mode: str = "max") -> bool:
        return bool(self.terms) and self.lead(order, mode)[1] == 1

    def truncate(self, bound: int, mode: str = "by-length", weights=None) -> TruncatedPoly:
        return TruncatedPoly.of(self, bound, mode, weights)

    def drop_from(self, bound: int, weights=None) -> Poly:
        """Drop terms of length (or weight, if ``weights``) ``>= bound``."""
        if weights is None:
            return self._new({w: c for w, c in self.terms.items() if len(w) < bound})
        return self._new(
            {w: c for w, c in self.terms.items() if sum(weights[a] for a in w) < bound}
        )

    def map_coefficients(self, f) -> Poly:
        return Poly(self.alphabet, {w: f(c) for w, c in self.terms.items()}, self.field)

    def reversed(self) -> Poly:
        return self._new({w[::-1]: c for w, c in self.terms.items()})

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_word_power(alphabet: Alphabet, w: Word) -> str:
    """``x1*x2^2``: runs of a repeated letter are written as powers."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = alphabet.names[w[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Render in the expression grammar accepted by :func:`ncgs.parse.parse_poly`."""
    if not f.terms:
        return "0"
    fmt = f.field.format
    out = []
    for w, c in f:
        text = fmt(c)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        if w and text == "1":
            body = format_word_power(f.alphabet, w)
        elif w:
            body = f"{text}*{format_word_power(f.alphabet, w)}"
        else:
            body = text
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


@dataclass(frozen=True)
class TruncatedPoly:
    """A polynomial modulo all words of length (or weight) ``>= bound``.

    Models an element of the free algebra (or power series algebra) modulo
    the ``bound``-th power of the augmentation ideal.
    """

    poly: Poly
    bound: int
    mode: str = "by-length"
    weights: tuple[int, ...] | None = None

    @classmethod
    def of(cls, f: Poly, bound: int, mode: str = "by-length", weights=None) -> TruncatedPoly:
        if bound < 1:
            raise PolyError("truncation bound must be >= 1")
        if mode == "by-length":
            weights = None
        elif mode == "by-weight":
            weights = tuple(weights) if weights is not None else f.alphabet.weights
        else:
            raise PolyError(f"unknown truncation mode {mode!r}")
        return cls(f.drop_from(bound, weights), bound, mode, weights)

    def _same(self, other: TruncatedPoly):
        if (self.bound, self.mode, self.weights) != (other.bound, other.mode, other.weights):
            raise PolyError("truncated polynomials with different bounds")

    def __add__(self, other: TruncatedPoly) -> TruncatedPoly:
        self._same(other)
        return TruncatedPoly(self.poly + other.poly, self.bound, self.mode, self.weights)

    def __sub__(self, other: TruncatedPoly) -> TruncatedPoly:
        self._same(other)
        return TruncatedPoly(self.poly - other.poly, self.bound, self.mode, self.weights)

    def __mul__(self, other: TruncatedPoly) -> TruncatedPoly:
        self._same(other)
        return TruncatedPoly.of(self.poly * other.poly, self.bound, self.mode, self.weights)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (self.poly, self.bound, self.mode, self.weights) == (
            other.poly,
            other.bound,
            other.mode,
            other.weights,
        )

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        unit = "length" if self.mode == "by-length" else "weight"
        return f"{self.poly} + O({unit} >= {self.bound})"


def truncate(f: Poly, bound: int, mode: str = "by-length", weights=None) -> TruncatedPoly:
    return TruncatedPoly.of(f, bound, mode, weights)
