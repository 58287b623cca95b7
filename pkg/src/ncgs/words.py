"""Alphabets, words and word orders.

A word is a plain tuple of letter indices into an :class:`Alphabet`; the
empty tuple is the identity word.  Orders are described by
:class:`OrderSpec` and compared through sort keys, so ``sorted(words,
key=order.key)`` is the idiomatic way to sort.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

Word = tuple[int, ...]

ONE: Word = ()

#: Refuse to enumerate more words than this in one call.
ENUMERATION_CAP = 2_000_000

KINDS = ("deg-lex", "lex", "theta-lex")


class OrderError(ValueError):
    """Raised for order specifications the engines cannot use."""


@dataclass(frozen=True)
class Alphabet:
    """Finite ordered set of named letters with positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(self.weights) if self.weights else (1,) * len(names)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(names):
            raise ValueError("one weight per letter is required")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letter names in {names}")
        for name in names:
            if not name or not name.isidentifier():
                raise ValueError(f"invalid letter name {name!r}")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"letter weights must be integers >= 1, got {w!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown letter {name!r}") from None

    def word(self, *names: str) -> Word:
        """Build a word from letter names: ``alphabet.word("x1", "x2")``."""
        return tuple(self.index(n) for n in names)

    def parse_word(self, text: str) -> Word:
        """Parse ``"x1*x2*x1"`` (or ``"1"`` for the identity)."""
        text = text.strip()
        if text in ("", "1"):
            return ONE
        return tuple(self.index(part.strip()) for part in text.split("*"))

    def weight(self, w: Word) -> int:
        ws = self.weights
        return sum(ws[a] for a in w)

    def format(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(self.names[a] for a in w)


@dataclass(frozen=True)
class OrderSpec:
    """A total order on the words of an alphabet.

    ``precedence`` lists letter indices from largest to smallest.  For
    ``theta-lex`` the ``weights`` give the monoid homomorphism to the
    naturals that is compared before the lexicographic tie-break.
    """

    alphabet: Alphabet
    kind: str = "deg-lex"
    precedence: tuple[int, ...] = ()
    weights: tuple[int, ...] = ()
    _rank: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.alphabet)
        if self.kind not in KINDS:
            raise OrderError(
                f"unsupported order kind {self.kind!r}; only {', '.join(KINDS)} are "
                "constructible (the series engine needs an admissible N-order)"
            )
        prec = tuple(self.precedence) if self.precedence else tuple(range(n))
        if sorted(prec) != list(range(n)):
            raise OrderError(f"precedence {prec} is not a permutation of the letters")
        object.__setattr__(self, "precedence", prec)
        if self.kind == "theta-lex":
            ws = tuple(self.weights) if self.weights else self.alphabet.weights
            if len(ws) != n:
                raise OrderError("theta-lex needs one weight per letter")
            for w in ws:
                if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                    raise OrderError(
                        f"theta-lex weight {w!r} rejected: weights must be integers >= 1 "
                        "so that the order is an N-order (every bounded-above set of "
                        "words is finite); vector-valued or zero weights only give "
                        "well-orders, for which the series reduction is unsound"
                    )
        elif self.kind == "deg-lex":
            ws = (1,) * n
        else:
            ws = (0,) * n
        object.__setattr__(self, "weights", ws)
        rank = [0] * n
        for pos, letter in enumerate(prec):
            rank[letter] = n - 1 - pos
        object.__setattr__(self, "_rank", tuple(rank))

    # -- constructors -------------------------------------------------------

    @classmethod
    def deglex(cls, alphabet: Alphabet, precedence: Sequence = ()) -> OrderSpec:
        return cls(alphabet, "deg-lex", _letters(alphabet, precedence))

    @classmethod
    def lex(cls, alphabet: Alphabet, precedence: Sequence = ()) -> OrderSpec:
        return cls(alphabet, "lex", _letters(alphabet, precedence))

    @classmethod
    def theta_lex(cls, alphabet: Alphabet, weights, precedence: Sequence = ()) -> OrderSpec:
        if isinstance(weights, dict):
            weights = tuple(weights[name] for name in alphabet.names)
        return cls(alphabet, "theta-lex", _letters(alphabet, precedence), tuple(weights))

    # -- properties ---------------------------------------------------------

    @property
    def admissible(self) -> bool:
        return self.kind != "lex"

    @property
    def n_order(self) -> bool:
        """Every bounded-above set of words is finite."""
        return self.kind != "lex"

    def theta(self, w: Word) -> int:
        ws = self.weights
        return sum(ws[a] for a in w)

    def key(self, w: Word):
        """Sort key: ``u < v`` in this order iff ``key(u) < key(v)``."""
        rank = self._rank
        lex = tuple([rank[a] for a in w])
        if self.kind == "lex":
            return lex
        ws = self.weights
        return (sum([ws[a] for a in w]), lex)

    def compare(self, u: Word, v: Word) -> int:
        """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
        n = len(self.alphabet)
        for w in (u, v):
            if any(not 0 <= a < n for a in w):
                raise OrderError(f"word {w} is not over the order's alphabet")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def min_word(self, words: Iterable[Word]) -> Word:
        return min(words, key=self.key)

    def describe(self) -> str:
        names = self.alphabet.names
        prec = " > ".join(names[a] for a in self.precedence)
        if self.kind == "theta-lex":
            ws = ", ".join(f"{names[i]}={w}" for i, w in enumerate(self.weights))
            return f"theta-lex({prec}; {ws})"
        return f"{self.kind}({prec})"

    def to_dict(self) -> dict:
        names = self.alphabet.names
        d = {"kind": self.kind, "precedence": [names[a] for a in self.precedence]}
        if self.kind == "theta-lex":
            d["weights"] = {names[i]: w for i, w in enumerate(self.weights)}
        return d


def _letters(alphabet: Alphabet, precedence: Sequence) -> tuple[int, ...]:
    return tuple(alphabet.index(p) if isinstance(p, str) else int(p) for p in precedence)


def order_from_dict(alphabet: Alphabet, spec: dict) -> OrderSpec:
    """Build an order from its JSON form (see the presentation file format)."""
    kind = spec.get("kind", "deg-lex")
    precedence = spec.get("precedence", ())
    if kind != "theta-lex":
        if "weights" in spec:
            raise OrderError(f"{kind} does not take weights")
        return OrderSpec(alphabet, kind, _letters(alphabet, precedence))
    weights = spec.get("weights")
    if weights is None:
        return OrderSpec(alphabet, kind, _letters(alphabet, precedence))
    if isinstance(weights, dict):
        missing = set(alphabet.names) - set(weights)
        if missing:
            raise OrderError(f"theta-lex weights missing for {sorted(missing)}")
        weights = [weights[n] for n in alphabet.names]
    return OrderSpec(alphabet, kind, _letters(alphabet, precedence), tuple(weights))


# -- word utilities ---------------------------------------------------------


def enumerate_words(alphabet: Alphabet, bound: int, mode: str = "by-length") -> list[Word]:
    """All words of length (or weight) at most ``bound``.

    Sorted by length (resp. weight), then by letter indices in declaration
    order, so the result is reproducible.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if mode not in ("by-length", "by-weight"):
        raise ValueError(f"unknown mode {mode!r}")
    n = len(alphabet)
    ws = alphabet.weights if mode == "by-weight" else (1,) * n
    if count_words(ws, bound) > ENUMERATION_CAP:
        raise ValueError(f"more than {ENUMERATION_CAP} words below bound {bound}")
    out: list[Word] = [ONE]
    frontier: list[tuple[Word, int]] = [(ONE, 0)]
    while frontier:
        nxt = []
        for w, wt in frontier:
            for a in range(n):
                t = wt + ws[a]
                if t <= bound:
                    nxt.append((w + (a,), t))
        out.extend(w for w, _ in nxt)
        frontier = nxt
    if mode == "by-weight":
        out.sort(key=lambda w: (sum(ws[a] for a in w), w))
    else:
        out.sort(key=lambda w: (len(w), w))
    return out


def count_words(weights: Sequence[int], bound: int) -> int:
    """Number of words of total weight at most ``bound``."""
    by_weight = [1] + [0] * bound
    for t in range(1, bound + 1):
        by_weight[t] = sum(by_weight[t - w] for w in weights if w <= t)
    return sum(by_weight)


def words_of_length(n_letters: int, length: int) -> Iterable[Word]:
    return product(range(n_letters), repeat=length)


def find_factor_occurrences(w: Word, pattern: Word) -> list[int]:
    """Start positions ``i`` with ``w[i:i+len(pattern)] == pattern``."""
    if not pattern:
        raise ValueError("pattern must be a nonempty word")
    k = len(pattern)
    return [i for i in range(len(w) - k + 1) if w[i : i + k] == pattern]


def has_factor(w: Word, patterns) -> bool:
    """True if some element of ``patterns`` (a set of words) is a factor of ``w``."""
    lengths = {len(p) for p in patterns}
    for k in lengths:
        for i in range(len(w) - k + 1):
            if w[i : i + k] in patterns:
                return True
    return False


# -- admissibility ----------------------------------------------------------


@dataclass
class AdmissibilityReport:
    order: str
    max_length: int
    passed: bool
    checked: int
    violations: list[tuple] = field(default_factory=list)
    n_violations: int = 0

    def to_dict(self, alphabet: Alphabet) -> dict:
        fmt = alphabet.format
        return {
            "order": self.order,
            "max_length": self.max_length,
            "passed": self.passed,
            "checked": self.checked,
            "n_violations": self.n_violations,
            "violations": [
                {"kind": kind, **{k: fmt(v) for k, v in zip(("u", "v", "a", "b"), ws)}}
                for kind, *ws in self.violations
            ],
        }


def check_admissible(order: OrderSpec, max_length: int, keep: int = 20) -> AdmissibilityReport:
    """Exhaustively test ``1 < m`` and two-sided translation invariance.

    Every pair ``u < v`` and every pair of multipliers ``a, b`` with
    ``|a| + max(|u|, |v|) + |b| <= max_length`` is tested.  Violations
    are recorded as ``("translation", u, v, a, b)`` meaning ``u < v`` but
    ``a u b > a v b``, or ``("unit", m)`` meaning ``m <= 1``.
    """
    if max_length < 2:
        raise ValueError("max_length must be >= 2")
    alphabet = order.alphabet
    words = enumerate_words(alphabet, max_length)
    by_len: dict[int, list[Word]] = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    key = order.key
    violations: list[tuple] = []
    count = 0
    checked = 0
    one_key = key(ONE)
    for m in words[1:]:
        checked += 1
        if not one_key < key(m):
            count += 1
            if len(violations) < keep:
                violations.append(("unit", m))
    sorted_words = sorted(words, key=key)
    for i, u in enumerate(sorted_words):
        for v in sorted_words[i + 1 :]:
            room = max_length - max(len(u), len(v))
            for la in range(room + 1):
                for a in by_len[la]:
                    for lb in range(room - la + 1):
                        for b in by_len[lb]:
                            if not a and not b:
                                continue
                            checked += 1
                            if not key(a + u + b) < key(a + v + b):
                                count += 1
                                if len(violations) < keep:
                                    violations.append(("translation", u, v, a, b))
    return AdmissibilityReport(order.describe(), max_length, count == 0, checked, violations, count)
