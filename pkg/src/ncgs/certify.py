"""Residual-nilpotence certificates and standard parafree presentations.

A presentation ``k<X | R>`` is certified residually nilpotent when

* ``R`` is a Gröbner–Shirshov basis for an admissible order (max terms),
* ``R`` viewed as power series is a Gröbner–Shirshov basis for an
  admissible N-order (min terms), with every composition reducing to
  exactly zero, and
* every relation has the same word as max term and as min term.

Failure only refutes these hypotheses; it says nothing about whether the
algebra is residually nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .fields import QQ
from .gsbases import GSReport, check_gs_classical, check_gs_series
from .poly import Poly
from .presentation import Presentation
from .words import Alphabet, OrderError, OrderSpec, Word

CERTIFIED = "certified-residually-nilpotent"
REFUTED = "refuted-hypothesis"
INCONCLUSIVE = "inconclusive"

REFUTED_NOTE = (
    "a refuted hypothesis does not show that the algebra fails to be "
    "residually nilpotent; the certificate criterion is one-directional"
)


class PreconditionError(ValueError):
    """Input violates a documented precondition; ``witness`` shows why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# -- acyclic polynomials -----------------------------------------------------------


def check_acyclic(p: Poly, x_letters: Sequence[str], y_letters: Sequence[str]) -> bool:
    """Is ``p`` in the kernel of ``k<X ⊔ Y> -> k<Y>/I^2`` (X sent to zero)?

    Equivalently: the pure-Y part of ``p`` has no constant and no linear
    terms.
    """
    alphabet = p.alphabet
    xs = {alphabet.index(n) for n in x_letters}
    ys = {alphabet.index(n) for n in y_letters}
    if xs & ys or len(xs | ys) != len(alphabet):
        raise ValueError("X and Y must partition the alphabet")
    for w, c in p.terms.items():
        if len(w) <= 1 and not any(a in xs for a in w):
            return False
    return True


@dataclass
class ParafreeFamily:
    """Base letters ``X``, new letters ``Y`` and one acyclic polynomial per ``y``."""

    x_letters: tuple[str, ...]
    y_letters: tuple[str, ...]
    polys: dict[str, Poly]
    alphabet: Alphabet

    @classmethod
    def from_strings(cls, x_letters, y_letters, polys: dict[str, str], y_weights=None, field=QQ):
        from .parse import parse_poly

        x_letters, y_letters = tuple(x_letters), tuple(y_letters)
        weights = (1,) * len(x_letters) + tuple(y_weights or (1,) * len(y_letters))
        alphabet = Alphabet(x_letters + y_letters, weights)
        parsed = {y: parse_poly(t, alphabet, field) for y, t in polys.items()}
        return cls(x_letters, y_letters, parsed, alphabet)


def build_parafree_presentation(
    family: ParafreeFamily,
    order_max: OrderSpec | None = None,
    order_min: OrderSpec | None = None,
) -> Presentation:
    """The presentation ``k<X ⊔ Y | y = p_y>``.

    Its quotient by the intersection of all powers of the augmentation
    ideal is the standard parafree algebra of the family; when the result
    certifies, that intersection is already zero.
    """
    alphabet = family.alphabet
    if set(family.polys) != set(family.y_letters):
        raise ValueError("one polynomial per new letter is required")
    relations = []
    for y in family.y_letters:
        p = family.polys[y]
        if not check_acyclic(p, family.x_letters, family.y_letters):
            raise PreconditionError(f"p_{y} = {p} is not acyclic", witness=y)
        relations.append(Poly.letter(alphabet, y, p.field) - p)
    field = relations[0].field if relations else QQ
    meta = {"parafree_rank": len(family.x_letters), "x": list(family.x_letters), "y": list(family.y_letters)}
    return Presentation(alphabet, relations, order_max, order_min, field, meta)


# -- the certificate -----------------------------------------------------------------


@dataclass
class LeadingMatch:
    relation: str
    max_term: str
    min_term: str
    equal: bool


@dataclass
class Certificate:
    presentation: Presentation
    classical: GSReport
    series: GSReport | None
    leading: list[LeadingMatch]
    verdict: str
    reasons: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_dict(self, include_trace=False) -> dict:
        d = {
            "verdict": self.verdict,
            "reasons": self.reasons,
            "classical": self.classical.to_dict(include_trace),
            "series": self.series.to_dict(include_trace) if self.series else None,
            "leading_words": [vars(m) for m in self.leading],
        }
        if self.verdict == REFUTED:
            d["note"] = REFUTED_NOTE
        return d


def certify_residual_nilpotence(p: Presentation, weight_bound: int = 30, trace=False) -> Certificate:
    """Run both Gröbner–Shirshov checks and the leading-word match."""
    if not p.order_max.admissible:
        raise OrderError(f"classical order {p.order_max.describe()} is not admissible")
    if not (p.order_min.admissible and p.order_min.n_order):
        raise OrderError(f"series order {p.order_min.describe()} is not an admissible N-order")
    rels = [r for r in p.relations if r]
    fmt = p.alphabet.format
    leading = []
    for r in rels:
        big = r.max_term(p.order_max)[0]
        small = r.min_term(p.order_min)[0]
        leading.append(LeadingMatch(str(r), fmt(big), fmt(small), big == small))
    classical = check_gs_classical(rels, p.order_max, trace=trace)
    series = check_gs_series(rels, p.order_min, weight_bound, trace=trace)
    reasons = []
    for m in leading:
        if not m.equal:
            reasons.append(f"max term {m.max_term} != min term {m.min_term} for {m.relation}")
    if classical.verdict != "is-GS":
        reasons.append("relations are not a Gröbner–Shirshov basis for the classical order")
    if series.verdict == "not-GS":
        reasons.append("a series composition has an irreducible minimal term below the bound")
    if reasons:
        verdict = REFUTED
    elif series.verdict == "GS-up-to-bound":
        verdict = INCONCLUSIVE
        reasons.append(f"series compositions only vanish up to weight {weight_bound}")
    else:
        verdict = CERTIFIED
    cert = Certificate(p, classical, series, leading, verdict, reasons)
    _assert_sound(cert)
    return cert


def _assert_sound(cert: Certificate) -> None:
    if cert.verdict != CERTIFIED:
        return
    from .rewrite import Status

    assert cert.classical.is_gs and cert.series.is_gs
    assert all(c.result.status is Status.REDUCED_TO_ZERO for c in cert.series.checks)
    assert all(c.result.status is Status.REDUCED_TO_ZERO for c in cert.classical.checks)
    assert all(m.equal for m in cert.leading)


# -- the u = phi family ---------------------------------------------------------------


def self_overlap_witness(u: Word) -> Word | None:
    """A nonempty ``u'`` with ``u = u' u'' u'``, or None."""
    for k in range(1, len(u) // 2 + 1):
        if u[:k] == u[len(u) - k :]:
            return u[:k]
    return None


def generate_family_example(
    n: int,
    m: int,
    u: Sequence[int] | str,
    phi: str | Poly,
    weights: Sequence[int] | None = None,
    weight_bound: int = 30,
) -> tuple[Presentation, Certificate]:
    """Build and certify ``k<x1..xn, y1..ym | u = phi>``.

    ``u`` is a word in the x-letters (indices or a string like
    ``"x1*x2"``), ``phi`` a polynomial in the y-letters without constant
    term.  Orders: deg-lex with ``x1 > ... > xn > y1 > ... > ym``, and
    theta-lex with the same letter order, weight 1 on x-letters and
    ``weights`` (default ``|u| + 1``) on y-letters.
    """
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    ys = tuple(f"y{i}" for i in range(1, m + 1))
    alphabet_probe = Alphabet(xs + ys)
    if isinstance(u, str):
        uw = alphabet_probe.parse_word(u)
    else:
        uw = tuple(u)
    if not uw or any(a >= n for a in uw):
        raise PreconditionError("u must be a nonempty word in the x-letters", witness=uw)
    witness = self_overlap_witness(uw)
    if witness is not None:
        raise PreconditionError(
            f"u = {alphabet_probe.format(uw)} decomposes as u'u''u' with u' = "
            f"{alphabet_probe.format(witness)}",
            witness=alphabet_probe.format(witness),
        )
    if weights is None:
        weights = (len(uw) + 1,) * m
    weights = tuple(weights)
    if len(weights) != m:
        raise PreconditionError("one weight per y-letter is required", witness=weights)
    for y, w in zip(ys, weights):
        if w <= len(uw):
            raise PreconditionError(f"weight of {y} must exceed |u| = {len(uw)}", witness=(y, w))
    alphabet = Alphabet(xs + ys, (1,) * n + weights)
    if isinstance(phi, str):
        from .parse import parse_poly

        phi = parse_poly(phi, alphabet)
    elif phi.alphabet != alphabet:
        phi = Poly(alphabet, phi.terms, phi.field)
    deglex = OrderSpec.deglex(alphabet)
    theta = OrderSpec.theta_lex(alphabet, (1,) * n + weights)
    uk = deglex.key(uw)
    for v in phi.terms:
        if any(a < n for a in v):
            raise PreconditionError("phi must be a polynomial in the y-letters", witness=alphabet.format(v))
        if not v:
            raise PreconditionError("phi must have zero constant term", witness="1")
        if not deglex.key(v) <= uk:
            raise PreconditionError(
                f"monomial {alphabet.format(v)} of phi exceeds u in deg-lex",
                witness=alphabet.format(v),
            )
    r = Poly.word(alphabet, uw, 1, phi.field) - phi
    meta = {"name": "family", "u": alphabet.format(uw), "phi": str(phi)}
    pres = Presentation(alphabet, [r], deglex, theta, phi.field, meta)
    return pres, certify_residual_nilpotence(pres, weight_bound)
