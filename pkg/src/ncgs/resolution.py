"""Exhaustive desk checks for the parafree algebra

    A = k<x1, x2, y1, y2 | r1, r2, r3, r4>
    r1 = x1x2 + y1^2 - y1     r2 = x2x1 + y2^2 - y2
    r3 = x1y2 - y1x1          r4 = x2y1 - y2x2

its periodic free resolution of the trivial module, the contracting
homotopy built from the letter-stripping operators ``c_l``, and the
ingredients of the argument that ``H^{3+2n}(A, I(A))`` is nonzero.

Elements of ``A`` are polynomials in normal form for deg-lex with
``x1 > x2 > y1 > y2``; the normal words avoid the factors
``x1x2, x2x1, x1y2, x2y1``.  Every check here is exhaustive over a
finite slice of normal words; nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .gsbases import check_gs_classical, normal_words
from .linalg import rank
from .parse import parse_poly
from .poly import Poly
from .rewrite import RewriteSystem, normal_form
from .words import Alphabet, OrderSpec, Word

LETTERS = ("x1", "x2", "y1", "y2")
RELATIONS = (
    "x1*x2 + y1^2 - y1",
    "x2*x1 + y2^2 - y2",
    "x1*y2 - y1*x1",
    "x2*y1 - y2*x2",
)


class MainExampleAlgebra:
    """The algebra ``A`` with unique normal forms (checked on construction)."""

    def __init__(self):
        self.alphabet = Alphabet(LETTERS)
        self.order = OrderSpec.deglex(self.alphabet)
        self.relations = [parse_poly(t, self.alphabet) for t in RELATIONS]
        report = check_gs_classical(self.relations, self.order)
        if not report.is_gs:
            raise RuntimeError("relations are not a Gröbner–Shirshov basis")
        self.system = RewriteSystem(self.relations, self.order, "max")
        self.leading = {r.max_term(self.order)[0] for r in self.relations}
        self._nf_word = lru_cache(maxsize=None)(self._nf_word_uncached)

    def _nf_word_uncached(self, w: Word) -> dict:
        return dict(normal_form(Poly.word(self.alphabet, w), self.system).terms)

    def poly(self, text: str) -> Poly:
        return self.nf(parse_poly(text, self.alphabet))

    def letter(self, name: str) -> Poly:
        return Poly.letter(self.alphabet, name)

    def zero(self) -> Poly:
        return Poly.zero(self.alphabet)

    def one(self) -> Poly:
        return Poly.one(self.alphabet)

    def word(self, w: Word) -> Poly:
        return Poly.word(self.alphabet, w)

    def nf(self, f: Poly) -> Poly:
        acc: dict = {}
        for w, c in f.terms.items():
            for v, d in self._nf_word(w).items():
                s = acc.get(v, 0) + c * d
                if s:
                    acc[v] = s
                else:
                    acc.pop(v, None)
        return Poly(self.alphabet, acc)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.nf(a * b)

    def basis(self, max_length: int) -> list[Word]:
        return normal_words(self.alphabet, self.leading, max_length)

    def is_normal(self, w: Word) -> bool:
        return not any(w[i : i + 2] in self.leading for i in range(len(w) - 1))


# -- operators ----------------------------------------------------------------


@dataclass(frozen=True)
class Operator:
    """A k-linear map ``A -> A`` given by a function on normal forms."""

    fn: Callable[[Poly], Poly]
    name: str = "?"

    def __call__(self, a: Poly) -> Poly:
        return self.fn(a)

    def __matmul__(self, other: Operator) -> Operator:
        return Operator(lambda a: self.fn(other.fn(a)), f"{self.name}∘{other.name}")

    def __add__(self, other: Operator) -> Operator:
        return Operator(lambda a: self.fn(a) + other.fn(a), f"({self.name} + {other.name})")

    def __neg__(self) -> Operator:
        return Operator(lambda a: -self.fn(a), f"-{self.name}")

    def __sub__(self, other: Operator) -> Operator:
        return self + (-other)


def c_operator(alg: MainExampleAlgebra, letter: str, a: Poly) -> Poly:
    """Strip a leading ``letter`` from every normal word of ``a``; drop the rest."""
    i = alg.alphabet.index(letter)
    return Poly(alg.alphabet, {w[1:]: c for w, c in a.terms.items() if w and w[0] == i})


def c_op(alg: MainExampleAlgebra, letter: str) -> Operator:
    return Operator(lambda a: c_operator(alg, letter, a), f"c_{letter}")


def left(alg: MainExampleAlgebra, e: Poly | str) -> Operator:
    if isinstance(e, str):
        e = alg.poly(e)
    return Operator(lambda a: alg.mul(e, a), f"[{e}]")


def epsilon(alg: MainExampleAlgebra) -> Operator:
    return Operator(lambda a: Poly.one(alg.alphabet).scale(a.constant()) if a.constant() else alg.zero(), "ε")


def identity() -> Operator:
    return Operator(lambda a: a, "id")


def zero_op(alg: MainExampleAlgebra) -> Operator:
    return Operator(lambda a: alg.zero(), "0")


# -- identity checks ------------------------------------------------------------


@dataclass
class IdentityResult:
    name: str
    checked: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "identity": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:5],
        }


@dataclass
class CheckReport:
    name: str
    results: list[IdentityResult]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
            "notes": self.notes,
        }


def _compare_on_words(alg, name, lhs: Operator, rhs: Operator, words) -> IdentityResult:
    res = IdentityResult(name, 0)
    for w in words:
        a = alg.word(w)
        res.checked += 1
        got, want = lhs(a), rhs(a)
        if got != want:
            res.failures.append(
                {"word": alg.alphabet.format(w), "lhs": str(got), "rhs": str(want)}
            )
    return res


def verify_c0_identity(max_length: int, alg: MainExampleAlgebra | None = None) -> CheckReport:
    """``a = ε(a) + Σ_l l·c_l(a)`` on every normal word of length ``<= max_length``."""
    alg = alg or MainExampleAlgebra()
    rhs = epsilon(alg)
    for l in LETTERS:
        rhs = rhs + left(alg, l) @ c_op(alg, l)
    res = _compare_on_words(alg, "id = ε + Σ l c_l", identity(), rhs, alg.basis(max_length))
    return CheckReport("c0-identity", [res])


def c_equations(alg: MainExampleAlgebra) -> list[tuple[str, Operator, Operator]]:
    """The sixteen identities ``c_l ∘ (g·) = ...`` for letters ``l, g``."""
    c = {l: c_op(alg, l) for l in LETTERS}
    L = {l: left(alg, l) for l in LETTERS}
    eps, zero = epsilon(alg), zero_op(alg)
    y1m1, y2m1 = left(alg, "y1 - 1"), left(alg, "y2 - 1")
    rhs = {
        ("x1", "x1"): eps + L["x1"] @ c["x1"] + L["y1"] @ c["y1"],
        ("x1", "x2"): zero,
        ("x2", "x1"): zero,
        ("x2", "x2"): eps + L["x2"] @ c["x2"] + L["y2"] @ c["y2"],
        ("y1", "x1"): -(y1m1 @ c["x2"]) + L["x1"] @ c["y2"],
        ("y1", "x2"): zero,
        ("y2", "x1"): zero,
        ("y2", "x2"): -(y2m1 @ c["x1"]) + L["x2"] @ c["y1"],
    }
    for l in LETTERS:
        for y in ("y1", "y2"):
            rhs[(l, y)] = identity() if l == y else zero
    out = []
    for l in LETTERS:
        for g in LETTERS:
            r = rhs[(l, g)]
            out.append((f"c_{l} {g} = {r.name}", c[l] @ L[g], r))
    return out


def verify_c_equations(max_length: int, alg: MainExampleAlgebra | None = None) -> CheckReport:
    alg = alg or MainExampleAlgebra()
    words = alg.basis(max_length)
    results = [_compare_on_words(alg, name, lhs, rhs, words) for name, lhs, rhs in c_equations(alg)]
    return CheckReport("c-equations", results)


# -- the resolution -------------------------------------------------------------

D_EVEN = (
    ("x2", "0", "-y2", "0"),
    ("0", "x1", "0", "-y1"),
    ("y1 - 1", "0", "x1", "0"),
    ("0", "y2 - 1", "0", "x2"),
)
D_ODD = (
    ("x1", "0", "y1", "0"),
    ("0", "x2", "0", "y2"),
    ("-y2 + 1", "0", "x2", "0"),
    ("0", "-y1 + 1", "0", "x1"),
)
#: the transpose of ``D_ODD`` as written out independently
D_ODD_TRANSPOSE = (
    ("x1", "0", "-y2 + 1", "0"),
    ("0", "x2", "0", "-y1 + 1"),
    ("y1", "0", "x2", "0"),
    ("0", "y2", "0", "x1"),
)

Matrix = list[list[Poly]]


def d_matrix(i: int, alg: MainExampleAlgebra | None = None) -> Matrix:
    """The differential ``d_i : A^4 -> A^{4 or 1}``, entries act by left multiplication.

    ``d_1`` is the row ``(x1, x2, y1, y2)``; from stage 2 on the matrices
    alternate with period two (even stages use one pattern, odd the other).
    """
    if i < 1:
        raise ValueError("stage index must be >= 1")
    alg = alg or MainExampleAlgebra()
    if i == 1:
        rows = (LETTERS,)
    else:
        rows = D_EVEN if i % 2 == 0 else D_ODD
    return [[alg.poly(e) for e in row] for row in rows]


def matmul(alg: MainExampleAlgebra, a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b), len(b[0])
    if len(a[0]) != m:
        raise ValueError("shape mismatch")
    return [
        [alg.nf(sum((a[i][j] * b[j][l] for j in range(m)), alg.zero())) for l in range(k)]
        for i in range(n)
    ]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def verify_complex(max_stage: int, alg: MainExampleAlgebra | None = None) -> CheckReport:
    """``d_i d_{i+1} = 0`` entrywise for ``1 <= i < max_stage``."""
    alg = alg or MainExampleAlgebra()
    results = []
    for i in range(1, max_stage):
        prod = matmul(alg, d_matrix(i, alg), d_matrix(i + 1, alg))
        res = IdentityResult(f"d{i} d{i + 1} = 0", 0)
        for r, row in enumerate(prod):
            for c, e in enumerate(row):
                res.checked += 1
                if e:
                    res.failures.append({"entry": [r + 1, c + 1], "value": str(e)})
        results.append(res)
    return CheckReport("complex", results)


def homotopy(i: int, alg: MainExampleAlgebra) -> list[list[Operator]]:
    """``h_i : P_i -> P_{i+1}`` as a matrix of operators (``i >= 0``)."""
    c = {l: c_op(alg, l) for l in LETTERS}
    z = zero_op(alg)
    if i == 0:
        return [[c[l]] for l in LETTERS]
    if i % 2 == 1:
        return [
            [c["x2"], z, z, z],
            [z, c["x1"], z, z],
            [-c["y2"], z, z, z],
            [z, -c["y1"], z, z],
        ]
    return [
        [c["x1"], z, z, z],
        [z, c["x2"], z, z],
        [c["y1"], z, z, z],
        [z, c["y2"], z, z],
    ]


def _apply_ops(ops, vec):
    return [sum((ops[i][j](vec[j]) for j in range(len(vec))), vec[0] * 0) for i in range(len(ops))]


def _apply_matrix(alg, m: Matrix, vec):
    return [alg.nf(sum((m[i][j] * vec[j] for j in range(len(vec))), alg.zero())) for i in range(len(m))]


def verify_homotopy(max_stage: int, max_length: int, alg: MainExampleAlgebra | None = None) -> CheckReport:
    """``h_{i-1} d_i + d_{i+1} h_i = id`` on unit vectors times normal words.

    Stage 0 reads ``h_{-1} ε + d_1 h_0 = id_A`` with ``h_{-1}(1) = 1``.
    """
    alg = alg or MainExampleAlgebra()
    words = alg.basis(max_length)
    fmt = alg.alphabet.format
    results = []
    res = IdentityResult("h_{-1} ε + d1 h0 = id", 0)
    d1, h0 = d_matrix(1, alg), homotopy(0, alg)
    eps = epsilon(alg)
    for w in words:
        a = alg.word(w)
        out = eps(a) + _apply_matrix(alg, d1, _apply_ops(h0, [a]))[0]
        res.checked += 1
        if out != a:
            res.failures.append({"word": fmt(w), "got": str(out)})
    results.append(res)
    for i in range(1, max_stage + 1):
        res = IdentityResult(f"h{i - 1} d{i} + d{i + 1} h{i} = id", 0)
        di, dn = d_matrix(i, alg), d_matrix(i + 1, alg)
        hp, hi = homotopy(i - 1, alg), homotopy(i, alg)
        for slot in range(4):
            for w in words:
                vec = [alg.zero()] * 4
                vec[slot] = alg.word(w)
                first = _apply_ops(hp, _apply_matrix(alg, di, vec))
                second = _apply_matrix(alg, dn, _apply_ops(hi, vec))
                out = [a + b for a, b in zip(first, second)]
                res.checked += 1
                if out != vec:
                    res.failures.append(
                        {"slot": slot + 1, "word": fmt(w), "got": [str(e) for e in out]}
                    )
        results.append(res)
    return CheckReport("homotopy", results)


# -- the nonvanishing argument ---------------------------------------------------


def verify_ext_steps(max_length: int = 6, alg: MainExampleAlgebra | None = None,
                     operator_length: int = 5) -> CheckReport:
    """Finite ingredients of the nonvanishing argument.

    (a) the transpose of the odd-stage differential equals the separately
    written matrix; (b) ``c_y2 ∘ (x1·) = 0`` and ``c_y2 ∘ (y2·) = id`` on
    normal words of length ``<= operator_length``; (c) ``id - c_y2`` is
    injective on the span of nonempty normal words of length
    ``<= max_length``.  The final limit step (``x1`` would lie in every
    power of the augmentation ideal) relies on residual nilpotence and is
    not machine-checked.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    alg = alg or MainExampleAlgebra()
    d3t = transpose(d_matrix(3, alg))
    shown = [[alg.poly(e) for e in row] for row in D_ODD_TRANSPOSE]
    res_a = IdentityResult("transpose of d3 matches the written matrix", 16)
    for r in range(4):
        for c in range(4):
            if d3t[r][c] != shown[r][c]:
                res_a.failures.append({"entry": [r + 1, c + 1], "computed": str(d3t[r][c]), "written": str(shown[r][c])})
    words = alg.basis(operator_length)
    cy2 = c_op(alg, "y2")
    res_b1 = _compare_on_words(alg, "c_y2 x1 = 0", cy2 @ left(alg, "x1"), zero_op(alg), words)
    res_b2 = _compare_on_words(alg, "c_y2 y2 = id", cy2 @ left(alg, "y2"), identity(), words)
    slice_words = [w for w in alg.basis(max_length) if w]
    images = []
    for w in slice_words:
        a = alg.word(w)
        images.append(dict((a - cy2(a)).terms))
    r = rank(images, key=lambda w: (len(w), w))
    res_c = IdentityResult(f"ker(id - c_y2) = 0 on {len(slice_words)} nonempty normal words", len(slice_words))
    if r != len(slice_words):
        res_c.failures.append({"kernel_dim": len(slice_words) - r})
    notes = ["the limit step (x1 in every power of I forces x1 = 0) uses residual nilpotence and is not checked here"]
    return CheckReport("ext-steps", [res_a, res_b1, res_b2, res_c], notes)


@dataclass
class MembershipWitness:
    """``target = Σ coeff · u·rule·v + tail`` with every tail word of length ``>= n``."""

    target: str
    n: int
    cofactors: list[tuple[Word, int, Word, object]]
    tail: Poly
    exact: bool

    @property
    def passed(self) -> bool:
        return self.exact and (not self.tail or self.tail.min_length() >= self.n)


def _membership(alg, target_idx, combo, right_letter, left_letter, n):
    """Unroll ``r = r·s + t·r - (combination of rules a, b)`` until the tail is in ``I^n``."""
    rels = alg.relations
    target = rels[target_idx]
    s = alg.alphabet.index(right_letter)
    t = alg.alphabet.index(left_letter)
    # current expression: Σ coeff * u target v over pairs (u, v)
    frontier = {((), ()): 1}
    cofactors = []
    depth = max(0, n - target.min_length())
    for _ in range(depth):
        nxt: dict = {}
        for (u, v), c in frontier.items():
            # target = target·s + t·target - lhs_rule combination
            for key in ((u, (s,) + v), (u + (t,), v)):
                nxt[key] = nxt.get(key, 0) + c
            for rule, left_w, right_w, sign in combo:
                cofactors.append((u + left_w, rule, right_w + v, -sign * c))
        frontier = {k: c for k, c in nxt.items() if c}
    tail = Poly.zero(alg.alphabet)
    for (u, v), c in frontier.items():
        tail = tail + target.sandwich(u, v, c)
    total = tail
    for u, rule, v, c in cofactors:
        total = total + rels[rule].sandwich(u, v, c)
    return MembershipWitness(f"r{target_idx + 1}", n, cofactors, tail, total == target)


def verify_iomega_identities(max_n: int = 10, alg: MainExampleAlgebra | None = None) -> dict:
    """Exact identities showing ``r3, r4`` lie in ``(r1, r2) + I^n``.

    The identities are ``x1 r2 - r1 x1 = r3 y2 + y1 r3 - r3`` and
    ``x2 r1 - r2 x2 = r4 y1 + y2 r4 - r4``.  Rearranged, ``r3`` equals
    ``r3 y2 + y1 r3`` modulo ``(r1, r2)``; unrolling this ``n - 2`` times
    writes ``r3`` as an explicit combination of ``r1, r2`` plus a tail in
    ``I^n``.  The variant with ``- y1 r3`` in place of ``+ y1 r3`` is also
    evaluated and reported, since it fails.
    """
    alg = alg or MainExampleAlgebra()
    P = lambda t: parse_poly(t, alg.alphabet)
    r1, r2, r3, r4 = alg.relations
    x1, x2, y1, y2 = (P(l) for l in LETTERS)
    id3_lhs, id3_rhs = x1 * r2 - r1 * x1, r3 * y2 + y1 * r3 - r3
    id4_lhs, id4_rhs = x2 * r1 - r2 * x2, r4 * y1 + y2 * r4 - r4
    # in B = k<X|r1,r2> one has r3 = x1 y2^2 - y1^2 x1; the minus-sign variant
    minus_variant = r3 * y2 - y1 * r3
    plus_variant = r3 * y2 + y1 * r3
    target = P("x1*y2^2 - y1^2*x1")
    # x1 r2 - r1 x1 = (r3 y2 + y1 r3) - r3 : cofactors (rule, left, right, sign)
    combo3 = [(1, (0,), (), 1), (0, (), (0,), -1)]
    combo4 = [(0, (1,), (), 1), (1, (), (1,), -1)]
    memberships = []
    for n in range(1, max_n + 1):
        memberships.append(_membership(alg, 2, combo3, "y2", "y1", n))
        memberships.append(_membership(alg, 3, combo4, "y1", "y2", n))
    return {
        "identity_r3": {"lhs": str(id3_lhs), "rhs": str(id3_rhs), "holds": id3_lhs == id3_rhs},
        "identity_r4": {"lhs": str(id4_lhs), "rhs": str(id4_rhs), "holds": id4_lhs == id4_rhs},
        "expansion": {
            "x1*y2^2 - y1^2*x1 == r3*y2 + y1*r3": plus_variant == target,
            "x1*y2^2 - y1^2*x1 == r3*y2 - y1*r3": minus_variant == target,
        },
        "sign_discrepancy": (
            "the recursion r3 = r3*y2 - y1*r3 does not hold; the correct form is "
            "r3 = r3*y2 + y1*r3 modulo (r1, r2)"
            if minus_variant != target
            else None
        ),
        "membership": [
            {
                "relation": m.target,
                "n": m.n,
                "cofactor_terms": len(m.cofactors),
                "tail_min_length": m.tail.min_length() if m.tail else None,
                "exact": m.exact,
                "passed": m.passed,
            }
            for m in memberships
        ],
        "passed": id3_lhs == id3_rhs
        and id4_lhs == id4_rhs
        and plus_variant == target
        and all(m.passed for m in memberships),
    }
