"""Randomized invariants over words, polynomials and rewriting."""

from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ncgs import Alphabet, OrderSpec, Poly, RewriteSystem, parse_poly, reduce_max, reduce_min, truncate
from ncgs.gsbases import find_compositions, overlaps

AB = Alphabet(("x1", "x2", "y1"), (1, 1, 3))
ORDERS = [
    OrderSpec.deglex(AB),
    OrderSpec.deglex(AB, ("y1", "x2", "x1")),
    OrderSpec.theta_lex(AB, (1, 1, 3)),
    OrderSpec.theta_lex(AB, (1, 1, 3), ("y1", "x2", "x1")),
    OrderSpec.theta_lex(AB, (2, 1, 1)),
]

words = st.lists(st.integers(0, 2), max_size=6).map(tuple)
orders = st.sampled_from(ORDERS)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)
polys = st.dictionaries(words, coeffs, max_size=5).map(lambda d: Poly(AB, d))
SLOW = settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@given(orders, words, words)
def test_order_is_total_and_antisymmetric(o, u, v):
    c = o.compare(u, v)
    assert c == -o.compare(v, u)
    assert (c == 0) == (u == v)


@given(orders, words, words, words)
def test_order_transitive(o, u, v, w):
    if o.compare(u, v) <= 0 and o.compare(v, w) <= 0:
        assert o.compare(u, w) <= 0


@given(orders, words, words, words, words)
def test_order_admissible(o, u, v, a, b):
    if u != v:
        assert o.compare(u, v) == o.compare(a + u + b, a + v + b)
    assert o.compare((), u) <= 0


@settings(deadline=None)
@given(orders, st.lists(st.integers(0, 2), max_size=3).map(tuple))
def test_n_order_downsets_finite(o, w):
    from itertools import product

    from ncgs.words import count_words

    # every word below w has theta weight at most theta(w)
    t = o.theta(w)
    below = [v for n in range(t + 1) for v in product(range(3), repeat=n) if o.compare(v, w) < 0]
    assert all(o.theta(v) <= t for v in below)
    assert len(below) < count_words(o.weights, t)


@settings(max_examples=1000, deadline=None)
@given(orders, polys, polys)
def test_max_and_min_terms_multiplicative(o, f, g):
    if not f or not g:
        return
    assert (f * g).max_term(o)[0] == f.max_term(o)[0] + g.max_term(o)[0]
    assert (f * g).min_term(o)[0] == f.min_term(o)[0] + g.min_term(o)[0]


def naive_mul(f, g):
    acc = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            acc[u + v] = acc.get(u + v, Fraction(0)) + a * b
    return {w: c for w, c in acc.items() if c}


@given(polys, polys, polys)
def test_ring_operations_match_naive_oracle(f, g, h):
    assert (f * g).terms == naive_mul(f, g)
    s = dict(f.terms)
    for w, c in g.terms.items():
        s[w] = s.get(w, 0) + c
    assert (f + g).terms == {w: c for w, c in s.items() if c}
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys, polys, st.integers(1, 8), st.sampled_from(["by-length", "by-weight"]))
def test_truncation_is_a_ring_homomorphism(f, g, n, mode):
    tf, tg = truncate(f, n, mode), truncate(g, n, mode)
    assert tf * tg == truncate(f * g, n, mode)
    assert tf + tg == truncate(f + g, n, mode)


@given(polys)
def test_parse_print_round_trip(f):
    assert parse_poly(str(f), AB) == f


# -- rewriting ------------------------------------------------------------------

RULE_POOL = [
    parse_poly(t, AB)
    for t in ["x1*x2 - y1", "x2*x1 - x1", "y1*x1 - x2*x2", "x1*x1*x1", "y1*y1 - x1*y1", "x2*y1 - x1"]
]
rule_sets = st.lists(st.sampled_from(range(len(RULE_POOL))), min_size=1, max_size=3, unique=True).map(
    lambda ix: [RULE_POOL[i] for i in ix]
)


@SLOW
@given(rule_sets, polys, orders)
def test_reduce_max_cofactors_and_idempotence(rules, f, o):
    sys_ = RewriteSystem(rules, o, "max")
    res = reduce_max(f, sys_, trace=True)
    assert res.verify(f, sys_)
    assert not any(sys_.index.reducible(w) for w in res.remainder.terms)
    assert reduce_max(res.remainder, sys_).remainder == res.remainder


@SLOW
@given(rule_sets, polys, st.integers(1, 12))
def test_reduce_min_cofactors_and_monotone_support(rules, f, bound):
    o = ORDERS[2]
    sys_ = RewriteSystem(rules, o, "min")
    res = reduce_min(f, sys_, bound, trace=True)
    assert res.verify(f, sys_)
    if res.remainder and f:
        assert o.compare(res.remainder.min_term(o)[0], f.min_term(o)[0]) >= 0


@given(words, words)
def test_overlaps_mirror_symmetry(a, b):
    assert overlaps(a, b) == overlaps(b[::-1], a[::-1])


@given(st.lists(words.filter(lambda w: len(w) >= 2), min_size=1, max_size=3, unique=True))
def test_monomial_compositions_mirror(ws):
    o = OrderSpec.deglex(AB)
    rules = [Poly.word(AB, w) for w in ws]
    mirror = [Poly.word(AB, w[::-1]) for w in ws]
    fwd = find_compositions(rules, o, "max")
    back = find_compositions(mirror, o, "max")

    def sig(cs, rev):
        out = []
        for c in cs:
            w = c.w[::-1] if rev else c.w
            pair = (c.right, c.left) if (rev and c.kind == "intersection") else (c.left, c.right)
            out.append((c.kind, w, pair))
        return sorted(out)

    assert sig(fwd, False) == sig(back, True)
