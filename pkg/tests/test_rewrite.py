import pytest

from ncgs.linalg import Echelon
from ncgs.poly import Poly
from ncgs.rewrite import (
    CapExceeded,
    RewriteSystem,
    Status,
    reduce_max,
    reduce_min,
)
from ncgs.words import OrderError, OrderSpec, enumerate_words


@pytest.fixture(scope="module")
def systems(main_pres):
    p = main_pres
    return (
        RewriteSystem(p.relations, p.order_max, "max"),
        RewriteSystem(p.relations, p.order_min, "min"),
    )


def test_reduce_max_one_step(main_pres, systems):
    res = reduce_max(main_pres.poly("x1*x2*x1"), systems[0], trace=True)
    assert res.remainder == main_pres.poly("-y1^2*x1 + y1*x1")
    assert res.status is Status.NORMAL_FORM
    assert res.verify(main_pres.poly("x1*x2*x1"), systems[0])


def test_reduce_max_relation_and_normal_word(main_pres, systems):
    r1 = main_pres.relations[0]
    assert reduce_max(r1, RewriteSystem([r1], main_pres.order_max)).status is Status.REDUCED_TO_ZERO
    w = main_pres.poly("y1*y2")
    assert reduce_max(w, systems[0]).remainder == w


def test_reduce_min_hand_trace(main_pres, systems):
    r1, r2, r3, _ = main_pres.relations
    x1 = main_pres.letter("x1")
    f = r1 * x1 - x1 * r2
    res = reduce_min(f, systems[1], 30, trace=True)
    assert res.status is Status.REDUCED_TO_ZERO
    A = main_pres.alphabet
    assert [(s.rule, A.format(s.left), A.format(s.right)) for s in res.trace] == [
        (2, "1", "1"),
        (2, "1", "y2"),
        (2, "y1", "1"),
    ]
    assert res.verify(f, systems[1])


def test_reduce_min_irreducible(exrn):
    sys = RewriteSystem(exrn.relations, exrn.order_min, "min")
    res = reduce_min(exrn.poly("x3"), sys, 10)
    assert res.status is Status.IRREDUCIBLE_MIN_TERM
    assert res.stop_word == (2,)


def test_reduce_min_zero_and_truncation(exrn):
    sys = RewriteSystem(exrn.relations, exrn.order_min, "min")
    assert reduce_min(Poly.zero(exrn.alphabet), sys, 5).status is Status.REDUCED_TO_ZERO
    # x1*x2 -> x3 - x3^2 pushes weight to 3 and beyond
    res = reduce_min(exrn.poly("x1*x2"), sys, 3)
    assert res.status is Status.TRUNCATED_AT_BOUND


def test_weight_bound_cap(exrn):
    sys = RewriteSystem(exrn.relations, exrn.order_min, "min")
    with pytest.raises(CapExceeded):
        reduce_min(exrn.poly("x1"), sys, 10**6)


def test_min_mode_needs_n_order(main_pres):
    lex = OrderSpec.lex(main_pres.alphabet)
    with pytest.raises(OrderError):
        RewriteSystem(main_pres.relations, lex, "min")
    with pytest.raises(OrderError):
        RewriteSystem(main_pres.relations, lex, "max")


def test_rule_choice_leftmost_lowest_index(main_pres, systems):
    # x1*x2*x1 contains x1*x2 at 0 and x2*x1 at 1: the leftmost wins
    res = reduce_max(main_pres.poly("x1*x2*x1"), systems[0], trace=True)
    assert (res.trace[0].rule, res.trace[0].position) == (0, 0)


def test_cofactor_soundness_on_all_short_words(main_pres, systems):
    for w in enumerate_words(main_pres.alphabet, 4):
        f = Poly.word(main_pres.alphabet, w)
        res = reduce_max(f, systems[0], trace=True)
        assert res.verify(f, systems[0])


def test_normal_forms_match_linear_algebra(main_pres, systems):
    """Independent oracle: reduce against the echelon form of span{u r v}.

    With pivots taken at deg-lex largest words, the echelon remainder of a
    word is the unique representative supported on non-pivot words.  When
    the pivots are exactly the words containing a leading word, it must
    equal the rewriting normal form.
    """
    p = main_pres
    A = p.alphabet
    order = p.order_max
    ech = Echelon(order.key)
    words = enumerate_words(A, 4)
    for r in p.relations:
        for u in words:
            for v in words:
                if len(u) + len(v) <= 2:
                    ech.add(dict(r.sandwich(u, v).terms))
    leads = {r.max_term(order)[0] for r in p.relations}
    reducible = {w for w in words if any(w[i : i + 2] in leads for i in range(len(w) - 1))}
    assert set(ech.rows) == reducible
    for w in words:
        f = Poly.word(A, w)
        want = Poly(A, ech.reduce(dict(f.terms)))
        assert reduce_max(f, systems[0]).remainder == want
