from itertools import product

import pytest

from ncgs.words import (
    count_words,
    Alphabet,
    OrderError,
    OrderSpec,
    check_admissible,
    enumerate_words,
    find_factor_occurrences,
    order_from_dict,
)


@pytest.fixture
def ab4():
    return Alphabet(("x1", "x2", "y1", "y2"), (1, 1, 3, 3))


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(("x", "x"))
    with pytest.raises(ValueError):
        Alphabet(("x",), (0,))
    with pytest.raises(ValueError):
        Alphabet(("1x",))


def test_compare_deglex_precedence():
    a = Alphabet(("x1", "x2"))
    o = OrderSpec.deglex(a)
    assert o.compare(a.word("x2"), a.word("x1")) == -1
    assert o.compare(a.word("x1"), a.word("x1")) == 0


def test_compare_theta_weight_first(ab4):
    o = OrderSpec.theta_lex(ab4, (1, 1, 3, 3), ["y1", "y2", "x1", "x2"])
    assert o.compare(ab4.word("x1", "x2"), ab4.word("y1")) == -1


def test_identity_is_least(ab4):
    for o in (OrderSpec.deglex(ab4), OrderSpec.lex(ab4), OrderSpec.theta_lex(ab4, (1, 1, 3, 3))):
        for w in enumerate_words(ab4, 3)[1:]:
            assert o.compare((), w) == -1


def test_compare_rejects_foreign_word():
    a = Alphabet(("x",))
    with pytest.raises(OrderError):
        OrderSpec.deglex(a).compare((0,), (3,))


def test_admissible_deglex_and_degenerate_theta():
    a = Alphabet(("x1", "x2"))
    assert check_admissible(OrderSpec.deglex(a), 4).passed
    assert check_admissible(OrderSpec.theta_lex(a, (1, 1)), 4).passed


def test_lex_not_admissible_with_witness():
    a = Alphabet(("x1", "x2"))
    o = OrderSpec.lex(a, ["x2", "x1"])
    rep = check_admissible(o, 3)
    assert not rep.passed
    # 1 < x1, yet multiplying on the right by x2 gives x2 > x1*x2
    assert ("translation", (), a.word("x1"), (), a.word("x2")) in rep.violations
    assert o.compare(a.word("x2"), a.word("x1", "x2")) == 1


def test_enumerate_by_length():
    a = Alphabet(("x1", "x2"))
    assert enumerate_words(a, 2) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
    assert enumerate_words(a, 0) == [()]


def test_enumerate_by_weight_matches_bruteforce(ab4):
    got = enumerate_words(ab4, 3, "by-weight")
    brute = [
        w
        for k in range(4)
        for w in product(range(4), repeat=k)
        if sum(ab4.weights[i] for i in w) <= 3
    ]
    assert sorted(got) == sorted(brute)
    assert len(got) == 17


def test_enumerate_cap():
    a = Alphabet(tuple(f"x{i}" for i in range(10)))
    with pytest.raises(ValueError):
        enumerate_words(a, 8)


def test_factor_occurrences():
    a = Alphabet(("x1", "x2", "y1", "y2"))
    w = a.word("x1", "x2", "x1")
    assert find_factor_occurrences(w, a.word("x1", "x2")) == [0]
    assert find_factor_occurrences(w, a.word("x2", "x1")) == [1]
    assert find_factor_occurrences(a.word("y1", "y2"), a.word("x1", "x2")) == []


def test_vector_weights_rejected_with_n_order_message():
    a = Alphabet(("x1", "x2"))
    with pytest.raises(OrderError, match="N-order"):
        order_from_dict(a, {"kind": "theta-lex", "weights": {"x1": [1, 0], "x2": [0, 1]}})


def test_unknown_kind_rejected():
    with pytest.raises(OrderError):
        OrderSpec(Alphabet(("x",)), "well-order")


def test_n_order_downsets_finite(ab4):
    o = OrderSpec.theta_lex(ab4, (1, 1, 3, 3), ["y1", "y2", "x1", "x2"])
    words = enumerate_words(ab4, 8, "by-weight")
    for w in words[:: max(1, len(words) // 40)]:
        below = [u for u in words if o.key(u) <= o.key(w)]
        expected = [
            u
            for u in words
            if o.theta(u) < o.theta(w) or (o.theta(u) == o.theta(w) and o.key(u)[1] <= o.key(w)[1])
        ]
        assert below == expected


def test_order_roundtrip(ab4):
    o = OrderSpec.theta_lex(ab4, (1, 1, 3, 3), ["y1", "y2", "x1", "x2"])
    assert order_from_dict(ab4, o.to_dict()) == o


def test_count_words_matches_enumeration(ab4):
    for bound in range(6):
        assert count_words(ab4.weights, bound) == len(enumerate_words(ab4, bound, "by-weight"))
