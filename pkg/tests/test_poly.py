from fractions import Fraction

import pytest

from ncgs.fields import QQ, PrimeField
from ncgs.parse import parse_poly
from ncgs.poly import Poly, PolyError, truncate
from ncgs.words import Alphabet, OrderSpec


@pytest.fixture
def A():
    return Alphabet(("x1", "x2", "y1", "y2"), (1, 1, 3, 3))


def P(text, A, field=QQ):
    return parse_poly(text, A, field)


def test_add_cancels(A):
    assert P("x1*x2 + y1^2", A) + P("-y1^2", A) == P("x1*x2", A)


def test_mul_concatenates(A):
    assert P("x1", A) * P("x2*x1", A) == P("x1*x2*x1", A)


def test_r3_expansion(A):
    r3, y1, y2 = P("x1*y2 - y1*x1", A), P("y1", A), P("y2", A)
    assert r3 * y2 + y1 * r3 == P("x1*y2^2 - y1^2*x1", A)


def test_no_zero_coefficients(A):
    f = P("x1 - x1 + 0*y2", A)
    assert f.terms == {}
    assert not f


def test_alphabet_and_field_mismatch(A):
    B = Alphabet(("a",))
    with pytest.raises(PolyError):
        P("x1", A) + Poly.letter(B, "a")
    with pytest.raises(PolyError):
        P("x1", A) + P("x1", A, PrimeField(5))


def test_max_min_terms(A):
    r1 = P("x1*x2 + y1^2 - y1", A)
    assert r1.max_term(OrderSpec.deglex(A)) == ((0, 1), 1)
    theta = OrderSpec.theta_lex(A, (1, 1, 3, 3), ["y1", "y2", "x1", "x2"])
    assert r1.min_term(theta) == ((0, 1), 1)
    B = Alphabet(("x1", "x2", "x3"), (1, 1, 3))
    r = P("x3^2 - x3 + x1*x2", B)
    assert r.min_term(OrderSpec.theta_lex(B, (1, 1, 3))) == ((0, 1), 1)


def test_max_term_of_zero(A):
    with pytest.raises(PolyError):
        Poly.zero(A).max_term(OrderSpec.deglex(A))


def test_make_monic(A):
    o = OrderSpec.deglex(A)
    assert P("2*x1*x2 + y1", A).make_monic(o, "max") == P("x1*x2 + 1/2*y1", A)
    theta = OrderSpec.theta_lex(A, (1, 1, 3, 3), ["y1", "y2", "x1", "x2"])
    r3 = P("x1*y2 - y1*x1", A)
    assert (-r3).make_monic(theta, "min") == r3
    assert r3.make_monic(o, "max") == r3
    with pytest.raises(PolyError):
        Poly.zero(A).make_monic(o)


def test_truncate(A):
    assert truncate(P("x1 + x1*x2*x1", A), 3).poly == P("x1", A)
    r1 = P("x1*x2 + y1^2 - y1", A)
    assert truncate(r1, 3, "by-weight", A.weights).poly == P("x1*x2", A)
    assert not truncate(Poly.zero(A), 4)


def test_truncated_product_retruncates(A):
    f, g = truncate(P("x1 + y1", A), 3), truncate(P("x2 - x1*x1", A), 3)
    assert (f * g).poly == P("x1*x2 + y1*x2", A)


def test_prime_field_arithmetic(A):
    F = PrimeField(5)
    f = P("3*x1", A, F)
    assert (f + f).terms == {(0,): 1}
    assert P("1/2*x1", A, F) == P("3*x1", A, F)


def test_rational_coefficients_exact(A):
    f = P("1/3*x1", A) * 3
    assert f == P("x1", A)
    assert isinstance(f.coeff((0,)), Fraction)


def test_power_and_str(A):
    assert P("(x1 + y1)^2", A) == P("x1*x1 + x1*y1 + y1*x1 + y1*y1", A)
    assert str(P("x1*x2 + y1^2 - y1", A)) == "-y1 + x1*x2 + y1^2"
