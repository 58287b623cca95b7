from itertools import product

import pytest

from ncgs.parse import parse_poly
from ncgs.presentation import Presentation, PresentationError
from ncgs.quotients import (
    build_truncated_quotient,
    filtration_dims,
    gr1_dependence,
    hopf_h2_graded,
    paraequivalence_check,
    quotient_dim_bruteforce,
    quotient_dims,
)
from ncgs.words import Alphabet


def free(*names):
    return Presentation(Alphabet(names), [])


def test_main_quotient_small(main_pres):
    q = build_truncated_quotient(main_pres, 2)
    assert q.dim == 3
    assert q.augmentation(q.element("1 + x1")) == 1


def test_free_and_kxy_dims(kxy):
    assert build_truncated_quotient(free("x1", "x2"), 3).dim == 7
    assert build_truncated_quotient(kxy, 3).dim == 6


def test_filtration_dims(main_pres, kxy):
    assert filtration_dims(build_truncated_quotient(main_pres, 5)) == [1, 2, 4, 8, 16]
    assert filtration_dims(build_truncated_quotient(kxy, 3)) == [1, 2, 3]
    assert filtration_dims(build_truncated_quotient(free("x"), 3)) == [1, 1, 1]


def test_paraequivalence(main_pres, exrn, kxy):
    assert paraequivalence_check(main_pres, 2, 6).passed
    assert paraequivalence_check(exrn, 2, 5).passed
    table = paraequivalence_check(kxy, 2, 3)
    assert not table.passed
    assert table.gr_dims[2] == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dims_match_bruteforce(main_pres, kxy, exrn, n):
    for p in (main_pres, kxy, exrn):
        assert build_truncated_quotient(p, n).dim == quotient_dim_bruteforce(p, n)


def test_dims_monotone_and_sum(main_pres):
    dims, gr = quotient_dims(main_pres, 5)
    assert dims == sorted(dims)
    assert dims == [sum(gr[:m]) for m in range(1, 6)]


def test_multiplication_associative(main_pres):
    q = build_truncated_quotient(main_pres, 4)
    elems = [q.reduce(q.presentation.poly(q.presentation.alphabet.format(w))) for w in q.basis]
    for a, b, c in product(elems, repeat=3):
        assert q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c))


def test_hopf_kxy(kxy):
    assert [hopf_h2_graded(kxy, d) for d in (1, 2, 3, 4)] == [0, 1, 0, 0]


def test_hopf_free_vanishes():
    p = free("x1", "x2")
    assert all(hopf_h2_graded(p, d) == 0 for d in range(1, 7))


def test_hopf_weighted():
    # a relation of weight 3 contributes exactly in weight 3
    A = Alphabet(("x", "y"), (1, 2))
    p = Presentation(A, [parse_poly("x*y - y*x", A)])
    assert [hopf_h2_graded(p, d) for d in range(1, 6)] == [0, 0, 1, 0, 0]


def test_hopf_counts_redundant_relations_once():
    A = Alphabet(("x", "y"))
    p = Presentation(A, [parse_poly("x*y - y*x", A), parse_poly("2*x*y - 2*y*x", A)])
    assert hopf_h2_graded(p, 2) == 1


def test_hopf_rejects_inhomogeneous(main_pres):
    with pytest.raises(PresentationError):
        hopf_h2_graded(main_pres, 2)


def test_gr1_dependence():
    A = Alphabet(("x1", "x2", "x3", "x4"))
    p = Presentation(A, [parse_poly("x1*x2 + x3 + x4", A)])
    assert gr1_dependence(p, [parse_poly("x3", A), parse_poly("x4", A)]) == 1
    f = free("x1", "x2")
    assert gr1_dependence(f, [f.letter("x1"), f.letter("x2")]) == 2
    assert gr1_dependence(f, [parse_poly("0", f.alphabet)]) == 0
