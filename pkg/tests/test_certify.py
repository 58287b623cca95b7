import pytest

from ncgs.certify import (
    CERTIFIED,
    INCONCLUSIVE,
    REFUTED,
    ParafreeFamily,
    PreconditionError,
    build_parafree_presentation,
    certify_residual_nilpotence,
    check_acyclic,
    generate_family_example,
    self_overlap_witness,
)
from ncgs.parse import parse_poly
from ncgs.presentation import Presentation
from ncgs.quotients import paraequivalence_check
from ncgs.words import Alphabet, OrderError, OrderSpec

XY = Alphabet(("x1", "x2", "y1", "y2"))
X, Y = ("x1", "x2"), ("y1", "y2")


@pytest.mark.parametrize(
    "text, expected",
    [("x1*x2 + y1^2", True), ("y1", False), ("x1*y1 + y2*y1", True), ("1 + x1", False), ("x2", True)],
)
def test_check_acyclic(text, expected):
    assert check_acyclic(parse_poly(text, XY), X, Y) is expected


def test_acyclic_invariant_under_x_terms():
    base = parse_poly("y1*y2 - y1", XY)
    for extra in ("x1", "y1*x2", "3*x2*y2*x1"):
        assert check_acyclic(base + parse_poly(extra, XY), X, Y) == check_acyclic(base, X, Y)


def test_main_certified(main_pres):
    cert = certify_residual_nilpotence(main_pres, 30)
    assert cert.verdict == CERTIFIED
    assert {m.max_term for m in cert.leading} == {"x1*x2", "x2*x1", "x1*y2", "x2*y1"}
    assert all(m.equal for m in cert.leading)


def test_kxy_certified(kxy):
    assert certify_residual_nilpotence(kxy).verdict == CERTIFIED


def test_leading_mismatch_refutes_hypothesis():
    A = Alphabet(("x1", "x2"))
    p = Presentation(A, [parse_poly("x1*x2 - x1", A)], OrderSpec.deglex(A), OrderSpec.theta_lex(A, (1, 1)))
    cert = certify_residual_nilpotence(p)
    assert cert.verdict == REFUTED
    assert "does not show" in cert.to_dict()["note"]


def test_non_n_order_rejected(kxy):
    p = Presentation(kxy.alphabet, kxy.relations, kxy.order_max, OrderSpec.lex(kxy.alphabet))
    with pytest.raises(OrderError):
        certify_residual_nilpotence(p)


def test_small_bound_is_inconclusive_not_certified(main_pres):
    # every series composition stops at the bound before reaching zero
    cert = certify_residual_nilpotence(main_pres, weight_bound=3)
    assert cert.verdict == INCONCLUSIVE
    assert all(c.result.status.value == "truncated-at-bound" for c in cert.series.checks)


def test_para_example_family():
    fam = ParafreeFamily.from_strings(("x1", "x2"), ("y",), {"y": "x1*x2 + y^2"}, (3,))
    p = build_parafree_presentation(fam)
    assert p.relations == [parse_poly("y - x1*x2 - y^2", fam.alphabet)]
    p.order_min = OrderSpec.theta_lex(p.alphabet, (1, 1, 3))
    assert certify_residual_nilpotence(p).verdict == CERTIFIED
    assert paraequivalence_check(p, 2, 5).passed


def test_main_family_before_r3_r4():
    fam = ParafreeFamily.from_strings(X, Y, {"y1": "x1*x2 + y1^2", "y2": "x2*x1 + y2^2"}, (3, 3))
    p = build_parafree_presentation(fam)
    assert [str(r) for r in p.relations] == ["y1 - x1*x2 - y1^2", "y2 - x2*x1 - y2^2"]
    assert p.meta["parafree_rank"] == 2


def test_empty_family_is_free():
    fam = ParafreeFamily.from_strings(X, (), {})
    p = build_parafree_presentation(fam)
    assert p.relations == []
    assert paraequivalence_check(p, 2, 4).passed


def test_non_acyclic_member_rejected():
    fam = ParafreeFamily.from_strings(("x1",), ("y1",), {"y1": "y1 + x1"})
    with pytest.raises(PreconditionError):
        build_parafree_presentation(fam)


def test_generate_family_valid():
    p, cert = generate_family_example(2, 1, "x1*x2", "y1^2")
    assert cert.verdict == CERTIFIED
    p2, cert2 = generate_family_example(2, 1, "x1*x2", "y1 - y1^2")
    assert cert2.verdict == CERTIFIED
    assert [str(r) for r in p2.relations] == ["-y1 + x1*x2 + y1^2"]


def test_generate_family_monomial():
    _, cert = generate_family_example(3, 0, "x1*x2*x3", "0")
    assert cert.verdict == CERTIFIED


def test_generate_family_overlap_witness():
    with pytest.raises(PreconditionError) as info:
        generate_family_example(1, 1, "x1*x1", "y1*y1")
    assert info.value.witness == "x1"


@pytest.mark.parametrize(
    "u, phi, weights",
    [("x1*x2", "y1", (2,)), ("x1*x2", "x1", None), ("x1*x2", "y1^3", None), ("x1*x2", "y1 + 1", None)],
)
def test_generate_family_preconditions(u, phi, weights):
    with pytest.raises(PreconditionError):
        generate_family_example(2, 1, u, phi, weights)


def test_self_overlap_witness():
    assert self_overlap_witness((0, 1, 0)) == (0,)
    assert self_overlap_witness((0, 1, 1, 0, 1)) == (0, 1)
    assert self_overlap_witness((0, 1, 1)) is None


@pytest.mark.parametrize(
    "u, phi", [("x1*x2", "y1^2"), ("x1*x2*x2", "y1^2 - y1^3"), ("x2*x1", "y1*y1"), ("x1*x1*x2", "y1")]
)
def test_family_certifies_several_instances(u, phi):
    _, cert = generate_family_example(2, 1, u, phi)
    assert cert.verdict == CERTIFIED
