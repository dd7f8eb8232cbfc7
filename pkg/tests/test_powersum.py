import pytest

from jointres import (
    GF,
    QQ,
    IdenticallyZero,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    Resolvent,
    ResolventTemplate,
    XPoly,
    XRat,
    apply_lodo,
    build_specialization_matrix,
    default_specializations,
    powersum_resolvent,
    thm83_template,
)
from jointres.errors import DimensionMismatch, ValidationError

from conftest import rq


def test_template_validation():
    with pytest.raises(ValidationError):
        ResolventTemplate.from_pairs([(1, {})])  # too small
    with pytest.raises(ValidationError):
        ResolventTemplate.from_pairs([(1, {}), (1, {})])  # duplicate
    with pytest.raises(ValidationError):
        ResolventTemplate.from_pairs([(-1, {}), (0, {"a": 1})])


def test_thm83_shapes():
    t1 = thm83_template(1, "a")
    assert t1.entries == ((1, ()), (0, (("a", 1),)))
    t2 = thm83_template(2, "a")
    assert t2.psi == 5
    assert t2.entries == (
        (2, ()),
        (1, ()),
        (1, (("a", 1),)),
        (0, (("a", 1),)),
        (0, (("a", 2),)),
    )
    with pytest.raises(ValidationError):
        thm83_template(0, "a")


def test_default_specializations_grid(joint_linear_template, joint_linear_problem):
    specs = default_specializations(joint_linear_template, joint_linear_problem)
    assert specs == [{"a": i, "b": j} for i in (1, 2) for j in (1, 2, 3, 4)]


def test_default_specializations_single_symbol():
    tpl = thm83_template(2, "a")
    specs = default_specializations(tpl)
    assert specs == [{"a": 1}, {"a": 2}, {"a": 3}, {"a": 4}]


def test_default_specializations_explicit():
    tpl = thm83_template(1, "a")
    out = default_specializations(tpl, strategy="explicit", explicit=[{"a": 5}])
    assert out == [{"a": 5}]
    with pytest.raises(DimensionMismatch):
        default_specializations(tpl, strategy="explicit", explicit=[])


def test_matrix_shape_checks(joint_linear_problem, joint_linear_template):
    with pytest.raises(DimensionMismatch):
        build_specialization_matrix(
            joint_linear_problem, joint_linear_template, [{"a": 1, "b": 1}]
        )
    dup = [{"a": 1, "b": 1}] * 8
    with pytest.raises(ValidationError):
        build_specialization_matrix(joint_linear_problem, joint_linear_template, dup)


def test_specialization_matrix_row():
    # Char 3, P = t^3 + x t - 1, alpha = 2:
    # row = [D p_2, 2 p_2] = [1, 2x] since p_2 = x and D x = 1
    F = GF(3)

    def rp(*ints):
        return XRat(XPoly.from_ints(F, ints))

    P = MonicPoly("u", (rp(-1), rp(0, 1), rp(0), rp(1)))
    prob = ProblemSpec(F, (P,), (PseudoTerm(rp(1), (("u", "a"),)),), ("a",))
    tpl = thm83_template(1, "a")
    M = build_specialization_matrix(prob, tpl, [{"a": 2}])
    assert M == [[rp(1), rp(0, 2)]]


def test_powersum_resolvent_char3_outcomes():
    F = GF(3)

    def rp(*ints):
        return XRat(XPoly.from_ints(F, ints))

    P = MonicPoly("u", (rp(-1), rp(0, 1), rp(0), rp(1)))
    prob = ProblemSpec(F, (P,), (PseudoTerm(rp(1), (("u", "a"),)),), ("a",))
    tpl = thm83_template(1, "a")
    assert isinstance(powersum_resolvent(prob, tpl, [{"a": 1}]), IdenticallyZero)
    assert isinstance(powersum_resolvent(prob, tpl, [{"a": 3}]), IdenticallyZero)
    res = powersum_resolvent(prob, tpl, [{"a": 2}])
    assert isinstance(res, Resolvent)
    assert list(res.primitive_r) == [XPoly.from_ints(F, (0, 1)), XPoly.from_ints(F, (1,))]


def test_resolvent_to_lodo_annihilates():
    P = MonicPoly("z", (rq(0, -1), rq(1)))
    prob = ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("z", "a"),)),), ("a",))
    tpl = thm83_template(1, "a")
    res = powersum_resolvent(prob, tpl, [{"a": 2}])
    assert isinstance(res, Resolvent)
    assert apply_lodo(res.to_lodo(QQ), prob).is_zero()
    # content * primitive = raw on every entry
    for t, r in zip(res.raw_t, res.primitive_r):
        assert res.content * r == t
