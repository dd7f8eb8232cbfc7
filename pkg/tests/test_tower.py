from fractions import Fraction

import pytest

from jointres import (
    GF,
    QQ,
    AlphaPoly,
    Lodo,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    XPoly,
    XRat,
    apply_lodo,
    derivative_table,
    lodo_derive,
    numeric_residual,
    root_derivative,
)
from jointres.errors import (
    NotInvertible,
    PoleAtSample,
    UnsupportedDegree,
    ValidationError,
)
from jointres.tower import TPoly, invert_mod

from conftest import rq


def test_monic_validation():
    with pytest.raises(ValidationError):
        MonicPoly("p", (rq(1),))  # degree 0
    with pytest.raises(ValidationError):
        MonicPoly("p", (rq(1), rq(2)))  # lead != 1


def test_problem_validation():
    P = MonicPoly("u", (rq(-1), rq(1)))
    with pytest.raises(ValidationError):
        ProblemSpec(QQ, (P, P), (), ())  # duplicate ids
    with pytest.raises(ValidationError):
        # zero constant term: root not invertible
        Pz = MonicPoly("w", (rq(0), rq(1)))
        ProblemSpec(QQ, (Pz,), (PseudoTerm(rq(1), (("w", "a"),)),), ("a",))
    with pytest.raises(ValidationError):
        ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("u", "a"),)),), ("a", "b"))


def test_invert_mod_and_root_derivative():
    # P = t^2 - x: u = sqrt(x), Du = 1/(2u) = u/(2x)
    P = MonicPoly("u", (rq(0, -1), rq(0), rq(1)))
    du = root_derivative(P)
    assert du.coeff(0).is_zero()
    assert du.coeff(1) == XRat(XPoly.from_int(QQ, 1), XPoly.from_ints(QQ, (0, 2)))
    t = TPoly.t(QQ)
    prod = (t * du) % P.tpoly()  # u * Du = 1/2
    assert prod.coeff(0) == rq(Fraction(1, 2))


def test_invert_mod_failure():
    # t^2 - x^2 factors; t - x is a zero divisor
    P = MonicPoly("u", (rq(0, 0, -1), rq(0), rq(1)))
    bad = TPoly(QQ, (rq(0, -1), rq(1)))
    with pytest.raises(NotInvertible):
        invert_mod(bad, P)


def test_derivative_table_sqrt():
    # y = u^a, u = sqrt(x): D y = (a/(2x)) * u^a
    P = MonicPoly("u", (rq(0, -1), rq(0), rq(1)))
    prob = ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("u", "a"),)),), ("a",))
    table = derivative_table(prob, [0, 1])
    d1 = table[1].entries
    assert set(d1) == {(0, (0,))}
    expected = AlphaPoly.symbol(QQ, "a") * XRat(
        XPoly.from_int(QQ, 1), XPoly.from_ints(QQ, (0, 2))
    )
    assert d1[(0, (0,))] == expected


def test_apply_lodo_annihilates_simple_power():
    # y = z^a with z = x: x D y = a y, so x*D - a annihilates
    P = MonicPoly("z", (rq(0, -1), rq(1)))
    prob = ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("z", "a"),)),), ("a",))
    R = Lodo.from_dict(QQ, {
        1: AlphaPoly.const(XRat(XPoly.x(QQ))),
        0: -AlphaPoly.symbol(QQ, "a"),
    })
    assert apply_lodo(R, prob).is_zero()


def test_lodo_derive():
    x = XRat(XPoly.x(QQ))
    R = Lodo.from_dict(QQ, {1: AlphaPoly.const(x)})
    dR = lodo_derive(R)  # D(x D) = 1*D + x*D^2
    assert dR.coeff(1) == AlphaPoly.from_int(QQ, 1)
    assert dR.coeff(2) == AlphaPoly.const(x)


def test_numeric_residual_annihilator_is_tiny():
    P = MonicPoly("z", (rq(0, -1), rq(1)))
    prob = ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("z", "a"),)),), ("a",))
    R = Lodo.from_dict(QQ, {
        1: AlphaPoly.const(XRat(XPoly.x(QQ))),
        0: -AlphaPoly.symbol(QQ, "a"),
    })
    res = numeric_residual(R, {"a": "2.5"}, prob, Fraction(3, 2), precision=30)
    assert res < 1e-25
    # and a wrong operator leaves a visible residual
    W = Lodo.from_dict(QQ, {
        1: AlphaPoly.const(XRat(XPoly.x(QQ))),
        0: -AlphaPoly.symbol(QQ, "a") - AlphaPoly.from_int(QQ, 1),
    })
    assert numeric_residual(W, {"a": "2.5"}, prob, Fraction(3, 2)) > 1e-3


def test_numeric_residual_guards():
    P2 = MonicPoly("u", (rq(0, -1), rq(0), rq(1)))
    prob2 = ProblemSpec(QQ, (P2,), (PseudoTerm(rq(1), (("u", "a"),)),), ("a",))
    R = Lodo.from_dict(QQ, {0: AlphaPoly.from_int(QQ, 1), 1: AlphaPoly.from_int(QQ, 1)})
    with pytest.raises(UnsupportedDegree):
        numeric_residual(R, {"a": "1"}, prob2, Fraction(2))

    P = MonicPoly("z", (rq(0, -1), rq(1)))
    prob = ProblemSpec(QQ, (P,), (PseudoTerm(rq(1), (("z", "a"),)),), ("a",))
    with pytest.raises(ValidationError):
        numeric_residual(R, {}, prob, Fraction(2))
    with pytest.raises(PoleAtSample):
        numeric_residual(R, {"a": "1"}, prob, Fraction(0))

    Fp = GF(3)
    Pp = MonicPoly("z", (XRat(XPoly.from_ints(Fp, (2,))), XRat(XPoly.from_ints(Fp, (1,)))))
    probp = ProblemSpec(Fp, (Pp,), (PseudoTerm(XRat(XPoly.from_ints(Fp, (1,))), (("z", "a"),)),), ("a",))
    Rp = Lodo.from_dict(Fp, {0: AlphaPoly.from_int(Fp, 1), 1: AlphaPoly.from_int(Fp, 1)})
    with pytest.raises(UnsupportedDegree):
        numeric_residual(Rp, {"a": "1"}, probp, Fraction(2))
