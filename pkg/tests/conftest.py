import pytest

from jointres import (
    QQ,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    ResolventTemplate,
    XPoly,
    XRat,
)


def rq(*ints):
    return XRat(XPoly.from_ints(QQ, ints))


@pytest.fixture(scope="session")
def joint_linear_problem():
    """y = z^a + v^b with z a root of t - x and v a root of t - (x+1)."""
    Pz = MonicPoly("z", (rq(0, -1), rq(1)))
    Pv = MonicPoly("v", (rq(-1, -1), rq(1)))
    terms = (
        PseudoTerm(rq(1), (("z", "a"),)),
        PseudoTerm(rq(1), (("v", "b"),)),
    )
    return ProblemSpec(QQ, (Pz, Pv), terms, ("a", "b"))


@pytest.fixture(scope="session")
def joint_linear_template():
    return ResolventTemplate.from_pairs([
        (2, {"a": 1}),
        (2, {"b": 1}),
        (1, {"a": 1}),
        (1, {"a": 2}),
        (1, {"b": 1}),
        (1, {"b": 2}),
        (0, {"a": 2, "b": 1}),
        (0, {"a": 1, "b": 2}),
        (0, {"a": 1, "b": 1}),
    ])


@pytest.fixture(scope="session")
def joint_linear_expected_primitives():
    """Coefficient-functions of the known second-order joint resolvent."""
    x = XPoly.x(QQ)
    one = XPoly.from_int(QQ, 1)
    xp1 = x + one
    return [
        x * xp1 ** 2,
        -(xp1 * x ** 2),
        xp1 ** 2,
        -(xp1 ** 2),
        -(x ** 2),
        x ** 2,
        xp1,
        -x,
        -one,
    ]
