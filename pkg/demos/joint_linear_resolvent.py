"""Walkthrough: the joint resolvent of x^a + (x+1)^b.

Two linear polynomials, t - x and t - (x+1), share a single second-order
operator annihilating x^a + (x+1)^b for indeterminate exponents a, b.
We compute it twice (powersum formula and direct elimination), strip the
extraneous content factor, and finish with a numeric sanity check at
a = sqrt(7), b = pi.

Run:  python demos/joint_linear_resolvent.py
"""

from fractions import Fraction

import mpmath

from jointres import (
    QQ,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    ResolventTemplate,
    XPoly,
    XRat,
    apply_lodo,
    eliminate_resolvent,
    equal_up_to_unit,
    numeric_residual,
    powersum_resolvent,
)


def rq(*ints):
    return XRat(XPoly.from_ints(QQ, ints))


def main():
    Pz = MonicPoly("z", (rq(0, -1), rq(1)))    # t - x
    Pv = MonicPoly("v", (rq(-1, -1), rq(1)))   # t - (x+1)
    problem = ProblemSpec(
        QQ,
        (Pz, Pv),
        (PseudoTerm(rq(1), (("z", "a"),)), PseudoTerm(rq(1), (("v", "b"),))),
        ("a", "b"),
    )

    # The shape of the answer: which alpha-monomials may sit on which D^m.
    template = ResolventTemplate.from_pairs([
        (2, {"a": 1}), (2, {"b": 1}),
        (1, {"a": 1}), (1, {"a": 2}), (1, {"b": 1}), (1, {"b": 2}),
        (0, {"a": 2, "b": 1}), (0, {"a": 1, "b": 2}), (0, {"a": 1, "b": 1}),
    ])

    specs = [{"a": i, "b": j} for i in (1, 2) for j in (1, 2, 3, 4)]
    print("specializations:", [(s["a"], s["b"]) for s in specs])

    res = powersum_resolvent(problem, template, specs)
    print("\nextraneous content factor:")
    print("  ", res.content)
    print("\ncoefficient-functions (template order):")
    for (m, mono), r in zip(template.entries, res.primitive_r):
        tag = "*".join(f"{s}^{e}" for s, e in mono) or "1"
        print(f"   D^{m} * {tag}: {r}")

    operator = res.to_lodo(QQ)
    print("\nsymbolic annihilation check:", apply_lodo(operator, problem).is_zero())

    oracle = eliminate_resolvent(problem, [0, 1, 2])
    print("matches the elimination oracle up to a unit:",
          equal_up_to_unit(operator, oracle))

    with mpmath.workdps(40):
        subs = {"a": mpmath.sqrt(7), "b": mpmath.pi}
        for x0 in (Fraction(1, 2), Fraction(1), Fraction(2)):
            r = numeric_residual(operator, subs, problem, x0, precision=30)
            print(f"relative residual at x0 = {x0}: {r:.3e}")


if __name__ == "__main__":
    main()
