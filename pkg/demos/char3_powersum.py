"""Powersum formula in characteristic 3.

P = t^3 + x*t - 1 over F_3. Its powersums collapse hard: p_1 = 0,
p_2 = x, p_3 = 0. The formula then returns the zero operator for the
specializations a = 1 and a = 3, and a genuine resolvent x*D + a for
a = 2 -- the retry-with-other-integers loop in miniature.
"""

from jointres import (
    GF,
    IdenticallyZero,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    XPoly,
    XRat,
    powersum_resolvent,
    powersums_from_elementary,
    thm83_template,
)

F3 = GF(3)


def rp(*ints):
    return XRat(XPoly.from_ints(F3, ints))


def main():
    P = MonicPoly("u", (rp(-1), rp(0, 1), rp(0), rp(1)))
    print("powersums of t^3 + x t - 1 over F_3:")
    for k, p in enumerate(powersums_from_elementary(P, 4)):
        print(f"   p_{k} =", p)

    problem = ProblemSpec(F3, (P,), (PseudoTerm(rp(1), (("u", "a"),)),), ("a",))
    template = thm83_template(1, "a")

    for a in (1, 2, 3, 4):
        res = powersum_resolvent(problem, template, [{"a": a}])
        if isinstance(res, IdenticallyZero):
            print(f"a = {a}: identically zero ({res.hint})")
        else:
            print(f"a = {a}: content {res.content}, primitive {list(res.primitive_r)}")


if __name__ == "__main__":
    main()
