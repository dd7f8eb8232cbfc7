"""Univariate polynomials and reduced rational functions in x over K.

The derivation D acts with Dx = 1 and kills every element of K.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import AllZero
from .fields import QQ

__all__ = ["XPoly", "XRat", "gcd_monic", "content_primitive"]


class XPoly:
    """Dense polynomial in x, coefficients ascending, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def const(cls, field, scalar):
        return cls(field, (scalar,))

    @classmethod
    def from_int(cls, field, n):
        return cls(field, (field.from_int(n),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, tuple(field.from_int(n) for n in ints))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self):
        return self.coeffs[-1]

    def zero_like(self):
        return XPoly.zero(self.field)

    def one_like(self):
        return XPoly.const(self.field, self.field.one)

    def __eq__(self, other):
        return (
            isinstance(other, XPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return XPoly(f, out)

    def __neg__(self):
        f = self.field
        return XPoly(f, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, XRat):
            return XRat(self, None) * other
        if not isinstance(other, XPoly):
            other = XPoly.const(f, other)
        if self.is_zero() or other.is_zero():
            return XPoly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return XPoly(f, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self.one_like()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, scalar):
        f = self.field
        return XPoly(f, tuple(f.mul(c, scalar) for c in self.coeffs))

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        inv_lead = f.inv(other.lead)
        q = [f.zero] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if f.is_zero(c):
                continue
            factor = f.mul(c, inv_lead)
            q[i - dd] = factor
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, b))
        return XPoly(f, q), XPoly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def derive(self):
        f = self.field
        return XPoly(
            f,
            tuple(f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs) if i),
        )

    def eval(self, point):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, point), c)
        return acc

    def __repr__(self):
        if self.is_zero():
            return "XPoly(0)"
        parts = [
            f"{self.field.fmt(c)}*x^{i}"
            for i, c in enumerate(self.coeffs)
            if not self.field.is_zero(c)
        ]
        return "XPoly(" + " + ".join(parts) + ")"


def gcd_monic(a: XPoly, b: XPoly) -> XPoly:
    """Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def lcm_monic(a: XPoly, b: XPoly) -> XPoly:
    if a.is_zero() or b.is_zero():
        return XPoly.zero(a.field)
    return (a * b).divexact(gcd_monic(a, b)).monic()


class XRat:
    """Reduced rational function num/den with den monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly | None = None):
        field = num.field
        if den is None:
            den = XPoly.const(field, field.one)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = XPoly.const(field, field.one)
        else:
            g = gcd_monic(num, den)
            if g.degree > 0:
                num, den = num.divexact(g), den.divexact(g)
            inv_lead = field.inv(den.lead)
            num, den = num.scale(inv_lead), den.scale(inv_lead)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, field):
        return cls(XPoly.zero(field))

    @classmethod
    def one(cls, field):
        return cls(XPoly.const(field, field.one))

    @classmethod
    def from_int(cls, field, n):
        return cls(XPoly.from_int(field, n))

    @classmethod
    def const(cls, field, scalar):
        return cls(XPoly.const(field, scalar))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, XPoly):
            other = XRat(other)
        return (
            isinstance(other, XRat)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, XPoly):
            other = XRat(other)
        return XRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return XRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XPoly):
            other = XRat(other)
        return XRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, XPoly):
            other = XRat(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return XRat(self.num * other.den, self.den * other.num)

    def inv(self):
        return XRat.one(self.field) / self

    def derive(self):
        # quotient rule; den stays squared before re-reduction
        return XRat(
            self.num.derive() * self.den - self.num * self.den.derive(),
            self.den * self.den,
        )

    def eval(self, point):
        d = self.den.eval(point)
        if self.field.is_zero(d):
            raise ZeroDivisionError("pole at sample point")
        return self.field.div(self.num.eval(point), d)

    def __repr__(self):
        if self.is_poly():
            return f"XRat({self.num!r})"
        return f"XRat({self.num!r} / {self.den!r})"


def derive(f):
    """D with Dx = 1, on XPoly or XRat."""
    return f.derive()


def _rational_content(polys):
    """Positive rational c with polys/c collectively having coprime
    integer coefficients (field Q only)."""
    nums, dens = 0, 1
    for p in polys:
        for c in p.coeffs:
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
    return Fraction(nums, dens)


def content_primitive(ts):
    """Split ts into (content, primitives) with content * prim[k] = ts[k].

    Over Q the primitives collectively have coprime integer coefficients and
    the first nonzero primitive has positive leading coefficient; over F_p
    the first nonzero primitive is monic.
    """
    ts = list(ts)
    nonzero = [t for t in ts if not t.is_zero()]
    if not nonzero:
        raise AllZero("all inputs are zero")
    field = ts[0].field
    g = nonzero[0]
    for t in nonzero[1:]:
        g = gcd_monic(g, t)
    qs = [t.divexact(g) if not t.is_zero() else t for t in ts]
    first = next(q for q in qs if not q.is_zero())
    if field == QQ:
        c = _rational_content(qs)
        if first.lead < 0:
            c = -c
        unit = XPoly.const(field, c)
    else:
        unit = XPoly.const(field, first.lead)
    prims = [q.divexact(unit) for q in qs]
    return g * unit, prims
