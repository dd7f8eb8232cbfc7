"""Sparse polynomials in the exponent symbols over K(x), and exact
determinants (cofactor and fraction-free) with signed maximal minors.

A monomial is a sorted tuple of (symbol, exponent) pairs with positive
exponents; the empty tuple is the constant monomial.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .polys import XRat

__all__ = [
    "AlphaPoly",
    "mono_mul",
    "mono_from_dict",
    "det_cofactor",
    "det_fraction_free",
    "signed_maximal_minors",
]

ONE_MONO = ()


def mono_from_dict(d):
    return tuple(sorted((s, e) for s, e in d.items() if e))


def mono_mul(a, b):
    out = dict(a)
    for s, e in b:
        out[s] = out.get(s, 0) + e
    return mono_from_dict(out)


def mono_div(a, b):
    """a / b, or None when not divisible."""
    out = dict(a)
    for s, e in b:
        r = out.get(s, 0) - e
        if r < 0:
            return None
        out[s] = r
    return mono_from_dict(out)


def mono_degree(m):
    return sum(e for _, e in m)


def _grlex_key(mono, symbols):
    return (mono_degree(mono), tuple(dict(mono).get(s, 0) for s in symbols))


class AlphaPoly:
    """Multivariate polynomial in exponent symbols with XRat coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def const(cls, coeff: XRat):
        return cls(coeff.field, {ONE_MONO: coeff})

    @classmethod
    def from_int(cls, field, n):
        return cls.const(XRat.from_int(field, n))

    @classmethod
    def symbol(cls, field, name, exp=1):
        return cls(field, {((name, exp),): XRat.one(field)})

    def zero_like(self):
        return AlphaPoly.zero(self.field)

    def one_like(self):
        return AlphaPoly.from_int(self.field, 1)

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or set(self.terms) == {ONE_MONO}

    def const_value(self):
        return self.terms.get(ONE_MONO, XRat.zero(self.field))

    def symbols(self):
        out = set()
        for m in self.terms:
            out.update(s for s, _ in m)
        return out

    def total_degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, AlphaPoly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __add__(self, other):
        if isinstance(other, XRat):
            other = AlphaPoly.const(other)
        out = dict(self.terms)
        zero = XRat.zero(self.field)
        for m, c in other.terms.items():
            out[m] = out.get(m, zero) + c
        return AlphaPoly(self.field, out)

    def __neg__(self):
        return AlphaPoly(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (XRat, int)):
            if isinstance(other, int):
                other = XRat.from_int(self.field, other)
            return AlphaPoly(
                self.field, {m: c * other for m, c in self.terms.items()}
            )
        out = {}
        zero = XRat.zero(self.field)
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, zero) + ca * cb
        return AlphaPoly(self.field, out)

    __rmul__ = __mul__

    def leading(self, symbols=None):
        """(monomial, coefficient) maximal in graded lex order."""
        if symbols is None:
            symbols = sorted(self.symbols())
        m = max(self.terms, key=lambda mono: _grlex_key(mono, symbols))
        return m, self.terms[m]

    def divexact(self, other):
        """Exact division; raises ArithmeticError when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero AlphaPoly")
        if other.is_const():
            inv = XRat.one(self.field) / other.const_value()
            return self * inv
        symbols = sorted(self.symbols() | other.symbols())
        lm, lc = other.leading(symbols)
        rem = self
        q = AlphaPoly.zero(self.field)
        while not rem.is_zero():
            rm, rc = rem.leading(symbols)
            m = mono_div(rm, lm)
            if m is None:
                raise ArithmeticError("inexact AlphaPoly division")
            piece = AlphaPoly(self.field, {m: rc / lc})
            q = q + piece
            rem = rem - piece * other
        return q

    def specialize(self, assignment) -> XRat:
        """Evaluate at integer values for every symbol appearing."""
        acc = XRat.zero(self.field)
        for m, c in self.terms.items():
            factor = 1
            for s, e in m:
                factor *= assignment[s] ** e
            acc = acc + c * XRat.from_int(self.field, factor)
        return acc

    def map_coeffs(self, fn):
        return AlphaPoly(self.field, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        if self.is_zero():
            return "AlphaPoly(0)"
        parts = []
        for m in sorted(self.terms):
            mono = "*".join(f"{s}^{e}" for s, e in m) or "1"
            parts.append(f"({self.terms[m]!r})*{mono}")
        return "AlphaPoly(" + " + ".join(parts) + ")"


def det_cofactor(M):
    """Determinant by first-row cofactor expansion. Entries need +,-,*."""
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in M[1:]]
        term = M[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return M[0][0].zero_like() if acc is None else acc


def _det_bareiss(M):
    n = len(M)
    A = [list(row) for row in M]
    one = A[0][0].one_like()
    zero = A[0][0].zero_like()
    sign = 1
    prev = one
    for k in range(n - 1):
        if A[k][k].is_zero():
            pivot = next(
                (r for r in range(k + 1, n) if not A[r][k].is_zero()), None
            )
            if pivot is None:
                return zero
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).divexact(prev)
            A[i][k] = zero
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def det_fraction_free(M):
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.

    Works over any exact ring whose elements support *, -, + and divexact
    (XPoly and AlphaPoly both qualify).
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("matrix is not square")
    if n == 0:
        raise DimensionMismatch("empty matrix")
    if n <= 4:
        return det_cofactor(M)
    return _det_bareiss(M)


def signed_maximal_minors(M):
    """For an (n-1) x n matrix return t with t[c] = (-1)^c det(M minus
    column c), signs alternating from + at the leftmost column.

    The Laplace expansion of any singular bordered matrix gives M @ t = 0.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if cols != rows + 1:
        raise DimensionMismatch(
            f"need one more column than rows, got {rows}x{cols}"
        )
    out = []
    for c in range(cols):
        minor = [[row[j] for j in range(cols) if j != c] for row in M]
        d = det_fraction_free(minor) if rows else M[0][0].one_like()
        out.append(-d if c % 2 else d)
    return out
