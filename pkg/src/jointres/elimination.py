"""Direct construction of a joint resolvent by eliminating the basis
monomials from the derivative table with a first-column cofactor
expansion. Serves as an independent oracle for the powersum route.
"""

from __future__ import annotations

from .alphapoly import AlphaPoly, det_fraction_free, mono_degree
from .errors import AllZero, DimensionMismatch, TooLarge
from .polys import XPoly, XRat, content_primitive, lcm_monic
from .powersum import ResolventTemplate
from .tower import Lodo, ProblemSpec, derivative_table

__all__ = [
    "eliminate_resolvent",
    "Degenerate",
    "equal_up_to_unit",
    "normalize_lodo",
    "template_from_lodo",
]

MAX_SYMBOLIC_DIM = 9


class Degenerate:
    """Every cofactor of the elimination determinant vanished."""

    def __repr__(self):
        return "Degenerate()"


def _canonical_entries(R: Lodo):
    """(order, monomial, coefficient) triples: descending order, then
    descending graded-lex monomial."""
    out = []
    for m, coeff in sorted(R.terms, key=lambda t: -t[0]):
        symbols = sorted(coeff.symbols())
        monos = sorted(
            coeff.terms,
            key=lambda mono: (
                mono_degree(mono),
                tuple(dict(mono).get(s, 0) for s in symbols),
            ),
            reverse=True,
        )
        out.extend((m, mono, coeff.terms[mono]) for mono in monos)
    return out


def normalize_lodo(R: Lodo) -> Lodo:
    """Clear denominators, remove the common content, and fix the sign so
    the leading coefficient-function is positive (monic over F_p)."""
    if R.is_zero():
        return R
    field = R.field
    entries = _canonical_entries(R)
    den = XPoly.const(field, field.one)
    for _, _, c in entries:
        den = lcm_monic(den, c.den)
    polys = [(c * den).num for _, _, c in entries]
    try:
        _, prims = content_primitive(polys)
    except AllZero:  # pragma: no cover - zero LODO handled above
        return Lodo.zero(field)
    coeffs = {}
    zero = AlphaPoly.zero(field)
    for (m, mono, _), prim in zip(entries, prims):
        piece = AlphaPoly(field, {mono: XRat(prim)})
        coeffs[m] = coeffs.get(m, zero) + piece
    return Lodo.from_dict(field, coeffs)


def eliminate_resolvent(p: ProblemSpec, orders):
    """Expand the elimination determinant along its first (formal D^m y)
    column; the cofactors are the resolvent's terms.

    The matrix size follows the actual support of the derivative table,
    so len(orders) must exceed the number of occupied basis coordinates
    by exactly one.
    """
    orders = sorted(set(orders))
    n = len(orders)
    if n > MAX_SYMBOLIC_DIM:
        raise TooLarge(f"symbolic elimination capped at {MAX_SYMBOLIC_DIM}")
    table = derivative_table(p, orders)
    support = sorted({k for m in orders for k in table[m].entries})
    if n != len(support) + 1:
        raise DimensionMismatch(
            f"{n} orders given but the derivative table occupies "
            f"{len(support)} basis coordinates (need support + 1)"
        )
    zero = AlphaPoly.zero(p.field)
    rows = [
        [table[m].entries.get(key, zero) for key in support] for m in orders
    ]
    coeffs = {}
    any_nonzero = False
    for k, m in enumerate(orders):
        minor = [row for r, row in enumerate(rows) if r != k]
        cof = det_fraction_free(minor) if minor else AlphaPoly.from_int(p.field, 1)
        if k % 2:
            cof = -cof
        if not cof.is_zero():
            any_nonzero = True
        coeffs[m] = cof
    if not any_nonzero:
        return Degenerate()
    return normalize_lodo(Lodo.from_dict(p.field, coeffs))


def equal_up_to_unit(a: Lodo, b: Lodo) -> bool:
    """True when some nonzero field scalars make the operators equal."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    ea, eb = _canonical_entries(a), _canonical_entries(b)
    if [(m, mono) for m, mono, _ in ea] != [(m, mono) for m, mono, _ in eb]:
        return False
    ca, cb = ea[0][2], eb[0][2]
    scale = ca / cb
    return all(c == d * scale for (_, _, c), (_, _, d) in zip(ea, eb))


def template_from_lodo(R: Lodo) -> ResolventTemplate:
    """Read the (order, monomial) support off a symbolic resolvent."""
    return ResolventTemplate(
        tuple((m, mono) for m, mono, _ in _canonical_entries(R))
    )
