"""Special-function demo: Pochhammer symbols, partial Bell polynomials,
the integer table b(m, k), and the integer-exponent operator annihilating
exp(a*x) + (ln x)^a built by eliminating the formal basis
{exp(a*x)} union {(ln x)^(a-k)}.

Derivative rules are hard-coded: D(exp(a*x)) = a*exp(a*x) and
D((ln x)^(a-k)) = (a-k) * x^-1 * (ln x)^(a-k-1).
"""

from __future__ import annotations

from math import comb, factorial

from .alphapoly import AlphaPoly, det_fraction_free
from .elimination import normalize_lodo
from .errors import ValidationError
from .fields import QQ
from .polys import XPoly, XRat
from .tower import Lodo

__all__ = [
    "pochhammer",
    "bell_partial",
    "bell_b",
    "log_resolvent",
    "apply_to_exp",
    "apply_to_log_power",
]


def pochhammer(sym: str, k: int, field=QQ) -> AlphaPoly:
    """Falling factorial (sym)_k = sym (sym - 1) ... (sym - k + 1)."""
    if k < 0:
        raise ValidationError("k must be nonnegative")
    out = AlphaPoly.from_int(field, 1)
    a = AlphaPoly.symbol(field, sym)
    for i in range(k):
        out = out * (a - AlphaPoly.from_int(field, i))
    return out


def bell_partial(n: int, k: int, args):
    """Partial Bell polynomial B(n, k) of the given arguments (XRat),
    via the standard recurrence."""
    if not 0 <= k <= n:
        raise ValidationError("need 0 <= k <= n")
    args = list(args)
    if k and len(args) < n - k + 1:
        raise ValidationError(f"need at least {n - k + 1} arguments")
    field = args[0].field if args else QQ
    one = XRat.one(field)
    zero = XRat.zero(field)

    cache = {(0, 0): one}

    def B(n, k):
        if (n, k) in cache:
            return cache[(n, k)]
        if k == 0 or n == 0 or k > n:
            return zero
        acc = zero
        for j in range(1, n - k + 2):
            acc = acc + XRat.from_int(field, comb(n - 1, j - 1)) * args[j - 1] * B(
                n - j, k - 1
            )
        cache[(n, k)] = acc
        return acc

    return B(n, k)


def bell_b(m: int, k: int) -> int:
    """B(m, k) at the argument sequence 1, -1, 2, ..., (-1)^(j-1) (j-1)!,
    which collects the x-free part of the m-th derivative of (ln x)^a.

    b(0, 0) = 1 and b(m, k) = 0 outside 1 <= k <= m.
    """
    if m == 0 and k == 0:
        return 1
    if not 1 <= k <= m:
        return 0
    args = [
        XRat.from_int(QQ, (-1) ** (j - 1) * factorial(j - 1))
        for j in range(1, m - k + 2)
    ]
    value = bell_partial(m, k, args)
    assert value.is_poly() and value.num.degree <= 0
    return int(value.num.coeffs[0]) if value.num.coeffs else 0


def _scaled_rows(alpha_val: int, n_rows: int):
    """Row m (scaled by x^m) of the elimination matrix over the basis
    [exp(a*x)] + [(ln x)^(a-k) for k in 0..alpha_val], deduplicated when
    alpha_val = 0 collapses exp(0) and (ln x)^0."""
    field = QQ
    rows = []
    for m in range(n_rows):
        exp_col = XPoly.from_int(field, alpha_val**m) * XPoly.x(field) ** m
        log_cols = [
            XPoly.from_int(
                field,
                bell_b(m, k)
                * _falling_int(alpha_val, k),
            )
            for k in range(alpha_val + 1)
        ]
        if alpha_val == 0:
            # exp(0) = (ln x)^0 = 1: a single constant basis function
            rows.append([exp_col + log_cols[0]])
        else:
            rows.append([exp_col] + log_cols)
    return rows


def _falling_int(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a - i
    return out


def log_resolvent(alpha_val: int) -> Lodo:
    """Nonzero operator with polynomial coefficients annihilating
    exp(a*x) + (ln x)^a, and each basis function separately, for the
    integer a = alpha_val."""
    if alpha_val < 0:
        raise ValidationError("alpha must be a nonnegative integer")
    field = QQ
    basis_size = 1 if alpha_val == 0 else alpha_val + 2
    n_rows = basis_size + 1
    rows = _scaled_rows(alpha_val, n_rows)
    coeffs = {}
    x = XPoly.x(field)
    for m in range(n_rows):
        minor = [row for r, row in enumerate(rows) if r != m]
        cof = det_fraction_free(minor) if len(minor) else XPoly.from_int(field, 1)
        if m % 2:
            cof = -cof
        coeffs[m] = AlphaPoly.const(XRat(cof * x**m))
    return normalize_lodo(Lodo.from_dict(field, coeffs))


def apply_to_exp(R: Lodo, alpha_val: int) -> XRat:
    """Coefficient of exp(a*x) after applying R; zero iff annihilated."""
    field = QQ
    acc = XRat.zero(field)
    for m, coeff in R.terms:
        acc = acc + coeff.const_value() * XRat.from_int(field, alpha_val**m)
    return acc

def apply_to_log_power(R: Lodo, alpha_val: int, shift: int = 0):
    """Coefficients over the functions (ln x)^(a - shift - k) after
    applying R to (ln x)^(a - shift); all zero iff annihilated.

    Returns a dict k -> XRat with the x^-m factors folded in.
    """
    field = QQ
    out = {}
    for m, coeff in R.terms:
        c = coeff.const_value()
        inv_xm = XRat(XPoly.from_int(field, 1), XPoly.x(field) ** m)
        for k in range(m + 1):
            b = bell_b(m, k)
            if b == 0:
                continue
            w = c * inv_xm * XRat.from_int(
                field, b * _falling_int(alpha_val - shift, k)
            )
            out[k] = out.get(k, XRat.zero(field)) + w
    return out
