"""Algebraic extensions K(x)[t]/(P) with the induced derivation, tensor
coordinates of derivatives of a pseudopolynomial, differential operators,
and numeric residual evaluation.

A root u of a monic P is never represented explicitly: everything lives in
the product of residue rings, with basis {v_j * u_1^c_1 ... u_L^c_L}.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .alphapoly import AlphaPoly
from .errors import (
    NotInvertible,
    PoleAtSample,
    UnsupportedDegree,
    ValidationError,
)
from .polys import XPoly, XRat

__all__ = [
    "TPoly",
    "MonicPoly",
    "PseudoTerm",
    "ProblemSpec",
    "TensorVector",
    "Lodo",
    "invert_mod",
    "root_derivative",
    "derivative_table",
    "apply_lodo",
    "lodo_derive",
    "numeric_residual",
]


class TPoly:
    """Dense polynomial in t with XRat coefficients (used for residues)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def const(cls, c: XRat):
        return cls(c.field, (c,))

    @classmethod
    def t(cls, field):
        return cls(field, (XRat.zero(field), XRat.one(field)))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else XRat.zero(self.field)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(self.field, out)

    def __neg__(self):
        return TPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XRat):
            return TPoly(self.field, tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return TPoly.zero(self.field)
        zero = XRat.zero(self.field)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly(self.field, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("TPoly division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = XRat.one(self.field) / other.lead
        zero = XRat.zero(self.field)
        q = [zero] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            factor = c * inv_lead
            q[i - dd] = factor
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - factor * b
        return TPoly(self.field, q), TPoly(self.field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derive_coeffs(self):
        """Apply D to each coefficient (the 'P_x' part of implicit
        differentiation)."""
        return TPoly(self.field, tuple(c.derive() for c in self.coeffs))

    def derive_t(self):
        out = []
        for i, c in enumerate(self.coeffs):
            if i:
                out.append(c * XRat.from_int(self.field, i))
        return TPoly(self.field, out)

    def __repr__(self):
        return f"TPoly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class MonicPoly:
    """Monic defining polynomial P(t) of one algebraic element."""

    id: str
    coeffs_t: tuple  # XRat, ascending in t, leading coefficient 1

    def __post_init__(self):
        if len(self.coeffs_t) < 2:
            raise ValidationError(f"{self.id}: degree must be at least 1")
        lead = self.coeffs_t[-1]
        if not lead == XRat.one(lead.field):
            raise ValidationError(f"{self.id}: polynomial must be monic")

    @property
    def field(self):
        return self.coeffs_t[0].field

    @property
    def degree(self):
        return len(self.coeffs_t) - 1

    def tpoly(self):
        return TPoly(self.field, self.coeffs_t)

    def elementary(self):
        """e_1..e_d via Def coeff_{d-k} = (-1)^k e_k."""
        d = self.degree
        field = self.field
        sign = XRat.from_int(field, -1)
        out = []
        s = XRat.one(field)
        for k in range(1, d + 1):
            s = s * sign
            out.append(s * self.coeffs_t[d - k])
        return out


@dataclass(frozen=True)
class PseudoTerm:
    """One term a * prod_i u_i^{alpha_{i}} of the pseudopolynomial."""

    a: XRat
    exponents: tuple  # sorted tuple of (polynomial id, alpha symbol)

    def exponent_map(self):
        return dict(self.exponents)


@dataclass(frozen=True)
class ProblemSpec:
    field: object
    polynomials: tuple  # MonicPoly
    terms: tuple  # PseudoTerm
    alphas: tuple  # symbol names

    def __post_init__(self):
        ids = [P.id for P in self.polynomials]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate polynomial ids")
        if len(set(self.alphas)) != len(self.alphas):
            raise ValidationError("duplicate alpha symbols")
        for P in self.polynomials:
            if not P.field == self.field:
                raise ValidationError(f"{P.id}: wrong coefficient field")
            if P.coeffs_t[0].is_zero():
                raise ValidationError(
                    f"{P.id}: constant term must be nonzero (invertible root)"
                )
        used = set()
        for term in self.terms:
            for pid, sym in term.exponents:
                if pid not in ids:
                    raise ValidationError(f"unknown polynomial id {pid!r}")
                if sym not in self.alphas:
                    raise ValidationError(f"unknown alpha symbol {sym!r}")
                used.add(sym)
        missing = set(self.alphas) - used
        if missing:
            raise ValidationError(f"unused alpha symbols {sorted(missing)}")

    def poly(self, pid):
        for P in self.polynomials:
            if P.id == pid:
                return P
        raise KeyError(pid)


class TensorVector:
    """Coordinates over the basis {v_j * prod u_i^{c_i}}, keyed by
    (term index j, exponent multi-index c)."""

    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        self.field = field
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return isinstance(other, TensorVector) and self.entries == other.entries

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return TensorVector(self.field, out)

    def scale(self, coeff: AlphaPoly):
        return TensorVector(
            self.field, {k: v * coeff for k, v in self.entries.items()}
        )

    def map_values(self, fn):
        return TensorVector(self.field, {k: fn(v) for k, v in self.entries.items()})

    def __repr__(self):
        return f"TensorVector({self.entries!r})"


class Lodo:
    """Linear ordinary differential operator sum_m coeff_m * D^m with
    AlphaPoly coefficients, ascending strictly in order."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        cleaned = [
            (m, c) for m, c in sorted(terms, key=lambda mc: mc[0]) if not c.is_zero()
        ]
        orders = [m for m, _ in cleaned]
        if len(set(orders)) != len(orders):
            raise ValidationError("duplicate orders in LODO")
        self.field = field
        self.terms = tuple(cleaned)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def from_dict(cls, field, d):
        return cls(field, list(d.items()))

    def is_zero(self):
        return not self.terms

    def order(self):
        return self.terms[-1][0] if self.terms else None

    def coeff(self, m) -> AlphaPoly:
        for order, c in self.terms:
            if order == m:
                return c
        return AlphaPoly.zero(self.field)

    def orders(self):
        return [m for m, _ in self.terms]

    def scale(self, s: XRat):
        return Lodo(self.field, [(m, c * s) for m, c in self.terms])

    def __eq__(self, other):
        return isinstance(other, Lodo) and self.terms == other.terms

    def __repr__(self):
        return "Lodo(" + ", ".join(f"D^{m}: {c!r}" for m, c in self.terms) + ")"


def invert_mod(a: TPoly, P: MonicPoly) -> TPoly:
    """Inverse of a modulo P by the extended Euclidean algorithm."""
    field = P.field
    modulus = P.tpoly()
    if a.degree >= P.degree:
        a = a % modulus
    old_r, r = modulus, a
    old_s, s = TPoly.zero(field), TPoly.const(XRat.one(field))
    while not r.is_zero():
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
    if old_r.degree != 0:
        raise NotInvertible(
            f"gcd with modulus {P.id} has degree {old_r.degree}"
        )
    return (old_s * (XRat.one(field) / old_r.coeffs[0])) % modulus


def root_derivative(P: MonicPoly) -> TPoly:
    """Du as a residue mod P, from P_x(u) + P_t(u) * Du = 0."""
    modulus = P.tpoly()
    p_x = modulus.derive_coeffs() % modulus
    p_t_inv = invert_mod(modulus.derive_t() % modulus, P)
    return (-(p_x * p_t_inv)) % modulus


def _log_derivative(P: MonicPoly) -> TPoly:
    """Du/u as a residue mod P; needs P(0) != 0."""
    du = root_derivative(P)
    u_inv = invert_mod(TPoly.t(P.field), P)
    return (du * u_inv) % P.tpoly()


def _mul_tables(p: ProblemSpec):
    """For each polynomial, the residues of t^k * (Du/u) mod P for
    0 <= k < deg P, as tuples of XRat coefficients."""
    tables = {}
    for P in p.polynomials:
        w = _log_derivative(P)
        modulus = P.tpoly()
        t = TPoly.t(P.field)
        tables[P.id] = []
        cur = w
        for _ in range(P.degree):
            tables[P.id].append(
                tuple(cur.coeff(k) for k in range(P.degree))
            )
            cur = (cur * t) % modulus
    return tables


def derivative_table(p: ProblemSpec, orders):
    """Tensor coordinates of D^m y for each requested order m."""
    orders = sorted(set(orders))
    if orders and orders[0] < 0:
        raise ValidationError("negative derivative order")
    field = p.field
    tables = _mul_tables(p)
    pids = [P.id for P in p.polynomials]
    degs = [P.degree for P in p.polynomials]

    state = {}
    for j, term in enumerate(p.terms):
        key = (j, (0,) * len(pids))
        cur = state.get(key)
        coeff = AlphaPoly.const(term.a)
        state[key] = cur + coeff if cur is not None else coeff

    out = {}
    target = orders[-1] if orders else -1
    m = 0
    if 0 in orders:
        out[0] = TensorVector(field, state)
    while m < target:
        new = {}

        def bump(key, val):
            if key in new:
                new[key] = new[key] + val
            else:
                new[key] = val

        for (j, c), f in state.items():
            if f.is_zero():
                continue
            df = f.map_coeffs(lambda r: r.derive())
            if not df.is_zero():
                bump((j, c), df)
            exps = p.terms[j].exponent_map()
            for i, pid in enumerate(pids):
                shift = AlphaPoly.from_int(field, c[i])
                sym = exps.get(pid)
                if sym is not None:
                    shift = shift + AlphaPoly.symbol(field, sym)
                if shift.is_zero():
                    continue
                factor = f * shift
                for k, coef in enumerate(tables[pid][c[i]]):
                    if coef.is_zero():
                        continue
                    ck = c[:i] + (k,) + c[i + 1 :]
                    bump((j, ck), factor * coef)
        state = {k: v for k, v in new.items() if not v.is_zero()}
        m += 1
        if m in orders:
            out[m] = TensorVector(field, state)
    return out


def apply_lodo(R: Lodo, p: ProblemSpec) -> TensorVector:
    """R applied to y in tensor coordinates; zero iff R annihilates y."""
    if R.is_zero():
        return TensorVector.zero(p.field)
    table = derivative_table(p, R.orders())
    acc = TensorVector.zero(p.field)
    for m, coeff in R.terms:
        acc = acc + table[m].scale(coeff)
    return acc


def lodo_derive(R: Lodo) -> Lodo:
    """Left-compose with D: (D o R) = sum (Dc_m) D^m + c_m D^{m+1}."""
    out = {}
    zero = AlphaPoly.zero(R.field)
    for m, c in R.terms:
        dc = c.map_coeffs(lambda r: r.derive())
        out[m] = out.get(m, zero) + dc
        out[m + 1] = out.get(m + 1, zero) + c
    return Lodo.from_dict(R.field, out)


def _linear_roots(p: ProblemSpec):
    roots = {}
    for P in p.polynomials:
        if P.degree != 1:
            raise UnsupportedDegree(
                f"{P.id}: numeric evaluation needs linear polynomials"
            )
        roots[P.id] = -P.coeffs_t[0]
    return roots


def numeric_residual(R: Lodo, subs, p: ProblemSpec, x0, precision=30):
    """Relative residual |sum_m c_m(x0) (d/dx)^m y(x0)| / max term size.

    subs maps every alpha symbol to a real value; every P_i must be linear
    so the roots are explicit rational functions.
    """
    if R.is_zero():
        return 0.0
    if p.field.char != 0:
        raise UnsupportedDegree("numeric evaluation is defined over Q only")
    roots = _linear_roots(p)
    missing = [s for s in p.alphas if s not in subs]
    if missing:
        raise ValidationError(f"missing substitutions for {missing}")
    table = derivative_table(p, R.orders())

    with mpmath.workdps(precision):

        def ev_rat(r: XRat):
            num = r.num.eval(x0)  # exact Fraction arithmetic
            den = r.den.eval(x0)
            if den == 0:
                raise PoleAtSample(f"pole at x0 = {x0}")
            num, den = num / den, 1
            return mpmath.mpf(num.numerator) / mpmath.mpf(num.denominator)

        def ev_alpha(a: AlphaPoly):
            acc = mpmath.mpf(0)
            for mono, coeff in a.terms.items():
                v = ev_rat(coeff)
                for s, e in mono:
                    v *= mpmath.mpmathify(subs[s]) ** e
                acc += v
            return acc

        # v_j(x0) = prod_i g_i(x0)^{subs(alpha_ij)}
        root_vals = {}
        for pid, g in roots.items():
            val = ev_rat(g)
            if val == 0:
                raise PoleAtSample(f"root of {pid} vanishes at x0 = {x0}")
            root_vals[pid] = val
        v_vals = []
        for term in p.terms:
            v = mpmath.mpf(1)
            for pid, sym in term.exponents:
                v *= mpmath.power(root_vals[pid], mpmath.mpmathify(subs[sym]))
            v_vals.append(v)

        total = mpmath.mpf(0)
        biggest = mpmath.mpf(0)
        for m, coeff in R.terms:
            dm = mpmath.mpf(0)
            for (j, _), a in table[m].entries.items():
                dm += ev_alpha(a) * v_vals[j]
            term_val = ev_alpha(coeff) * dm
            total += term_val
            biggest = max(biggest, abs(term_val))
        if biggest == 0:
            return 0.0
        return float(abs(total) / biggest)
