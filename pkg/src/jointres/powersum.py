"""The powersum route to a joint resolvent: templates, the specialization
matrix, signed maximal minors, and content extraction.

A template fixes which (derivative order, exponent monomial) pairs may
carry nonzero coefficient-functions; the engine is form-agnostic and the
only built-in generator is the classical single-polynomial shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphapoly import AlphaPoly, mono_from_dict, signed_maximal_minors
from .errors import DimensionMismatch, ValidationError
from .polys import XPoly, XRat, content_primitive, lcm_monic
from .symmetric import PowersumTable, combined_sum
from .tower import Lodo, ProblemSpec

__all__ = [
    "ResolventTemplate",
    "Resolvent",
    "IdenticallyZero",
    "thm83_template",
    "default_specializations",
    "build_specialization_matrix",
    "powersum_resolvent",
]


@dataclass(frozen=True)
class ResolventTemplate:
    """Ordered (order, monomial) pairs; monomials are canonical tuples."""

    entries: tuple  # of (m, monomial)

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ValidationError("template needs at least two entries")
        if len(set(self.entries)) != len(self.entries):
            raise ValidationError("duplicate template entries")
        for m, mono in self.entries:
            if m < 0 or any(e <= 0 for _, e in mono):
                raise ValidationError("bad template entry")

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple((m, mono_from_dict(mono)) for m, mono in pairs))

    @property
    def psi(self):
        return len(self.entries)

    def symbols(self):
        out = []
        for _, mono in self.entries:
            for s, _ in mono:
                if s not in out:
                    out.append(s)
        return sorted(out)


def thm83_template(n: int, alpha: str) -> ResolventTemplate:
    """The classical single-polynomial shape: orders 0..n, powers alpha^j
    with j up to n(n-1)/2 + 1 - m, and no constant term at order zero."""
    if n < 1:
        raise ValidationError("degree must be positive")
    top = n * (n - 1) // 2 + 1
    entries = []
    for m in range(n, -1, -1):
        for j in range(0, top - m + 1):
            if m == 0 and j == 0:
                continue
            entries.append((m, ((alpha, j),) if j else ()))
    return ResolventTemplate(tuple(entries))


def default_specializations(tpl: ResolventTemplate, p: ProblemSpec | None = None,
                            strategy="grid", explicit=None):
    """Psi - 1 distinct integer assignments for the template's symbols."""
    symbols = tpl.symbols()
    if p is not None:
        symbols = sorted(set(symbols) | set(p.alphas))
    n = tpl.psi - 1
    if strategy == "explicit":
        if explicit is None or len(explicit) != n:
            raise DimensionMismatch(f"need exactly {n} explicit specializations")
        return [dict(s) for s in explicit]
    if strategy != "grid":
        raise ValidationError(f"unknown strategy {strategy!r}")
    k = len(symbols)
    if k == 0:
        raise ValidationError("template has no symbols")
    # near-balanced box {1..d_1} x ... x {1..d_k} holding n points,
    # grown in the last coordinate (so n = 8, k = 2 gives the 2 x 4 grid)
    dims = [max(int(n ** (1.0 / k)), 1)] * k
    while _prod(dims) < n:
        dims[-1] += 1
    out = []
    idx = [1] * k
    for _ in range(n):
        out.append(dict(zip(symbols, idx)))
        for pos in range(k - 1, -1, -1):
            idx = list(idx)
            if idx[pos] < dims[pos]:
                idx[pos] += 1
                break
            idx[pos] = 1
    return out


def _prod(xs):
    out = 1
    for v in xs:
        out *= v
    return out


def _mono_value(mono, s):
    v = 1
    for sym, e in mono:
        v *= s[sym] ** e
    return v


def build_specialization_matrix(p: ProblemSpec, tpl: ResolventTemplate, specs):
    """(Psi-1) x Psi matrix of XRat: row per specialization, column per
    template entry, entry = monomial value times the combined sum at the
    entry's derivative order."""
    if len(specs) != tpl.psi - 1:
        raise DimensionMismatch(
            f"need {tpl.psi - 1} specializations, got {len(specs)}"
        )
    if len({tuple(sorted(s.items())) for s in specs}) != len(specs):
        raise ValidationError("specializations must be pairwise distinct")
    table = PowersumTable(p)
    matrix = []
    for s in specs:
        sums = {}
        row = []
        for m, mono in tpl.entries:
            if m not in sums:
                sums[m] = combined_sum(p, s, m, table)
            row.append(sums[m] * XRat.from_int(p.field, _mono_value(mono, s)))
        matrix.append(row)
    return matrix


@dataclass(frozen=True)
class Resolvent:
    template: ResolventTemplate
    raw_t: tuple  # XPoly, one per template entry
    content: XPoly
    primitive_r: tuple  # XPoly

    def to_lodo(self, field) -> Lodo:
        """Assemble the primitive coefficient-functions into a LODO."""
        coeffs = {}
        zero = AlphaPoly.zero(field)
        for (m, mono), r in zip(self.template.entries, self.primitive_r):
            piece = AlphaPoly(field, {mono: XRat(r)})
            coeffs[m] = coeffs.get(m, zero) + piece
        return Lodo.from_dict(field, coeffs)


@dataclass(frozen=True)
class IdenticallyZero:
    """Every maximal minor vanished; retry with other specializations."""

    hint: str = "all minors vanished; retry with different specializations"


def powersum_resolvent(p: ProblemSpec, tpl: ResolventTemplate, specs):
    """Full powersum pipeline: specialization matrix, row-wise denominator
    clearing, signed maximal minors, then content/primitive split."""
    matrix = build_specialization_matrix(p, tpl, specs)
    field = p.field
    cleared = []
    for row in matrix:
        den = XPoly.const(field, field.one)
        for entry in row:
            den = lcm_monic(den, entry.den)
        cleared.append([(entry * den).num for entry in row])
    raw = signed_maximal_minors(cleared)
    if all(t.is_zero() for t in raw):
        return IdenticallyZero()
    content, prims = content_primitive(raw)
    return Resolvent(tpl, tuple(raw), content, tuple(prims))
