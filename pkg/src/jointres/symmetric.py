"""Powersums of polynomial roots via Newton's identities, and the
combined-permutation sums of derivatives at an integer specialization.

Newton's identities are used in division-free form so the same path is
valid in positive characteristic.
"""

from __future__ import annotations

from .errors import ValidationError
from .polys import XRat
from .tower import MonicPoly, ProblemSpec

__all__ = ["powersums_from_elementary", "PowersumTable", "combined_sum"]


def powersums_from_elementary(P: MonicPoly, N: int):
    """p_0..p_N with p_k the sum of k-th powers of the roots; p_0 = deg P."""
    if N < 0:
        raise ValidationError("N must be nonnegative")
    field = P.field
    d = P.degree
    e = P.elementary()  # e[i-1] = e_i
    zero = XRat.zero(field)
    ps = [XRat.from_int(field, d)]
    for k in range(1, N + 1):
        acc = zero
        for i in range(1, min(k, d) + 1):
            term = e[i - 1] * ps[k - i]
            acc = acc + (-term if i % 2 == 0 else term)
        if k <= d:
            # replace the e_k * p_0 summand by the division-free k * e_k
            tail = e[k - 1] * XRat.from_int(field, k - d)
            acc = acc + (tail if k % 2 else -tail)
        ps.append(acc)
    return ps


class PowersumTable:
    """Lazily extended powersum cache, one row per polynomial id."""

    def __init__(self, p: ProblemSpec):
        self.problem = p
        self._rows = {}

    def get(self, pid: str, k: int) -> XRat:
        row = self._rows.get(pid)
        if row is None or len(row) <= k:
            n = max(k, 2 * len(row) if row else 4)
            row = powersums_from_elementary(self.problem.poly(pid), n)
            self._rows[pid] = row
        return row[k]


def combined_sum(p: ProblemSpec, s, m: int, table: PowersumTable | None = None):
    """Sum over all combined root permutations of D^m applied to the
    specialized pseudopolynomial: sum_j D^m(a_j * prod_i p^(i)_{s(i,j)}).

    s maps every alpha symbol to a nonnegative integer; an absent factor
    contributes p_0 = deg P_i.
    """
    missing = [sym for sym in p.alphas if sym not in s]
    if missing:
        raise ValidationError(f"specialization misses symbols {missing}")
    if any(v < 0 for v in s.values()):
        raise ValidationError("specialized exponents must be nonnegative")
    if table is None:
        table = PowersumTable(p)
    acc = XRat.zero(p.field)
    for term in p.terms:
        exps = term.exponent_map()
        prod = term.a
        for P in p.polynomials:
            sym = exps.get(P.id)
            k = s[sym] if sym is not None else 0
            prod = prod * table.get(P.id, k)
        acc = acc + prod
    for _ in range(m):
        acc = acc.derive()
    return acc
