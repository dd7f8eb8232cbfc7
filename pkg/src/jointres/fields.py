"""Coefficient fields: the rationals and prime fields F_p.

Scalars are plain values (Fraction for Q, int in [0, p) for F_p); a field
object supplies the arithmetic so polynomials can stay field-agnostic.
"""

from fractions import Fraction

from .errors import ParseError, ValidationError

MAX_PRIME = 1 << 61


class Rationals:
    """The field Q. Scalars are Fraction values in lowest terms."""

    tag = "Q"
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / self._nonzero(b)

    @staticmethod
    def _nonzero(b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return b

    def is_zero(self, a):
        return a == 0

    def parse(self, s):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational {s!r}: {e}") from None

    def fmt(self, a):
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p < 2**61. Scalars are ints in [0, p)."""

    char = None

    def __init__(self, p):
        if p < 2 or p >= MAX_PRIME or not _is_prime(p):
            raise ValidationError(f"modulus {p} is not a prime below 2**61")
        self.p = p
        self.char = p
        self.tag = ("Fp", p)
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.p == 0

    def parse(self, s):
        try:
            if "/" in s:
                num, den = s.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(s) % self.p
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad F_{self.p} scalar {s!r}: {e}") from None

    def fmt(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"F{self.p}"


def _is_prime(n):
    if n < 4:
        return n in (2, 3)
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin, valid for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = Rationals()

_gf_cache = {}


def GF(p):
    """Return the (cached) prime field of order p."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if isinstance(tag, tuple) and len(tag) == 2 and tag[0] == "Fp":
        return GF(tag[1])
    raise ParseError(f"unknown field tag {tag!r}")
