"""
Exact arithmetic in Q(tau), tau = (1 + sqrt 5) / 2.

Every height, interval endpoint and perpendicular coordinate in quasigrow is
a GoldenNumber p + q*tau with rational p and q, so comparisons are decided
exactly and never drift the way floats do.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from quasigrow.exceptions import GoldenParseError

TAU_FLOAT = (1 + math.sqrt(5)) / 2

_TERM_RE = re.compile(r'^([+-]?)(\d+(?:/\d+)?)?([*·]?t)?$')


def _int_sign(value: int) -> int:
    return (value > 0) - (value < 0)


def sign_of_integer_pair(p: int, q: int) -> int:
    """
    Exact sign of p + q*tau for integer p, q.

    Mixed-sign cases compare |q|*tau with |p| by squaring: with n = p^2 - q^2
    and d = q^2, tau > n/d holds iff n < 0 or n^2 < n*d + d^2 (x < tau iff
    x^2 < x + 1 for x >= 0).
    """
    if q == 0:
        return _int_sign(p)
    if p >= 0 and q >= 0:
        return 1
    if p <= 0 and q <= 0:
        return -1
    n = p * p - q * q
    d = q * q
    tau_above = n < 0 or n * n < n * d + d * d
    if q > 0:
        # p < 0: positive iff q*tau > -p iff tau > n/d
        return 1 if tau_above else -1
    # p > 0, q < 0: positive iff p > |q|*tau iff tau < n/d
    return -1 if tau_above else 1


@total_ordering
@dataclass(frozen=True)
class GoldenNumber:
    """The number p + q*tau, stored exactly as the rational pair (p, q)."""
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'p', Fraction(self.p))
        object.__setattr__(self, 'q', Fraction(self.q))

    @classmethod
    def coerce(cls, value) -> 'GoldenNumber':
        """Accept a GoldenNumber, an int, a Fraction or a golden-string."""
        if isinstance(value, GoldenNumber):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_golden(value)
        raise TypeError(f"Cannot interpret {value!r} as a golden number")

    # Ring operations

    def __add__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.p, -self.q)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        return self + (-GoldenNumber.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        return GoldenNumber.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        other = GoldenNumber.coerce(other)
        # tau^2 = tau + 1
        return GoldenNumber(
            self.p * other.p + self.q * other.q,
            self.p * other.q + self.q * other.p + self.q * other.q,
        )

    __rmul__ = __mul__

    def conjugate(self) -> 'GoldenNumber':
        """Galois conjugate: tau -> 1 - tau."""
        return GoldenNumber(self.p + self.q, -self.q)

    def norm(self) -> Fraction:
        """Field norm p^2 + pq - q^2, the product with the conjugate."""
        return self.p * self.p + self.p * self.q - self.q * self.q

    def reciprocal(self) -> 'GoldenNumber':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("reciprocal of zero golden number")
        c = self.conjugate()
        return GoldenNumber(c.p / n, c.q / n)

    def __truediv__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        return self * GoldenNumber.coerce(other).reciprocal()

    def __rtruediv__(self, other):
        if not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        return GoldenNumber.coerce(other) * self.reciprocal()

    # Ordering

    def sign(self) -> int:
        """Exact sign of the value: -1, 0 or 1."""
        scale = math.lcm(self.p.denominator, self.q.denominator)
        return sign_of_integer_pair(int(self.p * scale), int(self.q * scale))

    def __eq__(self, other):
        if isinstance(other, bool) or not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        other = GoldenNumber.coerce(other)
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        # rational values hash like the equal int or Fraction
        return hash(self.p) if self.q == 0 else hash((self.p, self.q))

    def __lt__(self, other):
        if isinstance(other, bool) or not isinstance(other, (GoldenNumber, int, Fraction)):
            return NotImplemented
        return (self - GoldenNumber.coerce(other)).sign() < 0

    def is_rational(self) -> bool:
        return self.q == 0

    def __float__(self):
        return float(self.p) + float(self.q) * TAU_FLOAT

    def __str__(self):
        return format_golden(self)


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
TAU = GoldenNumber(0, 1)
INV_TAU = GoldenNumber(-1, 1)        # 1/tau = tau - 1
INV_TAU2 = GoldenNumber(2, -1)       # 1/tau^2 = 2 - tau
TWO_INV_TAU = GoldenNumber(-2, 2)    # 2/tau = 2tau - 2
TWO_INV_TAU2 = GoldenNumber(4, -2)   # 2/tau^2 = 4 - 2tau


def add(a: GoldenNumber, b: GoldenNumber) -> GoldenNumber:
    return a + b


def mul(a: GoldenNumber, b: GoldenNumber) -> GoldenNumber:
    return a * b


def sign(a: GoldenNumber) -> int:
    return a.sign()


def golden_floor(a: GoldenNumber) -> int:
    """
    Exact floor of a, for any size of coefficients.

    With L the common denominator, a = (n + m*sqrt 5) / (2L) for integers n
    and m. m*sqrt 5 is irrational unless m = 0, so n + m*sqrt 5 lies strictly
    between consecutive integers k and k + 1, and floor(a) = k // (2L).
    """
    scale = math.lcm(a.p.denominator, a.q.denominator)
    p, q = int(a.p * scale), int(a.q * scale)
    n, m = 2 * p + q, q
    root = math.isqrt(5 * m * m)
    below = root if m >= 0 else -root - 1
    return (n + below) // (2 * scale)


def mod_tau(a: GoldenNumber) -> GoldenNumber:
    """
    Reduce a into [0, tau) by whole multiples of tau.

    The multiple is floor(a / tau), and a / tau = (q - p) + p*tau.
    """
    a = GoldenNumber.coerce(a)
    r = a - TAU * golden_floor(GoldenNumber(a.q - a.p, a.p))
    while r.sign() < 0:
        r = r + TAU
    while not r < TAU:
        r = r - TAU
    return r


@dataclass(frozen=True)
class GoldenInterval:
    """Interval with golden endpoints; half-open [lo, hi) unless flagged otherwise."""
    lo: GoldenNumber
    hi: GoldenNumber
    closed_lo: bool = True
    closed_hi: bool = False

    @classmethod
    def empty(cls) -> 'GoldenInterval':
        """The designated empty interval [0, 0)."""
        return cls(ZERO, ZERO, True, False)

    @classmethod
    def half_open(cls, lo, hi) -> 'GoldenInterval':
        return cls(GoldenNumber.coerce(lo), GoldenNumber.coerce(hi), True, False)

    @property
    def is_empty(self) -> bool:
        if self.hi < self.lo:
            return True
        return self.lo == self.hi and not (self.closed_lo and self.closed_hi)

    def contains(self, x: GoldenNumber) -> bool:
        if self.is_empty:
            return False
        above = self.lo <= x if self.closed_lo else self.lo < x
        below = x <= self.hi if self.closed_hi else x < self.hi
        return above and below

    def width(self) -> GoldenNumber:
        return ZERO if self.is_empty else self.hi - self.lo

    def shift(self, offset: GoldenNumber) -> 'GoldenInterval':
        if self.is_empty:
            return self
        return GoldenInterval(self.lo + offset, self.hi + offset, self.closed_lo, self.closed_hi)

    def intersect(self, other: 'GoldenInterval') -> 'GoldenInterval':
        if self.is_empty or other.is_empty:
            return GoldenInterval.empty()
        if self.lo == other.lo:
            lo, closed_lo = self.lo, self.closed_lo and other.closed_lo
        elif self.lo > other.lo:
            lo, closed_lo = self.lo, self.closed_lo
        else:
            lo, closed_lo = other.lo, other.closed_lo
        if self.hi == other.hi:
            hi, closed_hi = self.hi, self.closed_hi and other.closed_hi
        elif self.hi < other.hi:
            hi, closed_hi = self.hi, self.closed_hi
        else:
            hi, closed_hi = other.hi, other.closed_hi
        result = GoldenInterval(lo, hi, closed_lo, closed_hi)
        return GoldenInterval.empty() if result.is_empty else result

    def to_dict(self):
        """Convert to dictionary."""
        if self.is_empty:
            return {'empty': True}
        return {
            'empty': False,
            'lo': format_golden(self.lo),
            'hi': format_golden(self.hi),
            'closed_lo': self.closed_lo,
            'closed_hi': self.closed_hi,
            'approx': [float(self.lo), float(self.hi)],
        }

    def __str__(self):
        if self.is_empty:
            return 'empty'
        left = '[' if self.closed_lo else '('
        right = ']' if self.closed_hi else ')'
        return f"{left}{format_golden(self.lo)}, {format_golden(self.hi)}{right}"


def interval_intersect(a: GoldenInterval, b: GoldenInterval) -> GoldenInterval:
    return a.intersect(b)


# Full height range of a tile and the two alpha domains
FULL_RANGE = GoldenInterval.half_open(ZERO, TAU)


def parse_golden(text: str) -> GoldenNumber:
    """
    Parse a golden-string such as "1", "1/2", "2 - 1t", "-1+1t" or "3/2t".

    Raises:
        GoldenParseError: on anything that is not a sum of rational and
            rational-times-t terms
    """
    if text is None:
        raise GoldenParseError("empty golden-string")
    compact = re.sub(r'\s+', '', str(text))
    if not compact:
        raise GoldenParseError("empty golden-string", text=text)

    terms = re.findall(r'[+-]?[^+-]+', compact)
    if ''.join(terms) != compact:
        raise GoldenParseError(f"cannot parse golden-string {text!r}", text=text)

    p = Fraction(0)
    q = Fraction(0)
    for term in terms:
        match = _TERM_RE.match(term)
        if not match or (match.group(2) is None and match.group(3) is None):
            raise GoldenParseError(f"bad term {term!r} in golden-string {text!r}", text=text)
        sign_text, number, tau_part = match.groups()
        try:
            value = Fraction(number) if number is not None else Fraction(1)
        except ZeroDivisionError as exc:
            raise GoldenParseError(f"zero denominator in {text!r}", text=text) from exc
        if sign_text == '-':
            value = -value
        if tau_part:
            q += value
        else:
            p += value
    return GoldenNumber(p, q)


def format_golden(x: GoldenNumber) -> str:
    """Canonical golden-string: "<p> + <q>t" or "<p> - <|q|>t"."""
    if x.q < 0:
        return f"{x.p} - {-x.q}t"
    return f"{x.p} + {x.q}t"
