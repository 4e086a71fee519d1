"""Exact arithmetic on numbers of the form x0 + sum(c_i * sqrt(y_i)).

Coefficients and radicands are rationals.  Radicands are kept as positive
integers in canonical square-class form, so two terms never represent
rationally dependent square roots.  Since square roots of rationals lying
in pairwise distinct square classes are linearly independent over Q, a
canonical number is zero exactly when it has no radical terms and a zero
rational part.  Signs are decided without floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

TRIAL_DIVISION_BOUND = 10**6


class DomainError(ValueError):
    """Raised for square roots of negative quantities."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, ExactNumber) and value.is_rational():
        return value.rational
    raise TypeError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q``; decimals are refused."""
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ValueError(f"not a rational p/q: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=65536)
def _square_split(n: int, bound: int = TRIAL_DIVISION_BOUND) -> Tuple[int, int]:
    """Return (s, r) with n = s*s*r and r free of small square factors."""
    if n <= 0:
        raise ValueError("square split needs n > 0")
    s, r = 1, 1
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        r *= p ** (e % 2)
    p, step = 7, 4
    while p <= bound and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            r *= p ** (e % 2)
        p += step
        step = 6 - step
    # leftover is prime when p*p > n; otherwise unfactored beyond the bound
    t = isqrt(n)
    if t * t == n:
        s *= t
    else:
        r *= n
    return s, r


def _canonical_radical(coeff: Fraction, radicand: Fraction) -> Tuple[Fraction, int]:
    """Rewrite coeff*sqrt(radicand) as c*sqrt(r) with r a canonical integer."""
    p, q = radicand.numerator, radicand.denominator
    s, r = _square_split(p * q)
    return coeff * Fraction(s, q), r


class ExactNumber:
    """Immutable value ``rational + sum(coeff * sqrt(radicand))``."""

    __slots__ = ("rational", "terms", "_hash")

    def __init__(self, rational: RationalLike = 0, terms: Iterable[Tuple[int, Fraction]] = ()):
        # trusted constructor: terms already canonical, sorted, nonzero
        self.rational = Fraction(rational)
        self.terms: Tuple[Tuple[int, Fraction], ...] = tuple(terms)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def normalize(cls, raw: Iterable[Tuple[RationalLike, RationalLike]], rational: RationalLike = 0) -> "ExactNumber":
        """Build a canonical number from ``(coefficient, radicand)`` pairs."""
        r0 = Fraction(rational)
        acc: dict = {}
        for c, y in raw:
            c, y = Fraction(c), Fraction(y)
            if y < 0:
                raise DomainError(f"negative radicand {y}")
            if c == 0 or y == 0:
                continue
            c, n = _canonical_radical(c, y)
            if n == 1:
                r0 += c
            else:
                acc[n] = acc.get(n, 0) + c
        return cls._from_dict(r0, acc)

    @classmethod
    def _from_dict(cls, r0: Fraction, acc: dict) -> "ExactNumber":
        big = [n for n in acc if n > TRIAL_DIVISION_BOUND]
        if len(big) > 1:
            # radicands with unfactored parts may still share a square class
            big.sort()
            for i, n1 in enumerate(big):
                if n1 not in acc:
                    continue
                for n2 in big[i + 1:]:
                    if n2 in acc:
                        t = isqrt(n1 * n2)
                        if t * t == n1 * n2:
                            acc[n1] += acc.pop(n2) * Fraction(t, n1)
        return cls(r0, sorted((n, c) for n, c in acc.items() if c != 0))

    @classmethod
    def sqrt(cls, y: RationalLike, coeff: RationalLike = 1) -> "ExactNumber":
        return cls.normalize([(coeff, y)])

    @classmethod
    def coerce(cls, value) -> "ExactNumber":
        if isinstance(value, ExactNumber):
            return value
        if isinstance(value, str):
            return parse_exact(value)
        return cls(as_rational(value))

    # -- structure --------------------------------------------------------

    def is_rational(self) -> bool:
        return not self.terms

    def is_zero(self) -> bool:
        return not self.terms and self.rational == 0

    @property
    def radicands(self) -> Tuple[int, ...]:
        return tuple(n for n, _ in self.terms)

    def conjugate_norm(self) -> Fraction:
        """Product of the Galois conjugates, a rational that vanishes iff the number does.

        Radicals are eliminated one generator g at a time: writing the number
        as A + B*sqrt(g) with g free of A, the next value is A^2 - g*B^2.
        """
        v = self
        while v.terms:
            g = v.terms[0][0]
            changed = True
            while changed:
                changed = False
                for k, _ in v.terms:
                    d = gcd(g, k)
                    if 1 < d < g:
                        g, changed = d, True
            a = ExactNumber(v.rational, [(k, c) for k, c in v.terms if k % g])
            b = ExactNumber.normalize([(c, Fraction(k, g)) for k, c in v.terms if k % g == 0])
            v = a * a - b * b * g
        return v.rational

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "ExactNumber":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for n, c in other.terms:
            acc[n] = acc.get(n, 0) + c
        return ExactNumber(self.rational + other.rational, sorted((n, c) for n, c in acc.items() if c != 0))

    __radd__ = __add__

    def __neg__(self) -> "ExactNumber":
        return ExactNumber(-self.rational, [(n, -c) for n, c in self.terms])

    def __sub__(self, other) -> "ExactNumber":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExactNumber":
        return (-self) + other

    def __mul__(self, other) -> "ExactNumber":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational():
            k = other.rational
            if k == 0:
                return ExactNumber(0)
            return ExactNumber(self.rational * k, [(n, c * k) for n, c in self.terms])
        if self.is_rational():
            return other * self
        r0 = self.rational * other.rational
        acc: dict = {}
        for n, c in other.terms:
            acc[n] = acc.get(n, 0) + self.rational * c
        for n, c in self.terms:
            acc[n] = acc.get(n, 0) + other.rational * c
            for n2, c2 in other.terms:
                coeff, core = _canonical_radical(c * c2, Fraction(n * n2))
                if core == 1:
                    r0 += coeff
                else:
                    acc[core] = acc.get(core, 0) + coeff
        return ExactNumber._from_dict(r0, acc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExactNumber":
        if isinstance(other, ExactNumber):
            if not other.is_rational():
                raise TypeError("division only by rationals")
            other = other.rational
        k = Fraction(other)
        if k == 0:
            raise ZeroDivisionError("division by zero")
        return self * (1 / k)

    def __pow__(self, e: int) -> "ExactNumber":
        if not isinstance(e, int) or e < 0:
            raise ValueError("nonnegative integer exponents only")
        out, base = ExactNumber(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        return sign_of(self)

    def __eq__(self, other) -> bool:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rational == other.rational and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rational, self.terms))
        return self._hash

    def __lt__(self, other) -> bool:
        return cmp(self, other) < 0

    def __le__(self, other) -> bool:
        return cmp(self, other) <= 0

    def __gt__(self, other) -> bool:
        return cmp(self, other) > 0

    def __ge__(self, other) -> bool:
        return cmp(self, other) >= 0

    def abs(self) -> "ExactNumber":
        return -self if sign_of(self) < 0 else self

    # -- enclosures -------------------------------------------------------

    def enclosure(self, bits: int = 64) -> Tuple[Fraction, Fraction]:
        """Rational interval [lo, hi] containing the value."""
        scale = 1 << bits
        lo = hi = self.rational
        for n, c in self.terms:
            r = isqrt(n * scale * scale)
            s_lo, s_hi = Fraction(r, scale), Fraction(r + 1, scale)
            if c > 0:
                lo += c * s_lo
                hi += c * s_hi
            else:
                lo += c * s_hi
                hi += c * s_lo
        return lo, hi

    def __float__(self) -> float:
        lo, hi = self.enclosure(80)
        return float((lo + hi) / 2)

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        return format_exact(self)

    def __repr__(self) -> str:
        return f"ExactNumber({format_exact(self)!r})"


def _lift(value):
    if isinstance(value, ExactNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactNumber(value)
    return NotImplemented


# -- sign oracle -------------------------------------------------------------

def _sgn(q) -> int:
    return (q > 0) - (q < 0)


def _split_parts(x: ExactNumber) -> Tuple[ExactNumber, ExactNumber]:
    """Return (P, N), both with nonnegative coefficients, x = P - N."""
    pos_r = x.rational if x.rational > 0 else Fraction(0)
    neg_r = -x.rational if x.rational < 0 else Fraction(0)
    pos = [(n, c) for n, c in x.terms if c > 0]
    neg = [(n, -c) for n, c in x.terms if c < 0]
    return ExactNumber(pos_r, pos), ExactNumber(neg_r, neg)


def sign_of(x: ExactNumber) -> int:
    """Exact sign of x, one of -1, 0, +1."""
    if not x.terms:
        return _sgn(x.rational)
    signs = {_sgn(c) for _, c in x.terms}
    if x.rational:
        signs.add(_sgn(x.rational))
    if len(signs) == 1:
        return signs.pop()
    t = len(x.terms)
    if t == 1:
        (n, c), = x.terms
        return _sgn(x.rational) * _sgn(x.rational * x.rational - c * c * n)
    if t <= 3:
        # multiply by the all-positive counterpart: sign(x) = sign(P^2 - N^2)
        pos, neg = _split_parts(x)
        reduced = pos * pos - neg * neg
        if len(reduced.terms) < t:
            return sign_of(reduced)
    return _refine_sign(x)


def _refine_sign(x: ExactNumber) -> int:
    # fully split radicands are linearly independent, so x != 0; a radicand
    # left unsplit could hide a square factor, hence the norm test
    if any(n > TRIAL_DIVISION_BOUND for n in x.radicands) and x.conjugate_norm() == 0:
        return 0
    bits = 32
    while True:
        lo, hi = x.enclosure(bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def cmp(a, b) -> int:
    """Three-way comparison of exact values."""
    return sign_of(ExactNumber.coerce(a) - ExactNumber.coerce(b))


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Simplest rational in the closed interval [lo, hi] (Stern-Brocot)."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    frac_lo, frac_hi = lo - fl, hi - fl
    # invert the fractional parts and recurse
    return fl + 1 / simplest_between(1 / frac_hi, 1 / frac_lo)


def rational_between(lo, hi) -> Fraction:
    """A rational strictly between two exact numbers with lo < hi."""
    lo, hi = ExactNumber.coerce(lo), ExactNumber.coerce(hi)
    if cmp(lo, hi) >= 0:
        raise ValueError("empty interval")
    bits = 16
    while True:
        _, lo_hi = lo.enclosure(bits)
        hi_lo, _ = hi.enclosure(bits)
        if lo_hi < hi_lo:
            # keep strictly inside the open interval
            q = simplest_between(lo_hi, hi_lo)
            if q == lo_hi or q == hi_lo:
                q = (lo_hi + hi_lo) / 2
            return q
        bits *= 2


# -- text format -------------------------------------------------------------

_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(\d+(?:/\d+)?)\s*\)"
    r"|\s*([+-])?\s*(\d+(?:/\d+)?)(?!\s*\*)"
)


def parse_exact(text: str) -> ExactNumber:
    """Parse ``R | R*sqrt(R) | <expr> +- <expr>`` with R = p or p/q."""
    s = text.strip()
    if not s:
        raise ValueError("empty exact number")
    pos = 0
    raw = []
    r0 = Fraction(0)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse exact number {text!r} at {pos}")
        if m.group(3) is not None:
            sgn, coeff, rad = m.group(1), m.group(2), m.group(3)
            c = Fraction(coeff) if coeff else Fraction(1)
            if sgn is None and not first:
                raise ValueError(f"missing operator in {text!r}")
            raw.append((-c if sgn == "-" else c, Fraction(rad)))
        else:
            sgn, val = m.group(4), m.group(5)
            if sgn is None and not first:
                raise ValueError(f"missing operator in {text!r}")
            q = Fraction(val)
            r0 += -q if sgn == "-" else q
        first = False
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return ExactNumber.normalize(raw, r0)


def format_exact(x: ExactNumber) -> str:
    parts = []
    if x.rational != 0 or not x.terms:
        parts.append(format_rational(x.rational))
    for n, c in x.terms:
        mag = abs(c)
        body = f"sqrt({n})" if mag == 1 else f"{format_rational(mag)}*sqrt({n})"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def exact_sqrt(q: RationalLike) -> ExactNumber:
    return ExactNumber.sqrt(q)


def denest_sqrt(x: ExactNumber) -> ExactNumber:
    """Square root of ``A + B*sqrt(n)`` when it denests, else DomainError.

    Uses sqrt(A + B sqrt n) = sqrt((A+d)/2) + sgn(B) sqrt((A-d)/2) with
    d = sqrt(A^2 - B^2 n) rational.
    """
    if x.is_rational():
        if x.rational < 0:
            raise DomainError("square root of a negative number")
        return ExactNumber.sqrt(x.rational)
    if len(x.terms) != 1:
        raise DomainError("cannot take square root of a multi-radical number")
    if sign_of(x) < 0:
        raise DomainError("square root of a negative number")
    (n, b), = x.terms
    a = x.rational
    d2 = a * a - b * b * n
    if d2 < 0:
        raise DomainError(f"sqrt({x}) does not denest")
    dn, dd = d2.numerator, d2.denominator
    rn, rd = isqrt(dn), isqrt(dd)
    if rn * rn != dn or rd * rd != dd:
        raise DomainError(f"sqrt({x}) does not denest")
    d = Fraction(rn, rd)
    s = 1 if b > 0 else -1
    out = ExactNumber.normalize([(1, (a + d) / 2), (s, (a - d) / 2)])
    return out

