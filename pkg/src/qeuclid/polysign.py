"""Sign of a rational polynomial over an interval with exact endpoints.

Degree <= 2 follows the classical case analysis on the roots of a
quadratic (cases ``minus``, ``zero``, ``a1``, ``a2``, ``b``, ``c``, ``d``,
``e``); higher degrees use Sturm sequences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .exact import ExactNumber, cmp, format_rational, rational_between, sign_of

Number = Union[int, Fraction, ExactNumber]


class Poly:
    """Univariate polynomial with rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, ExactNumber) else ExactNumber(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), Poly(rem)
        quo = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem[: other.degree])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        return self * (1 / self.lead) if self.coeffs else self

    def primitive(self) -> "Poly":
        """Integer-coefficient positive multiple with content 1."""
        from math import gcd, lcm

        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Poly([Fraction(v, g) for v in ints])

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([value])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def scaling_factor(p: Poly, q: Poly):
    """Return k with p == k*q, or None if they are not proportional."""
    if p.is_zero() or q.is_zero():
        return Fraction(1) if p.is_zero() and q.is_zero() else None
    if p.degree != q.degree:
        return None
    k = p.lead / q.lead
    return k if p == q * k else None


# -- text format -------------------------------------------------------------

def format_poly(p: Poly, var: str = "a") -> str:
    if p.is_zero():
        return "0"
    out = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = format_rational(mag) if (mag != 1 or i == 0) else ""
        if body and mono:
            body = body + mono if mag.denominator == 1 else f"({body}){mono}"
        else:
            body = body or mono
        sgn = "-" if c < 0 else ("+" if out else "")
        out.append(sgn + body)
    return "".join(out)


_MONO = re.compile(r"([+-]?)(\(\d+/\d+\)|\d+(?:/\d+)?)?\*?(?:([a-z])(?:\^(\d+))?)?")


def parse_poly(text: str) -> Poly:
    """Parse the ``format_poly`` notation, e.g. ``28a^2+56a-39``."""
    s = text.replace(" ", "")
    if s == "0":
        return Poly()
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        m = _MONO.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r}")
        sgn, c, var, exp = m.groups()
        c = Fraction(c.strip("()")) if c else Fraction(1)
        if sgn == "-":
            c = -c
        k = 0 if var is None else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    n = max(coeffs) + 1
    return Poly([coeffs.get(i, 0) for i in range(n)])


# -- verdicts ----------------------------------------------------------------

POSITIVE = "positive"
NONNEGATIVE = "nonnegative"
NEGATIVE = "negative"
NONPOSITIVE = "nonpositive"
ZERO = "zero"
MIXED = "mixed"

CASE_LABELS = ("minus", "zero", "a1", "a2", "b", "c", "d", "e", "sturm", "lin", "const")


@dataclass(frozen=True)
class Interval:
    lo: ExactNumber
    hi: ExactNumber

    def __post_init__(self):
        object.__setattr__(self, "lo", ExactNumber.coerce(self.lo))
        object.__setattr__(self, "hi", ExactNumber.coerce(self.hi))
        if cmp(self.lo, self.hi) > 0:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def contains(self, x) -> bool:
        return cmp(self.lo, x) <= 0 and cmp(x, self.hi) <= 0

    def contains_interval(self, other: "Interval") -> bool:
        return cmp(self.lo, other.lo) <= 0 and cmp(other.hi, self.hi) <= 0

    def is_point(self) -> bool:
        return cmp(self.lo, self.hi) == 0

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class SignVerdict:
    sign: str
    case: str
    crossing: int = 0  # +1 when the sign goes from - to +, -1 for + to -

    @property
    def nonneg(self) -> bool:
        return self.sign in (POSITIVE, NONNEGATIVE, ZERO)

    @property
    def nonpos(self) -> bool:
        return self.sign in (NEGATIVE, NONPOSITIVE, ZERO)

    @property
    def constant(self) -> bool:
        return self.sign != MIXED

    def negated(self) -> "SignVerdict":
        flip = {POSITIVE: NEGATIVE, NEGATIVE: POSITIVE, NONNEGATIVE: NONPOSITIVE,
                NONPOSITIVE: NONNEGATIVE, ZERO: ZERO, MIXED: MIXED}
        return SignVerdict(flip[self.sign], self.case, -self.crossing)


def _from_signs(s_lo: int, s_hi: int, strict_inside: bool, case: str) -> SignVerdict:
    """Combine endpoint signs for a function that does not change sign inside."""
    signs = {s_lo, s_hi}
    if 1 in signs and -1 in signs:
        return SignVerdict(MIXED, case, 1 if s_hi > 0 else -1)
    if 1 in signs:
        return SignVerdict(POSITIVE if 0 not in signs else NONNEGATIVE, case)
    if -1 in signs:
        return SignVerdict(NEGATIVE if 0 not in signs else NONPOSITIVE, case)
    # both endpoints vanish
    return SignVerdict(ZERO if not strict_inside else NONNEGATIVE, case)


def quad_sign_on_interval(p: Poly, iv: Interval) -> SignVerdict:
    """Sign of a polynomial of degree <= 2 on ``iv``."""
    if p.degree > 2:
        raise ValueError("degree > 2: use poly_sign_on_interval")
    if p.is_zero():
        return SignVerdict(ZERO, "const")
    if p.degree == 0:
        return SignVerdict(POSITIVE if p.lead > 0 else NEGATIVE, "const")
    if p.degree == 1:
        s_lo, s_hi = sign_of(p(iv.lo)), sign_of(p(iv.hi))
        if s_lo == 0 and s_hi == 0:  # point interval at the root
            return SignVerdict(ZERO, "lin")
        if s_lo * s_hi < 0:
            return SignVerdict(MIXED, "lin", s_hi)
        s = s_lo or s_hi
        strict = s_lo != 0 and s_hi != 0
        if s > 0:
            return SignVerdict(POSITIVE if strict else NONNEGATIVE, "lin")
        return SignVerdict(NEGATIVE if strict else NONPOSITIVE, "lin")

    flip = p.lead < 0
    q = -p if flip else p
    gamma, beta, alpha = q.coeffs
    disc = beta * beta - 4 * alpha * gamma
    if disc < 0:
        verdict = SignVerdict(POSITIVE, "minus")
    elif disc == 0:
        x0 = -beta / (2 * alpha)
        verdict = SignVerdict(NONNEGATIVE if iv.contains(x0) else POSITIVE, "zero")
    else:
        root = ExactNumber.sqrt(disc)
        x_minus = (root * -1 - beta) / (2 * alpha)
        x_plus = (root - beta) / (2 * alpha)
        c_hi_m = cmp(iv.hi, x_minus)
        c_lo_p = cmp(iv.lo, x_plus)
        c_lo_m = cmp(iv.lo, x_minus)
        c_hi_p = cmp(iv.hi, x_plus)
        if c_hi_m <= 0:
            verdict = SignVerdict(NONNEGATIVE if c_hi_m == 0 else POSITIVE, "a1")
        elif c_lo_p >= 0:
            verdict = SignVerdict(NONNEGATIVE if c_lo_p == 0 else POSITIVE, "a2")
        elif c_lo_m >= 0 and c_hi_p <= 0:
            touches = c_lo_m == 0 or c_hi_p == 0
            verdict = SignVerdict(NONPOSITIVE if touches else NEGATIVE, "b")
        elif c_lo_m < 0 and c_hi_p > 0:
            verdict = SignVerdict(MIXED, "c", 1)
        elif c_lo_m < 0:
            verdict = SignVerdict(MIXED, "d", -1)
        else:
            verdict = SignVerdict(MIXED, "e", 1)
    return verdict.negated() if flip else verdict


# -- Sturm sequences ---------------------------------------------------------

def sturm_sequence(p: Poly) -> List[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _variations(seq: Sequence[Poly], x) -> int:
    signs = [sign_of(ExactNumber.coerce(s(x))) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, iv: Interval, open_interval: bool = True) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi) or [lo, hi]."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    sq = p // poly_gcd(p, p.derivative()) if p.degree > 0 else p
    if sq.degree <= 0:
        return 0
    seq = sturm_sequence(sq)
    half_open = _variations(seq, iv.lo) - _variations(seq, iv.hi)  # (lo, hi]
    at_lo = sign_of(ExactNumber.coerce(sq(iv.lo))) == 0
    at_hi = sign_of(ExactNumber.coerce(sq(iv.hi))) == 0
    if open_interval:
        return half_open - (1 if at_hi and not iv.is_point() else 0)
    return half_open + (1 if at_lo else 0)


def _odd_part(p: Poly) -> Poly:
    """Product of the squarefree factors occurring with odd multiplicity."""
    out = Poly([1])
    rest = p
    k = 1
    g = poly_gcd(rest, rest.derivative())
    w = rest // g
    while w.degree > 0:
        y = poly_gcd(w, g)
        factor = w // y
        if k % 2 == 1:
            out = out * factor
        w, g = y, g // y
        k += 1
    return out


def poly_sign_on_interval(p: Poly, iv: Interval) -> SignVerdict:
    """Sign of ``p`` on ``iv``; degree <= 2 goes through the quadratic lemma."""
    if p.degree <= 2:
        return quad_sign_on_interval(p, iv)
    s_lo, s_hi = sign_of(p(iv.lo)), sign_of(p(iv.hi))
    odd = _odd_part(p)
    changes = count_roots(odd, iv, open_interval=True) if odd.degree > 0 else 0
    if changes:
        return SignVerdict(MIXED, "sturm", 1 if s_hi > 0 else -1)
    if iv.is_point():
        s = s_lo
    else:
        s = sign_of(ExactNumber.coerce(p(rational_between(iv.lo, iv.hi))))
        if s == 0:
            # interior sample hit a root of even multiplicity; endpoints decide
            s = s_lo or s_hi
            if s == 0:
                s = sign_of(ExactNumber.coerce(p(rational_between(iv.lo, (iv.lo + iv.hi) / 2))))
    any_zero = count_roots(p, iv, open_interval=False) > 0
    if s > 0:
        return SignVerdict(NONNEGATIVE if any_zero else POSITIVE, "sturm")
    if s < 0:
        return SignVerdict(NONPOSITIVE if any_zero else NEGATIVE, "sturm")
    return SignVerdict(ZERO, "sturm")
