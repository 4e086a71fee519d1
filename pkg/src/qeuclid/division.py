"""Rounding, M1-Euclidean division and gcd in Z[sqrt(m)]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .exact import as_rational
from .field import FieldData, FieldElement, RingElement


class CertificateIncomplete(RuntimeError):
    """No covering pair brought the remainder norm under M1."""


@dataclass(frozen=True)
class DivisionResult:
    quotient: RingElement
    remainder_norm: Fraction
    pair_used: Tuple[int, int]
    signs_used: Tuple[int, int]


def round_half(a0) -> Tuple[int, int, Fraction]:
    """Write a0 = x + s*a with x an integer, s = +-1 and 0 <= a <= 1/2.

    Half-integers round x to the even neighbour; s = +1 when a = 0.
    """
    a0 = as_rational(a0)
    fl = a0.numerator // a0.denominator
    frac = a0 - fl
    if frac < Fraction(1, 2) or (frac == Fraction(1, 2) and fl % 2 == 0):
        x = fl
    else:
        x = fl + 1
    r = a0 - x
    s = -1 if r < 0 else 1
    return x, s, abs(r)


def divide(F: FieldData, xi: FieldElement, all_pairs: bool = False) -> DivisionResult:
    """Quotient gamma with |Norm(xi - gamma)| <= M1, scanning the covering pairs.

    With ``all_pairs`` every pair is tried and the smallest |norm| is kept.
    """
    x, sa, a = round_half(xi.a)
    y, sb, b = round_half(xi.b)
    base = a * a - F.m * b * b
    best = None
    for u, v in F.covering_pairs:
        n = base + F.pair_norm(u, v) + 2 * (a * u - F.m * b * v)
        if abs(n) <= F.M1:
            if best is None or abs(n) < abs(best[0]):
                best = (n, u, v)
            if not all_pairs:
                break
    if best is None:
        raise CertificateIncomplete(f"certificate incomplete: no pair covers ({a}, {b}) for m={F.m}")
    n, u, v = best
    # xi - gamma = sa*(a+u) + sb*(b+v) w, whose norm is f_m(a+u, b+v)
    gamma = RingElement(x - sa * u, y - sb * v)
    return DivisionResult(gamma, n, (u, v), (sa, sb))


def exact_quotient(F: FieldData, alpha: RingElement, beta: RingElement) -> FieldElement:
    """alpha / beta = alpha * conj(beta) / Norm(beta) as rational coordinates."""
    n = beta.norm(F.m)
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    num = alpha.mul(RingElement(beta.x, -beta.y), F.m)
    return FieldElement(Fraction(num.x, n), Fraction(num.y, n))


def divides(F: FieldData, d: RingElement, alpha: RingElement) -> bool:
    if d.is_zero():
        return alpha.is_zero()
    q = exact_quotient(F, alpha, d)
    return q.a.denominator == 1 and q.b.denominator == 1


def normalize_unit_sign(g: RingElement) -> RingElement:
    if g.x < 0 or (g.x == 0 and g.y < 0):
        return -g
    return g


def gcd_steps(F: FieldData, alpha: RingElement, beta: RingElement) -> Tuple[RingElement, List[RingElement]]:
    """Euclidean remainder sequence; returns (gcd, remainders)."""
    if alpha.is_zero() and beta.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    rems = []
    while not beta.is_zero():
        xi = exact_quotient(F, alpha, beta)
        gamma = divide(F, xi).quotient
        r = alpha - gamma.mul(beta, F.m)
        if abs(r.norm(F.m)) > F.M1 * abs(beta.norm(F.m)):  # pragma: no cover - division contract
            raise AssertionError("remainder norm exceeds M1 * |Norm(beta)|")
        alpha, beta = beta, r
        rems.append(r)
    return normalize_unit_sign(alpha), rems


def gcd(F: FieldData, alpha: RingElement, beta: RingElement) -> RingElement:
    """A gcd of alpha and beta in Z[w], defined up to units."""
    return gcd_steps(F, alpha, beta)[0]


def gcd_step_bound(F: FieldData, beta: RingElement) -> int:
    """Upper bound on the number of division steps started from beta."""
    n = abs(beta.norm(F.m))
    if n <= 1:
        return 1
    return math.ceil(math.log(n) / math.log(1 / F.M1)) + 1
