"""Norm form data for the real quadratic fields Q(sqrt(m)), m != 1 mod 4."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .exact import as_rational

SUPPORTED = (2, 3, 6, 7, 11, 19)


class UnsupportedField(ValueError):
    pass


@dataclass(frozen=True)
class FieldData:
    m: int
    M1: Fraction
    critical_points: Tuple[Tuple[Fraction, Fraction], ...]
    covering_pairs: Tuple[Tuple[int, int], ...]
    _fuv: Dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def discriminant(self) -> int:
        return 4 * self.m

    @property
    def M(self) -> Fraction:
        return self.M1

    def norm(self, a, b) -> Fraction:
        return norm(self, a, b)

    def shifted_norm(self, a, b, u: int, v: int) -> Fraction:
        return shifted_norm(self, a, b, u, v)

    def pair_norm(self, u: int, v: int) -> int:
        """f_m(u, v), memoised per field."""
        key = (u, v)
        val = self._fuv.get(key)
        if val is None:
            val = u * u - self.m * v * v
            self._fuv[key] = val
        return val


@dataclass(frozen=True)
class FieldElement:
    """a + b*sqrt(m) with rational coordinates."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))


@dataclass(frozen=True)
class RingElement:
    """x + y*sqrt(m) with integer coordinates."""

    x: int
    y: int

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.x, -self.y)

    def mul(self, other: "RingElement", m: int) -> "RingElement":
        return RingElement(self.x * other.x + m * self.y * other.y, self.x * other.y + self.y * other.x)

    def norm(self, m: int) -> int:
        return self.x * self.x - m * self.y * self.y

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}w"


# Euclidean minima and critical points; covering pairs in the order they are tried.
_TABLE = {
    2: ("1/2", [("0", "1/2")], [(0, 0)]),
    3: ("1/2", [("1/2", "1/2")], [(0, 0), (-1, 0)]),
    6: ("3/4", [("1/2", "1/2")], [(0, 0), (1, 0), (-2, -1)]),
    7: ("9/14", [("1/2", "5/14"), ("1/2", "9/14")], [(0, 0), (1, 0), (-4, 1), (-2, -1)]),
    11: (
        "19/22",
        [("1/2", "15/22"), ("1/2", "7/22")],
        # (-2, -1) is used by the covering argument and is required for totality
        [(0, 0), (1, 0), (-6, -2), (-2, -1), (-5, 1), (5, -2), (25, -8)],
    ),
    19: (
        "170/171",
        [("0", "20/57"), ("0", "37/57")],
        [(0, 0), (1, 0), (-2, 0), (2, -1), (-7, 1), (-3, -1), (7, -2), (-6, 1),
         (991, 227), (-19, 4), (-80, 18), (-430, -99), (90, -21)],
    ),
}


@lru_cache(maxsize=None)
def builtin_field(m: int) -> FieldData:
    if m not in _TABLE:
        raise UnsupportedField(f"unsupported m={m}; supported values: {', '.join(map(str, SUPPORTED))}")
    M1, crit, pairs = _TABLE[m]
    return FieldData(
        m=m,
        M1=Fraction(M1),
        critical_points=tuple((Fraction(x), Fraction(y)) for x, y in crit),
        covering_pairs=tuple(pairs),
    )


def custom_field(m: int, M, pairs=(), critical_points=()) -> FieldData:
    """Field data for a user-supplied m and bound (used by search)."""
    if m <= 1 or m % 4 == 1:
        raise UnsupportedField(f"m={m} must be > 1 and not 1 mod 4")
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            raise UnsupportedField(f"m={m} is not squarefree")
        d += 1
    return FieldData(m, Fraction(M), tuple(critical_points), tuple(pairs))


def norm(F: FieldData, a, b) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    return a * a - F.m * b * b


def shifted_norm(F: FieldData, a, b, u: int, v: int) -> Fraction:
    """f_m(a+u, b+v) via f_m(a,b) + f_m(u,v) + 2(au - m b v)."""
    a, b = as_rational(a), as_rational(b)
    return a * a - F.m * b * b + F.pair_norm(u, v) + 2 * (a * u - F.m * b * v)


def reduce_to_square(a, b) -> Tuple[Fraction, Fraction]:
    """Image of (a, b) in [0,1/2]^2 under integer translations and sign changes."""
    from .division import round_half

    _, _, ra = round_half(as_rational(a))
    _, _, rb = round_half(as_rational(b))
    return ra, rb
