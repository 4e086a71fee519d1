"""Hyperbola branches b = -v + theta*sqrt(((a+u)^2 - eps*M)/m) and comparisons.

A comparison ``lhs(a) >= rhs(a)`` on an interval is reduced to a sign
condition on a rational polynomial by repeatedly squaring: the difference is
written as P - N with P, N sums of nonnegative terms (coefficient signs are
certified on the interval), and P - N >= 0 is replaced by P^2 - N^2 >= 0,
which has fewer square roots.  Radicands are polynomials in ``a`` that are
nonnegative on the interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .exact import DomainError, ExactNumber, cmp, denest_sqrt, format_rational, sign_of
from .field import FieldData
from .polysign import (MIXED, NEGATIVE, POSITIVE, Interval, Poly, SignVerdict, format_poly,
                       poly_sign_on_interval)

UNIT = Interval(0, Fraction(1, 2))


class CoincidentCurves(ValueError):
    pass


@dataclass(frozen=True)
class BranchSpec:
    """The branch B_{u,v}^{theta,eps} of |f_m(a+u, b+v)| = M."""

    u: int
    v: int
    theta: int
    epsilon: int
    m: int
    M: Fraction

    @classmethod
    def of(cls, F: FieldData, u: int, v: int, theta: int, epsilon: int) -> "BranchSpec":
        return cls(u, v, theta, epsilon, F.m, F.M1)

    def __post_init__(self):
        if self.theta not in (1, -1) or self.epsilon not in (1, -1):
            raise ValueError("theta and epsilon must be +1 or -1")
        object.__setattr__(self, "M", Fraction(self.M))

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return (self.u, self.v, self.theta, self.epsilon)

    def radicand(self) -> Poly:
        """(a+u)^2 - eps*M."""
        return Poly([self.u * self.u - self.epsilon * self.M, 2 * self.u, 1])

    def scaled_radicand(self) -> Poly:
        """((a+u)^2 - eps*M) / m, the quantity under the square root."""
        return self.radicand() * Fraction(1, self.m)

    def direction(self) -> int:
        """+1 if increasing on [0, 1/2], -1 if decreasing."""
        return self.theta if self.u >= 0 else -self.theta

    def label(self) -> str:
        return f"B[{self.u},{self.v},{self.theta},{self.epsilon}]"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class Level:
    """Horizontal line b = c."""

    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))

    @property
    def key(self):
        return ("level", self.c)

    def label(self) -> str:
        return format_rational(self.c)

    def __str__(self) -> str:
        return self.label()


Curve = Union[BranchSpec, Level]


@dataclass(frozen=True)
class Point:
    x: ExactNumber
    y: ExactNumber
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "x", ExactNumber.coerce(self.x))
        object.__setattr__(self, "y", ExactNumber.coerce(self.y))

    def same_place(self, other: "Point") -> bool:
        return self.x == other.x and self.y == other.y

    def __str__(self) -> str:
        tag = f"P{self.label} " if self.label is not None else ""
        return f"{tag}({self.x}, {self.y})"


def same_curve(c1: Curve, c2: Curve) -> bool:
    return c1.key == c2.key


# -- evaluation --------------------------------------------------------------

def domain(B: BranchSpec, iv: Interval = UNIT) -> bool:
    """True iff the radicand is nonnegative on all of ``iv``."""
    if B.epsilon < 0:
        return True
    return poly_sign_on_interval(B.radicand(), iv).nonneg


def eval_at(B: Curve, a) -> ExactNumber:
    """Exact value of the curve at ``a`` (rational or r1 + r2*sqrt(n))."""
    if isinstance(B, Level):
        return ExactNumber(B.c)
    a = ExactNumber.coerce(a)
    rad = B.scaled_radicand()(a)
    if sign_of(rad) < 0:
        raise DomainError(f"{B.label()} undefined at a = {a}")
    root = denest_sqrt(rad)
    return root * B.theta - B.v


def on_curve(B: Curve, p: Point) -> bool:
    """Exact membership test that needs no square roots."""
    if isinstance(B, Level):
        return p.y == ExactNumber(B.c)
    t = p.y + B.v
    if sign_of(t) * B.theta < 0:
        return False
    return (t * t) * B.m == B.radicand()(p.x)


# -- intersections -----------------------------------------------------------

def _poly_roots(p: Poly) -> List[ExactNumber]:
    if p.degree == 1:
        return [ExactNumber(-p[0] / p[1])]
    if p.degree == 2:
        c, b, a = p.coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        if disc == 0:
            return [ExactNumber(-b / (2 * a))]
        r = ExactNumber.sqrt(disc)
        roots = [(r * -1 - b) / (2 * a), (r - b) / (2 * a)]
        roots.sort(key=lambda z: z.enclosure(64)[0])
        if cmp(roots[0], roots[1]) > 0:
            roots.reverse()
        return roots
    if p.degree <= 0:
        return []
    raise ValueError("degree > 2")


def _in_range(x: ExactNumber, lo, hi) -> bool:
    return (lo is None or cmp(lo, x) <= 0) and (hi is None or cmp(x, hi) <= 0)


def curve_intersections(c1: Curve, c2: Curve, lo=0, hi=Fraction(1, 2)) -> List[Point]:
    """All points of c1 and c2 with lo <= x <= hi, sorted by x."""
    if same_curve(c1, c2):
        raise CoincidentCurves(f"{c1.label()} and {c2.label()} coincide")
    if isinstance(c1, Level) and isinstance(c2, Level):
        return []
    if isinstance(c1, Level):
        c1, c2 = c2, c1
    out: List[Point] = []
    if isinstance(c2, Level):
        B, c = c1, c2.c
        t = c + B.v
        if t * B.theta < 0:
            return []
        K = B.epsilon * B.M + B.m * t * t
        if K < 0:
            return []
        r = ExactNumber.sqrt(K)
        xs = [r * -1 - B.u] if K == 0 else [r * -1 - B.u, r - B.u]
        out = [Point(x, c) for x in xs if _in_range(x, lo, hi)]
        return out
    B1, B2 = c1, c2
    if B1.m != B2.m or B1.M != B2.M:
        raise ValueError("branches from different fields")
    R1, R2 = B1.scaled_radicand(), B2.scaled_radicand()
    d = B1.v - B2.v
    if d == 0:
        diff = R1 - R2
        if diff.is_zero():
            # same radicand, opposite theta: meet only where the radicand vanishes
            roots = _poly_roots(R1)
            cands = roots
        elif diff.degree == 0:
            return []
        else:
            cands = _poly_roots(diff)
        for x in cands:
            if not _in_range(x, lo, hi):
                continue
            rad = R1(x)
            if sign_of(rad) < 0:
                continue
            if B1.theta != B2.theta and not rad.is_zero():
                continue
            y = eval_at(B1, x) if x.is_rational() or rad.is_zero() else None
            if y is None:
                y = eval_at(B1, x)
            out.append(Point(x, y))
        return out
    L = (R1 - R2) - Fraction(d * d)
    Q = L * L - R2 * (4 * d * d)
    if Q.is_zero():
        raise CoincidentCurves(f"{B1.label()} and {B2.label()} coincide")
    for x in _poly_roots(Q):
        if not _in_range(x, lo, hi):
            continue
        s2 = L(x) / (2 * d * B2.theta)
        if sign_of(s2) < 0:
            continue
        s1 = (s2 * B2.theta + d) * B1.theta
        if sign_of(s1) < 0:
            continue
        out.append(Point(x, s2 * B2.theta - B2.v))
    return out


def intersect(B1: Curve, B2: Curve) -> List[Point]:
    """Intersection points with x in [0, 1/2]."""
    return curve_intersections(B1, B2, 0, Fraction(1, 2))


def intersect_line(B: Curve, axis: str, c) -> List[Point]:
    """Points of B on the line x=c or y=c inside the square [0,1/2]^2."""
    c = Fraction(c)
    half = Fraction(1, 2)
    if axis == "y":
        pts = curve_intersections(B, Level(c), 0, half)
        return pts if 0 <= c <= half else []
    if axis != "x":
        raise ValueError("axis must be 'x' or 'y'")
    if not 0 <= c <= half:
        return []
    try:
        y = eval_at(B, c)
    except DomainError:
        return []
    if cmp(y, 0) < 0 or cmp(y, half) > 0:
        return []
    return [Point(c, y)]


# -- symbolic radical expressions in a ----------------------------------------

class RadicalExpr:
    """p0(a) + sum coeff_i(a) * sqrt(radicand_i(a)), all polynomials."""

    __slots__ = ("p0", "terms")

    def __init__(self, p0: Poly, terms: Optional[Dict[Poly, Poly]] = None):
        self.p0 = p0
        self.terms = {r: c for r, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def of_curve(cls, c: Curve) -> "RadicalExpr":
        if isinstance(c, Level):
            return cls(Poly([c.c]))
        return cls(Poly([-c.v]), {c.scaled_radicand(): Poly([c.theta])})

    def __add__(self, other: "RadicalExpr") -> "RadicalExpr":
        terms = dict(self.terms)
        for r, c in other.terms.items():
            terms[r] = terms.get(r, Poly()) + c
        return RadicalExpr(self.p0 + other.p0, terms)

    def __neg__(self) -> "RadicalExpr":
        return RadicalExpr(-self.p0, {r: -c for r, c in self.terms.items()})

    def __sub__(self, other: "RadicalExpr") -> "RadicalExpr":
        return self + (-other)

    def __mul__(self, other: "RadicalExpr") -> "RadicalExpr":
        p0 = self.p0 * other.p0
        terms: Dict[Poly, Poly] = {}

        def put(r: Poly, c: Poly):
            terms[r] = terms.get(r, Poly()) + c

        for r, c in other.terms.items():
            put(r, self.p0 * c)
        for r, c in self.terms.items():
            put(r, other.p0 * c)
            for r2, c2 in other.terms.items():
                if r == r2:
                    p0 = p0 + c * c2 * r
                else:
                    put(r * r2, c * c2)
        return RadicalExpr(p0, terms)

    def pieces(self) -> List[Tuple[Optional[Poly], Poly]]:
        """(radicand or None, coefficient) for every nonzero part."""
        out: List[Tuple[Optional[Poly], Poly]] = []
        if not self.p0.is_zero():
            out.append((None, self.p0))
        out.extend(self.terms.items())
        return out

    def __str__(self) -> str:
        parts = []
        if not self.p0.is_zero() or not self.terms:
            parts.append(f"({format_poly(self.p0)})")
        for r, c in self.terms.items():
            parts.append(f"({format_poly(c)})*sqrt({format_poly(r)})")
        return " + ".join(parts)


@dataclass
class SideCondition:
    poly: Poly
    verdict: SignVerdict
    role: str

    def __str__(self) -> str:
        return f"{self.role}: {format_poly(self.poly)} is {self.verdict.sign} (case {self.verdict.case})"


@dataclass
class DominanceProof:
    lhs: Curve
    rhs: Curve
    interval: Interval
    poly: Poly
    verdict: Optional[SignVerdict]
    holds: bool
    steps: List[str] = field(default_factory=list)
    side_conditions: List[SideCondition] = field(default_factory=list)
    reason: str = ""
    direction: int = 1

    def __str__(self) -> str:
        rel = ">=" if self.direction > 0 else "<="
        lines = [f"{self.lhs.label()} {rel} {self.rhs.label()} on {self.interval}: "
                 f"{format_poly(self.poly)} ({self.verdict.case if self.verdict else '-'}) "
                 f"{'holds' if self.holds else 'FAILS'}"]
        lines += [f"  step: {s}" for s in self.steps]
        lines += [f"  side: {s}" for s in self.side_conditions]
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        return "\n".join(lines)


def dominates(lhs: Curve, rhs: Curve, iv: Interval, direction: int = 1) -> DominanceProof:
    """Prove or refute lhs(a) >= rhs(a) for all a in ``iv``.

    With ``direction=-1`` the goal is lhs <= rhs; the reported polynomial is
    then the reduction of lhs - rhs and the claim holds when it is nonpositive.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    for c in (lhs, rhs):
        if isinstance(c, BranchSpec) and not domain(c, iv):
            raise DomainError(f"{c.label()} is undefined on part of {iv}")
    expr = RadicalExpr.of_curve(lhs) - RadicalExpr.of_curve(rhs)
    if direction < 0:
        expr = -expr
    proof = DominanceProof(lhs, rhs, iv, Poly(), None, False, direction=direction)
    proof.steps.append(str(expr))
    while True:
        if not expr.terms:
            final = expr.p0.primitive()
            verdict = poly_sign_on_interval(final, iv)
            proof.holds = verdict.nonneg
            if not proof.holds:
                proof.reason = f"reduced polynomial is {verdict.sign}"
            proof.poly = final * direction
            proof.verdict = verdict if direction > 0 else verdict.negated()
            return proof
        pos: List[Tuple[Optional[Poly], Poly]] = []
        neg: List[Tuple[Optional[Poly], Poly]] = []
        for rad, coeff in expr.pieces():
            v = poly_sign_on_interval(coeff, iv)
            proof.side_conditions.append(
                SideCondition(coeff, v, "rational part" if rad is None else f"coefficient of sqrt({format_poly(rad)})"))
            if v.sign == MIXED:
                proof.reason = f"coefficient {format_poly(coeff)} changes sign on {iv}"
                proof.poly = coeff
                proof.verdict = v
                return proof
            (pos if v.nonneg else neg).append((rad, coeff))
        if not neg:
            proof.poly = Poly([direction])
            proof.verdict = SignVerdict(POSITIVE if direction > 0 else NEGATIVE, "const")
            proof.holds = True
            return proof
        if not pos:
            proof.poly = Poly([-direction])
            proof.verdict = SignVerdict(NEGATIVE if direction > 0 else POSITIVE, "const")
            proof.reason = "every part has the wrong sign"
            return proof
        P = _assemble(pos)
        N = -_assemble(neg)
        reduced = P * P - N * N
        if len(reduced.terms) >= len(expr.terms):
            proof.reason = "squaring does not reduce the number of radicals"
            return proof
        expr = reduced
        proof.steps.append(str(expr))


def _assemble(parts) -> RadicalExpr:
    p0 = Poly()
    terms: Dict[Poly, Poly] = {}
    for rad, coeff in parts:
        if rad is None:
            p0 = p0 + coeff
        else:
            terms[rad] = coeff
    return RadicalExpr(p0, terms)
