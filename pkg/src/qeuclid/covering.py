"""Covering sets, region certificates, and certificate verification.

A certificate tiles S0 = [0,1/2]^2 by x-monotone regions.  Each region is a
counter-clockwise cycle of points joined by axis-parallel segments or by arcs
of branch curves, and is owned by a pair (u, v).  Dominance claims between
curves show that every vertical section of a region lies in the band where
|f_m(a+u, b+v)| <= M.
"""

from __future__ import annotations

import math
import re
from functools import cmp_to_key
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .exact import (DomainError, ExactNumber, cmp, format_exact, format_rational, parse_exact, rational_between,
                    sign_of)
from .field import SUPPORTED, FieldData, builtin_field, custom_field, reduce_to_square
from .hyperbola import (BranchSpec, CoincidentCurves, Curve, Level, Point, curve_intersections, domain,
                        dominates, eval_at, on_curve, same_curve)
from .polysign import Interval, Poly, format_poly, parse_poly, poly_sign_on_interval, scaling_factor

HALF = Fraction(1, 2)


class MalformedCertificate(ValueError):
    pass


# -- covering sets -----------------------------------------------------------

@dataclass(frozen=True)
class CoverQuery:
    point: Tuple[Fraction, Fraction]
    bound: int


def _bounds(z) -> Tuple[Fraction, Fraction]:
    if isinstance(z, ExactNumber):
        if z.is_rational():
            return z.rational, z.rational
        return z.enclosure(64)
    q = Fraction(z)
    return q, q


def _covers_exact(F: FieldData, M: Fraction, a, b, u: int, v: int) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return abs(F.shifted_norm(a, b, u, v)) <= M
    x = ExactNumber.coerce(a) + u
    y = ExactNumber.coerce(b) + v
    f = x * x - y * y * F.m
    return sign_of(f + M) >= 0 and sign_of(-f + M) >= 0


def _as_coord(z):
    if isinstance(z, ExactNumber):
        return z.rational if z.is_rational() else z
    return Fraction(z)


def cover_set(F: FieldData, point, bound: Optional[int] = None, M=None) -> List[Tuple[int, int]]:
    """All (u, v) with |u|, |v| <= bound and |f_m(a+u, b+v)| <= M, sorted.

    ``point`` may be a CoverQuery or an (a, b) pair of rationals or exact
    numbers.  Candidate u values come from integer square roots; every
    candidate is then tested exactly.
    """
    if isinstance(point, CoverQuery):
        point, bound = point.point, point.bound
    if bound is None:
        raise ValueError("bound required")
    M = F.M1 if M is None else Fraction(M)
    a, b = (_as_coord(z) for z in point)
    a_lo, a_hi = _bounds(a)
    b_lo, b_hi = _bounds(b)
    out = set()
    for v in range(-bound, bound + 1):
        y_lo, y_hi = b_lo + v, b_hi + v
        sq_hi = max(y_lo * y_lo, y_hi * y_hi)
        sq_lo = Fraction(0) if y_lo <= 0 <= y_hi else min(y_lo * y_lo, y_hi * y_hi)
        upper = F.m * sq_hi + M
        lower = F.m * sq_lo - M
        r_hi = math.isqrt(math.floor(upper)) + 1
        r_lo = math.isqrt(math.floor(lower)) if lower > 0 else 0
        for lo, hi in ((r_lo - a_hi, r_hi - a_lo), (-r_hi - a_hi, -r_lo - a_lo)):
            u0 = max(math.ceil(lo), -bound)
            u1 = min(math.floor(hi), bound)
            for u in range(u0, u1 + 1):
                if _covers_exact(F, M, a, b, u, v):
                    out.add((u, v))
    return sorted(out)


def cover_set_bruteforce(F: FieldData, point, bound: int, M=None) -> List[Tuple[int, int]]:
    """Reference implementation scanning the whole box."""
    M = F.M1 if M is None else Fraction(M)
    a, b = (_as_coord(z) for z in point)
    return [(u, v) for u in range(-bound, bound + 1) for v in range(-bound, bound + 1)
            if _covers_exact(F, M, a, b, u, v)]


# -- certificate model -------------------------------------------------------

@dataclass(frozen=True)
class Arc:
    u: int
    v: int
    theta: int
    epsilon: int

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return (self.u, self.v, self.theta, self.epsilon)

    def __str__(self) -> str:
        return f"arc[{self.u},{self.v},{self.theta},{self.epsilon}]"


@dataclass
class CertPoint:
    label: str
    x: ExactNumber
    y: ExactNumber
    on: Tuple[str, ...] = ()

    def __post_init__(self):
        self.x = ExactNumber.coerce(self.x)
        self.y = ExactNumber.coerce(self.y)
        self.on = tuple(self.on)

    @property
    def point(self) -> Point:
        return Point(self.x, self.y, self.label)

    @property
    def is_critical(self) -> bool:
        return self.label.startswith("c")


RegionItem = Union[str, Arc]


@dataclass
class Region:
    owner: Tuple[int, int]
    items: List[RegionItem]

    def labels(self) -> List[str]:
        return [it for it in self.items if isinstance(it, str)]


def branch_label(key) -> str:
    return "B[{},{},{},{}]".format(*key)


@dataclass
class Claim:
    """``geq``: lhs >= rhs; ``geqc``: lhs >= c; ``leqc``: lhs <= c."""

    kind: str
    lhs: Tuple[int, int, int, int]
    rhs: Union[Tuple[int, int, int, int], Fraction]
    lo: ExactNumber
    hi: ExactNumber
    poly: Poly
    case: str

    def __post_init__(self):
        if self.kind not in ("geq", "geqc", "leqc"):
            raise MalformedCertificate(f"unknown claim kind {self.kind!r}")
        self.lo = ExactNumber.coerce(self.lo)
        self.hi = ExactNumber.coerce(self.hi)
        self.lhs = tuple(self.lhs)
        self.rhs = tuple(self.rhs) if self.kind == "geq" else Fraction(self.rhs)

    @property
    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    def curves(self, m: int, M: Fraction) -> Tuple[Curve, Curve, int]:
        """(lhs curve, rhs curve, direction) as passed to ``dominates``."""
        lhs = BranchSpec(*self.lhs, m, M)
        if self.kind == "geq":
            return lhs, BranchSpec(*self.rhs, m, M), 1
        return lhs, Level(self.rhs), (1 if self.kind == "geqc" else -1)

    def fact(self, m: int, M: Fraction) -> Tuple[Curve, Curve]:
        """(greater, smaller) established by the claim."""
        lhs, rhs, d = self.curves(m, M)
        return (lhs, rhs) if d > 0 else (rhs, lhs)

    def describe(self) -> str:
        rhs = branch_label(self.rhs) if self.kind == "geq" else format_rational(self.rhs)
        rel = "<=" if self.kind == "leqc" else ">="
        return f"{branch_label(self.lhs)} {rel} {rhs} on [{self.lo}, {self.hi}]"


@dataclass
class Certificate:
    m: int
    M: Fraction
    points: Dict[str, CertPoint] = field(default_factory=dict)
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    regions: List[Region] = field(default_factory=list)
    claims: List[Claim] = field(default_factory=list)

    def add_point(self, p: CertPoint) -> None:
        if p.label in self.points:
            raise MalformedCertificate(f"duplicate point label {p.label}")
        self.points[p.label] = p


def item_label(label: str) -> str:
    return label if label.startswith("c") else f"P{label}"


# -- text format -------------------------------------------------------------

_INT = r"[+-]?\d+"
_BRANCH = rf"B\[({_INT}),({_INT}),({_INT}),({_INT})\]"
_RE_FIELD = re.compile(r"^field\s+m=(\d+)\s+M=(\S+)$")
_RE_POINT = re.compile(r"^point\s+(c?\d+)\s+x=(.+?)\s+y=(.+?)(?:\s+on=(\S+))?$")
_RE_PAIR = re.compile(rf"^pair\s+({_INT})\s+({_INT})$")
_RE_REGION = re.compile(rf"^region\s+owner=\(\s*({_INT})\s*,\s*({_INT})\s*\)\s*:\s*(.*)$")
_RE_ITEM = re.compile(rf"^(?:P(\d+)|(c\d+)|arc\[({_INT}),({_INT}),({_INT}),({_INT})\])$")
_RE_CLAIM = re.compile(
    rf"^claim\s+(geq|geqc|leqc)\s+{_BRANCH}\s+(?:{_BRANCH}|(\S+))\s+on\s+\[(.+?),(.+?)\]"
    r"\s+poly=(\S+)\s+case=(\S+)$")


def parse_certificate(text: str) -> Certificate:
    cert: Optional[Certificate] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if (mt := _RE_FIELD.match(line)):
                if cert is not None:
                    raise MalformedCertificate("duplicate field line")
                cert = Certificate(int(mt.group(1)), Fraction(mt.group(2)))
                continue
            if cert is None:
                raise MalformedCertificate("certificate must start with a field line")
            if (mt := _RE_POINT.match(line)):
                on = tuple(t for t in (mt.group(4) or "").split(";") if t)
                cert.add_point(CertPoint(mt.group(1), parse_exact(mt.group(2)), parse_exact(mt.group(3)), on))
            elif (mt := _RE_PAIR.match(line)):
                cert.pairs.append((int(mt.group(1)), int(mt.group(2))))
            elif (mt := _RE_REGION.match(line)):
                items: List[RegionItem] = []
                for tok in mt.group(3).split():
                    it = _RE_ITEM.match(tok)
                    if not it:
                        raise MalformedCertificate(f"bad region item {tok!r}")
                    if it.group(1) is not None:
                        items.append(it.group(1))
                    elif it.group(2) is not None:
                        items.append(it.group(2))
                    else:
                        items.append(Arc(*(int(it.group(k)) for k in range(3, 7))))
                cert.regions.append(Region((int(mt.group(1)), int(mt.group(2))), items))
            elif (mt := _RE_CLAIM.match(line)):
                g = mt.groups()
                kind = g[0]
                lhs = tuple(int(x) for x in g[1:5])
                if kind == "geq":
                    if g[5] is None:
                        raise MalformedCertificate("geq claim needs two branches")
                    rhs = tuple(int(x) for x in g[5:9])
                else:
                    if g[9] is None:
                        raise MalformedCertificate(f"{kind} claim needs a rational bound")
                    rhs = Fraction(g[9])
                cert.claims.append(Claim(kind, lhs, rhs, parse_exact(g[10]), parse_exact(g[11]),
                                         parse_poly(g[12]), g[13]))
            else:
                raise MalformedCertificate("unrecognised line")
        except MalformedCertificate as exc:
            raise MalformedCertificate(f"line {lineno}: {exc}") from None
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedCertificate(f"line {lineno}: {exc}") from None
    if cert is None:
        raise MalformedCertificate("empty certificate")
    return cert


def serialize_certificate(cert: Certificate) -> str:
    out = [f"field m={cert.m} M={format_rational(cert.M)}"]
    for p in cert.points.values():
        line = f"point {p.label} x={format_exact(p.x)} y={format_exact(p.y)}"
        if p.on:
            line += " on=" + ";".join(p.on)
        out.append(line)
    for u, v in cert.pairs:
        out.append(f"pair {u} {v}")
    for r in cert.regions:
        items = " ".join(str(it) if isinstance(it, Arc) else item_label(it) for it in r.items)
        out.append(f"region owner=({r.owner[0]},{r.owner[1]}): {items}")
    for c in cert.claims:
        rhs = branch_label(c.rhs) if c.kind == "geq" else format_rational(c.rhs)
        out.append(f"claim {c.kind} {branch_label(c.lhs)} {rhs} on [{format_exact(c.lo)},{format_exact(c.hi)}]"
                   f" poly={format_poly(c.poly)} case={c.case}")
    return "\n".join(out) + "\n"


def load_certificate(path) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read())


# -- constraints on points -----------------------------------------------------

_RE_ON_BRANCH = re.compile(rf"^{_BRANCH}$")
_RE_ON_LINE = re.compile(r"^([xy])=(\S+)$")


def parse_constraint(token: str, m: int, M: Fraction):
    if (mt := _RE_ON_BRANCH.match(token)):
        return BranchSpec(*(int(g) for g in mt.groups()), m, M)
    if (mt := _RE_ON_LINE.match(token)):
        return (mt.group(1), Fraction(mt.group(2)))
    raise MalformedCertificate(f"bad point constraint {token!r}")


def constraint_token(c) -> str:
    if isinstance(c, BranchSpec):
        return branch_label(c.key)
    if isinstance(c, Level):
        return f"y={format_rational(c.c)}"
    axis, val = c
    return f"{axis}={format_rational(val)}"


# -- region geometry ---------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    curve: Optional[Curve]  # None for vertical segments
    start: Point
    end: Point

    @property
    def vertical(self) -> bool:
        return self.curve is None

    @property
    def rightward(self) -> bool:
        return cmp(self.start.x, self.end.x) < 0


@dataclass
class ChainPiece:
    curve: Curve
    lo: ExactNumber
    hi: ExactNumber


@dataclass
class RegionGeometry:
    region: Region
    edges: List[Edge]
    xmin: ExactNumber
    xmax: ExactNumber
    lower: List[ChainPiece]
    upper: List[ChainPiece]

    def vertex_xs(self) -> List[ExactNumber]:
        return _sorted_unique([e.start.x for e in self.edges])

    def curve_at(self, chain: List[ChainPiece], lo: ExactNumber, hi: ExactNumber) -> Curve:
        for piece in chain:
            if cmp(piece.lo, lo) <= 0 and cmp(hi, piece.hi) <= 0:
                return piece.curve
        raise KeyError("no chain piece spans the interval")


def _sorted_unique(xs: Iterable[ExactNumber]) -> List[ExactNumber]:
    out: List[ExactNumber] = []
    for x in sorted(xs, key=cmp_to_key(cmp)):
        if not out or cmp(out[-1], x) != 0:
            out.append(x)
    return out


def region_edges(cert: Certificate, region: Region) -> List[Edge]:
    items = list(region.items)
    if len(items) >= 2 and isinstance(items[0], str) and items[-1] == items[0]:
        items = items[:-1]
    if not items or all(isinstance(it, Arc) for it in items):
        raise MalformedCertificate("region without points")
    while isinstance(items[0], Arc):
        items = items[1:] + items[:1]
    seq: List[Tuple[str, Optional[Arc]]] = []
    for i, it in enumerate(items):
        if isinstance(it, Arc):
            if not seq or seq[-1][1] is not None:
                raise MalformedCertificate("two arcs without a point between them")
            seq[-1] = (seq[-1][0], it)
        else:
            if it not in cert.points:
                raise MalformedCertificate(f"dangling point label {item_label(it)}")
            seq.append((it, None))
    if len(seq) < 2:
        raise MalformedCertificate("region boundary does not close")
    edges = []
    for i, (label, arc) in enumerate(seq):
        p = cert.points[label].point
        q = cert.points[seq[(i + 1) % len(seq)][0]].point
        if arc is not None:
            edges.append(Edge(BranchSpec(*arc.key, cert.m, cert.M), p, q))
        elif p.x == q.x:
            edges.append(Edge(None, p, q))
        elif p.y == q.y and p.y.is_rational():
            edges.append(Edge(Level(p.y.rational), p, q))
        else:
            raise MalformedCertificate(f"segment {p} -- {q} is not axis-parallel")
    return edges


def region_geometry(cert: Certificate, region: Region) -> Tuple[Optional[RegionGeometry], List[str]]:
    """Decompose a region into lower and upper chains, reporting defects."""
    problems: List[str] = []
    edges = region_edges(cert, region)
    for e in edges:
        if e.vertical:
            if e.start.same_place(e.end):
                problems.append(f"repeated point {e.start}")
            continue
        if cmp(e.start.x, e.end.x) == 0:
            problems.append(f"arc {e.curve.label()} joins points with equal x")
            continue
        for p in (e.start, e.end):
            if not on_curve(e.curve, p):
                problems.append(f"point {p} is not on {e.curve.label()}")
        lo, hi = (e.start.x, e.end.x) if e.rightward else (e.end.x, e.start.x)
        if isinstance(e.curve, BranchSpec) and not domain(e.curve, Interval(lo, hi)):
            problems.append(f"{e.curve.label()} undefined on part of [{lo}, {hi}]")
    if problems:
        return None, problems
    xs = [e.start.x for e in edges]
    xmin, xmax = _sorted_unique(xs)[0], _sorted_unique(xs)[-1]
    dirs = [e.rightward for e in edges if not e.vertical]
    changes = sum(1 for i in range(len(dirs)) if dirs[i] != dirs[i - 1])
    if not dirs or changes > 2:
        return None, ["boundary is not x-monotone"]
    for e in edges:
        if e.vertical and cmp(e.start.x, xmin) != 0 and cmp(e.start.x, xmax) != 0:
            return None, [f"vertical side at x={e.start.x} is interior to the region"]
    lower = [ChainPiece(e.curve, e.start.x, e.end.x) for e in edges if not e.vertical and e.rightward]
    upper = [ChainPiece(e.curve, e.end.x, e.start.x) for e in edges if not e.vertical and not e.rightward]
    for chain, name in ((lower, "lower"), (upper, "upper")):
        chain.sort(key=cmp_to_key(lambda p, q: cmp(p.lo, q.lo)))
        if not chain or cmp(chain[0].lo, xmin) != 0 or cmp(chain[-1].hi, xmax) != 0 or any(
                cmp(chain[i].hi, chain[i + 1].lo) != 0 for i in range(len(chain) - 1)):
            return None, [f"{name} chain does not span the region"]
    geo = RegionGeometry(region, edges, xmin, xmax, lower, upper)
    # orientation: the rightward chain must lie below the leftward one
    s = rational_between(xmin, min(lower[0].hi, upper[0].hi, key=cmp_to_key(cmp)))
    if cmp(eval_at(lower[0].curve, s), eval_at(upper[0].curve, s)) > 0:
        return None, ["boundary is clockwise"]
    return geo, []


# -- coverage obligations ----------------------------------------------------

def owner_breaks(M: Fraction, owner: Tuple[int, int], lo, hi) -> List[ExactNumber]:
    """Points strictly inside (lo, hi) where the owner's eps=+1 radicand vanishes."""
    u = owner[0]
    r = ExactNumber.sqrt(M)
    out = []
    for x in (r * -1 - u, r - u):
        if cmp(lo, x) < 0 and cmp(x, hi) < 0:
            out.append(x)
    return _sorted_unique(out)


def owner_alternatives(m: int, M: Fraction, owner: Tuple[int, int], iv: Interval,
                       lower: Curve, upper: Curve) -> List[Tuple[str, List[Tuple[Curve, Curve]]]]:
    """Ways to certify that the strip between lower and upper is covered.

    Each alternative is a list of (greater, smaller) facts on ``iv``.  An
    alternative is only offered where its branch curves are defined.
    """
    u, v = owner
    B = lambda th, ep: BranchSpec(u, v, th, ep, m, M)
    alts = []
    if domain(B(1, 1), iv):
        alts.append(("upper-sheet", [(lower, B(1, 1)), (B(1, -1), upper)]))
    if domain(B(-1, 1), iv):
        alts.append(("lower-sheet", [(lower, B(-1, -1)), (B(-1, 1), upper)]))
    rad = Poly([u * u - M, 2 * u, 1])
    if poly_sign_on_interval(rad, iv).nonpos:
        alts.append(("waist", [(lower, B(-1, -1)), (B(1, -1), upper)]))
    if v < 0:
        order = {"lower-sheet": 0, "waist": 1, "upper-sheet": 2}
    else:
        order = {"upper-sheet": 0, "waist": 1, "lower-sheet": 2}
    alts.sort(key=lambda a: order[a[0]])
    return alts


def _fact_key(greater: Curve, smaller: Curve):
    return (greater.key, smaller.key)


class FactBook:
    """Verified (greater, smaller, interval) facts indexed by curve pair."""

    def __init__(self):
        self._facts: Dict[tuple, List[Interval]] = {}

    def add(self, greater: Curve, smaller: Curve, iv: Interval) -> None:
        self._facts.setdefault(_fact_key(greater, smaller), []).append(iv)

    def holds(self, greater: Curve, smaller: Curve, iv: Interval) -> bool:
        if same_curve(greater, smaller):
            return True
        if isinstance(greater, Level) and isinstance(smaller, Level):
            return greater.c >= smaller.c
        ivs = self._facts.get(_fact_key(greater, smaller), [])
        reach = iv.lo
        progress = True
        while progress:
            progress = False
            for j in ivs:
                if cmp(j.lo, reach) <= 0 and cmp(j.hi, reach) > 0:
                    reach = j.hi
                    progress = True
            if cmp(reach, iv.hi) >= 0:
                return True
        return False


def fact_text(greater: Curve, smaller: Curve, iv: Interval) -> str:
    return f"{greater.label()} >= {smaller.label()} on {iv}"


def region_subintervals(M: Fraction, geo: RegionGeometry) -> List[Tuple[Interval, Curve, Curve]]:
    xs = geo.vertex_xs() + owner_breaks(M, geo.region.owner, geo.xmin, geo.xmax)
    xs = _sorted_unique(xs)
    out = []
    for lo, hi in zip(xs, xs[1:]):
        out.append((Interval(lo, hi), geo.curve_at(geo.lower, lo, hi), geo.curve_at(geo.upper, lo, hi)))
    return out


def check_region_coverage(m: int, M: Fraction, geo: RegionGeometry, facts: FactBook) -> List[str]:
    """Missing facts for the region, empty when its coverage is entailed."""
    problems = []
    for iv, lower, upper in region_subintervals(M, geo):
        alts = owner_alternatives(m, M, geo.region.owner, iv, lower, upper)
        best: Optional[List[str]] = None
        for _, needs in alts:
            missing = [fact_text(g, s, iv) for g, s in needs if not facts.holds(g, s, iv)]
            if not missing:
                best = []
                break
            if best is None or len(missing) < len(best):
                best = missing
        if best is None:
            problems.append(f"no owner sheet is defined on {iv}")
        elif best:
            problems.extend(f"missing claim {t}" for t in best)
    return problems


# -- verification ------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    details: List[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    checks: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[str]:
        return [f"{c.name}: {d}" for c in self.checks if not c.passed for d in c.details]

    def render(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}")
            if not c.passed:
                lines.extend(f"  - {d}" for d in c.details)
        lines.append("certificate verified" if self.ok else "certificate REJECTED")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks]}


def critical_points_in_square(F: FieldData) -> List[Tuple[Fraction, Fraction]]:
    return sorted({reduce_to_square(x, y) for x, y in F.critical_points})


def _check_field(cert: Certificate) -> CheckResult:
    res = CheckResult("field", True)
    if cert.m in SUPPORTED and builtin_field(cert.m).M1 != cert.M:
        res.passed = False
        res.details.append(f"M={cert.M} differs from the Euclidean minimum {builtin_field(cert.m).M1}")
    if not 0 < cert.M < 1:
        res.passed = False
        res.details.append("M must lie in (0, 1)")
    return res


def _check_points(cert: Certificate) -> CheckResult:
    res = CheckResult("points", True)
    crit = critical_points_in_square(builtin_field(cert.m)) if cert.m in SUPPORTED else None
    for p in cert.points.values():
        pt = p.point
        if not all(cmp(0, z) <= 0 and cmp(z, HALF) <= 0 for z in (p.x, p.y)):
            res.details.append(f"{item_label(p.label)} lies outside [0,1/2]^2")
        curves = []
        for tok in p.on:
            c = parse_constraint(tok, cert.m, cert.M)
            if isinstance(c, tuple):
                axis, val = c
                if (p.x if axis == "x" else p.y) != ExactNumber(val):
                    res.details.append(f"{item_label(p.label)} violates {tok}")
                if axis == "y":
                    curves.append(Level(val))
            else:
                if not on_curve(c, pt):
                    res.details.append(f"{item_label(p.label)} is not on {tok}")
                curves.append(c)
        for i in range(len(curves)):
            for j in range(i + 1, len(curves)):
                try:
                    found = curve_intersections(curves[i], curves[j], 0, HALF)
                except CoincidentCurves:
                    continue
                if not any(q.same_place(pt) for q in found):
                    res.details.append(f"{item_label(p.label)} is not an intersection of "
                                       f"{curves[i].label()} and {curves[j].label()}")
        if p.is_critical and crit is not None:
            if not (p.x.is_rational() and p.y.is_rational() and (p.x.rational, p.y.rational) in crit):
                res.details.append(f"{p.label} is not a critical point of m={cert.m}")
    res.passed = not res.details
    return res


@dataclass
class ClaimCheck:
    claim: Claim
    ok: bool
    message: str = ""
    proof: object = None


def check_claim(cert: Certificate, claim: Claim) -> ClaimCheck:
    lhs, rhs, d = claim.curves(cert.m, cert.M)
    try:
        if cmp(claim.lo, claim.hi) > 0:
            return ClaimCheck(claim, False, "empty interval")
        proof = dominates(lhs, rhs, claim.interval, d)
    except DomainError as exc:
        return ClaimCheck(claim, False, str(exc))
    k = scaling_factor(claim.poly, proof.poly)
    if k is None or k <= 0:
        return ClaimCheck(claim, False, f"stated polynomial {format_poly(claim.poly)} does not match "
                                        f"recomputed {format_poly(proof.poly)}", proof)
    if not proof.holds:
        return ClaimCheck(claim, False, f"claim is false: {proof.reason}", proof)
    if proof.verdict is not None and proof.verdict.case != claim.case:
        return ClaimCheck(claim, False, f"stated case {claim.case} but recomputed case {proof.verdict.case}", proof)
    return ClaimCheck(claim, True, "", proof)


def verify(cert: Certificate) -> VerificationReport:
    """Check a certificate; see the module docstring for the argument."""
    checks = [_check_field(cert), _check_points(cert)]

    claim_res = CheckResult("claims", True)
    facts = FactBook()
    for claim in cert.claims:
        cc = check_claim(cert, claim)
        if cc.ok:
            g, s = claim.fact(cert.m, cert.M)
            facts.add(g, s, claim.interval)
        else:
            claim_res.details.append(f"{claim.describe()}: {cc.message}")
    claim_res.passed = not claim_res.details
    checks.append(claim_res)

    bound_res = CheckResult("boundaries", True)
    geos: List[RegionGeometry] = []
    pairs = set(cert.pairs)
    for idx, region in enumerate(cert.regions):
        tag = f"region {idx} owner={region.owner}"
        if region.owner not in pairs:
            bound_res.details.append(f"{tag}: owner is not a listed pair")
        try:
            geo, problems = region_geometry(cert, region)
        except MalformedCertificate as exc:
            geo, problems = None, [str(exc)]
        bound_res.details.extend(f"{tag}: {p}" for p in problems)
        if geo is not None:
            if cmp(geo.xmin, 0) < 0 or cmp(geo.xmax, HALF) > 0:
                bound_res.details.append(f"{tag}: leaves the strip 0 <= a <= 1/2")
            geos.append(geo)
    bound_res.passed = not bound_res.details
    checks.append(bound_res)

    cov_res = CheckResult("coverage", True)
    for geo in geos:
        for p in check_region_coverage(cert.m, cert.M, geo, facts):
            cov_res.details.append(f"region owner={geo.region.owner}: {p}")
    cov_res.passed = not cov_res.details
    checks.append(cov_res)

    checks.append(_check_tiling(geos))
    return VerificationReport(checks)


def _check_tiling(geos: Sequence[RegionGeometry]) -> CheckResult:
    """Every vertical slab must be stacked from b=0 up to b=1/2."""
    res = CheckResult("tiling", True)
    if not geos:
        res.passed = False
        res.details.append("no regions")
        return res
    xs = _sorted_unique([ExactNumber(0), ExactNumber(HALF)] + [x for g in geos for x in g.vertex_xs()])
    xs = [x for x in xs if cmp(0, x) <= 0 and cmp(x, HALF) <= 0]
    bottom, top = Level(0), Level(HALF)
    for lo, hi in zip(xs, xs[1:]):
        links: Dict[tuple, List[Curve]] = {}
        for g in geos:
            if cmp(g.xmin, lo) <= 0 and cmp(hi, g.xmax) <= 0:
                lc = g.curve_at(g.lower, lo, hi)
                uc = g.curve_at(g.upper, lo, hi)
                links.setdefault(lc.key, []).append(uc)
        seen = {bottom.key}
        frontier = [bottom]
        reached = False
        while frontier and not reached:
            nxt = []
            for c in frontier:
                for d in links.get(c.key, []):
                    if d.key == top.key:
                        reached = True
                    if d.key not in seen:
                        seen.add(d.key)
                        nxt.append(d)
            frontier = nxt
        if not reached:
            res.details.append(f"slab [{lo}, {hi}] is not stacked from b=0 to b=1/2")
    res.passed = not res.details
    return res


def field_of(cert: Certificate) -> FieldData:
    if cert.m in SUPPORTED and builtin_field(cert.m).M1 == cert.M:
        return builtin_field(cert.m)
    return custom_field(cert.m, cert.M, tuple(cert.pairs))


def shipped_certificate_text(m: int) -> str:
    from importlib.resources import files

    res = files("qeuclid").joinpath("certificates", f"m{m}.cert")
    if not res.is_file():
        raise FileNotFoundError(f"no shipped certificate for m={m}")
    return res.read_text(encoding="utf-8")


def shipped_certificate(m: int) -> Certificate:
    return parse_certificate(shipped_certificate_text(m))
