"""Automatic construction of covering certificates.

Uncovered parts of S0 are kept as x-monotone pieces: an x-range together with
a lower and an upper chain of curves.  Applying a pair (u, v) cuts every piece
along the edges of the pair's band, so every vertex that ever appears is an
intersection of two curves or lies on a rational vertical line, and therefore
has exact coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from .covering import (HALF, Arc, Certificate, CertPoint, Claim, FactBook, MalformedCertificate, Region,
                       constraint_token, cover_set, critical_points_in_square, owner_alternatives, owner_breaks,
                       region_geometry, region_subintervals)
from .exact import DomainError, ExactNumber, cmp, rational_between, simplest_between
from .field import SUPPORTED, FieldData
from .hyperbola import BranchSpec, CoincidentCurves, Curve, Level, Point, curve_intersections, domain, dominates, \
    eval_at, on_curve, same_curve
from .polysign import Interval, Poly


@dataclass(frozen=True)
class Seg:
    curve: Curve
    lo: ExactNumber
    hi: ExactNumber


Chain = Tuple[Seg, ...]


@dataclass(frozen=True)
class Piece:
    lo: ExactNumber
    hi: ExactNumber
    lower: Chain
    upper: Chain


class PointBook:
    """Exactly known points, so that vertices at irrational x can be located."""

    def __init__(self):
        self._by_x: Dict[ExactNumber, List[Point]] = {}

    def add(self, p: Point) -> None:
        bucket = self._by_x.setdefault(p.x, [])
        if not any(q.same_place(p) for q in bucket):
            bucket.append(p)

    def find(self, curve: Curve, x: ExactNumber) -> Point:
        x = ExactNumber.coerce(x)
        if x.is_rational():
            return Point(x, eval_at(curve, x.rational))
        for p in self._by_x.get(x, []):
            if on_curve(curve, p):
                return p
        p = Point(x, eval_at(curve, x))
        self.add(p)
        return p


def _key(x):
    return cmp_to_key(cmp)(x)


def _unique(xs) -> List[ExactNumber]:
    out: List[ExactNumber] = []
    for x in sorted((ExactNumber.coerce(z) for z in xs), key=_key):
        if not out or cmp(out[-1], x) != 0:
            out.append(x)
    return out


def breaks(chain: Chain) -> List[ExactNumber]:
    return [s.lo for s in chain] + [chain[-1].hi]


def curve_on(chain: Chain, lo, hi) -> Curve:
    for s in chain:
        if cmp(s.lo, lo) <= 0 and cmp(hi, s.hi) <= 0:
            return s.curve
    raise KeyError("chain does not span the interval")


def restrict(chain: Chain, lo, hi) -> Chain:
    out = []
    for s in chain:
        a = s.lo if cmp(s.lo, lo) > 0 else lo
        b = s.hi if cmp(s.hi, hi) < 0 else hi
        if cmp(a, b) < 0:
            out.append(Seg(s.curve, a, b))
    return tuple(out)


def _merge(segs: List[Seg]) -> Chain:
    out: List[Seg] = []
    for s in segs:
        if out and same_curve(out[-1].curve, s.curve):
            out[-1] = Seg(s.curve, out[-1].lo, s.hi)
        else:
            out.append(s)
    return tuple(out)


def _elementary(c1: Chain, c2: Chain, book: PointBook):
    """Yield (lo, hi, curve1, curve2) on which neither curve crosses the other."""
    xs = _unique(breaks(c1) + breaks(c2))
    for a, b in zip(xs, xs[1:]):
        A, B = curve_on(c1, a, b), curve_on(c2, a, b)
        if same_curve(A, B):
            yield a, b, A, B
            continue
        cuts = []
        for p in curve_intersections(A, B, a, b):
            book.add(p)
            if cmp(a, p.x) < 0 and cmp(p.x, b) < 0:
                cuts.append(p.x)
        pts = [a] + _unique(cuts) + [b]
        for s, t in zip(pts, pts[1:]):
            yield s, t, A, B


def _compare(A: Curve, B: Curve, s, t) -> int:
    if same_curve(A, B):
        return 0
    q = rational_between(s, t)
    return cmp(eval_at(A, q), eval_at(B, q))


def combine(c1: Chain, c2: Chain, take_max: bool, book: PointBook) -> Chain:
    segs = []
    for s, t, A, B in _elementary(c1, c2, book):
        c = _compare(A, B, s, t)
        pick = A if (c >= 0) == take_max else B
        if c == 0:
            pick = A
        segs.append(Seg(pick, s, t))
    return _merge(segs)


def positive_parts(top: Chain, bottom: Chain, book: PointBook) -> List[Tuple[ExactNumber, ExactNumber]]:
    """Maximal intervals on which top > bottom."""
    out: List[List[ExactNumber]] = []
    for s, t, A, B in _elementary(top, bottom, book):
        if _compare(A, B, s, t) > 0:
            if out and cmp(out[-1][1], s) == 0:
                out[-1][1] = t
            else:
                out.append([s, t])
    return [(a, b) for a, b in out]


# -- bands -------------------------------------------------------------------

def band(F: FieldData, pair: Tuple[int, int], M: Fraction, book: PointBook) -> Tuple[Chain, Chain]:
    """Lower and upper chains of {b in [0,1/2] : |f(a+u, b+v)| <= M} on [0, 1/2].

    Where the set is empty the upper chain is raised to the lower one.
    """
    u, v = pair
    m = F.m
    zero, half = ExactNumber(0), ExactNumber(HALF)
    B = lambda th, ep: BranchSpec(u, v, th, ep, m, M)
    xs = [zero] + owner_breaks(M, pair, zero, half) + [half]
    bottom, top = Level(0), Level(HALF)
    lower: List[Seg] = []
    upper: List[Seg] = []
    for a, b in zip(xs, xs[1:]):
        iv = Interval(a, b)
        if v >= 0:
            lo_curve = B(1, 1) if domain(B(1, 1), iv) else None
            hi_curve = B(1, -1)
        else:
            lo_curve = B(-1, -1)
            hi_curve = B(-1, 1) if domain(B(-1, 1), iv) else None
        lo_c = (Seg(bottom, a, b),) if lo_curve is None else combine(
            (Seg(lo_curve, a, b),), (Seg(bottom, a, b),), True, book)
        hi_c = (Seg(top, a, b),) if hi_curve is None else combine(
            (Seg(hi_curve, a, b),), (Seg(top, a, b),), False, book)
        lower.extend(lo_c)
        upper.extend(hi_c)
    lower_c, upper_c = _merge(lower), _merge(upper)
    return lower_c, combine(upper_c, lower_c, True, book)


def cover_step(piece: Piece, lower_band: Chain, upper_band: Chain, book: PointBook):
    """Split a piece into the part inside the band and the parts below/above it."""
    bl = restrict(lower_band, piece.lo, piece.hi)
    bh = restrict(upper_band, piece.lo, piece.hi)
    L, U = piece.lower, piece.upper
    new_l = combine(L, bl, True, book)
    new_u = combine(U, bh, False, book)
    covered = [Piece(a, b, restrict(new_l, a, b), restrict(new_u, a, b))
               for a, b in positive_parts(new_u, new_l, book)]
    t = combine(U, bl, False, book)
    below = [Piece(a, b, restrict(L, a, b), restrict(t, a, b)) for a, b in positive_parts(t, L, book)]
    s = combine(L, bh, True, book)
    above = [Piece(a, b, restrict(s, a, b), restrict(U, a, b)) for a, b in positive_parts(U, s, book)]
    return covered, below + above


def rectangle(x0=0, x1=HALF, y0=0, y1=HALF) -> Piece:
    x0, x1 = ExactNumber.coerce(x0), ExactNumber.coerce(x1)
    return Piece(x0, x1, (Seg(Level(Fraction(y0)), x0, x1),), (Seg(Level(Fraction(y1)), x0, x1),))


def piece_vertices(piece: Piece, book: PointBook) -> List[Point]:
    """Boundary vertices in counter-clockwise order, starting at the lower left."""
    out: List[Point] = []

    def push(p: Point):
        if not out or not out[-1].same_place(p):
            out.append(p)

    for s in piece.lower:
        push(book.find(s.curve, s.lo))
    push(book.find(piece.lower[-1].curve, piece.hi))
    push(book.find(piece.upper[-1].curve, piece.hi))
    for s in reversed(piece.upper):
        push(book.find(s.curve, s.lo))
    if len(out) > 1 and out[-1].same_place(out[0]):
        out.pop()
    return out


# -- certificate assembly ----------------------------------------------------

class CertificateBuilder:
    def __init__(self, F: FieldData, M: Fraction, book: PointBook):
        self.F = F
        self.M = M
        self.book = book
        self.cert = Certificate(F.m, M)
        self._labels: List[Tuple[Point, str]] = []
        self._on: Dict[str, List[str]] = {}
        self._next = 0
        self._crit = critical_points_in_square(F) if F.m in SUPPORTED else []

    def label_for(self, p: Point, curves: Sequence[Curve]) -> str:
        for q, lab in self._labels:
            if q.same_place(p):
                break
        else:
            lab = None
            if p.x.is_rational() and p.y.is_rational() and (p.x.rational, p.y.rational) in self._crit:
                lab = f"c{self._crit.index((p.x.rational, p.y.rational)) + 1}"
            if lab is None:
                lab = str(self._next)
                self._next += 1
            self._labels.append((p, lab))
            self._on[lab] = []
        toks = self._on[lab]
        for c in curves:
            t = constraint_token(c)
            if t not in toks:
                toks.append(t)
        for axis, z in (("x", p.x), ("y", p.y)):
            for wall in (Fraction(0), HALF):
                if z == ExactNumber(wall):
                    t = f"{axis}={wall}"
                    if t not in toks and not (axis == "y" and f"y={wall}" in toks):
                        toks.append(t)
        return lab

    def add_region(self, pair: Tuple[int, int], piece: Piece) -> None:
        book = self.book
        items = []
        verts: List[Tuple[Point, List[Curve], Optional[Curve]]] = []  # point, curves through it, curve to next
        L, U = piece.lower, piece.upper
        for i, s in enumerate(L):
            prev = [L[i - 1].curve] if i else []
            verts.append((book.find(s.curve, s.lo), prev + [s.curve], s.curve))
        verts.append((book.find(L[-1].curve, piece.hi), [L[-1].curve], None))
        verts.append((book.find(U[-1].curve, piece.hi), [U[-1].curve], U[-1].curve))
        for i in range(len(U) - 1, 0, -1):
            verts.append((book.find(U[i].curve, U[i].lo), [U[i].curve, U[i - 1].curve], U[i - 1].curve))
        verts.append((book.find(U[0].curve, piece.lo), [U[0].curve], None))
        # fuse coincident neighbours (meeting ends)
        fused: List[Tuple[Point, List[Curve], Optional[Curve]]] = []
        for p, cs, nxt in verts:
            if fused and fused[-1][0].same_place(p):
                q, qcs, _ = fused[-1]
                fused[-1] = (q, qcs + cs, nxt)
            else:
                fused.append((p, cs, nxt))
        if len(fused) > 1 and fused[-1][0].same_place(fused[0][0]):
            p, cs, nxt = fused.pop()
            q, qcs, qn = fused[0]
            fused[0] = (q, cs + qcs, qn)
        for p, cs, nxt in fused:
            items.append(self.label_for(p, cs))
            if isinstance(nxt, BranchSpec):
                items.append(Arc(*nxt.key))
        self.cert.regions.append(Region(tuple(pair), items))
        if tuple(pair) not in self.cert.pairs:
            self.cert.pairs.append(tuple(pair))

    def finish_points(self) -> None:
        def order(lab: str):
            return (0, int(lab[1:])) if lab.startswith("c") else (1, int(lab))

        for p, lab in sorted(self._labels, key=lambda t: order(t[1])):
            self.cert.add_point(CertPoint(lab, p.x, p.y, tuple(self._on[lab])))


def _split_point(lo: ExactNumber, hi: ExactNumber) -> Fraction:
    a, _ = lo.enclosure(64)
    _, b = hi.enclosure(64)
    w = (b - a) / 4
    q = simplest_between(a + w, b - w)
    if not (cmp(lo, q) < 0 and cmp(q, hi) < 0):
        q = rational_between(lo, hi)
    return q


def prove_fact(m: int, M: Fraction, greater: Curve, smaller: Curve, iv: Interval,
               depth: int = 0, max_depth: int = 8) -> Optional[List[Claim]]:
    """Claims establishing greater >= smaller on ``iv``, or None."""
    if same_curve(greater, smaller):
        return []
    if isinstance(greater, Level) and isinstance(smaller, Level):
        return [] if greater.c >= smaller.c else None
    if isinstance(greater, BranchSpec) and isinstance(smaller, BranchSpec):
        kind, lhs, rhs, d = "geq", greater, smaller, 1
    elif isinstance(greater, BranchSpec):
        kind, lhs, rhs, d = "geqc", greater, smaller, 1
    else:
        kind, lhs, rhs, d = "leqc", smaller, greater, -1
    try:
        proof = dominates(lhs, rhs, iv, d)
    except DomainError:
        proof = None
    if proof is not None and proof.holds:
        rhs_val = rhs.key if kind == "geq" else rhs.c
        return [Claim(kind, lhs.key, rhs_val, iv.lo, iv.hi, proof.poly, proof.verdict.case)]
    if depth >= max_depth or iv.is_point():
        return None
    q = ExactNumber(_split_point(ExactNumber.coerce(iv.lo), ExactNumber.coerce(iv.hi)))
    left = prove_fact(m, M, greater, smaller, Interval(iv.lo, q), depth + 1, max_depth)
    if left is None:
        return None
    right = prove_fact(m, M, greater, smaller, Interval(q, iv.hi), depth + 1, max_depth)
    if right is None:
        return None
    return left + right


def complete_claims(cert: Certificate) -> List[str]:
    """Add the claims each region needs; return descriptions of unprovable ones."""
    from .covering import check_claim

    facts = FactBook()
    for c in cert.claims:
        if check_claim(cert, c).ok:
            g, s = c.fact(cert.m, cert.M)
            facts.add(g, s, c.interval)
    failures = []
    for region in cert.regions:
        geo, problems = region_geometry(cert, region)
        if geo is None:
            failures.extend(problems)
            continue
        for iv, lower, upper in region_subintervals(cert.M, geo):
            done = False
            for _, needs in owner_alternatives(cert.m, cert.M, region.owner, iv, lower, upper):
                new: List[Claim] = []
                ok = True
                for g, s in needs:
                    if facts.holds(g, s, iv):
                        continue
                    got = prove_fact(cert.m, cert.M, g, s, iv)
                    if got is None:
                        ok = False
                        break
                    new.extend(got)
                if ok:
                    for c in new:
                        cert.claims.append(c)
                        g, s = c.fact(cert.m, cert.M)
                        facts.add(g, s, c.interval)
                    done = True
                    break
            if not done:
                failures.append(f"region owner={region.owner}: cannot certify {iv}")
    cert.claims = merge_claims(cert)
    return failures


def merge_claims(cert: Certificate) -> List[Claim]:
    """Fuse claims about the same curves on abutting intervals where one proof covers both."""
    out: List[Claim] = []
    for c in cert.claims:
        for i, d in enumerate(out):
            if (d.kind, d.lhs, d.rhs) != (c.kind, c.lhs, c.rhs):
                continue
            if cmp(d.hi, c.lo) == 0:
                lo, hi = d.lo, c.hi
            elif cmp(c.hi, d.lo) == 0:
                lo, hi = c.lo, d.hi
            else:
                continue
            lhs, rhs, direction = c.curves(cert.m, cert.M)
            try:
                proof = dominates(lhs, rhs, Interval(lo, hi), direction)
            except DomainError:
                continue
            if proof.holds:
                out[i] = Claim(c.kind, c.lhs, c.rhs, lo, hi, proof.poly, proof.verdict.case)
                break
        else:
            out.append(c)
    return out


def certificate_from_pieces(F: FieldData, M: Fraction, covered: Sequence[Tuple[Tuple[int, int], Piece]],
                            book: PointBook, pairs: Sequence[Tuple[int, int]] = ()) -> Certificate:
    builder = CertificateBuilder(F, M, book)
    for pair in pairs:
        if tuple(pair) not in builder.cert.pairs:
            builder.cert.pairs.append(tuple(pair))
    for pair, piece in covered:
        builder.add_region(pair, piece)
    builder.finish_points()
    return builder.cert


@dataclass
class BuildResult:
    certificate: Certificate
    complete: bool
    residue: List[Piece] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)
    log: List[str] = field(default_factory=list)


def build_certificate(F: FieldData, pairs: Sequence[Tuple[int, int]], M=None) -> BuildResult:
    """Greedy certificate: apply the pairs in order to the uncovered pieces."""
    M = F.M1 if M is None else Fraction(M)
    book = PointBook()
    remaining = [rectangle()]
    covered: List[Tuple[Tuple[int, int], Piece]] = []
    log = []
    for pair in pairs:
        lo_b, hi_b = band(F, pair, M, book)
        nxt = []
        got = 0
        for piece in remaining:
            cov, rest = cover_step(piece, lo_b, hi_b, book)
            covered.extend((tuple(pair), c) for c in cov)
            got += len(cov)
            nxt.extend(rest)
        remaining = nxt
        log.append(f"pair {pair}: {got} region(s), {len(remaining)} piece(s) left")
    cert = certificate_from_pieces(F, M, covered, book, pairs)
    failures = complete_claims(cert)
    return BuildResult(cert, not remaining and not failures, remaining, failures, log)


# -- greedy search ------------------------------------------------------------

@dataclass
class SearchConfig:
    bound: int = 100
    max_depth: int = 20
    max_regions: int = 1000


def _simplicity(pair: Tuple[int, int]):
    u, v = pair
    return (max(abs(u), abs(v)), abs(u) + abs(v), pair)


def _inside(piece: Piece, x: Fraction, y: Fraction) -> bool:
    if not (cmp(piece.lo, x) < 0 and cmp(x, piece.hi) < 0):
        return False
    lc = curve_on(piece.lower, x, x)
    uc = curve_on(piece.upper, x, x)
    try:
        return cmp(eval_at(lc, x), y) < 0 and cmp(y, eval_at(uc, x)) < 0
    except DomainError:
        return False


def _interior_point(piece: Piece, verts: Sequence[Point]) -> Tuple[Fraction, Fraction]:
    n = len(verts)
    bx = sum((sum(p.x.enclosure(48)) / 2 for p in verts), Fraction(0)) / n
    by = sum((sum(p.y.enclosure(48)) / 2 for p in verts), Fraction(0)) / n
    if _inside(piece, bx, by):
        return bx, by
    # barycentre falls outside a non-convex piece: use the middle of a section
    x = _split_point(piece.lo, piece.hi)
    lo_c, up_c = curve_on(piece.lower, x, x), curve_on(piece.upper, x, x)
    y0, y1 = eval_at(lo_c, x), eval_at(up_c, x)
    return x, _split_point(y0, y1)


def search(F: FieldData, M=None, region: Optional[Piece] = None, config: Optional[SearchConfig] = None) -> BuildResult:
    """Greedy covering search with deterministic choices and a budget.

    For the first uncovered piece: if some pair covers all its vertices take
    it; otherwise take a pair covering at least two vertices; otherwise
    cover the barycentre.  The chosen pair is applied to every piece.
    """
    config = config or SearchConfig()
    M = F.M1 if M is None else Fraction(M)
    book = PointBook()
    remaining = [region or rectangle()]
    covered: List[Tuple[Tuple[int, int], Piece]] = []
    used: List[Tuple[int, int]] = []
    log: List[str] = []
    steps = 0
    while remaining and steps < config.max_depth and len(covered) < config.max_regions:
        steps += 1
        piece = remaining[0]
        verts = piece_vertices(piece, book)
        sets = [set(cover_set(F, (p.x, p.y), config.bound, M)) - set(used) for p in verts]
        common = set.intersection(*sets) if sets else set()
        if common:
            pair = min(common, key=_simplicity)
            why = "common to all vertices"
        else:
            counts: Dict[Tuple[int, int], int] = {}
            for s in sets:
                for pr in s:
                    counts[pr] = counts.get(pr, 0) + 1
            best = max(counts.values(), default=0)
            if best >= 2:
                pair = min((pr for pr, k in counts.items() if k == best), key=_simplicity)
                why = f"covers {best} vertices"
            else:
                q = _interior_point(piece, verts)
                cands = [pr for pr in cover_set(F, q, config.bound, M) if pr not in used]
                if not cands:
                    log.append(f"step {steps}: no unused pair covers the interior point ({q[0]}, {q[1]})")
                    break
                pair = min(cands, key=_simplicity)
                why = f"covers interior point ({q[0]}, {q[1]})"
        used.append(pair)
        lo_b, hi_b = band(F, pair, M, book)
        nxt = []
        got = 0
        for pc in remaining:
            cov, rest = cover_step(pc, lo_b, hi_b, book)
            covered.extend((pair, c) for c in cov)
            got += len(cov)
            nxt.extend(rest)
        remaining = nxt
        log.append(f"step {steps}: pair {pair} ({why}); {got} region(s), {len(remaining)} piece(s) left")
    cert = certificate_from_pieces(F, M, covered, book, used)
    failures = complete_claims(cert) if cert.regions else []
    if remaining:
        log.append(f"budget exhausted with {len(remaining)} uncovered piece(s)")
    return BuildResult(cert, not remaining and not failures, remaining, failures, log)


def search_point(F: FieldData, point, bound: int = 100, M=None) -> Optional[Tuple[int, int]]:
    """Degenerate search on a single point: the first pair of its covering set."""
    pairs = cover_set(F, point, bound, M)
    return pairs[0] if pairs else None


def annotate_claim(cert: Certificate, kind: str, lhs, rhs, interval=None) -> Claim:
    """Prove a stated dominance and append it to ``cert``.

    Without an interval the claim is placed on the first piece of [0, 1/2],
    cut at the crossings of the two curves, on which it holds.
    """
    probe = Claim(kind, lhs, rhs, 0, HALF, Poly([0]), "zero")
    a, b, direction = probe.curves(cert.m, cert.M)
    if interval is not None:
        candidates = [Interval(*interval)]
    else:
        xs = [ExactNumber(0)] + [p.x for p in curve_intersections(a, b, 0, HALF)] + [ExactNumber(HALF)]
        xs = _unique(xs)
        candidates = [Interval(s, t) for s, t in zip(xs, xs[1:])]
    for iv in candidates:
        try:
            proof = dominates(a, b, iv, direction)
        except DomainError:
            continue
        if proof.holds:
            claim = Claim(kind, lhs, rhs, iv.lo, iv.hi, proof.poly, proof.verdict.case)
            cert.claims.append(claim)
            return claim
    raise ValueError(f"{probe.describe()} holds on none of the candidate intervals")
