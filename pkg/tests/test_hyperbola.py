import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from published_claims import CLAIMS
from qeuclid.exact import DomainError, ExactNumber, cmp
from qeuclid.field import builtin_field
from qeuclid.hyperbola import (BranchSpec, CoincidentCurves, Level, Point, curve_intersections, domain, dominates,
                               eval_at, intersect, intersect_line, on_curve)
from qeuclid.polysign import Interval, parse_poly, scaling_factor

H = Q(1, 2)
R = ExactNumber.sqrt
S0 = Interval(0, H)


def B(m, u, v, th, ep):
    return BranchSpec.of(builtin_field(m), u, v, th, ep)


class TestDomain:
    def test_examples(self):
        assert not domain(B(7, 0, 0, 1, 1), S0)
        assert domain(B(7, 0, 0, 1, -1), S0)
        assert domain(B(6, 1, 0, 1, 1), S0)

    def test_eval_outside_domain(self):
        with pytest.raises(DomainError):
            eval_at(B(7, 0, 0, 1, 1), Q(1, 4))


class TestEval:
    def test_examples(self):
        assert eval_at(B(7, 0, 0, 1, -1), 0) == R(2, Q(3, 14))
        assert eval_at(B(11, 1, 0, 1, -1), 0) == R(82, Q(1, 22))
        assert eval_at(B(19, 991, 227, 1, -1), 0) == -227 + R(1387901, Q(11, 57))

    def test_at_irrational_abscissa(self):
        x8 = -1 + R(217, Q(1, 14))
        assert eval_at(B(7, 1, 0, 1, -1), x8) == ExactNumber(H)

    def test_level(self):
        assert eval_at(Level(H), R(2)) == ExactNumber(H)


class TestIntersections:
    def test_m7_p6(self):
        (p,) = intersect(B(7, 1, 0, 1, 1), B(7, 0, 0, 1, -1))
        assert p.x == ExactNumber(Q(1, 7)) and p.y == R(910, Q(1, 98))

    def test_m6_p5(self):
        (p,) = intersect(B(6, 1, 0, 1, 1), B(6, 0, 0, 1, -1))
        assert p.x == ExactNumber(Q(1, 4)) and p.y == R(78, Q(1, 24))

    def test_m11_p11(self):
        (p,) = intersect(B(11, -5, 1, 1, 1), B(11, -2, -1, -1, 1))
        assert p.x == Q(7, 2) - R(1645, Q(3, 35))
        assert p.y == R(1645, Q(9, 770))

    def test_m11_p6(self):
        (p,) = intersect(B(11, 1, 0, 1, 1), B(11, 0, 0, 1, -1))
        assert p.x == ExactNumber(Q(4, 11)) and p.y == R(5302, Q(1, 242))

    def test_lines(self):
        (p,) = intersect_line(B(7, 1, 0, 1, -1), "y", H)
        assert p.x == -1 + R(217, Q(1, 14))
        (p,) = intersect_line(B(19, -2, 0, 1, -1), "y", H)
        assert p.x == 2 - R(48811, Q(1, 114))

    @pytest.mark.parametrize("u", [0, 1, 2, 5])
    def test_vertical_line(self, u):
        F = builtin_field(7)
        pts = intersect_line(BranchSpec.of(F, u, 0, 1, -1), "x", 0)
        expected = R((u * u + F.M1) / 7)
        assert (pts and pts[0].y == expected) or cmp(expected, H) > 0

    def test_coincident(self):
        with pytest.raises(CoincidentCurves):
            intersect(B(7, 1, 0, 1, 1), B(7, 1, 0, 1, 1))


pairs = [(0, 0), (1, 0), (-2, -1), (-4, 1), (-6, -2), (-5, 1), (5, -2), (2, -1), (-3, -1), (7, -2)]
branch_keys = st.tuples(st.sampled_from([7, 11, 19]), st.sampled_from(pairs), st.sampled_from([1, -1]),
                        st.sampled_from([1, -1]))


@given(branch_keys, branch_keys)
@settings(max_examples=150, deadline=None)
def test_intersections_lie_on_both(k1, k2):
    m = k1[0]
    c1 = B(m, *k1[1], k1[2], k1[3])
    c2 = B(m, *k2[1], k2[2], k2[3])
    if c1.key == c2.key:
        return
    for p in intersect(c1, c2):
        assert on_curve(c1, p) and on_curve(c2, p)


@given(branch_keys, st.fractions(min_value=0, max_value=H, max_denominator=60),
       st.fractions(min_value=0, max_value=H, max_denominator=60))
@settings(max_examples=150, deadline=None)
def test_monotonicity(k, s, t):
    c = B(k[0], *k[1], k[2], k[3])
    s, t = min(s, t), max(s, t)
    try:
        ys, yt = eval_at(c, s), eval_at(c, t)
    except DomainError:
        return
    assert cmp(yt, ys) * c.direction() >= 0


def _curve(m, kind, side):
    return B(m, *side) if isinstance(side, tuple) else Level(side)


@pytest.mark.parametrize("entry", [c for c in CLAIMS if c[4] is not None],
                         ids=lambda c: f"m{c[0]}-{c[5]}")
def test_published_claims(entry):
    m, kind, lhs, rhs, iv, poly, case = entry
    proof = dominates(B(m, *lhs), _curve(m, kind, rhs), Interval(*iv), -1 if kind == "leqc" else 1)
    k = scaling_factor(parse_poly(poly), proof.poly)
    assert k is not None and k > 0
    assert proof.holds
    if case is not None:
        assert proof.verdict.case == case


@pytest.mark.parametrize("entry", [c for c in CLAIMS if c[4] is None], ids=lambda c: f"m{c[0]}-{c[5]}")
def test_published_polynomials_on_crossing_pieces(entry):
    m, kind, lhs, rhs, _, poly, case = entry
    a, b = B(m, *lhs), _curve(m, kind, rhs)
    direction = -1 if kind == "leqc" else 1
    xs = [ExactNumber(0)] + [p.x for p in curve_intersections(a, b)] + [ExactNumber(H)]
    seen = []
    for lo, hi in zip(xs, xs[1:]):
        if cmp(lo, hi) >= 0:
            continue
        try:
            proof = dominates(a, b, Interval(lo, hi), direction)
        except DomainError:
            continue
        k = scaling_factor(parse_poly(poly), proof.poly)
        assert k is not None and k > 0
        seen.append(proof)
    assert seen


def test_published_example_m11():
    x6 = Q(4, 11)
    proof = dominates(B(11, -6, -2, -1, 1), B(11, 1, 0, 1, 1), Interval(x6, H))
    assert proof.poly == parse_poly("20a^2-100a+57") and proof.verdict.case == "a1" and proof.holds


def test_published_example_m19():
    proof = dominates(B(19, 90, -21, -1, 1), B(19, -80, 18, 1, 1), Interval(0, Q(2, 5)))
    assert proof.poly == parse_poly("4a^2+40a+86121") and proof.verdict.case == "minus" and proof.holds


def test_reflexive():
    c = B(7, 1, 0, 1, -1)
    proof = dominates(c, c, S0)
    assert proof.holds and proof.poly.is_zero()


def test_false_claim_fails():
    proof = dominates(B(7, 0, 0, 1, -1), B(7, 1, 0, 1, -1), Interval(0, Q(1, 7)))
    assert not proof.holds


def test_undefined_branch_rejected():
    with pytest.raises(DomainError):
        dominates(B(7, 0, 0, 1, 1), Level(0), S0)


@given(branch_keys, branch_keys, st.fractions(min_value=0, max_value=H, max_denominator=20),
       st.fractions(min_value=0, max_value=H, max_denominator=20))
@settings(max_examples=150, deadline=None)
def test_dominance_is_sound(k1, k2, a, b):
    m = k1[0]
    c1, c2 = B(m, *k1[1], k1[2], k1[3]), B(m, *k2[1], k2[2], k2[3])
    iv = Interval(min(a, b), max(a, b))
    try:
        proof = dominates(c1, c2, iv)
    except DomainError:
        return
    if not proof.holds:
        return
    lo, hi = iv.lo.rational, iv.hi.rational
    for k in range(20):
        s = lo + (hi - lo) * k / 19
        assert cmp(eval_at(c1, s), eval_at(c2, s)) >= 0


def test_point_equality_is_exact():
    p = Point(ExactNumber(Q(1, 7)), R(910, Q(1, 98)))
    assert p.same_place(Point(ExactNumber(Q(2, 14)), R(910, Q(1, 98))))
