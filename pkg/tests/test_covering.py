import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuclid.covering import (Arc, CertPoint, Claim, CoverQuery, MalformedCertificate, Region, cover_set,
                              cover_set_bruteforce, parse_certificate, region_geometry, serialize_certificate,
                              shipped_certificate, shipped_certificate_text, verify)
from qeuclid.exact import ExactNumber, cmp
from qeuclid.hyperbola import eval_at
from qeuclid.field import SUPPORTED, builtin_field, shifted_norm
from qeuclid.polysign import Poly, format_poly, parse_poly, scaling_factor

H = Q(1, 2)

M7_PAIRS = [(-57, 21), (-26, -10), (-12, 4), (-4, 1), (-2, -1), (-1, 0), (0, 0), (1, -1), (3, 1), (11, 4),
            (25, -10), (56, 21)]
M11_PAIRS = [(-16, -5), (-6, -2), (-1, 0), (0, 0), (5, -2), (15, -5)]
M19_PAIRS = [(-991, 227), (-29, -7), (-3, -1), (3, -1), (29, -7), (991, 227)]


class TestCoverSet:
    def test_m7(self):
        assert cover_set(builtin_field(7), (H, Q(5, 14)), 100) == M7_PAIRS

    def test_m11(self):
        assert cover_set(builtin_field(11), (H, Q(7, 22)), 100) == M11_PAIRS

    def test_m19(self):
        assert cover_set(builtin_field(19), CoverQuery((Q(0), Q(20, 57)), 1000)) == M19_PAIRS

    def test_bound_required(self):
        with pytest.raises(ValueError):
            cover_set(builtin_field(7), (0, 0))

    @pytest.mark.parametrize("m", SUPPORTED)
    @given(a=st.fractions(0, H, max_denominator=200), b=st.fractions(0, H, max_denominator=200))
    @settings(max_examples=40, deadline=None)
    def test_matches_bruteforce(self, m, a, b):
        F = builtin_field(m)
        assert cover_set(F, (a, b), 12) == cover_set_bruteforce(F, (a, b), 12)

    @given(a=st.fractions(0, H, max_denominator=200), b=st.fractions(0, H, max_denominator=200))
    @settings(max_examples=50, deadline=None)
    def test_membership_by_direct_norm(self, a, b):
        F = builtin_field(7)
        for u, v in cover_set(F, (a, b), 10):
            x, y = a + u, b + v
            assert abs(x * x - 7 * y * y) <= F.M1
            assert abs(shifted_norm(F, a, b, u, v)) <= F.M1

    def test_exact_point(self):
        F = builtin_field(7)
        p = (ExactNumber(Q(1, 7)), ExactNumber.sqrt(910, Q(1, 98)))
        got = cover_set(F, p, 5)
        assert (0, 0) in got and (1, 0) in got


class TestFormat:
    @pytest.mark.parametrize("m", SUPPORTED)
    def test_roundtrip(self, m):
        text = shipped_certificate_text(m)
        cert = parse_certificate(text)
        assert parse_certificate(serialize_certificate(cert)) == cert

    def test_comments_and_blank_lines(self):
        cert = parse_certificate("# header\n\nfield m=2 M=1/2  # trailing\npair 0 0\n")
        assert cert.m == 2 and cert.pairs == [(0, 0)]

    @pytest.mark.parametrize("text", [
        "",
        "pair 0 0",
        "field m=2 M=1/2\nfield m=2 M=1/2",
        "field m=2 M=1/2\nregion owner=(0,0): P0 bogus",
        "field m=2 M=1/2\nclaim geq B[0,0,1,-1] 1/2 on [0,1/2] poly=1 case=const",
        "field m=2 M=1/2\nclaim geqc B[0,0,1,-1] B[0,0,1,1] on [0,1/2] poly=1 case=const",
        "field m=2 M=1/2\nwhat is this",
        "field m=2 M=1/2\npoint 0 x=0 y=0\npoint 0 x=0 y=0",
        "field m=2 M=1/2\npoint 0 x=0.5 y=0",
    ])
    def test_malformed(self, text):
        with pytest.raises(MalformedCertificate):
            parse_certificate(text)


@pytest.mark.parametrize("m", SUPPORTED)
def test_shipped_certificates_verify(m):
    report = verify(shipped_certificate(m))
    assert report.ok, report.render()
    assert [c.name for c in report.checks] == ["field", "points", "claims", "boundaries", "coverage", "tiling"]


def test_m6_regions_match_published_pairs():
    cert = shipped_certificate(6)
    assert sorted(r.owner for r in cert.regions) == sorted([(0, 0), (1, 0), (-2, -1)])


def _failed(report):
    return {c.name for c in report.checks if not c.passed}


class TestInjectedFaults:
    def test_m7_polynomial_sign_slip(self):
        cert = shipped_certificate(7)
        hits = [i for i, c in enumerate(cert.claims) if format_poly(c.poly) == "2a+1"]
        assert hits
        c = cert.claims[hits[0]]
        cert.claims[hits[0]] = Claim(c.kind, c.lhs, c.rhs, c.lo, c.hi, parse_poly("2a-1"), c.case)
        report = verify(cert)
        assert "claims" in _failed(report)
        assert any("does not match" in d for d in report.failures())

    def test_wrong_case_label(self):
        cert = shipped_certificate(7)
        c = next(c for c in cert.claims if c.case == "b")
        c.case = "a1"
        assert "claims" in _failed(verify(cert))

    def test_false_claim(self):
        cert = shipped_certificate(6)
        # the published inequality, claimed on an interval where it is false
        proof_iv = (Q(1, 4), H)
        cert.claims.append(Claim("geq", (0, 0, 1, -1), (1, 0, 1, 1), *proof_iv, Poly([1, -4]), "lin"))
        assert "claims" in _failed(verify(cert))

    def test_dropped_claim_breaks_coverage(self):
        cert = shipped_certificate(6)
        cert.claims = [c for c in cert.claims if c.kind != "leqc"]
        assert "coverage" in _failed(verify(cert))

    def test_dropped_region_breaks_tiling(self):
        cert = shipped_certificate(7)
        cert.regions.pop()
        assert "tiling" in _failed(verify(cert))

    def test_moved_point(self):
        cert = shipped_certificate(7)
        p = next(p for p in cert.points.values() if len(p.on) >= 2 and not p.x.is_rational())
        p.x = p.x + Q(1, 10 ** 6)
        assert "points" in _failed(verify(cert))

    def test_owner_not_listed(self):
        cert = shipped_certificate(3)
        cert.pairs = cert.pairs[:1]
        assert "boundaries" in _failed(verify(cert))

    def test_wrong_field_bound(self):
        cert = shipped_certificate(7)
        cert.M = Q(1, 2)
        assert "field" in _failed(verify(cert))

    def test_wrong_owner(self):
        cert = shipped_certificate(7)
        cert.regions[0].owner = (1, 0)
        assert "coverage" in _failed(verify(cert))

    def test_clockwise_region(self):
        cert = shipped_certificate(2)
        cert.regions[0].items = list(reversed(cert.regions[0].items))
        assert "boundaries" in _failed(verify(cert))

    def test_dangling_label(self):
        cert = shipped_certificate(2)
        cert.regions[0].items.append("99")
        assert "boundaries" in _failed(verify(cert))

    def test_fake_critical_point(self):
        cert = shipped_certificate(2)
        cert.points["c2"] = CertPoint("c2", Q(1, 4), Q(1, 4))
        assert "points" in _failed(verify(cert))

    def test_non_axis_segment(self):
        cert = shipped_certificate(3)
        region = cert.regions[0]
        region.items = [it for it in region.items if not isinstance(it, Arc)]
        assert "boundaries" in _failed(verify(cert))


def _mutations(poly: Poly):
    cs = list(poly.coeffs)
    for i, c in enumerate(cs):
        for new in {-c, c + 1} - {c}:
            out = cs.copy()
            out[i] = new
            # polynomials are compared up to a positive factor, so 1 -> 2 on a monomial is no fault
            k = scaling_factor(Poly(out), poly)
            if k is None or k <= 0:
                yield Poly(out)


@pytest.mark.parametrize("m", [2, 3, 7])
def test_every_coefficient_mutation_is_caught(m):
    base = shipped_certificate(m)
    for idx, claim in enumerate(base.claims):
        for poly in _mutations(claim.poly):
            cert = shipped_certificate(m)
            cert.claims[idx].poly = poly
            assert not verify(cert).ok, f"{claim.describe()} with {format_poly(poly)}"


def _interior_points(cert, region, rng, n=25):
    geo, problems = region_geometry(cert, region)
    assert geo is not None, problems
    lo, _ = geo.xmin.enclosure(80)
    _, hi = geo.xmax.enclosure(80)
    out = []
    while len(out) < n:
        x = lo + (hi - lo) * Q(rng.randint(1, 9999), 10000)
        if not (cmp(geo.xmin, x) < 0 and cmp(x, geo.xmax) < 0):
            continue
        low = next(p.curve for p in geo.lower if cmp(p.lo, x) <= 0 and cmp(x, p.hi) <= 0)
        up = next(p.curve for p in geo.upper if cmp(p.lo, x) <= 0 and cmp(x, p.hi) <= 0)
        y0, y1 = eval_at(low, x), eval_at(up, x)
        a, _ = y0.enclosure(80)
        _, b = y1.enclosure(80)
        y = a + (b - a) * Q(rng.randint(1, 9999), 10000)
        # rejection step: keep only points strictly inside the boundary
        if cmp(y0, y) < 0 and cmp(y, y1) < 0:
            out.append((x, y))
    return out


@pytest.mark.parametrize("m", SUPPORTED)
def test_owner_covers_sampled_interior_points(m):
    cert = shipped_certificate(m)
    F = builtin_field(m)
    rng = random.Random(1000 + m)
    for region in cert.regions:
        u, v = region.owner
        for x, y in _interior_points(cert, region, rng):
            assert abs(shifted_norm(F, x, y, u, v)) <= cert.M
