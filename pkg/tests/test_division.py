import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuclid.division import (CertificateIncomplete, divide, divides, exact_quotient, gcd, gcd_step_bound,
                              gcd_steps, round_half)
from qeuclid.field import SUPPORTED, FieldElement, RingElement, builtin_field, custom_field, norm, shifted_norm


@pytest.mark.parametrize("a0, expected", [
    (Q(7, 10), (1, -1, Q(3, 10))),
    (Q(-1, 4), (0, -1, Q(1, 4))),
    (Q(3, 2), (2, -1, Q(1, 2))),
    (Q(1, 2), (0, 1, Q(1, 2))),
    (Q(0), (0, 1, Q(0))),
])
def test_round_half(a0, expected):
    assert round_half(a0) == expected


@given(st.fractions(min_value=-100, max_value=100, max_denominator=1000))
def test_round_half_contract(a0):
    x, s, a = round_half(a0)
    assert a0 == x + s * a and 0 <= a <= Q(1, 2) and s in (1, -1)


def test_divide_at_critical_point():
    res = divide(builtin_field(7), FieldElement(Q(1, 2), Q(5, 14)))
    assert res.pair_used == (0, 0)
    assert res.remainder_norm == Q(-9, 14)


@pytest.mark.parametrize("m", SUPPORTED)
def test_divide_integer_input(m):
    res = divide(builtin_field(m), FieldElement(3, -4))
    assert res.quotient == RingElement(3, -4) and res.remainder_norm == 0


def test_divide_m19_critical_point():
    F = builtin_field(19)
    res = divide(F, FieldElement(0, Q(20, 57)))
    assert abs(res.remainder_norm) == F.M1
    # no pair in a large box does better
    a, b = Q(0), Q(20, 57)
    best = min(abs(shifted_norm(F, a, b, u, v)) for u in range(-1000, 1001) for v in range(-60, 61))
    assert best == F.M1


@pytest.mark.parametrize("m", SUPPORTED)
@given(data=st.data())
@settings(max_examples=200, deadline=None)
def test_divide_bound_and_identity(m, data):
    F = builtin_field(m)
    q = st.fractions(min_value=-20, max_value=20, max_denominator=1000)
    a, b = data.draw(q), data.draw(q)
    res = divide(F, FieldElement(a, b))
    g = res.quotient
    direct = norm(F, a - g.x, b - g.y)
    assert direct == res.remainder_norm
    assert abs(direct) <= F.M1


def test_all_pairs_minimises():
    F = builtin_field(19)
    xi = FieldElement(Q(1, 3), Q(1, 3))
    first = divide(F, xi)
    best = divide(F, xi, all_pairs=True)
    assert abs(best.remainder_norm) <= abs(first.remainder_norm) <= F.M1


def test_incomplete_pair_list():
    F = custom_field(7, Q(9, 14), pairs=[(0, 0)])
    with pytest.raises(CertificateIncomplete, match="certificate incomplete"):
        divide(F, FieldElement(Q(1, 2), Q(1, 2)))


def test_exact_quotient_and_divides():
    F = builtin_field(2)
    a, b = RingElement(5, 1), RingElement(1, 2)
    prod = a.mul(b, 2)
    assert exact_quotient(F, prod, b) == FieldElement(5, 1)
    assert divides(F, b, prod)
    assert not divides(F, RingElement(3, 0), RingElement(1, 0))
    with pytest.raises(ZeroDivisionError):
        exact_quotient(F, a, RingElement(0, 0))


class TestGcd:
    def test_with_zero(self):
        F = builtin_field(7)
        assert gcd(F, RingElement(3, 2), RingElement(0, 0)) == RingElement(3, 2)

    def test_with_itself(self):
        F = builtin_field(7)
        a = RingElement(3, 2)
        g = gcd(F, a, a)
        assert divides(F, g, a) and divides(F, a, g)

    def test_both_zero(self):
        with pytest.raises(ValueError):
            gcd(builtin_field(7), RingElement(0, 0), RingElement(0, 0))

    def test_m2_example(self):
        F = builtin_field(2)
        a, b = RingElement(5, 1), RingElement(1, 2)
        g = gcd(F, a, b)
        assert divides(F, g, a) and divides(F, g, b)
        n = abs(g.norm(2))
        assert math.gcd(a.norm(2), b.norm(2)) % n == 0

    def test_unit_normalisation(self):
        g = gcd(builtin_field(3), RingElement(-4, 0), RingElement(0, 0))
        assert g == RingElement(4, 0)

    @pytest.mark.parametrize("m", SUPPORTED)
    def test_random_pairs(self, m):
        F = builtin_field(m)
        rng = random.Random(m)
        for _ in range(100):
            a = RingElement(rng.randint(-50, 50), rng.randint(-50, 50))
            b = RingElement(rng.randint(-50, 50), rng.randint(-50, 50))
            if b.is_zero():
                continue
            g, rems = gcd_steps(F, a, b)
            assert divides(F, g, a) and divides(F, g, b)
            assert len(rems) <= gcd_step_bound(F, b)
            norms = [abs(b.norm(m))] + [abs(r.norm(m)) for r in rems]
            assert all(n2 <= F.M1 * n1 for n1, n2 in zip(norms, norms[1:]))
