from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qeuclid.field import (SUPPORTED, FieldElement, RingElement, UnsupportedField, builtin_field, custom_field,
                           norm, reduce_to_square, shifted_norm)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=1000)
small = st.integers(-50, 50)


def test_table_rows():
    F = builtin_field(7)
    assert F.M1 == Q(9, 14)
    assert set(F.critical_points) == {(Q(1, 2), Q(5, 14)), (Q(1, 2), Q(9, 14))}
    F = builtin_field(19)
    assert F.M1 == Q(170, 171)
    assert set(F.critical_points) == {(0, Q(20, 57)), (0, Q(37, 57))}


def test_pair_lists_in_theorem_order():
    assert builtin_field(2).covering_pairs == ((0, 0),)
    assert builtin_field(3).covering_pairs == ((0, 0), (-1, 0))
    assert builtin_field(6).covering_pairs == ((0, 0), (1, 0), (-2, -1))
    assert builtin_field(7).covering_pairs == ((0, 0), (1, 0), (-4, 1), (-2, -1))
    assert len(builtin_field(19).covering_pairs) == 13


@pytest.mark.parametrize("m", [5, 1, 13, 8])
def test_unsupported(m):
    with pytest.raises(UnsupportedField, match="supported"):
        builtin_field(m)


def test_custom_field_checks():
    assert custom_field(10, Q(1, 2)).m == 10
    with pytest.raises(UnsupportedField):
        custom_field(12, Q(1, 2))
    with pytest.raises(UnsupportedField):
        custom_field(5, Q(1, 2))


def test_norm_examples():
    assert norm(builtin_field(7), Q(1, 2), Q(5, 14)) == Q(-9, 14)
    assert norm(builtin_field(2), 0, Q(1, 2)) == Q(-1, 2)
    assert norm(builtin_field(11), 0, 0) == 0


def test_shifted_norm_examples():
    F = builtin_field(7)
    assert shifted_norm(F, Q(1, 2), Q(5, 14), 1, 0) == Q(19, 14)
    assert shifted_norm(F, Q(1, 2), Q(5, 14), 0, 0) == norm(F, Q(1, 2), Q(5, 14))
    assert abs(shifted_norm(builtin_field(11), Q(1, 2), Q(7, 22), 5, -2)) == Q(19, 22)


@pytest.mark.parametrize("m", SUPPORTED)
@given(a=rationals, b=rationals, u=small, v=small)
def test_shifted_norm_is_norm_of_shift(m, a, b, u, v):
    F = builtin_field(m)
    assert shifted_norm(F, a, b, u, v) == norm(F, a + u, b + v)


@pytest.mark.parametrize("m", SUPPORTED)
@given(a=rationals, b=rationals)
def test_sign_symmetry(m, a, b):
    F = builtin_field(m)
    assert norm(F, a, b) == norm(F, -a, b) == norm(F, a, -b)


@pytest.mark.parametrize("m", SUPPORTED)
def test_critical_points_attain_minimum(m):
    F = builtin_field(m)
    for p in F.critical_points:
        # points outside S0 are first brought back by the norm's symmetries
        x, y = reduce_to_square(*p)
        assert min(abs(shifted_norm(F, x, y, u, v)) for u, v in F.covering_pairs) == F.M1


@given(rationals, rationals)
def test_reduce_to_square(a, b):
    x, y = reduce_to_square(a, b)
    assert 0 <= x <= Q(1, 2) and 0 <= y <= Q(1, 2)
    assert (a - x).denominator == 1 or (a + x).denominator == 1
    assert (b - y).denominator == 1 or (b + y).denominator == 1


@given(small, small, small, small)
def test_ring_norm_multiplicative(a, b, c, d):
    x, y = RingElement(a, b), RingElement(c, d)
    assert x.mul(y, 7).norm(7) == x.norm(7) * y.norm(7)


def test_field_element_coerces():
    assert FieldElement(1, 2).a == Q(1)
