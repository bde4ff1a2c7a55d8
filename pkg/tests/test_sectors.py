import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbiring.errors import OrderMismatch, PositivityRequired
from orbiring.sectors import CircleWeightSystem, Mode, default_order, logweight, parse_weights, sector_data

weight_lists = st.lists(st.integers(-12, 12), min_size=1, max_size=5)
modes = st.sampled_from(list(Mode))


@pytest.mark.parametrize("weights,m", [((2, 1, 1), 2), ((1, 1, 1), 1), ((0, 0), 1),
                                       ((3, -4, 0, 6), 12)])
def test_default_order(weights, m):
    assert default_order(weights) == m


@pytest.mark.parametrize("w,g,m,value", [(2, 1, 3, Fraction(2, 3)), (2, 1, 2, 0),
                                         (-1, 1, 2, Fraction(1, 2))])
def test_logweight(w, g, m, value):
    assert logweight(w, g, m) == value


def test_sector_examples():
    s = sector_data(CircleWeightSystem((2, 1, 1), Mode.HYPER), 1)
    assert (s.fixed, s.age, s.degree) == ((0,), 2, 4)
    s = sector_data(CircleWeightSystem((2, 1, 1), Mode.SYMPLECTIC), 1)
    assert (s.fixed, s.age, s.degree) == ((0,), 1, 2)


@given(weight_lists, modes)
def test_identity_sector(weights, mode):
    s = CircleWeightSystem(weights, mode).sector(0)
    assert s.fixed == tuple(range(len(weights)))
    assert s.age == 0 and s.degree == 0


def test_parse_weights():
    assert parse_weights("2,-1,0") == (2, -1, 0)
    assert parse_weights(" 3 ") == (3,)
    assert parse_weights("") == ()
    with pytest.raises(ValueError):
        parse_weights("2,,1")


def test_order_override_and_validation():
    ws = CircleWeightSystem((2,), Mode.SYMPLECTIC, 3)
    assert ws.order == 3 and ws.ell == 2
    with pytest.raises(ValueError):
        CircleWeightSystem((), Mode.SYMPLECTIC)
    with pytest.raises(ValueError):
        CircleWeightSystem((1,), Mode.SYMPLECTIC, -2)


def test_quotient_preconditions():
    with pytest.raises(PositivityRequired):
        CircleWeightSystem((2, 0, 1)).require_quotient()
    with pytest.raises(OrderMismatch):
        CircleWeightSystem((2, 1), order=4).require_quotient()
    CircleWeightSystem((2, 1)).require_quotient()


@given(st.integers(-30, 30), st.integers(-50, 50), st.integers(1, 40))
def test_logweight_complement(w, g, m):
    a, b = logweight(w, g, m), logweight(-w, g, m)
    assert 0 <= a < 1
    assert a + b == (1 if a != 0 else 0)


@given(weight_lists, st.integers(1, 30))
def test_hyper_ages_integral(weights, m):
    ws = CircleWeightSystem(weights, Mode.HYPER, m)
    for s in ws.sectors():
        assert s.age.denominator == 1 and s.age >= 0
        assert s.degree % 2 == 0


@given(weight_lists, modes, st.integers(1, 30))
def test_age_denominator_divides_order(weights, mode, m):
    ws = CircleWeightSystem(weights, mode, m)
    for s in ws.sectors():
        assert m % s.age.denominator == 0
        assert s.degree == 2 * s.age


@given(weight_lists, st.integers(1, 36))
def test_fixed_set_depends_on_subgroup(weights, m):
    ws = CircleWeightSystem(weights, Mode.SYMPLECTIC, m)
    for g in range(m):
        for k in range(1, m):
            if math.gcd(k, m) == 1:
                # same generated subgroup
                assert ws.sector(g * k).fixed == ws.sector(g).fixed


@given(weight_lists, st.integers(1, 36))
def test_fixed_set_reverses_inclusion(weights, m):
    ws = CircleWeightSystem(weights, Mode.SYMPLECTIC, m)
    for g in range(m):
        for k in range(m):
            # <g*k> is contained in <g>
            assert set(ws.sector(g).fixed) <= set(ws.sector(g * k).fixed)


def test_with_zeros_keeps_order():
    ws = CircleWeightSystem((2,), Mode.SYMPLECTIC, 3).with_zeros(2)
    assert ws.weights == (2, 0, 0) and ws.order == 3
