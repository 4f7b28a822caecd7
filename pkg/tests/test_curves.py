"""Tests for the critical integrability curves."""

from fractions import Fraction

import pytest
from hypothesis import given

from polyharm.cellgeom import (
    a_curve,
    b_curve,
    beta_curve,
    extremal_indices,
    local_critical_alpha,
    polyanalytic_beta,
)
from polyharm.errors import BadIndex

from .strategies import positive_p

F = Fraction


def test_beta_order_two():
    beta = beta_curve(2)
    assert beta.breakpoints == (F(1, 4), F(1, 3), F(1, 2), F(1))
    assert [beta(b) for b in beta.breakpoints] == [F(-7, 4), F(-5, 3), F(-2), F(-2)]
    assert beta.slopes == (F(-3), F(1), F(-2), F(0), F(-1))


def test_beta_order_one():
    beta = beta_curve(1)
    assert beta.breakpoints == (F(1, 2), F(1))
    assert beta.slopes == (F(-1), F(1), F(0))


def test_beta_order_three_leading_breakpoints():
    assert beta_curve(3).breakpoints[:2] == (F(1, 6), F(1, 5))


def test_beta_restricted():
    beta = beta_curve(2, F(1, 2))
    assert beta.breakpoints == (F(1, 4), F(1, 3))
    assert beta.p_max == F(1, 2)


def test_b_and_a_curves():
    assert b_curve(0, 3)(F(1)) == -3
    assert b_curve(2, 2).breakpoints == (F(1, 4),)
    a = a_curve(1, 2)
    assert a.breakpoints == (F(1, 2), F(1))
    assert a(F(2)) == -3
    assert a_curve(2, 2)(F(1, 8)) == b_curve(2, 2)(F(1, 8))


@pytest.mark.parametrize(
    ("call", "args"),
    [(b_curve, (3, 2)), (b_curve, (0, 0)), (a_curve, (0, 2)), (beta_curve, (0,))],
)
def test_bad_indices(call, args):
    with pytest.raises(BadIndex):
        call(*args)


def test_extremal_indices():
    assert extremal_indices(2, F(1, 3)) == (1, 2)
    assert extremal_indices(2, F(1, 8)) == (2,)
    assert extremal_indices(2, F(2)) == (0,)


def test_reference_exponents():
    assert local_critical_alpha(2, F(1)) == -4
    assert polyanalytic_beta(3, F(1, 2)) == -2
    with pytest.raises(BadIndex):
        polyanalytic_beta(2, F(0))


@given(positive_p)
def test_beta_bounds(p):
    for n in range(1, 5):
        beta = beta_curve(n)(p)
        assert beta == min(b_curve(j, n)(p) for j in range(n + 1))
        assert beta <= polyanalytic_beta(n, p)
        assert beta >= local_critical_alpha(n, p)
        if p <= F(1, 2 * n):
            assert beta == local_critical_alpha(n, p)


@given(positive_p)
def test_order_one_closed_form(p):
    assert beta_curve(1)(p) == max(-p - 1, min(p - 2, F(-1)))
