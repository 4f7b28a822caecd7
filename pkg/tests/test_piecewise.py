"""Tests for exact piecewise-affine functions and their envelopes."""

from fractions import Fraction

import pytest
from hypothesis import given

from polyharm.cellgeom import PiecewiseAffine, pointwise_max, pointwise_min
from polyharm.errors import BadIndex

from .strategies import fractions, positive_p

F = Fraction


def test_envelopes_of_two_lines():
    up = PiecewiseAffine.affine(1, -2)
    down = PiecewiseAffine.affine(-1, 0)
    low = pointwise_min([up, down])
    assert low.breakpoints == (F(1),)
    assert low.slopes == (F(1), F(-1))
    high = pointwise_max([up, down])
    assert high.slopes == (F(-1), F(1))
    assert high(F(3)) == 1


def test_collinear_segments_merge():
    line = PiecewiseAffine.affine(2, 1)
    assert pointwise_min([line, line]).breakpoints == ()


def test_validation():
    with pytest.raises(ValueError):
        PiecewiseAffine((F(1),), ((F(0), F(0)), (F(1), F(0))))
    with pytest.raises(ValueError):
        PiecewiseAffine((F(1),), ((F(0), F(0)),))
    with pytest.raises(ValueError):
        PiecewiseAffine((F(-1),), ((F(0), F(0)), (F(0), F(0))))
    with pytest.raises(ValueError):
        pointwise_min([])


def test_domain_and_restrict():
    f = PiecewiseAffine((F(1), F(2)), ((F(1), F(0)), (F(0), F(1)), (F(-1), F(3))))
    g = f.restrict(F(3, 2))
    assert g.breakpoints == (F(1),)
    assert g.p_max == F(3, 2)
    assert g.vertices() == [(F(1), F(1)), (F(3, 2), F(1))]
    with pytest.raises(BadIndex):
        g(F(2))
    with pytest.raises(BadIndex):
        f(0)
    assert f.value_at(0) == 0


def test_segment_lookup_at_breakpoint():
    f = PiecewiseAffine((F(1),), ((F(1), F(0)), (F(-1), F(2))))
    assert f.segment_at(F(1)) == (F(1), F(0))
    assert f.segment_right_of(F(1)) == (F(-1), F(2))


@given(fractions, fractions, fractions, fractions, positive_p)
def test_min_is_pointwise(s1, c1, s2, c2, p):
    f, g = PiecewiseAffine.affine(s1, c1), PiecewiseAffine.affine(s2, c2)
    h = PiecewiseAffine.affine(0, -1)
    assert pointwise_min([f, g, h])(p) == min(f(p), g(p), h(p))
    assert pointwise_max([f, g, h])(p) == max(f(p), g(p), h(p))


@given(fractions, fractions, positive_p)
def test_shift(s, c, p):
    f = pointwise_min([PiecewiseAffine.affine(1, 0), PiecewiseAffine.affine(-1, 1)])
    assert f.shift(s, c)(p) == f(p) + s * p + c
