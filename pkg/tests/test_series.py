"""Tests for the certified series and their closed forms."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyharm.const import DEFAULT_TERM_CAP, ENV_TERM_CAP
from polyharm.errors import BadIndex, InvalidConfig, NonIntegrable, ToleranceNotReached
from polyharm.kernelnum import (
    Divergent,
    I_closed_form,
    I_divergence_reason,
    I_series,
    SeriesResult,
    angular_mean,
    circle_average,
    default_term_cap,
    olofsson_constant,
)

F = Fraction


@pytest.mark.parametrize(("a", "expected"), [(0, math.pi), (2, math.pi / 3), (F(-1, 2), 2 * math.pi)])
def test_b_zero(a, expected):
    result = I_series(a, 0)
    assert isinstance(result, SeriesResult)
    assert result.value == pytest.approx(expected, rel=1e-15)


def test_exact_tail():
    result = I_series(1, 1)
    assert result.converged
    assert result.value == pytest.approx(math.pi, rel=1e-10)


@pytest.mark.parametrize(
    ("a", "b"),
    [(F(3, 2), F(1, 2)), (0, F(1, 2)), (2, F(3, 2)), (F(1, 3), F(1, 4)), (5, 2)],
)
def test_series_matches_closed_form(a, b):
    result = I_series(a, b, tol=1e-10)
    assert result.value == pytest.approx(I_closed_form(a, b), rel=1e-9)
    assert result.tail_bound <= 1e-10 * result.value


@pytest.mark.parametrize(("a", "b"), [(-1, 0), (F(-3, 2), F(1, 4)), (2, 2), (0, 1), (F(1, 2), F(5, 4))])
def test_divergent(a, b):
    assert isinstance(I_series(a, b), Divergent)
    assert I_divergence_reason(a, b) is not None
    with pytest.raises(NonIntegrable):
        I_closed_form(a, b)


def test_boundary_is_exact():
    assert I_divergence_reason(F(1, 10), F(41, 40)) is None
    assert I_divergence_reason(F(1, 10), F(11, 10)) is not None
    with pytest.raises(BadIndex):
        I_divergence_reason(0, -1)


def test_term_cap_reports_best_value():
    with pytest.raises(ToleranceNotReached) as info:
        I_series(0, F(1, 2), tol=1e-14, term_cap=10)
    assert info.value.value == pytest.approx(4.0, rel=1e-2)
    assert info.value.estimate > 0


def test_default_term_cap(monkeypatch):
    monkeypatch.delenv(ENV_TERM_CAP, raising=False)
    assert default_term_cap() == DEFAULT_TERM_CAP
    monkeypatch.setenv(ENV_TERM_CAP, "5000")
    assert default_term_cap() == 5000
    monkeypatch.setenv(ENV_TERM_CAP, "10")
    with pytest.raises(InvalidConfig):
        default_term_cap()
    monkeypatch.setenv(ENV_TERM_CAP, "many")
    with pytest.raises(InvalidConfig):
        default_term_cap()


@pytest.mark.parametrize(
    ("b", "r", "expected"),
    [(0, 0.3, 1.0), (1, 0.5, 4 / 3), (2, 0.5, 1.25 / 0.75**3), (1, 0.0, 1.0)],
)
def test_circle_average(b, r, expected):
    assert circle_average(b, r).value == pytest.approx(expected, rel=1e-10)


def test_circle_average_rejects():
    with pytest.raises(BadIndex):
        circle_average(1, 1.0)
    with pytest.raises(BadIndex):
        circle_average(-1, 0.5)


def test_angular_mean():
    d = np.array([1.0, 0.5, 1e-6, 1e-12])
    r = 1 - d
    np.testing.assert_allclose(angular_mean(1.0, r, d), 1 / (d * (2 - d)), rtol=1e-10)
    np.testing.assert_array_equal(angular_mean(0.0, r, d), np.ones(4))
    half = angular_mean(0.5, np.array([0.6]), np.array([0.4]))[0]
    assert half == pytest.approx(circle_average(0.5, 0.6).value, rel=1e-9)


def test_olofsson_constant():
    assert olofsson_constant(0) == pytest.approx(1.0)
    assert olofsson_constant(1) == pytest.approx(0.5)
    assert olofsson_constant(2) == pytest.approx(1 / 6)
