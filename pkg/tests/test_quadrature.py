"""Tests for polar quadrature on disks, annuli and sectors."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyharm.errors import BadIndex, NonIntegrable
from polyharm.kernelnum import I_closed_form
from polyharm.quadrature import (
    BoundaryPointSpec,
    IntegrandSpec,
    Region,
    integrate,
    integrate_about_boundary_point,
    integrate_radial,
    truncated_scan,
)

F = Fraction


def one(r, phi, d):
    return np.ones(np.broadcast(r, phi).shape)


def test_area_of_disk_and_annulus():
    assert integrate(IntegrandSpec(one), Region.disk()).value == pytest.approx(math.pi, rel=1e-12)
    annulus = integrate(IntegrandSpec(one), Region.annulus(0.5)).value
    assert annulus == pytest.approx(0.75 * math.pi, rel=1e-12)


def test_sector():
    result = integrate(IntegrandSpec(one), Region.sector(0.0, math.pi / 2))
    assert result.value == pytest.approx(math.pi / 4, rel=1e-12)
    assert result.err_estimate <= 1e-10 * result.value


def test_boundary_weight():
    spec = IntegrandSpec(lambda r, phi, d: (d * (2 - d)) ** -0.5 + 0 * phi, radial_exponent_at_1=-0.5)
    assert integrate(spec, Region.disk(), tol=1e-9).value == pytest.approx(2 * math.pi, rel=1e-8)


def test_singular_boundary_point():
    def inverse_distance(r, phi, d):
        return (d * d + 4 * (1 - d) * np.sin(phi / 2) ** 2) ** -0.25

    spec = IntegrandSpec(inverse_distance, singular_points=(1 + 0j,))
    expected = I_closed_form(0, F(1, 4))
    assert expected == pytest.approx(3.29613, rel=1e-5)
    assert integrate(spec, Region.disk(), tol=1e-6).value == pytest.approx(expected, rel=1e-5)


def kernel_power(a, b):
    def evaluator(rho, psi, w):
        return w**a * rho ** (-2 * b) + 0 * psi

    return evaluator


@pytest.mark.parametrize(
    ("a", "b"),
    [(0, 0), (F(1, 10), 1), (0, F(1, 4)), (10.1, 6), (-0.9, 0), (-0.9, F(1, 2)), (F(3, 2), F(3, 2))],
)
def test_boundary_point_rule_near_critical(a, b):
    spec = BoundaryPointSpec(kernel_power(float(a), float(b)), float(a), -2 * float(b))
    result = integrate_about_boundary_point(spec, tol=1e-10)
    assert result.value == pytest.approx(I_closed_form(a, b), rel=1e-9)


def test_boundary_point_rule_on_smooth_integrand():
    # |z|^2 = 1 - w
    spec = BoundaryPointSpec(lambda rho, psi, w: 1 - w)
    assert integrate_about_boundary_point(spec).value == pytest.approx(math.pi / 2, rel=1e-10)


def test_boundary_point_rule_rejects():
    with pytest.raises(NonIntegrable):
        integrate_about_boundary_point(BoundaryPointSpec(kernel_power(0.0, 1.0), 0.0, -2.0))
    with pytest.raises(NonIntegrable):
        integrate_about_boundary_point(BoundaryPointSpec(kernel_power(-1.0, 0.0), -1.0, 0.0))


def test_non_integrable_weight():
    spec = IntegrandSpec(one, radial_exponent_at_1=-1.0)
    with pytest.raises(NonIntegrable):
        integrate(spec, Region.disk())
    assert integrate(spec, Region.disk(0.5)).value == pytest.approx(math.pi / 4)


@pytest.mark.parametrize(
    "build",
    [
        lambda: Region("ellipse"),
        lambda: Region.annulus(0.8, 0.5),
        lambda: Region("disk", 0.2),
        lambda: Region.sector(0.0, 0.0),
    ],
)
def test_region_validation(build):
    with pytest.raises(BadIndex):
        build()


def test_integrate_radial():
    assert integrate_radial(lambda r, d: d**-0.5, 0.0, exponent=-0.5).value == pytest.approx(2.0, rel=1e-9)
    assert integrate_radial(lambda r, d: np.ones_like(r), 0.0, 0.5).value == pytest.approx(0.5)
    with pytest.raises(BadIndex):
        integrate_radial(lambda r, d: r, 0.5, 0.5)
    with pytest.raises(NonIntegrable):
        integrate_radial(lambda r, d: 1 / d, 0.0, exponent=-1.0)


def test_truncated_scan():
    rows = truncated_scan(IntegrandSpec(one), [0.5, 0.75])
    assert [r for r, _ in rows] == [0.5, 0.75]
    assert rows[0][1] == pytest.approx(math.pi / 4)
    assert rows[1][1] == pytest.approx(9 * math.pi / 16)
    with pytest.raises(BadIndex):
        truncated_scan(IntegrandSpec(one), [0.75, 0.5])
