"""Tests for the exact differential operators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from polyharm.errors import BadIndex
from polyharm.symcalc import (
    BiLaurent,
    apply_L,
    dz,
    dzbar,
    euler,
    is_harmonic,
    is_n_analytic,
    is_n_harmonic,
    laplacian,
    laplacian_power,
    mul_disk_weight,
    uniform_potential_polynomial,
)

from .strategies import bilaurents, fractions

Z = BiLaurent.z()
ZB = BiLaurent.zbar()
R2 = Z * ZB


def test_derivatives():
    u = Z ** 3 * ZB ** 2
    assert dz(u) == BiLaurent.monomial(2, 2, 3)
    assert dzbar(u) == BiLaurent.monomial(3, 1, 2)
    assert laplacian(R2) == 4
    assert laplacian_power(R2 ** 2, 2) == 64
    assert euler(u) == u.scale(5)


def test_negative_exponents():
    u = BiLaurent.monomial(-1, -1)
    assert dz(u) == BiLaurent.monomial(-2, -1, -1)
    assert laplacian(u) == BiLaurent.monomial(-2, -2, 4)


def test_harmonicity_predicates():
    assert is_harmonic(Z ** 4 + ZB ** 2)
    assert not is_harmonic(R2)
    assert is_n_harmonic(R2 * Z, 2)
    assert is_n_analytic(ZB * Z ** 3, 2)
    assert not is_n_analytic(ZB ** 2, 2)
    with pytest.raises(BadIndex):
        is_n_harmonic(Z, 0)
    with pytest.raises(BadIndex):
        laplacian_power(Z, -1)


def test_disk_weight_powers():
    assert mul_disk_weight(BiLaurent.constant(1), 2) == 1 - R2.scale(2) + R2 ** 2
    assert mul_disk_weight(Z, 0) == Z
    with pytest.raises(BadIndex):
        mul_disk_weight(Z, -1)


@pytest.mark.parametrize("theta", range(6))
def test_uniform_potential_annihilated(theta):
    assert apply_L(uniform_potential_polynomial(theta), theta).is_zero()


@given(bilaurents(laurent=True))
def test_derivatives_commute(u):
    assert dz(dzbar(u)) == dzbar(dz(u))
    assert laplacian(u) == dz(dzbar(u)).scale(4)


@settings(deadline=None)
@given(bilaurents(), fractions)
def test_laplacian_intertwines_L(u, theta):
    assert laplacian(apply_L(u, theta)) == apply_L(laplacian(u), theta - 1)


@settings(deadline=None)
@given(bilaurents(), fractions)
def test_L_after_weight(u, theta):
    lhs = apply_L(mul_disk_weight(u, 1), theta)
    assert lhs == mul_disk_weight(apply_L(u, theta - 1), 1) - u.scale(8 * theta)


def test_L_on_constants():
    assert apply_L(BiLaurent.constant(1), Fraction(1, 2)) == -1
    assert apply_L(BiLaurent.constant(1), 0).is_zero()
