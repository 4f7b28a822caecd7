"""Tests for the cellular decomposition."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from polyharm.errors import BadIndex, NegativeExponent, NotHarmonic, NotPolyharmonic, ParseError
from polyharm.randgen import make_rng, random_n_harmonic
from polyharm.symcalc import (
    BiLaurent,
    CellularForm,
    apply_L,
    cellular_decompose,
    cellular_project,
    cellular_recompose,
    entangled_v1_from_v0,
    mul_disk_weight,
)

from .strategies import harmonics, n_harmonics

Z = BiLaurent.z()
ZB = BiLaurent.zbar()
R2 = Z * ZB


def test_order_one_is_identity():
    u = Z ** 3 + ZB
    assert cellular_decompose(u, 1).pieces == (u,)


def test_constant_order_two():
    form = cellular_decompose(BiLaurent.constant(1), 2)
    half = Fraction(1, 2)
    assert form.pieces == ((1 + R2).scale(half), BiLaurent.constant(half))
    assert form.is_valid()
    assert cellular_recompose(form) == 1


def test_checks_report():
    form = cellular_decompose(R2 * Z, 2)
    checks = form.checks()
    assert [c["piece"] for c in checks] == [0, 1]
    assert [c["harmonic_order"] for c in checks] == [2, 1]
    assert all(c["annihilated_by_L"] and c["polyharmonic"] for c in checks)


@settings(deadline=None, max_examples=30)
@given(n_harmonics(max_order=4))
def test_postconditions(case):
    u, n = case
    form = cellular_decompose(u, n)
    assert cellular_recompose(form) == u
    for j, w in enumerate(form.pieces):
        assert apply_L(w, n - j - 1).is_zero()
    assert sum(form.terms(), BiLaurent.zero()) == u


@settings(deadline=None, max_examples=20)
@given(n_harmonics(max_order=3))
def test_projections_idempotent(case):
    u, n = case
    for j in range(n):
        term = cellular_project(u, n, j)
        assert cellular_project(term, n, j) == term


def test_rejects():
    with pytest.raises(NotPolyharmonic):
        cellular_decompose(R2 ** 2, 2)
    with pytest.raises(NegativeExponent):
        cellular_decompose(BiLaurent.monomial(0, -2), 1)
    with pytest.raises(BadIndex):
        cellular_decompose(Z, 0)
    with pytest.raises(BadIndex):
        cellular_project(Z, 2, 2)
    with pytest.raises(BadIndex):
        CellularForm(2, (Z,))
    with pytest.raises(ParseError):
        CellularForm.from_json({"pieces": []})


def test_form_json():
    form = cellular_decompose(R2 + Z, 2)
    assert CellularForm.from_json(form.to_json()) == form


def test_entangled_example():
    v0 = Z ** 2 + ZB ** 2
    v1 = entangled_v1_from_v0(v0)
    assert v1 == v0.scale(Fraction(1, 2))
    assert apply_L(v0 + mul_disk_weight(v1, 1), 1).is_zero()
    assert entangled_v1_from_v0(BiLaurent.constant(3)) == BiLaurent.constant(Fraction(-3, 2))
    with pytest.raises(NotHarmonic):
        entangled_v1_from_v0(R2)


@given(harmonics())
def test_entanglement_relation(v0):
    v1 = entangled_v1_from_v0(v0)
    assert apply_L(v0 + mul_disk_weight(v1, 1), 1).is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_seeded_decompositions_per_order(n):
    rng = make_rng(1000 + n)
    for _ in range(100):
        u = random_n_harmonic(rng, n, max_degree=3)
        form = cellular_decompose(u, n)
        assert cellular_recompose(form) == u
        assert form.is_valid()
        for j, term in enumerate(form.terms()):
            assert cellular_project(term, n, j) == term
