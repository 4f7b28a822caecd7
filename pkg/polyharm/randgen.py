"""Seeded random instances for the property suites."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .const import RANDOM_MAX_COEFF, RANDOM_MAX_EXPONENT, RANDOM_MAX_TERMS
from .symcalc import AlmansiForm, BiLaurent, GaussRational, almansi_recompose


def make_rng(seed: int) -> np.random.Generator:
    """Generator backed by a SeedSequence so a seed reproduces every instance."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def random_fraction(rng: np.random.Generator, bound: int = RANDOM_MAX_COEFF) -> Fraction:
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))


def random_gauss(rng: np.random.Generator, bound: int = RANDOM_MAX_COEFF) -> GaussRational:
    return GaussRational(random_fraction(rng, bound), random_fraction(rng, bound))


def random_bilaurent(
    rng: np.random.Generator,
    max_terms: int = RANDOM_MAX_TERMS,
    max_exponent: int = RANDOM_MAX_EXPONENT,
    laurent: bool = False,
) -> BiLaurent:
    """Sparse BiLaurent; negative exponents only when laurent is set."""
    low = -max_exponent if laurent else 0
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        key = (int(rng.integers(low, max_exponent + 1)), int(rng.integers(low, max_exponent + 1)))
        terms[key] = random_gauss(rng)
    return BiLaurent(terms)


def random_harmonic(
    rng: np.random.Generator, max_degree: int = RANDOM_MAX_EXPONENT, max_terms: int = 4
) -> BiLaurent:
    """Harmonic polynomial: sums of powers of z and of conj(z)."""
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        k = int(rng.integers(0, max_degree + 1))
        key = (k, 0) if rng.integers(2) else (0, k)
        terms[key] = random_gauss(rng)
    return BiLaurent(terms)


def random_almansi(rng: np.random.Generator, n: int, max_degree: int = 4) -> AlmansiForm:
    return AlmansiForm(n, tuple(random_harmonic(rng, max_degree, 3) for _ in range(n)))


def random_n_harmonic(rng: np.random.Generator, n: int, max_degree: int = 4) -> BiLaurent:
    """N-harmonic polynomial built from random Almansi pieces."""
    return almansi_recompose(random_almansi(rng, n, max_degree))


def random_p(rng: np.random.Generator, max_den: int = 24, p_max: int = 4) -> Fraction:
    """Positive rational p in (0, p_max]."""
    den = int(rng.integers(1, max_den + 1))
    return Fraction(int(rng.integers(1, p_max * den + 1)), den)


def random_point(rng: np.random.Generator, radius: float) -> complex:
    """Uniform point of the disk |z| < radius."""
    r = radius * float(np.sqrt(rng.random()))
    return r * complex(np.exp(2j * np.pi * rng.random()))
