"""Almansi expansion, its alternative form and the extension operator.

An N-harmonic polynomial u on the disk is written uniquely as
u = sum_j |z|^(2j) u_j with harmonic u_j, or as
u = sum_j (1-|z|^2)^j v_j with harmonic v_j. The extension E[u](z, rho)
replaces |z|^2 by rho^2 in the first form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np

from ..errors import (
    BadIndex,
    NegativeExponent,
    NotDivisible,
    NotHarmonic,
    NotPolyharmonic,
    ParseError,
    RadiusViolation,
)
from .bilaurent import BiLaurent
from .operators import is_harmonic, is_n_harmonic, mul_disk_weight

_LOGGER = logging.getLogger(__name__)


def _check_pieces(order: int, pieces: tuple[BiLaurent, ...], label: str) -> None:
    if order < 1:
        raise BadIndex(f"{label}: order {order} < 1")
    if len(pieces) != order:
        raise BadIndex(f"{label}: {len(pieces)} pieces for order {order}")
    for j, piece in enumerate(pieces):
        if not is_harmonic(piece):
            raise NotHarmonic(f"{label}: piece {j} is not harmonic")


def _pieces_from_json(doc: Any) -> tuple[int, tuple[BiLaurent, ...]]:
    try:
        order = int(doc["order"])
        pieces = tuple(BiLaurent.from_json(p) for p in doc["pieces"])
    except (KeyError, TypeError, ValueError) as ex:
        raise ParseError(f"malformed decomposition document: {ex}") from ex
    return order, pieces


@dataclass(frozen=True)
class AlmansiForm:
    """Harmonic pieces u_0..u_{N-1} with u = sum |z|^(2j) u_j."""

    order: int
    pieces: tuple[BiLaurent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        _check_pieces(self.order, self.pieces, "AlmansiForm")

    def to_json(self) -> dict[str, Any]:
        return {"order": self.order, "pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, doc: Any) -> AlmansiForm:
        return cls(*_pieces_from_json(doc))


@dataclass(frozen=True)
class AltAlmansiForm:
    """Harmonic pieces v_0..v_{N-1} with u = sum (1-|z|^2)^j v_j."""

    order: int
    pieces: tuple[BiLaurent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        _check_pieces(self.order, self.pieces, "AltAlmansiForm")

    def to_json(self) -> dict[str, Any]:
        return {"order": self.order, "pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, doc: Any) -> AltAlmansiForm:
        return cls(*_pieces_from_json(doc))


@dataclass(frozen=True)
class ExtensionPoly:
    """E[u](z, rho) = sum_j rho^(2j) coeffs[j](z), harmonic in z."""

    coeffs: tuple[BiLaurent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def rho_degree(self) -> int:
        """Degree in rho (even); 2N-2 when the top coefficient is nonzero."""
        nonzero = [j for j, c in enumerate(self.coeffs) if c]
        return 2 * nonzero[-1] if nonzero else 0


def almansi_decompose(u: BiLaurent, n: int) -> AlmansiForm:
    """Group the monomials of u by the power of |z|^2 they carry."""
    if u.has_negative_exponents():
        raise NegativeExponent("Almansi expansion needs a polynomial in z, conj(z)")
    if not is_n_harmonic(u, n):
        _LOGGER.debug(f"almansi_decompose (ERROR): input is not {n}-harmonic")
        raise NotPolyharmonic(f"input is not {n}-harmonic")
    groups: list[dict[tuple[int, int], Any]] = [{} for _ in range(n)]
    for (a, b), c in u:
        m = min(a, b)
        groups[m][(a - m, b - m)] = c
    return AlmansiForm(n, tuple(BiLaurent(g) for g in groups))


def almansi_recompose(f: AlmansiForm) -> BiLaurent:
    """Return sum |z|^(2j) u_j."""
    total = BiLaurent.zero()
    for j, piece in enumerate(f.pieces):
        total = total + BiLaurent.monomial(j, j) * piece
    return total


def _binomial_transform(pieces: tuple[BiLaurent, ...]) -> tuple[BiLaurent, ...]:
    """x_j -> (-1)^j sum_{k>=j} C(k, j) x_k; the map is its own inverse."""
    n = len(pieces)
    out = []
    for j in range(n):
        acc = BiLaurent.zero()
        for k in range(j, n):
            acc = acc + pieces[k].scale(comb(k, j))
        out.append(acc.scale((-1) ** j))
    return tuple(out)


def almansi_to_alternative(f: AlmansiForm) -> AltAlmansiForm:
    return AltAlmansiForm(f.order, _binomial_transform(f.pieces))


def alternative_to_almansi(g: AltAlmansiForm) -> AlmansiForm:
    return AlmansiForm(g.order, _binomial_transform(g.pieces))


def alternative_recompose(g: AltAlmansiForm) -> BiLaurent:
    """Return sum (1-|z|^2)^j v_j."""
    total = BiLaurent.zero()
    for j, piece in enumerate(g.pieces):
        total = total + mul_disk_weight(piece, j)
    return total


def extension(f: AlmansiForm) -> ExtensionPoly:
    return ExtensionPoly(f.pieces)


def extension_restrict(e: ExtensionPoly) -> BiLaurent:
    """Substitute rho^2 := z*conj(z)."""
    total = BiLaurent.zero()
    for j, coeff in enumerate(e.coeffs):
        total = total + BiLaurent.monomial(j, j) * coeff
    return total


def extension_evaluate(e: ExtensionPoly, z: complex, rho: float) -> complex:
    """Numeric value of E[u](z, rho)."""
    r2 = rho * rho
    return complex(sum(r2**j * c.evaluate(z) for j, c in enumerate(e.coeffs)))


def extension_poisson(
    u: BiLaurent, n: int, rho: float, z: complex, angular_nodes: int = 256
) -> complex:
    """E[u](z, rho) from the values of u on |zeta| = rho (Poisson integral)."""
    if not is_n_harmonic(u, n):
        raise NotPolyharmonic(f"input is not {n}-harmonic")
    if abs(z) >= rho:
        raise RadiusViolation(f"|z|={abs(z)} must be below rho={rho}")
    phi = 2 * np.pi * np.arange(angular_nodes) / angular_nodes
    zeta = rho * np.exp(1j * phi)
    kernel = (rho * rho - abs(z) ** 2) / np.abs(zeta - z) ** 2
    return complex(np.mean(kernel * u.evaluate(zeta)))


def divide_by_disk_weight(u: BiLaurent, n: int) -> BiLaurent:
    """Return w with u = (1-|z|^2) w and w (n-1)-harmonic.

    Possible exactly when the first piece of the alternative form vanishes;
    for n = 1 that leaves only u = 0.
    """
    alt = almansi_to_alternative(almansi_decompose(u, n))
    if alt.pieces[0]:
        _LOGGER.debug("divide_by_disk_weight (ERROR): leading piece v_0 is nonzero")
        raise NotDivisible("u does not vanish on the unit circle")
    if n == 1:
        return BiLaurent.zero()
    return alternative_recompose(AltAlmansiForm(n - 1, alt.pieces[1:]))
