"""Cellular decomposition u = sum_j M^j[w_j] with L_{N-j-1}[w_j] = 0.

The decomposition is built by induction on N: the step from N0 to N0+1
decomposes L_{N0}[u], which is N0-harmonic, and lifts its pieces with the
identity L_t M^j = M^j L_{t-j} + 4j(j-1-2t) M^{j-1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from ..errors import (
    BadIndex,
    NegativeExponent,
    NotHarmonic,
    NotPolyharmonic,
    ParseError,
    PostconditionFailed,
)
from .bilaurent import BiLaurent
from .operators import apply_L, euler, is_harmonic, is_n_harmonic, mul_disk_weight

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellularForm:
    """Pieces w_0..w_{N-1} of the cellular decomposition."""

    order: int
    pieces: tuple[BiLaurent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.order < 1:
            raise BadIndex(f"CellularForm: order {self.order} < 1")
        if len(self.pieces) != self.order:
            raise BadIndex(
                f"CellularForm: {len(self.pieces)} pieces for order {self.order}"
            )

    def terms(self) -> tuple[BiLaurent, ...]:
        """The summands M^j[w_j]."""
        return tuple(mul_disk_weight(w, j) for j, w in enumerate(self.pieces))

    def checks(self) -> list[dict[str, Any]]:
        """Per-piece annihilation and harmonicity checks."""
        n = self.order
        out = []
        for j, w in enumerate(self.pieces):
            out.append(
                {
                    "piece": j,
                    "annihilated_by_L": apply_L(w, n - j - 1).is_zero(),
                    "harmonic_order": n - j,
                    "polyharmonic": is_n_harmonic(w, n - j),
                }
            )
        return out

    def is_valid(self) -> bool:
        return all(c["annihilated_by_L"] and c["polyharmonic"] for c in self.checks())

    def to_json(self) -> dict[str, Any]:
        return {"order": self.order, "pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, doc: Any) -> CellularForm:
        try:
            return cls(
                int(doc["order"]), tuple(BiLaurent.from_json(p) for p in doc["pieces"])
            )
        except (KeyError, TypeError, ValueError) as ex:
            raise ParseError(f"malformed cellular document: {ex}") from ex


def cellular_recompose(form: CellularForm) -> BiLaurent:
    total = BiLaurent.zero()
    for term in form.terms():
        total = total + term
    return total


def _decompose(u: BiLaurent, n: int) -> list[BiLaurent]:
    if n == 1:
        return [u]
    n0 = n - 1
    h = _decompose(apply_L(u, n0), n0)
    lift = BiLaurent.zero()
    for j, hj in enumerate(h):
        lift = lift + mul_disk_weight(hj, j + 1).scale(
            Fraction(1, 4 * (j + 1) * (2 * n0 - j))
        )
    pieces = [u + lift]
    for j in range(1, n):
        pieces.append(h[j - 1].scale(Fraction(-1, 4 * j * (2 * n0 - j + 1))))
    return pieces


def cellular_decompose(u: BiLaurent, n: int) -> CellularForm:
    """Unique cellular decomposition of an n-harmonic polynomial."""
    if n < 1:
        raise BadIndex(f"order {n} < 1")
    if u.has_negative_exponents():
        raise NegativeExponent("cellular decomposition needs a polynomial input")
    if not is_n_harmonic(u, n):
        _LOGGER.debug(f"cellular_decompose (ERROR): input is not {n}-harmonic")
        raise NotPolyharmonic(f"input is not {n}-harmonic")
    form = CellularForm(n, tuple(_decompose(u, n)))
    if cellular_recompose(form) != u:
        raise PostconditionFailed("cellular recomposition differs from input")
    for check in form.checks():
        if not (check["annihilated_by_L"] and check["polyharmonic"]):
            raise PostconditionFailed(f"cellular piece check failed: {check}")
    _LOGGER.debug(f"cellular_decompose: order {n}, {sum(map(len, form.pieces))} terms")
    return form


def cellular_project(u: BiLaurent, n: int, j: int) -> BiLaurent:
    """Return the j-th summand M^j[w_j] of the cellular decomposition."""
    if not 0 <= j < n:
        raise BadIndex(f"projection index {j} not in [0, {n})")
    return cellular_decompose(u, n).terms()[j]


def entangled_v1_from_v0(v0: BiLaurent) -> BiLaurent:
    """Return v1 = (euler(v0) - v0)/2, so that L_1[v0 + M v1] = 0."""
    if not is_harmonic(v0):
        raise NotHarmonic("v0 must be harmonic")
    v1 = (euler(v0) - v0).scale(Fraction(1, 2))
    if not apply_L(v0 + mul_disk_weight(v1, 1), 1).is_zero():
        raise PostconditionFailed("L_1[v0 + M v1] != 0")
    return v1


def uniform_potential_polynomial(theta: int) -> BiLaurent:
    """Return sum_k C(theta, k)^2 |z|^(2k), annihilated by L_theta."""
    if theta < 0:
        raise BadIndex(f"theta {theta} < 0")
    return BiLaurent({(k, k): comb(theta, k) ** 2 for k in range(theta + 1)})
