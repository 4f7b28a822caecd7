"""Sparse bivariate Laurent polynomials in z and conj(z).

A BiLaurent is the finite sum of c[a, b] * z**a * conj(z)**b with exact
Gaussian-rational coefficients. It is the carrier for every symbolic
computation in the package: polynomials on the disk, harmonic pieces,
and the Laurent expansions of the extremal kernels at the boundary point 1.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from fractions import Fraction
from typing import Any

import numpy as np
import sympy

from ..errors import ParseError
from .gaussrat import GaussRational, Scalar, parse_fraction

_LOGGER = logging.getLogger(__name__)

type Exponent = tuple[int, int]


class BiLaurent:
    """Immutable sparse Laurent polynomial in z and conj(z)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None) -> None:
        """Initialize from an exponent -> coefficient mapping, dropping zeros."""
        clean: dict[Exponent, GaussRational] = {}
        for (a, b), coeff in (terms or {}).items():
            c = GaussRational.coerce(coeff)
            if c:
                clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, GaussRational]) -> BiLaurent:
        """Wrap an already-clean mapping without copying."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> BiLaurent:
        return cls._raw({})

    @classmethod
    def constant(cls, c: Scalar) -> BiLaurent:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1) -> BiLaurent:
        """Return c * z**a * conj(z)**b."""
        return cls({(a, b): c})

    @classmethod
    def z(cls) -> BiLaurent:
        return cls.monomial(1, 0)

    @classmethod
    def zbar(cls) -> BiLaurent:
        return cls.monomial(0, 1)

    @classmethod
    def disk_weight(cls) -> BiLaurent:
        """Return 1 - |z|**2."""
        return cls({(0, 0): 1, (1, 1): -1})

    # mapping access

    @property
    def terms(self) -> Mapping[Exponent, GaussRational]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, GaussRational]]:
        """Return terms sorted by exponent."""
        return sorted(self._terms.items())

    def coefficient(self, a: int, b: int) -> GaussRational:
        return self._terms.get((a, b), GaussRational())

    def __iter__(self) -> Iterator[tuple[Exponent, GaussRational]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    def __add__(self, other: BiLaurent | Scalar) -> BiLaurent:
        if not isinstance(other, BiLaurent):
            other = BiLaurent.constant(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BiLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiLaurent:
        return BiLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BiLaurent | Scalar) -> BiLaurent:
        if not isinstance(other, BiLaurent):
            other = BiLaurent.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> BiLaurent:
        return BiLaurent.constant(other) - self

    def scale(self, c: Scalar) -> BiLaurent:
        """Return c * self."""
        c = GaussRational.coerce(c)
        if not c:
            return BiLaurent.zero()
        return BiLaurent._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: BiLaurent | Scalar) -> BiLaurent:
        if not isinstance(other, BiLaurent):
            return self.scale(other)
        out: dict[Exponent, GaussRational] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key)
                out[key] = c1 * c2 if s is None else s + c1 * c2
        return BiLaurent._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiLaurent:
        if n < 0:
            raise ValueError("negative power of a BiLaurent")
        result = BiLaurent.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, c: Scalar) -> BiLaurent:
        return self.scale(GaussRational(1) / GaussRational.coerce(c))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiLaurent):
            return self._terms == other._terms
        if isinstance(other, GaussRational | Fraction | int):
            return self == BiLaurent.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def conjugate(self) -> BiLaurent:
        """Return the complex conjugate function."""
        return BiLaurent._raw(
            {(b, a): c.conjugate() for (a, b), c in self._terms.items()}
        )

    def map_terms(self, fn) -> BiLaurent:
        """Apply fn(a, b, c) -> coefficient termwise (keys kept)."""
        return BiLaurent({(a, b): fn(a, b, c) for (a, b), c in self._terms.items()})

    # structure queries

    def min_exponent(self) -> int | None:
        """Smallest exponent of z or conj(z) among the terms."""
        if not self._terms:
            return None
        return min(min(a, b) for a, b in self._terms)

    def has_negative_exponents(self) -> bool:
        return any(a < 0 or b < 0 for a, b in self._terms)

    def degree(self) -> int:
        """Total degree a + b (0 for the zero polynomial)."""
        return max((a + b for a, b in self._terms), default=0)

    def is_pluriharmonic_shape(self) -> bool:
        """True when every monomial is purely in z or purely in conj(z)."""
        return all(a == 0 or b == 0 for a, b in self._terms)

    # numerics

    def evaluate(self, z: complex | np.ndarray) -> complex | np.ndarray:
        """Evaluate at complex point(s)."""
        z = np.asarray(z, dtype=complex)
        zc = np.conj(z)
        total = np.zeros_like(z)
        for (a, b), c in self._terms.items():
            total = total + complex(c) * z**a * zc**b
        if total.ndim == 0:
            return complex(total)
        return total

    # interchange

    def to_json(self) -> dict[str, Any]:
        """Return the exact interchange document."""
        return {"terms": [{"a": a, "b": b, **c.to_json()} for (a, b), c in self]}

    @classmethod
    def from_json(cls, doc: Any) -> BiLaurent:
        """Parse the interchange document produced by to_json."""
        try:
            rows = doc["terms"]
            terms: dict[Exponent, GaussRational] = {}
            for row in rows:
                key = (int(row["a"]), int(row["b"]))
                c = GaussRational(
                    parse_fraction(row.get("re", "0")),
                    parse_fraction(row.get("im", "0")),
                )
                terms[key] = terms.get(key, GaussRational()) + c
        except (KeyError, TypeError, ValueError) as ex:
            _LOGGER.debug(f"BiLaurent.from_json (ERROR): {ex}")
            raise ParseError(f"malformed BiLaurent document: {ex}") from ex
        return cls(terms)

    def to_sympy(self, z: sympy.Symbol, zb: sympy.Symbol) -> sympy.Expr:
        """Return the polynomial as a sympy expression in z and zb."""
        return sympy.Add(
            *(
                (
                    sympy.Rational(c.re.numerator, c.re.denominator)
                    + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
                )
                * z**a
                * zb**b
                for (a, b), c in self
            )
        )

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, z: sympy.Symbol, zb: sympy.Symbol) -> BiLaurent:
        """Build a BiLaurent from a sympy expression in z and zb."""
        terms: dict[Exponent, GaussRational] = {}
        for term in sympy.Add.make_args(sympy.expand(expr)):
            if term.is_zero:
                continue
            coeff, rest = term.as_independent(z, zb, as_Add=False)
            powers = rest.as_powers_dict()
            if set(powers) - {z, zb, sympy.S.One}:
                raise ParseError(f"non-monomial factor in {term}")
            a, b = powers.get(z, 0), powers.get(zb, 0)
            if not (sympy.Integer(a) == a and sympy.Integer(b) == b):
                raise ParseError(f"non-integer exponent in {term}")
            re, im = (sympy.Rational(x) for x in coeff.as_real_imag())
            c = GaussRational(
                Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q))
            )
            key = (int(a), int(b))
            terms[key] = terms.get(key, GaussRational()) + c
        return cls(terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "BiLaurent(0)"
        parts = [f"{c}*z^{a}*zb^{b}" for (a, b), c in self]
        return f"BiLaurent({' + '.join(parts)})"
