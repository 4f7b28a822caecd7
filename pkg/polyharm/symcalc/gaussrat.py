"""Gaussian rationals: exact complex numbers with rational parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..errors import ParseError

type Scalar = GaussRational | Fraction | int


@dataclass(frozen=True, slots=True)
class GaussRational:
    """Complex number re + i*im with Fraction parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        """Normalise both parts to Fraction."""
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Scalar) -> GaussRational:
        """Return value as a GaussRational."""
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, Rational):
            return cls(Fraction(value))
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussRational")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: Scalar) -> GaussRational:
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussRational:
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> GaussRational:
        return self + (-GaussRational.coerce(other))

    def __rsub__(self, other: Scalar) -> GaussRational:
        return GaussRational.coerce(other) - self

    def __mul__(self, other: Scalar) -> GaussRational:
        o = GaussRational.coerce(other)
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GaussRational:
        o = GaussRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        num = self * o.conjugate()
        return GaussRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: Scalar) -> GaussRational:
        return GaussRational.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_json(self) -> dict[str, str]:
        """Return the exact string form used in interchange documents."""
        return {"re": fraction_to_str(self.re), "im": fraction_to_str(self.im)}

    def __str__(self) -> str:
        if self.im == 0:
            return fraction_to_str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"({fraction_to_str(self.re)}{sign}{fraction_to_str(abs(self.im))}i)"


def fraction_to_str(value: Fraction) -> str:
    """Return value as a "num/den" string."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str | int | Fraction) -> Fraction:
    """Parse a "num/den" string (or integer) into a Fraction."""
    if isinstance(text, Fraction | int):
        return Fraction(text)
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as ex:
        raise ParseError(f"invalid rational {text!r}") from ex
    return value
