"""Exact scalar arithmetic over the Gaussian rationals Q(i).

Coefficients throughout the package are :class:`GaussianRational` values:
pairs of ``fractions.Fraction`` for the real and imaginary parts.  No
floating point is used anywhere; every operation is exact and equality is
decidable.  The textual forms ``a/b`` and ``a/b+c/d*i`` round-trip through
:func:`parse_scalar` / ``str()``.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "conj",
    "as_scalar",
    "format_rational",
    "parse_rational",
    "parse_scalar",
]

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating point is not allowed in exact scalars")
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    """An element of Q(i), stored as exact real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # -- predicates ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 = z * conj(z), as an exact Fraction."""
        return self.re * self.re + self.im * self.im

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        imag = "i" if abs(self.im) == 1 else f"{format_rational(abs(self.im))}*i"
        if not self.re:
            return imag if self.im > 0 else "-" + imag
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    return None


def as_scalar(value) -> GaussianRational:
    """Coerce an int, Fraction, or GaussianRational; reject anything else."""
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return coerced


def conj(value) -> GaussianRational:
    return as_scalar(value).conjugate()


ZERO = GaussianRational(Fraction(0))
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


# -- parsing / printing ---------------------------------------------------

_RATIONAL_RE = _re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

# pure imaginary: "i", "-i", "4/5*i"
_IMAG_RE = _re.compile(r"^\s*([+-]?)(?:(\d+(?:\s*/\s*\d+)?)\s*\*\s*)?i\s*$")

# full form: "3/5+4/5*i", "1/2-i"
_FULL_RE = _re.compile(
    r"^\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*([+-])\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*\s*)?i\s*$"
)


def format_rational(q: Fraction) -> str:
    """Render a Fraction as ``a`` or ``a/b`` (denominator always positive)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``a/b``, ``c/d*i``, or ``a/b+c/d*i`` (and the "*1" — free
    variants ``i``, ``-i``, ``1/2-i``) back into a GaussianRational."""
    m = _RATIONAL_RE.match(text)
    if m:
        return GaussianRational(parse_rational(text))
    m = _IMAG_RE.match(text)
    if m:
        mag = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
        return GaussianRational(Fraction(0), -mag if m.group(1) == "-" else mag)
    m = _FULL_RE.match(text)
    if m:
        real = parse_rational(m.group(1))
        mag = parse_rational(m.group(3)) if m.group(3) else Fraction(1)
        return GaussianRational(real, -mag if m.group(2) == "-" else mag)
    raise ValueError(f"not a scalar literal: {text!r}")
