"""Exact rational scalars and their text form.

Everything in this package computes over the rationals; ``fractions.Fraction``
already provides normalised arbitrary-precision arithmetic, so it is used
directly as the scalar type.  Reports and config files carry rationals as
strings like ``"-3/4"`` or ``"8"``.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

RationalLike = Fraction | int | str


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int; reject it explicitly
        raise TypeError("boolean is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p"`` or ``"p/q"`` in lowest terms."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def is_integer_at_most(value: Fraction, bound: int) -> bool:
    """True when ``value`` is an integer less than or equal to ``bound``."""
    return value.denominator == 1 and value.numerator <= bound
