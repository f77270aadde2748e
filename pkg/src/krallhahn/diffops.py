"""Difference operators with polynomial coefficients.

An operator is a finite sum of shift terms h_l(x) * S_l where S_l moves the
argument by the integer l, i.e. (S_l f)(x) = f(x + l).  Acting on polynomials
this stays exact.  Composition follows from S_l h(x) = h(x + l) S_l.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import ZeroOperatorError
from .polynomials import Polynomial, Scalar
from .rationals import as_rational


class DifferenceOperator:
    """Finite linear combination of integer shifts with polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Polynomial]) -> None:
        cleaned: dict[int, Polynomial] = {}
        for offset in sorted(terms):
            coeff = terms[offset]
            if not isinstance(coeff, Polynomial):
                coeff = Polynomial.constant(coeff)
            if not coeff.is_zero:
                cleaned[int(offset)] = coeff
        object.__setattr__(self, "terms", cleaned)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "DifferenceOperator":
        return cls({})

    @classmethod
    def identity(cls) -> "DifferenceOperator":
        return cls({0: Polynomial.one()})

    @classmethod
    def shift(cls, offset: int, coeff: Polynomial | Scalar = 1) -> "DifferenceOperator":
        coeff = coeff if isinstance(coeff, Polynomial) else Polynomial.constant(coeff)
        return cls({offset: coeff})

    @classmethod
    def forward_difference(cls) -> "DifferenceOperator":
        """S_1 - S_0."""
        return cls({1: Polynomial.one(), 0: -Polynomial.one()})

    @classmethod
    def backward_difference(cls) -> "DifferenceOperator":
        """S_0 - S_{-1}."""
        return cls({0: Polynomial.one(), -1: -Polynomial.one()})

    # -- structure ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def genre(self) -> tuple[int, int]:
        """Smallest and largest shift present; undefined for the zero operator."""
        if not self.terms:
            raise ZeroOperatorError("zero operator has no genre")
        offsets = self.terms.keys()
        return min(offsets), max(offsets)

    @property
    def order(self) -> int:
        lo, hi = self.genre
        return hi - lo

    def coefficient(self, offset: int) -> Polynomial:
        return self.terms.get(offset, Polynomial.zero())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "DifferenceOperator") -> "DifferenceOperator":
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        merged = dict(self.terms)
        for offset, coeff in other.terms.items():
            merged[offset] = merged.get(offset, Polynomial.zero()) + coeff
        return DifferenceOperator(merged)

    def __neg__(self) -> "DifferenceOperator":
        return DifferenceOperator({l: -c for l, c in self.terms.items()})

    def __sub__(self, other: "DifferenceOperator") -> "DifferenceOperator":
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Polynomial | Scalar) -> "DifferenceOperator":
        """Left multiplication by a polynomial (or scalar) in x."""
        factor = factor if isinstance(factor, Polynomial) else Polynomial.constant(factor)
        return DifferenceOperator({l: factor * c for l, c in self.terms.items()})

    def __mul__(self, factor: Scalar) -> "DifferenceOperator":
        if not isinstance(factor, (int, Fraction)):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def compose(self, other: "DifferenceOperator") -> "DifferenceOperator":
        """Operator product: (self o other)(f) = self(other(f))."""
        out: dict[int, Polynomial] = {}
        for l, h in self.terms.items():
            for k, g in other.terms.items():
                contrib = h * g.shift_argument(l)
                key = l + k
                out[key] = out.get(key, Polynomial.zero()) + contrib
        return DifferenceOperator(out)

    def apply(self, f: Polynomial) -> Polynomial:
        acc = Polynomial.zero()
        for l, h in self.terms.items():
            acc = acc + h * f.shift_argument(l)
        return acc

    def translate(self, offset) -> "DifferenceOperator":
        """Conjugate by argument translation: if self(f) = g then the result
        maps f(x - offset) to g(x - offset)."""
        offset = as_rational(offset)
        return DifferenceOperator(
            {l: c.shift_argument(-offset) for l, c in self.terms.items()}
        )

    # -- serialisation -----------------------------------------------------------

    def to_records(self) -> list[dict]:
        return [
            {"offset": l, "coefficient": c.to_strings()}
            for l, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_records(cls, records) -> "DifferenceOperator":
        return cls(
            {
                int(rec["offset"]): Polynomial(
                    tuple(as_rational(s) for s in rec["coefficient"])
                )
                for rec in records
            }
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "DifferenceOperator(0)"
        parts = [f"S_{l}: {c!r}" for l, c in sorted(self.terms.items())]
        return "DifferenceOperator({" + ", ".join(parts) + "})"


def operator_polynomial(poly: Polynomial, base: DifferenceOperator) -> DifferenceOperator:
    """poly(base), with base**0 the identity operator (Horner)."""
    acc = DifferenceOperator.zero()
    for c in reversed(poly.coeffs):
        acc = acc.compose(base) + DifferenceOperator.identity().scale(c)
    return acc
