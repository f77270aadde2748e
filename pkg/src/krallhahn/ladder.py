"""The four first-order ladder operators attached to the Hahn family.

Each kind is defined by a ratio sequence (a rational function of the degree)
and the common shift sequence -(2n + a + b - 1); the operator acts on the
basis by a triangular series whose coefficients are products of consecutive
ratios.  Partial products of the ratios have Pochhammer closed forms whose
numerator and denominator blocks are the clearing factors used everywhere in
the determinant machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .diffops import DifferenceOperator
from .errors import ParameterSingularity
from .hahn import HahnParams, hahn_recurrence_functions
from .polynomials import Polynomial, RationalFunction, pochhammer
from .rationals import Rational, as_rational

KINDS = (1, 2, 3, 4)


def series_ratio(kind: int, p: HahnParams) -> RationalFunction:
    """The ratio sequence of one ladder kind, as a rational function of n."""
    n = Polynomial.variable()
    a, b, N = p.a, p.b, p.N
    if kind == 1:
        return RationalFunction(-(n - N - 1), n + a + b + N + 1)
    if kind == 2:
        return RationalFunction((n - N - 1) * (n + b), (n + a) * (n + a + b + N + 1))
    if kind == 3:
        return RationalFunction.one()
    if kind == 4:
        return RationalFunction(-(n + b), n + a)
    raise ValueError(f"kind must be 1..4, got {kind}")


def series_shift(p: HahnParams) -> Polynomial:
    """-(2n + a + b - 1), common to all four kinds, as a polynomial in n."""
    return Polynomial((-(p.a + p.b - 1), -2))


def ratio_replacement(kind: int, p: HahnParams) -> RationalFunction:
    """C(n) / ratio(n) with the common zero cancelled.

    The recurrence coefficient C and the ratios of kinds 1 and 2 both vanish
    at n = N + 1; the twisted recurrence still holds there with this
    cancelled quotient in place of the raw division.
    """
    _, _, C = hahn_recurrence_functions(p)
    return C / series_ratio(kind, p)


def ladder_operator(kind: int, p: HahnParams) -> DifferenceOperator:
    """First-order difference operator realising the triangular series action."""
    x = Polynomial.variable()
    half = Polynomial.constant(Fraction(p.a + p.b + 1, 2))
    identity = DifferenceOperator({0: half})
    if kind == 1:
        return identity + DifferenceOperator.backward_difference().scale(x)
    if kind == 2:
        return identity + DifferenceOperator.forward_difference().scale(x - p.N)
    if kind == 3:
        return identity + DifferenceOperator.forward_difference().scale(x + p.a + 1)
    if kind == 4:
        return identity + DifferenceOperator.backward_difference().scale(x - p.b - p.N - 1)
    raise ValueError(f"kind must be 1..4, got {kind}")


def series_coefficients(kind: int, n: int, p: HahnParams) -> list[Fraction]:
    """Coefficients of h_n, h_{n-1}, ..., h_0 in the series expansion.

    The image of h_n under the ladder operator is
    -shift(n+1)/2 * h_n  +  sum_j (-1)^{j+1} shift(n-j+1) ratio(n)...ratio(n-j+1) h_{n-j}.
    """
    ratio = series_ratio(kind, p)
    shift = series_shift(p)
    out = [-shift(n + 1) / 2]
    running = Fraction(1)
    for j in range(1, n + 1):
        try:
            running *= ratio(n - j + 1)
        except ZeroDivisionError as exc:
            raise ParameterSingularity(
                f"ladder ratio of kind {kind} has a pole at degree {n - j + 1}"
            ) from exc
        term = shift(n - j + 1) * running
        out.append(term if j % 2 else -term)
    return out


# -- partial products of the ratios and their clearing factors ---------------------


def rising_block(which: int, length: int, shift: Rational | int, p: HahnParams) -> Polynomial:
    """Numerator clearing factor: a length-j Pochhammer block at x + shift.

    which = 1 gives (y - j + b + 1)_j and which = 2 gives (y - j - N)_j,
    both with y = x + shift.
    """
    x = Polynomial.variable() + as_rational(shift)
    if which == 1:
        return pochhammer(x - length + p.b + 1, length)
    if which == 2:
        return pochhammer(x - length - p.N, length)
    raise ValueError(f"which must be 1 or 2, got {which}")


def falling_block(which: int, length: int, shift: Rational | int, p: HahnParams) -> Polynomial:
    """Denominator clearing factor: (-1)^j times a Pochhammer block at x + shift.

    which = 1 gives (-1)^j (y - j + a + 1)_j and which = 2 gives
    (-1)^j (y - j + a + b + N + 2)_j, both with y = x + shift.
    """
    x = Polynomial.variable() + as_rational(shift)
    if which == 1:
        block = pochhammer(x - length + p.a + 1, length)
    elif which == 2:
        block = pochhammer(x - length + p.a + p.b + p.N + 2, length)
    else:
        raise ValueError(f"which must be 1 or 2, got {which}")
    return -block if length % 2 else block


@lru_cache(maxsize=None)
def _ratio_product_closed(kind: int, length: int, p: HahnParams) -> RationalFunction:
    if kind == 1:
        return RationalFunction(rising_block(2, length, 0, p), falling_block(2, length, 0, p))
    if kind == 2:
        return RationalFunction(
            rising_block(1, length, 0, p) * rising_block(2, length, 0, p),
            falling_block(1, length, 0, p) * falling_block(2, length, 0, p),
        )
    if kind == 3:
        return RationalFunction.one()
    if kind == 4:
        return RationalFunction(rising_block(1, length, 0, p), falling_block(1, length, 0, p))
    raise ValueError(f"kind must be 1..4, got {kind}")


def ratio_product(kind: int, length: int, p: HahnParams) -> RationalFunction:
    """Product ratio(x) ratio(x-1) ... ratio(x-length+1) in closed form.

    length 0 gives 1; negative length gives the reciprocal of the product
    based at x - length.
    """
    if length >= 0:
        return _ratio_product_closed(kind, length, p)
    positive = _ratio_product_closed(kind, -length, p).shift_argument(-length)
    return positive.reciprocal()


def ratio_product_value(kind: int, base: Rational | int, length: int, p: HahnParams) -> Fraction:
    """Exact value of the partial product at a rational base point."""
    return ratio_product(kind, length, p)(as_rational(base))
