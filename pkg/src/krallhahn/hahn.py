"""Hahn and dual Hahn families: polynomials, operator, recurrence, weights.

The Hahn polynomials are built straight from their defining sum, so the
three-term recurrence and the second-order eigenvalue equation remain
independent checks of the same family.  Weights are stored with the constant
N! * Gamma(a+1) * Gamma(b+1) divided out, which keeps every mass rational;
all weight comparisons in this package are up to a global constant anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diffops import DifferenceOperator
from .errors import ParameterSingularity
from .measures import DiscreteMeasure
from .polynomials import Polynomial, RationalFunction, pochhammer
from .rationals import Rational, as_rational, format_rational
from .sets import SetQuartet, set_max


@dataclass(frozen=True)
class HahnParams:
    """Parameter triple (a, b, N) with N a positive integer.

    Validation matches the classical requirements for the finite weight on
    {0, ..., N}: a, b must avoid -1, ..., -N and a + b must avoid
    -1, ..., -2N-1.
    """

    a: Fraction
    b: Fraction
    N: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if not isinstance(self.N, int) or self.N < 1:
            raise ParameterSingularity(f"N must be a positive integer, got {self.N!r}")
        for name, value in (("a", self.a), ("b", self.b)):
            if value.denominator == 1 and -self.N <= value.numerator <= -1:
                raise ParameterSingularity(
                    f"{name} = {format_rational(value)} lies in -1..-{self.N}"
                )
        s = self.a + self.b
        if s.denominator == 1 and -2 * self.N - 1 <= s.numerator <= -1:
            raise ParameterSingularity(
                f"a+b = {format_rational(s)} lies in -1..-{2 * self.N + 1}"
            )

    @property
    def classically_positive(self) -> bool:
        """True when the weight has constant sign on its whole support."""
        minus_n = Fraction(-self.N)
        return (self.a > -1 and self.b > -1) or (self.a < minus_n and self.b < minus_n)

    def eigenvalue(self, n: Rational | int) -> Fraction:
        """theta_n = n (n + a + b + 1)."""
        n = as_rational(n)
        return n * (n + self.a + self.b + 1)

    def eigenvalue_poly(self, shift: Rational | int = 0) -> Polynomial:
        """theta_{x+shift} as a polynomial in x."""
        base = Polynomial((0, self.a + self.b + 1, 1))
        return base.shift_argument(shift)

    def shifted(self, da: Rational | int, db: Rational | int, dN: int) -> "HahnParams":
        return HahnParams(self.a + as_rational(da), self.b + as_rational(db), self.N + dN)


def hahn_polynomial(n: int, p: HahnParams) -> Polynomial:
    """Degree-n Hahn polynomial from the defining hypergeometric-type sum."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b, N = p.a, p.b, p.N
    outer = pochhammer(2 + a + b + N, n)
    if outer == 0:
        raise ParameterSingularity(
            f"(2+a+b+N)_{n} vanishes for a+b = {format_rational(a + b)}, N = {N}"
        )
    minus_x = Polynomial((0, -1))
    acc = Polynomial.zero()
    for j in range(n + 1):
        low = pochhammer(a + 1, j)
        if low == 0:
            raise ParameterSingularity(f"(a+1)_{j} vanishes for a = {format_rational(a)}")
        coeff = (
            pochhammer(Fraction(N - n + 1), n - j)
            * pochhammer(a + b + 1, j + n)
            / (outer * low * factorial(n - j) * factorial(j))
        )
        if coeff != 0:
            acc = acc + coeff * pochhammer(minus_x, j)
    return acc


def hahn_leading_coefficient(n: int, p: HahnParams) -> Fraction:
    """Leading coefficient of the degree-n Hahn polynomial."""
    a, b = p.a, p.b
    sign = -1 if n % 2 else 1
    return (
        sign
        * pochhammer(a + b + 1, 2 * n)
        / (pochhammer(2 + a + b + p.N, n) * pochhammer(a + 1, n) * factorial(n))
    )


def hahn_operator(p: HahnParams) -> DifferenceOperator:
    """Second-order difference operator with the Hahn family as eigenfunctions."""
    x = Polynomial.variable()
    down = x * (x - p.b - p.N - 1)
    up = (x + p.a + 1) * (x - p.N)
    return DifferenceOperator({-1: down, 0: -(up + down), 1: up})


def hahn_recurrence_functions(
    p: HahnParams,
) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
    """The three-term recurrence coefficients as rational functions of the degree.

    Convention: x h_n = A(n+1) h_{n+1} + B(n) h_n + C(n) h_{n-1}.
    """
    a, b, N = p.a, p.b, p.N
    n = Polynomial.variable()
    s = a + b
    A = RationalFunction(-(n * (n + a) * (n + s + N + 1)), (2 * n + s - 1) * (2 * n + s))
    B = RationalFunction(
        Polynomial.constant(N * (a + 1) * s) + n * (2 * N + b - a) * (n + s + 1),
        (2 * n + s) * (2 * n + s + 2),
    )
    C = RationalFunction(
        -((n + s) * (n + b) * (N - n + 1)), (2 * n + s) * (2 * n + s + 1)
    )
    return A, B, C


def hahn_recurrence(n: int, p: HahnParams) -> tuple[Fraction, Fraction, Fraction]:
    """(A(n), B(n), C(n)) evaluated at integer degree n."""
    try:
        return tuple(f(n) for f in hahn_recurrence_functions(p))  # type: ignore[return-value]
    except ZeroDivisionError as exc:
        raise ParameterSingularity(
            f"recurrence coefficient undefined at n = {n} for a+b = "
            f"{format_rational(p.a + p.b)}"
        ) from exc


def hahn_weight(p: HahnParams) -> DiscreteMeasure:
    """Weight on {0, ..., N} modulo the global constant N! Gamma(a+1) Gamma(b+1)."""
    masses = {}
    for x in range(p.N + 1):
        masses[Fraction(x)] = (
            pochhammer(p.a + 1, x)
            * pochhammer(p.b + 1, p.N - x)
            / (factorial(x) * factorial(p.N - x))
        )
    return DiscreteMeasure(masses)


def dual_hahn_polynomial(
    n: int, alpha: Rational | int, beta: Rational | int, gamma: Rational | int
) -> Polynomial:
    """Degree-n dual Hahn polynomial with parameters (alpha, beta, gamma).

    The third parameter plays the role of the support size but may be any
    rational here.  Requires alpha != -1, -2, ...
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha, beta, gamma = as_rational(alpha), as_rational(beta), as_rational(gamma)
    if alpha.denominator == 1 and alpha.numerator <= -1:
        raise ParameterSingularity(
            f"dual family needs alpha not in -1,-2,...; got {format_rational(alpha)}"
        )
    x = Polynomial.variable()
    s = alpha + beta + 1
    acc = Polynomial.zero()
    lattice = Polynomial.one()  # prod_{i<j} (x - i(i + alpha + beta + 1))
    for j in range(n + 1):
        num = (
            pochhammer(Fraction(-n), j)
            * pochhammer(-gamma + j, n - j)
            / (pochhammer(alpha + 1, j) * factorial(j))
        )
        if j % 2:
            num = -num
        if num != 0:
            acc = acc + num * lattice
        lattice = lattice * (x - j * (j + s))
    return acc


def dual_hahn_leading_coefficient(n: int, alpha: Rational | int) -> Fraction:
    return 1 / pochhammer(as_rational(alpha) + 1, n)


def duality_factor(n: int, x: int, p: HahnParams) -> Fraction:
    """Constant linking R_x at theta_n with h_n at x (exact duality)."""
    a, b, N = p.a, p.b, p.N
    sign = -1 if n % 2 else 1
    return (
        sign
        * factorial(n)
        * pochhammer(Fraction(N) + a + b + 2, n)
        * pochhammer(Fraction(-N), x)
        / (pochhammer(a + b + 1, n) * pochhammer(Fraction(-N), n))
    )


# -- the four companion families -------------------------------------------------

_COMPANION_SIGNS = {1: ("b", "a", 1), 2: ("a", "b", 1), 3: ("b", "a", -1), 4: ("a", "b", -1)}


def companion_parameters(kind: int, p: HahnParams) -> tuple[Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma) of the dual family attached to a ladder kind."""
    if kind not in _COMPANION_SIGNS:
        raise ValueError(f"kind must be 1..4, got {kind}")
    first, second, which = _COMPANION_SIGNS[kind]
    alpha = -getattr(p, first)
    beta = -getattr(p, second)
    gamma = Fraction(p.a + p.b + p.N) if which == 1 else Fraction(-2 - p.N)
    return alpha, beta, gamma


def companion_polynomial(kind: int, degree: int, p: HahnParams) -> Polynomial:
    """Dual-family polynomial, in the eigenvalue variable, for one ladder kind.

    These are the default determinant-row polynomials: they satisfy the Hahn
    three-term recurrence twisted by the kind's ladder ratio.
    """
    alpha, beta, gamma = companion_parameters(kind, p)
    base = dual_hahn_polynomial(degree, alpha, beta, gamma)
    return base.shift_argument(p.a + p.b)


def companion_eigencoefficients(kind: int, p: HahnParams) -> tuple[Fraction, Fraction]:
    """(slope, intercept): the twisted recurrence multiplies by slope*j + intercept."""
    table = {
        1: (Fraction(1), -p.b - p.N),
        2: (Fraction(-1), Fraction(p.a)),
        3: (Fraction(-1), Fraction(-p.N - 1)),
        4: (Fraction(1), Fraction(1)),
    }
    if kind not in table:
        raise ValueError(f"kind must be 1..4, got {kind}")
    return table[kind]


# -- transformed weights -----------------------------------------------------------


def factored_hahn_weight(p: HahnParams, quartet: SetQuartet) -> DiscreteMeasure:
    """Christoffel transform of the Hahn weight by the quartet's factor polynomial."""
    x = Polynomial.variable()
    factor = Polynomial.one()
    for f in quartet.first:
        factor = factor * (p.b + p.N + 1 + f - x)
    for f in quartet.second:
        factor = factor * (x + p.a + 1 + f)
    for f in quartet.third:
        factor = factor * (p.N - f - x)
    for f in quartet.fourth:
        factor = factor * (x - f)
    base = hahn_weight(p)
    return DiscreteMeasure({pt: m * factor(pt) for pt, m in base.atoms.items()})


def transformed_parameters(
    p: HahnParams, quartet: SetQuartet, pads: tuple[int, int, int]
) -> HahnParams:
    """Parameters of the shifted base weight used by the direct construction."""
    f1m, f2m, f3m, f4m = quartet.maxima
    a = p.a - f2m - f4m - pads[1] - 1
    b = p.b - f1m - f3m - pads[0] - pads[2]
    N = p.N + f3m + f4m + pads[2] + 1
    try:
        return HahnParams(a, b, N)
    except ParameterSingularity as exc:
        raise ParameterSingularity(f"shifted base weight is degenerate: {exc}") from exc


def transformed_hahn_weight(
    p: HahnParams, quartet: SetQuartet, pads: tuple[int, int, int]
) -> DiscreteMeasure:
    """The measure the constructed polynomials are orthogonal against.

    A polynomial factor times the Hahn weight with shifted parameters,
    translated so the support starts at -(max of the fourth set) - 1.
    """
    shifted = transformed_parameters(p, quartet, pads)
    f4m = set_max(quartet.fourth)
    base = hahn_weight(shifted).translate(Fraction(-f4m - 1))
    x = Polynomial.variable()
    factor = Polynomial.one()
    for f in quartet.first:
        factor = factor * (p.b + p.N + 1 - f - x)
    for f in quartet.second:
        factor = factor * (x + p.a + 1 - f)
    for f in quartet.third:
        factor = factor * (p.N + f - x)
    for f in quartet.fourth:
        factor = factor * (x + f4m + 1 - f)
    return DiscreteMeasure({pt: m * factor(pt) for pt, m in base.atoms.items()})


def transformed_support(p: HahnParams, quartet: SetQuartet, pads: tuple[int, int, int]) -> list[Fraction]:
    """Expected support of the transformed weight, from the set data alone."""
    f3m, f4m = set_max(quartet.third), set_max(quartet.fourth)
    removed = {Fraction(p.N + f) for f in quartet.third}
    removed |= {Fraction(-f4m - 1 + f) for f in quartet.fourth}
    return [
        Fraction(x)
        for x in range(-f4m - 1, p.N + f3m + pads[2] + 1)
        if Fraction(x) not in removed
    ]


@dataclass(frozen=True)
class CorollaryReduction:
    """Direct-construction data equivalent to a Christoffel-factored weight.

    Running the construction at ``params`` with ``quartet`` and ``pads``, then
    translating every output by ``shift``, realises the factored weight at the
    original parameters.
    """

    params: HahnParams
    quartet: SetQuartet
    pads: tuple[int, int, int]
    shift: int


def corollary_reduction(p: HahnParams, quartet: SetQuartet) -> CorollaryReduction:
    """Reduce a factored-weight problem to a direct construction.

    Validates the stronger parameter constraints this reduction needs: a, b,
    a+b off the negative integers, and two positive-integer exclusions tied
    to the set maxima.
    """
    for name, value in (("a", p.a), ("b", p.b), ("a+b", p.a + p.b)):
        if value.denominator == 1 and value.numerator <= -1:
            raise ParameterSingularity(
                f"{name} = {format_rational(value)} is a negative integer"
            )
    f1m, f2m, f3m, f4m = quartet.maxima
    if quartet.second or quartet.fourth:
        probe = p.a + f2m + f4m + 1
        if probe.denominator == 1 and probe.numerator >= 0:
            raise ParameterSingularity(
                "a plus the second/fourth set maxima plus 1 is the nonnegative "
                f"integer {format_rational(probe)}"
            )
    if quartet.first or quartet.third:
        probe = p.b + f1m + f3m + 1
        if probe.denominator == 1 and probe.numerator >= 0:
            raise ParameterSingularity(
                "b plus the first/third set maxima plus 1 is the nonnegative "
                f"integer {format_rational(probe)}"
            )
    inner = HahnParams(
        p.a + f2m + f4m + 2,
        p.b + f1m + f3m + 2,
        p.N - f3m - f4m - 2,
    )
    pads = tuple(
        min(fset) if fset else 1
        for fset in (quartet.first, quartet.second, quartet.third)
    )
    return CorollaryReduction(inner, quartet.reversal(), pads, f4m + 1)
