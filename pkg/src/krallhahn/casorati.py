"""Casorati-determinant construction of bispectral Krall-Hahn families.

A construction context fixes Hahn parameters, one ladder kind per determinant
row, a polynomial per row (in the eigenvalue variable), and an optional
invariant prefactor.  From those this module builds, all exactly:

* the Casorati determinant in denominator-cleared form and its values,
* the new orthogonal polynomials (bordered determinants),
* the eigenvalue polynomial and the spectral polynomial,
* the higher-order difference operator the new family satisfies.

Rational functions only appear in intermediate steps; every quantity the
theory claims is polynomial is produced by exact division, so a failed
cancellation surfaces as an error instead of an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .diffops import DifferenceOperator, operator_polynomial
from .errors import (
    NonExactDivision,
    NotThetaRepresentable,
    ParameterSingularity,
    ResonantParameters,
)
from .hahn import HahnParams, companion_eigencoefficients, companion_polynomial, hahn_polynomial
from .hahn import hahn_operator
from .ladder import (
    falling_block,
    ladder_operator,
    ratio_product_value,
    rising_block,
    series_shift,
)
from .matrices import PolyMatrix, poly_det, rational_det
from .polynomials import Polynomial, RationalFunction, antidifference
from .rationals import Rational, as_rational, format_rational, is_integer_at_most
from .sets import SetQuartet, default_pads, set_max, transform_quartet


@dataclass(frozen=True)
class ConstructionContext:
    """Validated input data for one determinantal construction."""

    params: HahnParams
    row_kinds: tuple[int, ...]
    row_degrees: tuple[int, ...]
    row_polys: tuple[Polynomial, ...]
    prefactor: Polynomial
    quartet: SetQuartet | None = None
    pads: tuple[int, int, int] | None = None

    @property
    def m(self) -> int:
        return len(self.row_kinds)

    @property
    def block_counts(self) -> tuple[int, int, int, int]:
        return tuple(self.row_kinds.count(k) for k in (1, 2, 3, 4))  # type: ignore[return-value]

    @property
    def spectral_roots(self) -> tuple[Fraction, ...]:
        out = []
        for kind, degree in zip(self.row_kinds, self.row_degrees):
            slope, intercept = companion_eigencoefficients(kind, self.params)
            out.append(slope * degree + intercept)
        return tuple(out)

    def root_polynomial(self) -> Polynomial:
        acc = Polynomial.one()
        x = Polynomial.variable()
        for root in self.spectral_roots:
            acc = acc * (x - root)
        return acc

    @property
    def orthogonality_range(self) -> int:
        """Largest degree with guaranteed nonzero norm: N + m3 + m4."""
        counts = self.block_counts
        return self.params.N + counts[2] + counts[3]


def context_from_degrees(
    params: HahnParams,
    degree_sets: tuple[tuple[int, ...], ...],
    row_polys: tuple[Polynomial, ...] | None = None,
    prefactor: Polynomial | None = None,
    quartet: SetQuartet | None = None,
    pads: tuple[int, int, int] | None = None,
) -> ConstructionContext:
    """Build and validate a context from four row-degree sets.

    ``row_polys`` defaults to the companion dual-Hahn polynomials of the
    listed degrees, which is the choice that makes the constructed family
    orthogonal.  Arbitrary polynomials of the same degrees are accepted.
    """
    if len(degree_sets) != 4:
        raise ValueError("expected four degree sets")
    kinds: list[int] = []
    degrees: list[int] = []
    for kind, dset in enumerate(degree_sets, start=1):
        previous = -1
        for u in dset:
            u = int(u)
            if u < 0:
                raise ValueError(f"row degree must be nonnegative, got {u}")
            if u <= previous:
                raise ValueError(f"degrees within a block must increase, got {dset}")
            previous = u
            kinds.append(kind)
            degrees.append(u)
    if row_polys is None:
        row_polys = tuple(
            companion_polynomial(kind, degree, params)
            for kind, degree in zip(kinds, degrees)
        )
    else:
        row_polys = tuple(row_polys)
        if len(row_polys) != len(kinds):
            raise ValueError(f"expected {len(kinds)} row polynomials, got {len(row_polys)}")
        for poly, degree in zip(row_polys, degrees):
            if poly.degree != degree:
                raise ValueError(
                    f"row polynomial degree {poly.degree} does not match listed degree {degree}"
                )
    if prefactor is None:
        prefactor = Polynomial.one()
    ctx = ConstructionContext(
        params=params,
        row_kinds=tuple(kinds),
        row_degrees=tuple(degrees),
        row_polys=row_polys,
        prefactor=prefactor,
        quartet=quartet,
        pads=pads,
    )
    roots = ctx.spectral_roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == roots[j]:
                raise ResonantParameters(
                    f"rows {i} and {j} (kinds {kinds[i]},{kinds[j]}, degrees "
                    f"{degrees[i]},{degrees[j]}) share the spectral root "
                    f"{format_rational(roots[i])}"
                )
    if prefactor.degree > 0:
        shift = params.a + params.b - ctx.m - 1
        if reflect(prefactor, shift) != prefactor:
            raise ValueError("prefactor is not invariant under the construction reflection")
    return ctx


def context_from_quartet(
    params: HahnParams,
    quartet: SetQuartet,
    pads: tuple[int, int, int] | None = None,
    row_polys: tuple[Polynomial, ...] | None = None,
    prefactor: Polynomial | None = None,
) -> ConstructionContext:
    """Context for the direct construction driven by a set quartet.

    Validates the parameter bounds the orthogonality statement needs: two
    integrality exclusions on a, b and a + b, plus positive-integer
    exclusions when certain sets are nonempty.
    """
    if pads is None:
        pads = default_pads(quartet)
    if len(pads) != 3 or any(h < 1 for h in pads):
        raise ValueError(f"pads must be three integers >= 1, got {pads}")
    f1m, f2m, f3m, f4m = quartet.maxima
    checks = [
        ("a", params.a, f2m + f4m + pads[1]),
        ("b", params.b, f1m + f3m + pads[0] + pads[2] - 1),
        ("a+b", params.a + params.b, f1m + f2m + f3m + f4m + sum(pads)),
    ]
    for name, value, bound in checks:
        if is_integer_at_most(value, bound):
            raise ParameterSingularity(
                f"{name} = {format_rational(value)} is an integer <= {bound}"
            )
    if quartet.second or quartet.fourth:
        if params.a.denominator == 1 and params.a.numerator >= 1:
            raise ParameterSingularity(
                f"a = {format_rational(params.a)} is a positive integer but the "
                "second or fourth set is nonempty"
            )
    if quartet.first or quartet.third:
        if params.b.denominator == 1 and params.b.numerator >= 1:
            raise ParameterSingularity(
                f"b = {format_rational(params.b)} is a positive integer but the "
                "first or third set is nonempty"
            )
    degree_sets = transform_quartet(quartet, pads)
    return context_from_degrees(
        params, degree_sets, row_polys=row_polys, prefactor=prefactor,
        quartet=quartet, pads=pads,
    )


# -- reflection and eigenvalue-variable substitution --------------------------------


def reflect(poly: Polynomial, shift: Rational | int) -> Polynomial:
    """p(x) -> p(-(x + shift + 1)); an involution fixing theta when shift = a+b."""
    shift = as_rational(shift)
    return poly.compose(Polynomial((-shift - 1, -1)))


def theta_substitute(poly: Polynomial, ab_sum: Rational | int) -> Polynomial:
    """Rewrite a reflection-invariant polynomial as a polynomial in theta_x.

    theta_x = x(x + a + b + 1).  Works by peeling leading terms; a polynomial
    that is not invariant under the reflection has no such form and raises.
    """
    ab_sum = as_rational(ab_sum)
    if reflect(poly, ab_sum) != poly:
        raise NotThetaRepresentable(
            "polynomial is not invariant under x -> -(x + a + b + 1)"
        )
    theta = Polynomial((0, ab_sum + 1, 1))
    out: dict[int, Fraction] = {}
    residual = poly
    while residual.degree > 0:
        if residual.degree % 2:
            raise NotThetaRepresentable("invariant polynomial with odd-degree residual")
        k = residual.degree // 2
        c = residual.leading_coefficient
        out[k] = c
        residual = residual - c * theta**k
    if not residual.is_zero:
        out[0] = residual.coefficient(0)
    coeffs = [out.get(k, Fraction(0)) for k in range(max(out, default=0) + 1)]
    return Polynomial(coeffs)


# -- the cleared Casorati determinant ----------------------------------------------


def _cleared_entry(ctx: ConstructionContext, row: int, col: int) -> Polynomial:
    """Row `row`, column `col` (1-based col) of the denominator-cleared matrix."""
    p, m = ctx.params, ctx.m
    kind = ctx.row_kinds[row]
    value = ctx.row_polys[row].compose(p.eigenvalue_poly(shift=-col))
    if kind == 1:
        value = value * rising_block(2, m - col, -col, p) * falling_block(2, col - 1, -1, p)
    elif kind == 2:
        value = (
            value
            * rising_block(1, m - col, -col, p)
            * rising_block(2, m - col, -col, p)
            * falling_block(1, col - 1, -1, p)
            * falling_block(2, col - 1, -1, p)
        )
    elif kind == 4:
        value = value * rising_block(1, m - col, -col, p) * falling_block(1, col - 1, -1, p)
    return value


@lru_cache(maxsize=None)
def cleared_matrix(ctx: ConstructionContext) -> PolyMatrix:
    m = ctx.m
    return PolyMatrix(
        [[_cleared_entry(ctx, row, col) for col in range(1, m + 1)] for row in range(m)]
    )


@lru_cache(maxsize=None)
def casorati_cleared(ctx: ConstructionContext) -> Polynomial:
    """Determinant with all row denominators multiplied away."""
    return poly_det(cleared_matrix(ctx))


@lru_cache(maxsize=None)
def clearing_factor(ctx: ConstructionContext) -> Polynomial:
    """Product of the per-row denominators removed from the raw determinant."""
    m1, m2, m3, m4 = ctx.block_counts
    m = ctx.m
    if m == 0:
        return Polynomial.one()
    return (
        falling_block(1, m - 1, -1, ctx.params) ** (m2 + m4)
        * falling_block(2, m - 1, -1, ctx.params) ** (m1 + m2)
    )


def casorati_value(ctx: ConstructionContext, point: Rational | int) -> Fraction:
    """Exact value of the (uncleared) Casorati determinant at a point."""
    point = as_rational(point)
    denom = clearing_factor(ctx)(point)
    if denom == 0:
        raise ParameterSingularity(
            f"clearing factor vanishes at {format_rational(point)}"
        )
    return casorati_cleared(ctx)(point) / denom


def casorati_rational(ctx: ConstructionContext) -> RationalFunction:
    """The raw determinant over the rational-function field (cross-check route)."""
    from .ladder import ratio_product

    m, p = ctx.m, ctx.params
    rows = []
    for row in range(m):
        kind = ctx.row_kinds[row]
        entries = []
        for col in range(1, m + 1):
            xi = ratio_product(kind, m - col, p).shift_argument(-col)
            value = ctx.row_polys[row].compose(p.eigenvalue_poly(shift=-col))
            entries.append(xi * value)
        rows.append(entries)
    return rational_det(PolyMatrix(rows))


# -- the constructed orthogonal polynomials ------------------------------------------


def _numeric_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if m[i][k] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor != 0:
                m[i] = [vi - factor * vk for vi, vk in zip(m[i], m[k])]
    return det


def _bordered_minor_column(ctx: ConstructionContext, n: int, col: int) -> list[Fraction]:
    """Column of ratio-product-weighted row values at degree n - col."""
    p, m = ctx.params, ctx.m
    theta = p.eigenvalue(n - col)
    out = []
    for row in range(m):
        xi = ratio_product_value(ctx.row_kinds[row], n - col, m - col, p)
        out.append(xi * ctx.row_polys[row](theta))
    return out


def krall_polynomial(ctx: ConstructionContext, n: int) -> Polynomial:
    """Degree-n member of the constructed family (bordered determinant).

    Expansion along the first row: the alternating signs there cancel the
    cofactor signs, leaving sum_k h_{n-k} * minor_k with minor_0 equal to the
    Casorati determinant at n.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    m = ctx.m
    columns = [_bordered_minor_column(ctx, n, col) for col in range(m + 1)]
    acc = Polynomial.zero()
    for k in range(m + 1):
        if n - k < 0:
            break
        kept = [columns[c] for c in range(m + 1) if c != k]
        minor = _numeric_det([[kept[c][r] for c in range(m)] for r in range(m)])
        if minor != 0:
            acc = acc + minor * hahn_polynomial(n - k, ctx.params)
    return acc


# -- normalisers and the spectral data ------------------------------------------------


@lru_cache(maxsize=None)
def normalizer_pochhammer(ctx: ConstructionContext) -> Polynomial:
    """The Pochhammer-product normaliser dividing the cleared determinant."""
    p = ctx.params
    m1, m2, m3, m4 = ctx.block_counts
    acc = Polynomial.one()
    for i in range(1, m2 + m4):
        acc = acc * rising_block(1, m2 + m4 - i, -m1 - m3 - i, p)
        acc = acc * falling_block(1, m2 + m4 - i, -1, p)
    for i in range(1, m1 + m2):
        acc = acc * rising_block(2, m1 + m2 - i, -m3 - m4 - i, p)
        acc = acc * falling_block(2, m1 + m2 - i, -1, p)
    return acc


@lru_cache(maxsize=None)
def normalizer_shifts(ctx: ConstructionContext) -> Polynomial:
    """The triangular product of shifted eigenvalue steps (half-integer shifts)."""
    m = ctx.m
    sigma = series_shift(ctx.params)
    acc = Polynomial.one()
    for outer in range(1, m):
        for inner in range(1, outer + 1):
            acc = acc * sigma.shift_argument(Fraction(inner + outer + 1, 2) - m)
    if (m * (m - 1) // 2) % 2:
        acc = -acc
    return acc


@lru_cache(maxsize=None)
def core_determinant(ctx: ConstructionContext) -> Polynomial:
    """Cleared determinant divided by both normalisers; polynomial by the theory."""
    divisor = normalizer_pochhammer(ctx) * normalizer_shifts(ctx)
    return casorati_cleared(ctx).divide_exact(divisor)


def core_degree(ctx: ConstructionContext) -> int:
    u_sum = sum(ctx.row_degrees)
    pairs = sum(comb(c, 2) for c in ctx.block_counts)
    return 2 * u_sum - 2 * pairs


def core_leading_coefficient(ctx: ConstructionContext) -> Fraction:
    """Closed form for the leading coefficient of the core determinant."""
    p = ctx.params
    m1, m2, m3, m4 = ctx.block_counts
    sign_exp = sum(comb(c, 2) for c in ctx.block_counts) + m1 * m2 + m2 * m3 + m3 * m4
    acc = Fraction(-1 if sign_exp % 2 else 1)
    per_kind = {k: [] for k in (1, 2, 3, 4)}
    for kind, degree in zip(ctx.row_kinds, ctx.row_degrees):
        per_kind[kind].append(degree)
    for degrees in per_kind.values():
        for i in range(len(degrees)):
            for j in range(i + 1, len(degrees)):
                acc *= degrees[j] - degrees[i]
    for poly in ctx.row_polys:
        acc *= poly.leading_coefficient
    for v in per_kind[2]:
        for w in per_kind[3]:
            acc *= p.N + p.a + 1 - v + w
    for u in per_kind[1]:
        for z in per_kind[4]:
            acc *= p.N + p.b + 1 - u + z
    return acc


@lru_cache(maxsize=None)
def spectral_increment(ctx: ConstructionContext) -> Polynomial:
    """S(x) * Omega(x): the exact increment of the eigenvalue polynomial."""
    sigma = series_shift(ctx.params).shift_argument(Fraction(-(ctx.m - 1), 2))
    return sigma * ctx.prefactor * core_determinant(ctx)


def normalizing_function(ctx: ConstructionContext) -> RationalFunction:
    """The rational function S with S * Omega equal to the spectral increment."""
    numer = (
        series_shift(ctx.params).shift_argument(Fraction(-(ctx.m - 1), 2))
        * ctx.prefactor
        * clearing_factor(ctx)
    )
    return RationalFunction(numer, normalizer_pochhammer(ctx) * normalizer_shifts(ctx))


@lru_cache(maxsize=None)
def eigenvalue_polynomial(ctx: ConstructionContext) -> Polynomial:
    """lambda with lambda(x) - lambda(x-1) = increment(x), pinned by lambda(-1) = 0."""
    return antidifference(spectral_increment(ctx))


def eigenvalue(ctx: ConstructionContext, n: int) -> Fraction:
    return eigenvalue_polynomial(ctx)(n)


# -- the mixing polynomials ------------------------------------------------------------


def _mixing_prefactor(ctx: ConstructionContext, row: int, j: int) -> Polynomial:
    """Clearing factor for the j-th term of one mixing polynomial."""
    p, m = ctx.params, ctx.m
    kind = ctx.row_kinds[row]
    if kind == 3:
        return Polynomial.one()
    if kind == 1:
        return rising_block(2, m - j, 0, p) * falling_block(2, j - 1, j - 1, p)
    if kind == 4:
        return rising_block(1, m - j, 0, p) * falling_block(1, j - 1, j - 1, p)
    return (
        rising_block(1, m - j, 0, p)
        * rising_block(2, m - j, 0, p)
        * falling_block(1, j - 1, j - 1, p)
        * falling_block(2, j - 1, j - 1, p)
    )


@lru_cache(maxsize=None)
def mixing_polynomial(ctx: ConstructionContext, row: int) -> Polynomial:
    """The row's mixing polynomial (skew-invariant, divisible by the shifted step).

    Assembled from denominator-cleared minors; the final sum over column
    positions must collapse to a polynomial, which is one of the structural
    hypotheses of the construction.
    """
    p, m = ctx.params, ctx.m
    sigma = series_shift(p)
    half = Fraction(-(m - 1), 2)
    divisor_base = normalizer_pochhammer(ctx) * normalizer_shifts(ctx)
    acc = RationalFunction.zero()
    rows_kept = [r for r in range(m) if r != row]
    for j in range(1, m + 1):
        cols_kept = [c for c in range(1, m + 1) if c != j]
        minor_entries = [
            [_cleared_entry(ctx, r, c).shift_argument(j) for c in cols_kept]
            for r in rows_kept
        ]
        minor = poly_det(PolyMatrix(minor_entries)) if rows_kept else Polynomial.one()
        numer = (
            sigma.shift_argument(half + j)
            * ctx.prefactor.shift_argument(j)
            * _mixing_prefactor(ctx, row, j)
            * minor
        )
        term = RationalFunction(numer, divisor_base.shift_argument(j))
        acc = acc + (term if (row + 1 + j) % 2 == 0 else -term)
    return acc.as_polynomial()


@lru_cache(maxsize=None)
def mixing_symbol(ctx: ConstructionContext, row: int) -> Polynomial:
    """Mixing polynomial divided by the shifted step, written in theta."""
    sigma_next = series_shift(ctx.params).shift_argument(1)
    quotient = mixing_polynomial(ctx, row).divide_exact(sigma_next)
    return theta_substitute(quotient, ctx.params.a + ctx.params.b)


# -- the spectral polynomial and the operator -------------------------------------------


@lru_cache(maxsize=None)
def spectral_polynomial(ctx: ConstructionContext) -> Polynomial:
    """P with P(theta_x) = 2 lambda(x) + sum over rows of Y(theta_x) M(x)."""
    p = ctx.params
    theta = p.eigenvalue_poly()
    acc = 2 * eigenvalue_polynomial(ctx)
    for row in range(ctx.m):
        acc = acc + ctx.row_polys[row].compose(theta) * mixing_polynomial(ctx, row)
    return theta_substitute(acc, p.a + p.b)


@lru_cache(maxsize=None)
def krall_operator(ctx: ConstructionContext) -> DifferenceOperator:
    """The higher-order difference operator with the constructed family as
    eigenfunctions (eigenvalues given by the eigenvalue polynomial)."""
    p = ctx.params
    base = hahn_operator(p)
    acc = operator_polynomial(spectral_polynomial(ctx), base) * Fraction(1, 2)
    for row in range(ctx.m):
        left = operator_polynomial(mixing_symbol(ctx, row), base)
        middle = ladder_operator(ctx.row_kinds[row], p)
        right = operator_polynomial(ctx.row_polys[row], base)
        acc = acc + left.compose(middle).compose(right)
    return acc


def operator_halfwidth(ctx: ConstructionContext) -> int:
    """Expected half-order of the constructed operator."""
    return core_degree(ctx) // 2 + 1
