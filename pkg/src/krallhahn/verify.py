"""End-to-end verification: run a configuration, check every claimed identity.

Each check is exact: a pass means a rational identity held with zero
tolerance, a fail carries a finite witness (an index, a point, a value).
Builder errors inside a check become failed checks, not crashes; only
configuration-level constraint violations raise.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .casorati import (
    ConstructionContext,
    casorati_cleared,
    casorati_rational,
    casorati_value,
    clearing_factor,
    context_from_quartet,
    core_degree,
    core_determinant,
    core_leading_coefficient,
    eigenvalue_polynomial,
    krall_operator,
    krall_polynomial,
    mixing_polynomial,
    operator_halfwidth,
    reflect,
    spectral_increment,
    spectral_polynomial,
)
from .config import ConstructionConfig
from .errors import ConfigInvalid, DegenerateMoments, KrallHahnError
from .hahn import (
    HahnParams,
    corollary_reduction,
    factored_hahn_weight,
    hahn_leading_coefficient,
    hahn_polynomial,
    transformed_hahn_weight,
    transformed_support,
)
from .ladder import ratio_product_value, series_ratio, series_shift
from .measures import DiscreteMeasure, gram_schmidt, proportionality_constant
from .oracle import operator_solution_space
from .polynomials import RationalFunction, rational_roots
from .rationals import format_rational
from .sets import SetQuartet, corollary_halfwidth, default_pads, theorem_halfwidth


@dataclass
class CheckResult:
    """One verified (or refuted) identity with its exact witness data."""

    name: str
    passed: bool
    witness: dict
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": self.witness,
            "elapsed": self.elapsed,
        }


@dataclass
class VerificationReport:
    config: ConstructionConfig
    checks: list[CheckResult]
    summary: dict

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "summary": dict(self.summary, passed=self.passed),
            "checks": [check.to_json_dict() for check in self.checks],
        }


@dataclass
class RunData:
    """Everything a check needs, assembled once per run."""

    config: ConstructionConfig
    outer: HahnParams
    ctx: ConstructionContext
    measure: DiscreteMeasure
    inner_measure: DiscreteMeasure
    shift: int
    n_max: int
    scan_max: int
    r_from_sets: int


def build_run(cfg: ConstructionConfig) -> RunData:
    """Resolve a configuration into a validated construction context.

    Constraint violations (parameter exclusions, resonances, degenerate
    shifted parameters) surface here as ConfigInvalid with the constraint
    named in the message.
    """
    try:
        outer = HahnParams(cfg.a, cfg.b, cfg.N)
        if cfg.path == "theorem":
            pads = cfg.pads if cfg.pads is not None else default_pads(cfg.quartet)
            ctx = context_from_quartet(outer, cfg.quartet, pads)
            inner_measure = transformed_hahn_weight(outer, cfg.quartet, pads)
            measure = inner_measure
            shift = 0
            r_sets = theorem_halfwidth(cfg.quartet, pads)
        else:
            red = corollary_reduction(outer, cfg.quartet)
            ctx = context_from_quartet(red.params, red.quartet, red.pads)
            inner_measure = transformed_hahn_weight(red.params, red.quartet, red.pads)
            measure = inner_measure.translate(red.shift)
            shift = red.shift
            r_sets = corollary_halfwidth(cfg.quartet)
    except KrallHahnError as exc:
        raise ConfigInvalid(str(exc)) from exc
    n_default = ctx.orthogonality_range
    n_max = min(cfg.n_max, n_default) if cfg.n_max is not None else n_default
    return RunData(
        config=cfg,
        outer=outer,
        ctx=ctx,
        measure=measure,
        inner_measure=inner_measure,
        shift=shift,
        n_max=n_max,
        scan_max=n_default + 1,
        r_from_sets=r_sets,
    )


# -- individual checks -----------------------------------------------------------


def _check_omega(run: RunData) -> tuple[bool, dict]:
    ctx = run.ctx
    zeros = [n for n in range(run.scan_max + 1) if casorati_value(ctx, n) == 0]
    witness = {"scanned_up_to": run.scan_max, "zeros": zeros}
    ok = not zeros
    counts = ctx.block_counts
    if ctx.quartet is not None and (ctx.quartet.first or ctx.quartet.second):
        # with rows from the first two blocks, the determinant must vanish on a
        # known finite range above the scan window
        lo = ctx.params.N + counts[2] + counts[3] + 2
        hi = ctx.params.N + ctx.m
        forced = [n for n in range(lo, hi + 1)]
        missing = [n for n in forced if casorati_value(ctx, n) != 0]
        witness["forced_zero_range"] = [lo, hi]
        witness["forced_nonzeros"] = missing
        ok = ok and not missing
    return ok, witness


def _check_hypotheses(run: RunData) -> tuple[bool, dict]:
    ctx = run.ctx
    p = ctx.params
    core = core_determinant(ctx)
    inc = spectral_increment(ctx)
    lam = eigenvalue_polynomial(ctx)
    ok_lambda = lam(Fraction(-1)) == 0 and lam - lam.shift_argument(-1) == inc
    dual_route = casorati_rational(ctx) == RationalFunction(
        casorati_cleared(ctx), clearing_factor(ctx)
    )
    transport = reflect(inc, p.a + p.b - 1) == -inc.shift_argument(ctx.m)
    sigma_next = series_shift(p).shift_argument(1)
    mixing_ok = True
    mixing_degrees = []
    for row in range(ctx.m):
        mh = mixing_polynomial(ctx, row)
        mixing_degrees.append(mh.degree)
        _, remainder = mh.divmod(sigma_next)
        if not remainder.is_zero or reflect(mh, p.a + p.b) != -mh:
            mixing_ok = False
    ps = spectral_polynomial(ctx)
    theta = p.eigenvalue_poly()
    pdiff = (
        ps.compose(theta) - ps.compose(p.eigenvalue_poly(shift=-1))
        == inc + inc.shift_argument(ctx.m)
    )
    witness = {
        "core_degree": core.degree,
        "lambda_pinned_at_minus_one": ok_lambda,
        "determinant_dual_route": dual_route,
        "increment_transport": transport,
        "mixing_degrees": mixing_degrees,
        "mixing_skew_and_divisible": mixing_ok,
        "spectral_degree": ps.degree,
        "spectral_difference_identity": pdiff,
    }
    ok = ok_lambda and dual_route and transport and mixing_ok and pdiff
    return ok, witness


def _check_degree_leading(run: RunData) -> tuple[bool, dict]:
    core = core_determinant(run.ctx)
    expected_degree = core_degree(run.ctx)
    expected_leading = core_leading_coefficient(run.ctx)
    witness = {
        "degree": core.degree,
        "expected_degree": expected_degree,
        "leading": format_rational(core.leading_coefficient),
        "expected_leading": format_rational(expected_leading),
    }
    ok = core.degree == expected_degree and core.leading_coefficient == expected_leading
    return ok, witness


def _check_genre(run: RunData) -> tuple[bool, dict]:
    op = krall_operator(run.ctx)
    r = operator_halfwidth(run.ctx)
    witness = {
        "genre": list(op.genre),
        "r_from_degrees": r,
        "r_from_sets": run.r_from_sets,
        "order": op.order,
    }
    ok = op.genre == (-r, r) and r == run.r_from_sets
    return ok, witness


def _check_eigen(run: RunData) -> tuple[bool, dict]:
    ctx = run.ctx
    op = krall_operator(ctx)
    lam = eigenvalue_polynomial(ctx)
    failures = []
    for n in range(run.n_max + 1):
        qn = krall_polynomial(ctx, n)
        expected_lc = casorati_value(ctx, n) * hahn_leading_coefficient(n, ctx.params)
        if qn.degree != n:
            failures.append({"n": n, "reason": f"degree {qn.degree}"})
            continue
        if qn.leading_coefficient != expected_lc:
            failures.append({"n": n, "reason": "leading coefficient mismatch"})
            continue
        if op.apply(qn) != Fraction(lam(n)) * qn:
            failures.append({"n": n, "reason": "eigen-equation residual nonzero"})
    witness = {
        "n_max": run.n_max,
        "eigenvalues": [format_rational(lam(n)) for n in range(run.n_max + 1)],
        "failures": failures,
    }
    return not failures, witness


def _check_orthogonality(run: RunData) -> tuple[bool, dict]:
    ctx = run.ctx
    qs = [krall_polynomial(ctx, n) for n in range(run.n_max + 1)]
    norms = []
    cross_failures = []
    zero_norms = []
    for i, qi in enumerate(qs):
        norm = run.inner_measure.inner_product(qi, qi)
        norms.append(norm)
        if norm == 0:
            zero_norms.append(i)
        for j in range(i + 1, len(qs)):
            if run.inner_measure.inner_product(qi, qs[j]) != 0:
                cross_failures.append([i, j])
    gs_mismatch = []
    try:
        monic = gram_schmidt(run.inner_measure, run.n_max)
        for n, g in enumerate(monic):
            if g != qs[n].monic():
                gs_mismatch.append(n)
    except DegenerateMoments as exc:
        gs_mismatch.append(exc.index)
    witness = {
        "n_max": run.n_max,
        "norms": [format_rational(v) for v in norms],
        "zero_norms": zero_norms,
        "nonorthogonal_pairs": cross_failures,
        "gram_schmidt_mismatches": gs_mismatch,
    }
    ok = not zero_norms and not cross_failures and not gs_mismatch
    return ok, witness


def _check_support(run: RunData) -> tuple[bool, dict]:
    cfg = run.config
    ctx = run.ctx
    counts = ctx.block_counts
    expected_size = ctx.params.N + counts[2] + counts[3] + 1
    if cfg.path == "theorem":
        pads = cfg.pads if cfg.pads is not None else default_pads(cfg.quartet)
        expected = transformed_support(run.outer, cfg.quartet, pads)
    else:
        red = corollary_reduction(run.outer, cfg.quartet)
        expected = [
            point + red.shift
            for point in transformed_support(red.params, red.quartet, red.pads)
        ]
    actual = sorted(run.measure.support)
    witness = {
        "size": run.measure.size,
        "expected_size": expected_size,
        "support_matches_formula": actual == sorted(expected),
    }
    ok = run.measure.size == expected_size and witness["support_matches_formula"]
    if cfg.path == "corollary":
        factored = factored_hahn_weight(run.outer, cfg.quartet)
        witness["factored_weight_match"] = run.measure == factored
        ok = ok and witness["factored_weight_match"]
    return ok, witness


def check_foeq(
    ctx: ConstructionContext, measure: DiscreteMeasure, n_top: int | None = None
) -> tuple[bool, dict]:
    """The three discrete orthogonality criteria for the bordered family.

    Fits the one free constant from the first usable instance, then requires:
    the weighted moments of the base family to match the alternating ratio
    sums for 0 <= n <= n_top, the negative-index sums to vanish, and the
    boundary sum to be nonzero.
    """
    p = ctx.params
    m = ctx.m
    if m == 0:
        return True, {"note": "no determinant rows; criteria are vacuous"}
    if n_top is None:
        n_top = p.N
    for kind in sorted(set(ctx.row_kinds)):
        ratio = series_ratio(kind, p)
        bad = [
            r
            for poly in (ratio.numer, ratio.denom)
            for r in rational_roots(poly)
            if r.denominator == 1 and r <= 0
        ]
        if bad:
            return False, {
                "precondition": f"ratio sequence of kind {kind} vanishes or blows "
                f"up at nonpositive integer(s) {sorted(set(int(r) for r in bad))}"
            }
    roots = ctx.spectral_roots
    theta_start = p.eigenvalue(-1)
    denominators = []
    for i in range(m):
        pprime = Fraction(1)
        for j in range(m):
            if j != i:
                pprime *= roots[i] - roots[j]
        start_value = ctx.row_polys[i](theta_start)
        if start_value == 0:
            return False, {
                "precondition": f"row {i} polynomial vanishes at the starting "
                "eigenvalue; the criteria sums are undefined"
            }
        denominators.append(pprime * start_value)

    def ratio_sum(n: int) -> Fraction:
        total = Fraction(0)
        for i in range(m):
            xi = ratio_product_value(ctx.row_kinds[i], n, n + 1, p)
            total += xi * ctx.row_polys[i](p.eigenvalue(n)) / denominators[i]
        return total

    constant = None
    fit_at = None
    failures = []
    for n in range(n_top + 1):
        lhs = measure.integrate(hahn_polynomial(n, p))
        rhs = ratio_sum(n) * (-1 if n % 2 else 1)
        if constant is None:
            if rhs != 0:
                constant = lhs / rhs
                fit_at = n
                if constant == 0:
                    failures.append({"n": n, "reason": "fitted constant is zero"})
                    break
            elif lhs != 0:
                failures.append({"n": n, "reason": "moment nonzero but sum zero"})
        elif lhs != constant * rhs:
            failures.append(
                {
                    "n": n,
                    "moment": format_rational(lhs),
                    "scaled_sum": format_rational(constant * rhs),
                }
            )
    negative_failures = []
    for n in range(1 - m, 0):
        total = Fraction(0)
        for i in range(m):
            xi = ratio_product_value(ctx.row_kinds[i], -1, -n - 1, p)
            total += ctx.row_polys[i](p.eigenvalue(n)) / (denominators[i] * xi)
        if total != 0:
            negative_failures.append({"n": n, "sum": format_rational(total)})
    boundary = Fraction(0)
    for i in range(m):
        xi = ratio_product_value(ctx.row_kinds[i], -1, m - 1, p)
        boundary += ctx.row_polys[i](p.eigenvalue(-m)) / (denominators[i] * xi)
    witness = {
        "constant": format_rational(constant) if constant is not None else None,
        "fitted_at": fit_at,
        "checked_up_to": n_top,
        "moment_failures": failures,
        "negative_range": [1 - m, -1],
        "negative_failures": negative_failures,
        "boundary_sum": format_rational(boundary),
    }
    ok = (
        constant is not None
        and not failures
        and not negative_failures
        and boundary != 0
    )
    return ok, witness


def _check_criteria(run: RunData) -> tuple[bool, dict]:
    return check_foeq(run.ctx, run.inner_measure)


def _check_oracle(run: RunData) -> tuple[bool, dict]:
    ctx = run.ctx
    r = operator_halfwidth(ctx)
    constructed = krall_operator(ctx)
    cap = max(
        2 * r, max((c.degree for c in constructed.terms.values()), default=0)
    )
    lam = eigenvalue_polynomial(ctx)
    top = 2 * r + 1
    qs = [krall_polynomial(ctx, n) for n in range(top + 1)]
    lambdas = [Fraction(lam(n)) for n in range(top + 1)]
    found, nullity = operator_solution_space(qs, lambdas, r, cap)
    agrees = found == constructed
    witness = {
        "halfwidth": r,
        "degree_cap": cap,
        "fed_degrees": top,
        "solvable": found is not None,
        "nullity": nullity,
        "agrees_with_construction": agrees,
    }
    if r >= 1:
        lower_cap = max(2 * (r - 1), 0)
        lower, _ = operator_solution_space(qs, lambdas, r - 1, lower_cap)
        witness["lower_probe"] = (
            "unsolvable" if lower is None else f"solvable with degree cap {lower_cap}"
        )
    ok = found is not None and nullity == 0 and agrees
    return ok, witness


_CHECKS: dict[str, Callable[[RunData], tuple[bool, dict]]] = {
    "omega-nonvanishing": _check_omega,
    "hypotheses": _check_hypotheses,
    "degree-leading": _check_degree_leading,
    "genre": _check_genre,
    "eigen-equation": _check_eigen,
    "orthogonality": _check_orthogonality,
    "support": _check_support,
    "criteria": _check_criteria,
    "oracle": _check_oracle,
}


def run_config(cfg: ConstructionConfig) -> VerificationReport:
    """Run every requested check; builder errors become failed checks."""
    run = build_run(cfg)
    checks: list[CheckResult] = []
    for name in cfg.resolved_checks():
        start = time.perf_counter()
        try:
            ok, witness = _CHECKS[name](run)
        except KrallHahnError as exc:
            ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
        checks.append(CheckResult(name, ok, witness, time.perf_counter() - start))
    summary = {
        "name": cfg.name,
        "path": cfg.path,
        "rows": run.ctx.m,
        "n_max": run.n_max,
        "support_size": run.measure.size,
        "translation": run.shift,
    }
    try:
        lam = eigenvalue_polynomial(run.ctx)
        summary["r"] = operator_halfwidth(run.ctx)
        summary["eigenvalues"] = [
            format_rational(lam(n)) for n in range(run.n_max + 1)
        ]
    except KrallHahnError as exc:
        summary["construction_error"] = f"{type(exc).__name__}: {exc}"
    for check in checks:
        if check.name == "criteria" and "constant" in check.witness:
            summary["criteria_constant"] = check.witness["constant"]
    return VerificationReport(cfg, checks, summary)


def run_many(
    configs: Sequence[ConstructionConfig], workers: int | None = None
) -> list[VerificationReport]:
    """Run several configs, in parallel processes when allowed.

    ``workers`` defaults to the KH_WORKERS environment variable; a cap of 1
    (or a single config) runs serially in-process.
    """
    if workers is None:
        raw = os.environ.get("KH_WORKERS", "")
        workers = int(raw) if raw.isdigit() and int(raw) > 0 else (os.cpu_count() or 1)
    workers = min(workers, len(configs))
    if workers <= 1 or len(configs) <= 1:
        return [run_config(cfg) for cfg in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_config, configs))


# -- root-couple enumeration ---------------------------------------------------------


def enumerate_root_couples(
    N: int, roots: Iterable[int], a: Fraction | int = Fraction(1, 2),
    b: Fraction | int = Fraction(1, 3),
) -> list[dict]:
    """All third/fourth-set couples whose factored weight equals the given
    root-factored weight up to a global sign.

    A root f can be contributed either by the fourth-set factor (x - f) or,
    mirrored, by the third-set factor (N - (N-f) - x); enumerating the
    2^k assignments and verifying each measure identity exactly yields every
    representation together with its operator half-width.
    """
    roots = sorted(set(int(r) for r in roots))
    if not roots:
        raise ValueError("need at least one root")
    if roots[0] < 1 or roots[-1] > N - 1:
        raise ValueError(f"roots must lie strictly inside (0, {N})")
    params = HahnParams(a, b, N)
    target = factored_hahn_weight(params, SetQuartet.of((), (), (), roots))
    couples = []
    for size in range(len(roots) + 1):
        for mirrored in combinations(roots, size):
            third = tuple(sorted(N - r for r in mirrored))
            fourth = tuple(r for r in roots if r not in mirrored)
            quartet = SetQuartet.of((), (), third, fourth)
            candidate = factored_hahn_weight(params, quartet)
            ratio = proportionality_constant(candidate, target)
            if ratio is None or ratio * ratio != 1:
                continue
            halfwidth = (
                sum(third) + sum(fourth)
                - comb(len(third), 2) - comb(len(fourth), 2) + 1
            )
            couples.append(
                {
                    "F3": list(third),
                    "F4": list(fourth),
                    "r": halfwidth,
                    "sign": int(ratio),
                    "within_half": max(third, default=-1) < Fraction(N, 2)
                    and max(fourth, default=-1) < Fraction(N, 2),
                }
            )
    couples.sort(key=lambda rec: (rec["r"], rec["F3"]))
    best = min(rec["r"] for rec in couples)
    for rec in couples:
        rec["minimal"] = rec["r"] == best
    return couples
