"""Build a bispectral family from one removed mass point, end to end.

Deleting the atom at x = 1 from the desk-scale weight costs the family its
second-order operator; the bordered-determinant construction buys back a
fourth-order one.  Run with  python3 demos/krall_construction.py
"""

from fractions import Fraction

from krallhahn.casorati import (
    core_determinant,
    eigenvalue_polynomial,
    krall_operator,
    krall_polynomial,
    operator_halfwidth,
)
from krallhahn.config import builtin_config
from krallhahn.hahn import factored_hahn_weight
from krallhahn.measures import gram_schmidt
from krallhahn.rationals import format_rational
from krallhahn.verify import build_run


def main() -> None:
    run = build_run(builtin_config("single-root"))
    quartet = run.config.quartet
    print(f"root sets: {quartet.sets}")
    print(f"outer parameters: a = {run.outer.a}, b = {run.outer.b}, N = {run.outer.N}")
    print(f"reduction: inner parameters a = {run.ctx.params.a}, "
          f"b = {run.ctx.params.b}, N = {run.ctx.params.N}, translation {run.shift}\n")

    rho = factored_hahn_weight(run.outer, quartet)
    print(f"factored weight: {rho.size} atoms at {[format_rational(x) for x in rho.support]}")
    print("(the atom at x = 1 is gone)\n")

    core = core_determinant(run.ctx)
    print(f"determinant core (degree {core.degree}): {core}")
    op = krall_operator(run.ctx)
    r = operator_halfwidth(run.ctx)
    print(f"operator genre {op.genre}, order {op.order}, half-width r = {r}")

    lam = eigenvalue_polynomial(run.ctx)
    shift = run.shift
    print("\nfirst bordered polynomials (translated back to the original variable):")
    for n in range(4):
        qn = krall_polynomial(run.ctx, n).shift_argument(-shift)
        print(f"  q_{n}(x) = {qn}")
        print(f"       eigenvalue {format_rational(lam(n))}")

    qs = [krall_polynomial(run.ctx, n).shift_argument(-shift) for n in range(run.n_max + 1)]
    op_outer = op.translate(shift)
    eigen_ok = all(
        op_outer.apply(qs[n]) == Fraction(lam(n)) * qs[n] for n in range(run.n_max + 1)
    )
    cross = [
        rho.inner_product(qs[i], qs[j])
        for i in range(len(qs))
        for j in range(i + 1, len(qs))
    ]
    norms = [rho.inner_product(q, q) for q in qs]
    monic = gram_schmidt(rho, run.n_max)
    print(f"\neigen-equation for n <= {run.n_max}: {eigen_ok}")
    print(f"orthogonal with nonzero norms: {all(v == 0 for v in cross)}"
          f" / {all(v != 0 for v in norms)}")
    print(f"monic family == Gram-Schmidt from moments: "
          f"{all(monic[n] == qs[n].monic() for n in range(run.n_max + 1))}")


if __name__ == "__main__":
    main()
