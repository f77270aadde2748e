"""Measure-level identities behind the construction.

Two exact facts about root-factored weights: a quartic prefactor turns the
four-root weight into a shifted plain weight, and the same factored weight
admits several third/fourth-set representations, each with its own operator
order.  Run with  python3 demos/weight_surgery.py
"""

from fractions import Fraction

from krallhahn.hahn import HahnParams, factored_hahn_weight, hahn_weight
from krallhahn.polynomials import Polynomial, pochhammer
from krallhahn.rationals import format_rational
from krallhahn.sets import SetQuartet
from krallhahn.verify import enumerate_root_couples


def prefactor_identity() -> None:
    p = HahnParams(Fraction(1, 2), Fraction(1, 3), 8)
    quartet = SetQuartet.of((1,), (1,), (1,), (1,))
    rho = factored_hahn_weight(p, quartet)
    print(f"factored weight for root sets {quartet.sets}:")
    print(f"  support {[format_rational(x) for x in rho.support]}")

    inner = hahn_weight(HahnParams(p.a + 4, p.b + 4, p.N - 4))
    constant = pochhammer(p.a + 1, 4) * pochhammer(p.b + 1, 4)
    x = Polynomial.variable()
    n_top = Fraction(p.N)
    prefactor = x * (n_top - x) * (x + p.a + 1) * (n_top - x + p.b + 1)
    ok = all(
        prefactor(Fraction(point)) * rho.mass(point)
        == constant * inner.mass(Fraction(point) - 2)
        for point in range(p.N + 1)
    )
    print(f"  x(N-x)(a+x+1)(N-x+b+1) * rho  ==  C * rho_{{a+4,b+4,N-4}}(x-2): {ok}")
    print(f"  with C = (a+1)_4 (b+1)_4 = {format_rational(constant)}\n")


def representations() -> None:
    print("representations of the N = 100 weight with roots 1, 5, 68:")
    couples = enumerate_root_couples(100, [1, 5, 68])
    for rec in couples:
        marks = " (minimal r)" if rec["minimal"] else ""
        half = " maxima < N/2" if rec["within_half"] else ""
        print(f"  F3 = {rec['F3']!s:>14}  F4 = {rec['F4']!s:>14}"
              f"  r = {rec['r']:>3}  sign = {rec['sign']:+d}{marks}{half}")
    print("\nonly one couple keeps every root below N/2, and it also minimizes")
    print("the operator order; the others trade the same measure for wider operators")


def main() -> None:
    prefactor_identity()
    representations()


if __name__ == "__main__":
    main()
