"""Discrete measures, Christoffel transforms, and the Gram-Schmidt oracle."""

from fractions import Fraction

import pytest

from krallhahn.errors import DegenerateMoments
from krallhahn.measures import (
    DiscreteMeasure,
    christoffel,
    equal_up_to_sign,
    gram_schmidt,
    orthogonality_table,
    proportionality_constant,
)
from krallhahn.polynomials import Polynomial

X = Polynomial.variable()
HALF = Fraction(1, 2)


def test_zero_masses_dropped():
    mu = DiscreteMeasure({0: 1, 1: 0, 2: HALF})
    assert mu.support == [0, 2]
    assert mu.size == 2
    assert mu.mass(1) == 0
    assert mu.total_mass() == Fraction(3, 2)


def test_integration():
    mu = DiscreteMeasure({0: 1, 1: 2, 3: -1})
    assert mu.integrate(X**2) == 0 + 2 * 1 - 9
    assert mu.inner_product(X, X + 1) == 2 * 1 * 2 - 1 * 3 * 4
    assert mu.moments(2) == [Fraction(2), Fraction(-1), Fraction(-7)]


def test_translate_and_scale():
    mu = DiscreteMeasure({0: 1, 2: 3})
    assert mu.translate(HALF).support == [HALF, Fraction(5, 2)]
    assert mu.translate(1).translate(-1) == mu
    assert mu.scale(2).total_mass() == 8
    assert mu.scale(0).size == 0


def test_christoffel_kills_root_atoms():
    mu = DiscreteMeasure({0: 1, 1: 1, 2: 1})
    nu = christoffel(mu, X - 1)
    assert nu.support == [0, 2]
    assert nu.mass(0) == -1
    assert nu.mass(2) == 1


def test_proportionality():
    mu = DiscreteMeasure({0: 2, 1: 4})
    assert proportionality_constant(mu.scale(Fraction(-3, 7)), mu) == Fraction(-3, 7)
    assert proportionality_constant(mu, DiscreteMeasure({0: 2})) is None
    assert proportionality_constant(mu, DiscreteMeasure({0: 2, 1: 5})) is None
    empty = DiscreteMeasure({})
    assert proportionality_constant(empty, empty) == 1
    assert proportionality_constant(mu, empty) is None
    assert equal_up_to_sign(mu, mu.scale(-1))
    assert not equal_up_to_sign(mu, mu.scale(2))


def test_gram_schmidt_two_point_measure():
    # orthogonal polynomials for atoms at 0 and 1 with equal weight
    mu = DiscreteMeasure({0: 1, 1: 1})
    p0, p1 = gram_schmidt(mu, 1)
    assert p0 == Polynomial.one()
    assert p1 == X - HALF
    assert mu.inner_product(p0, p1) == 0


def test_gram_schmidt_exhausted_support():
    mu = DiscreteMeasure({0: 1, 1: 1})
    with pytest.raises(DegenerateMoments) as err:
        gram_schmidt(mu, 3)
    assert err.value.index == 2
    # degree == support size is allowed: the last polynomial has norm zero
    polys = gram_schmidt(mu, 2)
    assert len(polys) == 3
    assert mu.inner_product(polys[2], polys[2]) == 0


def test_orthogonality_table():
    mu = DiscreteMeasure({0: 1, 1: 1, 2: 1})
    polys = gram_schmidt(mu, 2)
    table = orthogonality_table(mu, polys)
    for (i, j), value in table.items():
        if i != j:
            assert value == 0
        else:
            assert value != 0
