from fractions import Fraction

import pytest
from hypothesis import given

from conftest import functions, homogeneous, polys, rationals
from supercircle.checks import check_derivations, check_leibniz
from supercircle.superring import (
    ONE,
    XI,
    X,
    Parity,
    Poly,
    SuperFunction,
    d_of,
    dbar_of,
    format_superfunction,
    homogeneous_split,
    koszul_sign,
    parity,
    partial_xi,
    rational,
    sf_mul,
)


def sf(even=(), odd=()):
    return SuperFunction(Poly(even), Poly(odd))


def test_products():
    assert sf_mul(X, XI) == sf(odd=[0, 1])
    assert sf_mul(XI, XI).is_zero()
    assert sf_mul(ONE + sf_mul(XI, X), ONE + XI) == sf(even=[1], odd=[1, 1])


def test_d_and_dbar_on_generators():
    assert d_of(X) == XI
    assert d_of(XI) == ONE
    assert d_of(sf([0, 0, 1])) == sf(odd=[0, 2])
    assert dbar_of(X) == -XI
    assert dbar_of(XI) == ONE
    assert dbar_of(sf(odd=[0, 0, 1])) == sf([0, 0, 1])


def test_plumbing():
    assert partial_xi(sf(odd=[0, 1])) == X
    assert parity(X + XI) is Parity.MIXED
    assert parity(XI) is Parity.ODD
    assert homogeneous_split(X + XI) == (X, XI)


def test_rational_coercion():
    assert rational("3/4") == Fraction(3, 4)
    assert rational(2) == Fraction(2)
    with pytest.raises(TypeError):
        rational(0.5)


def test_formatting():
    assert format_superfunction(sf([1, 0, 2], [1, 3])) == "1 + 2*x^2 + xi + 3*xi*x"
    assert format_superfunction(sf([0, -1], [-1])) == "-x - xi"
    assert format_superfunction(SuperFunction()) == "0"


def test_derivation_identities_exhaustive():
    result = check_derivations(8)
    assert result.passed, result.failures


def test_leibniz_exhaustive():
    result = check_leibniz(4)
    assert result.passed, result.failures


@given(functions(), functions(), functions())
def test_associative(f, g, h):
    assert sf_mul(sf_mul(f, g), h) == sf_mul(f, sf_mul(g, h))


@given(functions(), functions(), functions())
def test_distributive(f, g, h):
    assert sf_mul(f, g + h) == sf_mul(f, g) + sf_mul(f, h)


@given(homogeneous, homogeneous)
def test_supercommutative(a, b):
    (p, f), (q, g) = a, b
    assert sf_mul(f, g) == sf_mul(g, f) * koszul_sign(p, q)


@given(functions(5))
def test_dbar_from_d(f):
    assert dbar_of(f) == d_of(f) - sf_mul(XI, f.partial_x()) * 2


@given(functions(5))
def test_anticommute(f):
    assert (d_of(dbar_of(f)) + dbar_of(d_of(f))).is_zero()


@given(homogeneous, functions())
def test_graded_leibniz(a, g):
    p, f = a
    for op in (d_of, dbar_of):
        assert op(sf_mul(f, g)) == sf_mul(op(f), g) + sf_mul(f, op(g)) * koszul_sign(p, 1)


@given(polys(), polys(), rationals)
def test_poly_evaluation_is_a_homomorphism(p, q, t):
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)
