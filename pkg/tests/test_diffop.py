from fractions import Fraction

import pytest
from hypothesis import given

from conftest import functions, operators, rationals
from supercircle.contact import OSP_HAMILTONIANS, Density, WeightMismatch, contact_bracket
from supercircle.diffop import (
    DiffOperator,
    DOrderedOperator,
    ZeroOperator,
    apply,
    compose,
    conjugate,
    conjugation_sign,
    from_d_basis,
    lie_action,
    order,
    principal_symbol,
    to_d_basis,
)
from supercircle.superring import ONE, XI, X, ZERO, SuperFunction, sf_mul

L, M = Fraction(1, 3), Fraction(4, 5)
X2 = sf_mul(X, X)


def dbar(k, src=L, dst=M):
    return DiffOperator.dbar_power(k, src, dst)


def mult(a, src=L, dst=M):
    return DiffOperator.multiplication(a, src, dst)


def test_apply_examples():
    assert apply(dbar(1), Density(X, L)) == Density(-XI, M)
    assert apply(mult(XI), Density(X, L)) == Density(sf_mul(XI, X), M)
    A = DiffOperator.monomial(XI, 2, L, M)
    assert apply(A, Density(X2, L)) == Density(sf_mul(XI, X) * -2, M)
    with pytest.raises(WeightMismatch):
        apply(A, Density(X, M))


def test_compose_examples():
    d = dbar(1, L, L)
    assert compose(d, mult(X, L, L)) == DiffOperator(L, L, [-XI, X])
    assert compose(d, mult(XI, L, L)) == DiffOperator(L, L, [ONE, -XI])
    assert compose(d, d) == dbar(2, L, L)
    with pytest.raises(WeightMismatch):
        compose(dbar(1, L, M), dbar(1, L, M))


def test_d_basis_examples():
    # Dbar = D - 2 xi D^2
    assert to_d_basis(dbar(1)) == DOrderedOperator(L, M, [ZERO, ONE, XI * -2])
    assert to_d_basis(mult(X2)) == DOrderedOperator(L, M, [X2])
    assert to_d_basis(dbar(2)).coeffs[2] == -ONE


def test_order_and_principal_symbol():
    assert order(mult(X)) == 0
    assert order(dbar(1)) == Fraction(1, 2)
    assert order(DiffOperator.monomial(XI, 3, L, M)) == Fraction(3, 2)
    A = DiffOperator.monomial(X2, 3, L, M)
    assert principal_symbol(A) == Density(X2, M - L - Fraction(3, 2))
    B = dbar(2) + DiffOperator.monomial(XI, 1, L, M)
    assert principal_symbol(B) == Density(ONE, M - L - 1)
    with pytest.raises(ZeroOperator):
        order(DiffOperator.zero(L, M))
    with pytest.raises(ZeroOperator):
        principal_symbol(DiffOperator.zero(L, M))


def test_conjugation_examples():
    half = Fraction(1, 2)
    assert conjugate(dbar(1)) == dbar(1, half - M, half - L).scale(-1)
    assert conjugate(dbar(3)) == dbar(3, half - M, half - L)
    assert conjugate(mult(X2)) == mult(X2, half - M, half - L)
    assert [conjugation_sign(k) for k in range(7)] == [1, -1, -1, 1, 1, -1, -1]


def test_bol_invariance():
    for k in (1, 3, 5):
        A = dbar(k, Fraction(1 - k, 4), Fraction(1 + k, 4))
        for h in OSP_HAMILTONIANS:
            assert lie_action(h, A).is_zero()


def test_homogeneous_parts():
    A = DiffOperator(L, M, [X, XI, ONE + XI])
    parts = dict(A.homogeneous_parts())
    assert parts[0] == DiffOperator(L, M, [X, XI, ONE])
    assert parts[1] == DiffOperator(L, M, [ZERO, ZERO, XI])
    assert A.parity is None and dbar(1).parity == 1


@given(operators(M, L), operators(L, M), operators(Fraction(2), L))
def test_associativity(A, B, C):
    assert compose(A, compose(B, C)) == compose(compose(A, B), C)


@given(operators(L, M), operators(Fraction(2), L), functions(4))
def test_apply_respects_composition(A, B, f):
    phi = Density(f, Fraction(2))
    assert apply(compose(A, B), phi) == apply(A, apply(B, phi))


@given(operators(L, M, max_index=5))
def test_d_basis_roundtrip(A):
    B = to_d_basis(A)
    assert from_d_basis(B) == A
    for k in range(4):
        for odd in (False, True):
            phi = Density(SuperFunction.monomial(k, odd), L)
            assert B(phi) == A(phi)


@given(operators(L, M, max_index=5))
def test_conjugation_is_involutive(A):
    assert conjugate(conjugate(A)) == A


@given(operators(L, M, max_index=4, max_degree=2))
def test_conjugation_equivariance(A):
    # Frozen sign table: the sign relating conjugation and the action is +1
    # in all four parity classes (h even/odd, A even/odd).
    As = conjugate(A)
    for h in OSP_HAMILTONIANS:
        assert conjugate(lie_action(h, A)) == lie_action(h, As)


@given(operators(L, M, max_index=4, max_degree=2))
def test_filtration(A):
    for h in OSP_HAMILTONIANS:
        B = lie_action(h, A)
        if A.is_zero():
            assert B.is_zero()
        elif not B.is_zero():
            assert order(B) <= order(A)


@given(rationals, rationals)
def test_action_representation(lam, mu):
    A = DiffOperator(lam, mu, [X2, XI, sf_mul(X, XI), X])
    f, g = X2, XI
    lhs = lie_action(f, lie_action(g, A)) - lie_action(g, lie_action(f, A))
    assert lhs == lie_action(contact_bracket(f, g), A)
