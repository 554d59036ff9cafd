from fractions import Fraction

import pytest

from supercircle import cohom
from supercircle.cohom import (
    COCYCLE_CONVENTION,
    Cochain1,
    EvenOrder,
    Found,
    NoneUpTo,
    NotResonant,
    bol_operator,
    calibrate_cocycle_convention,
    check_cocycle,
    coboundary,
    gamma,
    gamma_cocycle,
    nontriviality_search,
    obstruction_class,
)
from supercircle.contact import OSP_HAMILTONIANS
from supercircle.diffop import DiffOperator, conjugate, lie_action
from supercircle.superring import ONE, XI, X, SuperFunction, sf_mul

X2 = sf_mul(X, X)
XXI = sf_mul(X, XI)


def test_bol_operators():
    assert bol_operator(1) == DiffOperator.dbar_power(1, 0, Fraction(1, 2))
    assert bol_operator(3) == DiffOperator.dbar_power(3, Fraction(-1, 2), 1)
    for k in (1, 3, 5):
        for h in OSP_HAMILTONIANS:
            assert lie_action(h, bol_operator(k)).is_zero()


@pytest.mark.parametrize("k", [0, 2, -1])
def test_even_order_rejected(k):
    with pytest.raises(EvenOrder, match="odd"):
        bol_operator(k)
    with pytest.raises(EvenOrder):
        gamma(k)


@pytest.mark.parametrize("k", [1, 3, 5, 7])
def test_gamma_values_on_basis(k):
    src, dst = Fraction(1 - k, 4), Fraction(1 + k, 4)
    for h in (ONE, X, XI):
        assert gamma_cocycle(k, h).is_zero()
    coeffs = [SuperFunction()] * k
    coeffs[k - 1] = XI * 2
    if k >= 2:
        coeffs[k - 2] = SuperFunction.const(k - 1)
    assert gamma_cocycle(k, X2) == DiffOperator(src, dst, coeffs)
    assert gamma_cocycle(k, XXI) == DiffOperator.dbar_power(k - 1, src, dst)


def test_gamma_rejects_non_osp_hamiltonian():
    with pytest.raises(ValueError):
        gamma_cocycle(1, SuperFunction.monomial(3))


@pytest.mark.parametrize("k", [1, 3, 5])
def test_scaling_identity(k):
    # L_X(Dbar^k) = (lam + (k-1)/4) gamma_k(X) away from the Bol weights.
    for lam in (Fraction(2, 7), Fraction(-3, 2), Fraction(5)):
        B = DiffOperator.dbar_power(k, lam, lam + Fraction(k, 2))
        for h in OSP_HAMILTONIANS:
            assert lie_action(h, B) == gamma_cocycle(k, h, lam).scale(lam + Fraction(k - 1, 4))


@pytest.mark.parametrize("k", [1, 3, 5])
def test_gamma_is_cocycle(k):
    assert check_cocycle(gamma(k))


@pytest.mark.parametrize("k", [1, 3, 5, 7])
def test_gamma_conjugation_symmetry(k):
    s = -1 if ((k - 1) // 2) % 2 else 1
    for h in OSP_HAMILTONIANS:
        g = gamma_cocycle(k, h)
        assert conjugate(g) == g.scale(s)


def test_coboundaries_are_cocycles():
    B = DiffOperator(Fraction(1, 3), Fraction(2), [X2, XI, XXI + ONE])
    assert check_cocycle(coboundary(B))
    assert coboundary(bol_operator(3)).is_zero()


def test_constant_cochain_is_not_a_cocycle():
    junk = Cochain1.from_function(lambda h: DiffOperator.dbar_power(1, 0, Fraction(1, 2)), 0, Fraction(1, 2))
    assert not check_cocycle(junk)


def test_cocycle_convention_is_frozen():
    samples = [
        DiffOperator(Fraction(1, 3), Fraction(2), [X2 + XI, XXI, X]),
        DiffOperator(Fraction(-1, 2), Fraction(1, 5), [XI, X2, ONE, XXI]),
    ]
    assert COCYCLE_CONVENTION == "plain"
    assert calibrate_cocycle_convention(samples) == ["plain"]


def test_obstruction_odd_generic():
    rep = obstruction_class(1, Fraction(3, 2))
    assert rep.m == 1 and rep.expected_factor == 1
    assert rep.matches and rep.proportional and not rep.vanishes
    assert rep.cbar == gamma(1)
    assert check_cocycle(rep.cbar)


@pytest.mark.parametrize("m", [1, 3])
def test_obstruction_vanishes_at_special_weights(m):
    rep = obstruction_class(Fraction(1 - m, 4), Fraction(1 + m, 4))
    assert rep.vanishes and rep.matches


@pytest.mark.parametrize("lam", [Fraction(2, 5), Fraction(-3), Fraction(1, 4)])
def test_obstruction_odd_factor(lam):
    rep = obstruction_class(lam, lam + Fraction(3, 2))
    assert rep.observed_factor == lam + Fraction(1, 2)
    assert rep.proportional and rep.matches


@pytest.mark.parametrize("m", [2, 4])
def test_obstruction_even_order_observed_factor(m):
    # The exact computation gives m/4 * gamma_1; the predicted factor m/2
    # does not match, so the report must say so rather than hide it.
    rep = obstruction_class(Fraction(1, 3), Fraction(1, 3) + Fraction(m, 2))
    assert rep.proportional
    assert rep.observed_factor == Fraction(m, 4)
    assert rep.expected_factor == Fraction(m, 2)
    assert not rep.matches


def test_obstruction_requires_resonance():
    with pytest.raises(NotResonant):
        obstruction_class(Fraction(1, 3), Fraction(4, 5))


@pytest.mark.parametrize("k", [1, 3])
def test_gamma_not_a_coboundary_in_bounded_degree(k):
    assert nontriviality_search(k, 6) == NoneUpTo(6)


def test_search_recovers_coboundary():
    src, dst = cohom.bol_weights(1)
    B = DiffOperator(src, dst, [X + XXI, X2])
    found = nontriviality_search(1, 4, coboundary(B))
    assert isinstance(found, Found)
    assert coboundary(found.operator) == coboundary(B)
