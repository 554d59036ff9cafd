from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import functions
from supercircle.checks import GENERIC_RESONANT, check_printed_system, check_resonance_denominators
from supercircle.contact import OSP_HAMILTONIANS, Density, lie_derivative
from supercircle.diffop import DiffOperator, from_d_basis, lie_action, principal_symbol
from supercircle.equivcalc import (
    Family,
    NonResonant,
    NoSymbolMap,
    ResonanceError,
    ResonantGeneric,
    ResonantSpecial,
    SymbolVector,
    Unique,
    classify_resonance,
    closed_form_table,
    quantization_coefficient,
    quantization_map,
    quantization_map_dbasis,
    rational_binomial,
    solve_betas,
    symbol_action,
    symbol_coefficient,
    symbol_map,
)
from supercircle.superring import ONE, XI, X, SuperFunction, d_of, sf_mul

L, M = Fraction(1, 3), Fraction(4, 5)
X2 = sf_mul(X, X)

nonresonant_pairs = st.tuples(
    st.fractions(min_value=-3, max_value=3, max_denominator=7),
    st.fractions(min_value=-3, max_value=3, max_denominator=7),
).filter(lambda p: isinstance(classify_resonance(*p), NonResonant))


def test_rational_binomial():
    assert rational_binomial(Fraction(5, 3), 0) == 1
    assert rational_binomial(3, 2) == 3
    assert rational_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rational_binomial(2, 3) == 0
    assert rational_binomial(-1, 3) == -1


def test_classify_resonance():
    assert classify_resonance(L, M) == NonResonant()
    assert classify_resonance(0, Fraction(1, 2)) == ResonantSpecial(1)
    assert classify_resonance(1, Fraction(3, 2)) == ResonantGeneric(1)
    assert classify_resonance(Fraction(-1, 2), 1) == ResonantSpecial(3)
    assert classify_resonance(0, 0) == NonResonant()


def test_first_order_coefficients():
    for lam, mu in ((L, M), (Fraction(-1, 4), Fraction(1, 3))):
        delta = mu - lam
        assert symbol_coefficient(1, 1, lam, mu) == -2 * lam / (2 * delta - 1)
        assert quantization_coefficient(1, 1, lam, mu) == 2 * lam / (2 * delta - 1)


def test_symbol_of_dbar():
    S = symbol_map(DiffOperator.dbar_power(1, L, M))
    assert S.part(1) == ONE
    assert S.part(0).is_zero()  # D(1) = 0
    A = DiffOperator.monomial(X, 1, L, M)
    S = symbol_map(A)
    assert S.part(1) == X
    assert S.part(0) == d_of(X) * symbol_coefficient(1, 1, L, M)


def test_resonant_symbol_raises():
    with pytest.raises(ResonanceError):
        symbol_map(DiffOperator.monomial(X, 2, Fraction(1), Fraction(3, 2) + Fraction(1, 2)))
    with pytest.raises(ResonanceError):
        quantization_map(SymbolVector.single(Fraction(1, 2), 1, X), 1, Fraction(3, 2))


def test_symbol_action_constant_hamiltonian():
    S = SymbolVector(M - L, [X2, sf_mul(X, XI), X])
    out = symbol_action(ONE, S)
    assert out == SymbolVector(M - L, [p.partial_x() for p in S.parts])
    single = SymbolVector.single(M - L, 2, X2)
    for h in OSP_HAMILTONIANS:
        assert symbol_action(h, single).part(2) == lie_derivative(h, Density(X2, single.weight(2))).fn


def test_solve_betas_generic():
    result = solve_betas(8, L, M)
    assert isinstance(result, Unique)
    assert result.table.as_dict() == closed_form_table(8, L, M)


def test_solve_betas_polynomial_ansatz_collapses_to_constants():
    result = solve_betas(4, L, M, coeff_degree=1)
    assert isinstance(result, Unique)
    assert result.table.is_constant() and result.table.is_parity_independent()
    assert result.table.as_dict() == closed_form_table(4, L, M)


def test_solve_betas_resonant():
    result = solve_betas(2, 1, Fraction(3, 2))
    assert isinstance(result, NoSymbolMap) and result.order >= 1
    assert str(result) == "NoSymbolMap(order=1)"
    special = solve_betas(2, 0, Fraction(1, 2))
    assert isinstance(special, Family) and special.dimension >= 1


def test_solve_betas_bound():
    with pytest.raises(ValueError):
        solve_betas(13, L, M)


@pytest.mark.parametrize("lam, mu", GENERIC_RESONANT[:4])
def test_generic_resonance_fails_at_its_order(lam, mu):
    m = int(2 * (mu - lam))
    result = solve_betas(m + 1, lam, mu)
    assert isinstance(result, NoSymbolMap) and result.order == m


@pytest.mark.parametrize("m", [1, 3])
def test_special_weights_symbol_map_is_equivariant(m):
    lam, mu = Fraction(1 - m, 4), Fraction(1 + m, 4)
    for k in range(m + 2):
        for a in (X, sf_mul(X, XI), X2):
            A = DiffOperator.monomial(a, k, lam, mu)
            S = symbol_map(A)
            for h in OSP_HAMILTONIANS:
                assert symbol_map(lie_action(h, A)) == symbol_action(h, S)


def test_recursions_hold():
    assert check_printed_system(n_pairs=3, k_max=6).passed


def test_resonance_denominators():
    assert check_resonance_denominators(k_max=6).passed


def test_dbasis_formula_at_order_zero():
    S = SymbolVector.single(Fraction(0), 0, X2)
    assert from_d_basis(quantization_map_dbasis(S, 0, 0)) == quantization_map(S, 0, 0)


def test_dbasis_formula_disagrees_at_order_one():
    # Recorded discrepancy: the D-ordered closed form yields f*D, while the
    # equivariant quantization at weights (0, 0) is f*Dbar.
    S = SymbolVector.single(Fraction(0), 1, X)
    assert quantization_map(S, 0, 0) == DiffOperator.monomial(X, 1, 0, 0)
    assert from_d_basis(quantization_map_dbasis(S, 0, 0)) != quantization_map(S, 0, 0)


@settings(max_examples=25)
@given(nonresonant_pairs, functions(3), st.integers(min_value=0, max_value=5))
def test_equivariance_and_inversion(pair, a, k):
    lam, mu = pair
    A = DiffOperator.monomial(a, k, lam, mu)
    S = symbol_map(A)
    assert quantization_map(S, lam, mu) == A
    if not A.is_zero():
        top = Density(S.part(A.top_index), S.weight(A.top_index))
        assert top == principal_symbol(A)
    for h in OSP_HAMILTONIANS:
        assert symbol_map(lie_action(h, A)) == symbol_action(h, S)
