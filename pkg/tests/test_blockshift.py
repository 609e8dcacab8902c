import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from polygrade.blockshift import (
    BlockShiftMonomial,
    MatrixPolynomial,
    component_product_degree,
    identity_matrix,
    is_admissible,
    matprod,
    matrix_realization,
    nary_monomial_product,
    oracle_suite,
    polyadic_identity,
    polyadic_identity_check,
    polynomial_nary_product,
    polynomial_realization,
    querelement_monomial,
)

X_VALUES = (1, 2, Fraction(3, 2))


def sympy_shift(size, value):
    # independent realization via sympy's permutation-style construction
    return sympy.Matrix(size, size, lambda i, j: value if j == (i + 1) % size else 0)


def test_four_ary_monomial_product_example():
    n = 4
    monos = [BlockShiftMonomial(n, c, d) for c, d in [(-12, 7), (7, 10), (5, 16), (-8, 19)]]
    prod = nary_monomial_product(monos)
    assert prod.exponent == 52
    assert prod.coeff == 3360
    assert prod.admissible and prod.power == 17


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_product_matches_sympy_matrices(n):
    rng = random.Random(n)
    x = sympy.Symbol("x")
    for _ in range(20):
        monos = [BlockShiftMonomial(n, rng.randint(-5, 5), rng.randint(0, 5)) for _ in range(n)]
        symbolic = sympy.prod([m.coeff * sympy_shift(n - 1, x**m.exponent) for m in monos], sympy.eye(n - 1))
        p = nary_monomial_product(monos)
        assert sympy.simplify(symbolic - p.coeff * sympy_shift(n - 1, x**p.exponent)) == sympy.zeros(n - 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_identity_checks(n):
    chk = polyadic_identity_check(n)
    assert chk.identity_law
    e = matrix_realization(polyadic_identity(n), 1)
    assert (e == identity_matrix(n - 1)) == (n == 2)
    assert chk


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("ell", [0, 1, 2, 3])
def test_querelement_law(n, ell):
    mono = BlockShiftMonomial(n, Fraction(3, 2), ell * (n - 1) + 1)
    q = querelement_monomial(mono)
    assert q.exponent == mono.exponent * (2 - n)
    for x in X_VALUES:
        mats = [matrix_realization(mono, x)] * (n - 1) + [matrix_realization(q, x)]
        assert matprod(mats) == matrix_realization(mono, x)


def test_oracle_suite_runs_clean():
    counts, failures = oracle_suite(cases=300, seed=3)
    assert failures == []
    assert counts["products"] == 300


@settings(max_examples=100)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(-6, 6), st.integers(0, 8)), min_size=n, max_size=n),
)), st.sampled_from(X_VALUES))
def test_product_realization_homomorphism(case, x):
    n, pairs = case
    monos = [BlockShiftMonomial(n, c, d) for c, d in pairs]
    assert matrix_realization(nary_monomial_product(monos), x) == matprod([matrix_realization(m, x) for m in monos])


def test_admissibility():
    assert is_admissible(0, 3) and is_admissible(5, 3) and not is_admissible(2, 3)
    assert MatrixPolynomial(4, 1, {7: 1, 8: 2}).non_admissible_exponents() == [8]


def test_polynomial_normalizes_terms():
    p = MatrixPolynomial(3, 1, {0: 2, 3: 0, 5: 4})
    assert p.constant == 3 and p.terms == {5: Fraction(4)}
    assert p == MatrixPolynomial(3, 3, {5: 4})


def test_cube_of_x_plus_e_flags_exponent_two():
    p = MatrixPolynomial(3, 1, {1: 1})  # X + E
    res = polynomial_nary_product([p, p, p])
    assert res.result.terms == {1: 3, 2: 3, 3: 1}
    assert res.result.constant == 1
    assert res.flagged == (2,)


def test_product_with_identities_is_clean():
    n = 4
    p = MatrixPolynomial(n, 0, {4: 2, 7: -1})
    e = MatrixPolynomial(n, 1, {})
    res = polynomial_nary_product([p, e, e, e])
    assert res.admissible and res.result == p
    mixed = polynomial_nary_product([p, p, e, e])
    assert not mixed.admissible


@pytest.mark.parametrize("n", [3, 4])
def test_polynomial_product_realization(n):
    rng = random.Random(11)
    for _ in range(10):
        polys = [MatrixPolynomial(n, rng.randint(-3, 3), {rng.randint(1, 6): rng.randint(-3, 3)}) for _ in range(n)]
        res = polynomial_nary_product(polys).result
        for x in X_VALUES:
            assert polynomial_realization(res, x) == matprod([polynomial_realization(p, x) for p in polys])


def test_component_power_rule():
    deg = component_product_degree([2, 3, 5, 6], 4)
    assert deg.exponent == 52 and deg.power == 17 and deg.printed_power == 16
    assert "17" in deg.note and "49" in deg.note
