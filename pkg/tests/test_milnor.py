import random

import pytest

from wsteenrod.milnor import (
    BiDegree,
    MilnorAlgebra,
    UNIT_MONOMIAL,
    WindowError,
    antipode_monomial,
    bidegree_basis,
    coproduct_monomial,
    dual_element,
    enumerate_window_monomials,
    monomial,
    multiply_monomials,
    tau_monomial,
    xi_degree,
    xi_monomial,
)


def test_generator_degrees():
    assert xi_degree(1) == (2, 1)
    assert xi_degree(2) == (6, 3)
    assert xi_degree(3) == (14, 7)
    assert xi_degree(4) == (30, 15)
    assert tau_monomial(0).degree == (1, 0)
    assert tau_monomial(1).degree == (3, 1)


def test_chow_counts_tau_factors():
    for m in enumerate_window_monomials(14):
        assert m.degree.chow == len(m.eps)


def test_basis_examples():
    assert bidegree_basis(BiDegree(2, 1)) == (xi_monomial(1),)
    b31 = bidegree_basis(BiDegree(3, 1))
    assert set(b31) == {tau_monomial(1), monomial([0], [1])}
    assert len(b31) == 2
    assert bidegree_basis(BiDegree(2, 0)) == ()


def test_basis_empty_outside_cone():
    assert bidegree_basis(BiDegree(3, 2)) == ()  # negative chow
    assert bidegree_basis(BiDegree(2, -1)) == ()


def test_basis_matches_window_sweep():
    # the per-bidegree enumeration and the raw exponent sweep agree
    by_degree = {}
    for m in enumerate_window_monomials(16):
        by_degree.setdefault(m.degree, set()).add(m)
    for d, monos in by_degree.items():
        assert set(bidegree_basis(d)) == monos
    for s in range(17):
        for w in range(s + 1):
            d = BiDegree(s, w)
            assert set(bidegree_basis(d)) == by_degree.get(d, set())


def test_dual_product():
    t0 = tau_monomial(0)
    assert multiply_monomials(t0, t0) is None
    assert multiply_monomials(xi_monomial(1), xi_monomial(1)) == xi_monomial(1, 2)
    assert multiply_monomials(t0, xi_monomial(1)) == monomial([0], [1])


def test_coproduct_xi1():
    terms = set(coproduct_monomial(xi_monomial(1)))
    assert terms == {(xi_monomial(1), UNIT_MONOMIAL), (UNIT_MONOMIAL, xi_monomial(1))}


def test_coproduct_tau1():
    terms = set(coproduct_monomial(tau_monomial(1)))
    assert terms == {
        (tau_monomial(1), UNIT_MONOMIAL),
        (xi_monomial(1), tau_monomial(0)),
        (UNIT_MONOMIAL, tau_monomial(1)),
    }


def test_coproduct_unit():
    assert coproduct_monomial(UNIT_MONOMIAL) == ((UNIT_MONOMIAL, UNIT_MONOMIAL),)


def test_antipode_generators():
    assert antipode_monomial(xi_monomial(1)) == (xi_monomial(1),)
    assert antipode_monomial(tau_monomial(0)) == (tau_monomial(0),)
    assert set(antipode_monomial(xi_monomial(2))) == {
        xi_monomial(2),
        xi_monomial(1, 3),
    }


def test_pairing(alg16):
    p1 = alg16.pst(0, 1)
    assert alg16.pair(p1, dual_element([xi_monomial(1)])) == 1
    assert len(bidegree_basis(BiDegree(2, 1))) == 1
    assert alg16.pair(alg16.unit(), dual_element([UNIT_MONOMIAL])) == 1
    with pytest.raises(Exception):
        alg16.pair(p1, dual_element([tau_monomial(0)]))


def test_window_error():
    alg = MilnorAlgebra(6)
    with pytest.raises(WindowError):
        alg.pst(0, 3)
    with pytest.raises(WindowError):
        alg.require(BiDegree(7, 0))


def test_dual_product_element(alg16):
    t0 = dual_element([tau_monomial(0)])
    sq = alg16.dual_product(t0, t0)
    assert sq.is_zero()
    x1 = dual_element([xi_monomial(1)])
    assert alg16.dual_product(x1, x1).monomials() == (xi_monomial(1, 2),)


def test_antipode_dual_element(alg16):
    x2 = dual_element([xi_monomial(2)])
    assert set(alg16.antipode_dual(x2).monomials()) == {
        xi_monomial(2),
        xi_monomial(1, 3),
    }


def test_antipode_involution_random(alg16):
    rng = random.Random(2)
    degrees = [d for d in alg16.bidegrees(14)]
    for _ in range(60):
        d = rng.choice(degrees)
        from wsteenrod.milnor import DualElement

        x = DualElement(d, rng.getrandbits(alg16.dim(d)))
        assert alg16.antipode_dual(alg16.antipode_dual(x)) == x
