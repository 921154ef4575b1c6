import pytest

from daha.aweyl import reduced_words, pi_decomposition, weights_up_to_length
from daha.coeff import ONE, RatFunc
from daha.macdonald import (conjugate_e, e_polynomial, is_triangular,
                            norm, spherical_from_hat, spherical_value, symmetric_p,
                            verify_duality, y_eigen_check)
from daha.polyrep import LaurentPoly, PolyRep
from daha.rootsys import Params, build_root_datum

q = RatFunc.mono(4, 0, 0)          # A_1 formal: grid 4
s = RatFunc.mono(0, 1, 0)          # t^{1/2}
t = s * s


@pytest.fixture(scope="module")
def A1():
    return Params(build_root_datum("A", 1))


@pytest.fixture(scope="module")
def A2():
    return Params(build_root_datum("A", 2))


def test_e_zero_and_omega(A1):
    assert e_polynomial(A1, (0,)).poly == LaurentPoly.constant(1)
    assert e_polynomial(A1, (1,)).poly == LaurentPoly.monomial((1,))


def test_e_minus_omega(A1):
    E = e_polynomial(A1, (-1,)).poly
    expected = LaurentPoly({(-1,): ONE, (1,): (ONE - t) / (ONE - q * t)})
    assert E == expected


def test_evaluation_a1(A1):
    assert spherical_value(A1, (0,)) == (ONE, ONE)
    d, p = spherical_value(A1, (1,))
    assert d == p == s.inverse()
    d, p = spherical_value(A1, (-1,))
    assert d == p == s.inverse() * (ONE - q * t * t) / (ONE - q * t)


def test_norms_a1(A1):
    assert norm(A1, (0,)) == ONE
    assert norm(A1, (1,)) == ONE
    assert norm(A1, (-1,)) == (s - q * s) / (s.inverse() - q * t * s)


@pytest.mark.parametrize("b", [(0, 0), (1, 0), (0, -1), (-1, 1), (1, 1), (2, -1)])
def test_spectral_properties_a2(A2, b):
    E = e_polynomial(A2, b)
    assert E.poly.coeff(b).is_one()
    assert is_triangular(A2, E)
    assert y_eigen_check(A2, E)


def test_evaluation_b2_short_window():
    P = Params(build_root_datum("B", 2))
    for b in weights_up_to_length(P.datum, 3):
        d, p = spherical_value(P, b)
        assert d == p, b


def test_duality_pairs(A1, A2):
    assert verify_duality(A1, (1,), (-1,))[0]
    assert verify_duality(A1, (0,), (2,))[0]
    ws = weights_up_to_length(A2.datum, 2)
    for b in ws:
        for c in ws:
            assert verify_duality(A2, b, c)[0], (b, c)


def test_recursion_path_independence():
    for label in ["A", "B"]:
        P = Params(build_root_datum(label, 2))
        for b in weights_up_to_length(P.datum, 4):
            pib, _ = pi_decomposition(P.datum, b)
            words = reduced_words(pib, limit=3)
            polys = [e_polynomial(P, b, word=w).poly for w in words]
            assert all(p == polys[0] for p in polys), b


def test_spherical_from_hat(A1, A2):
    for P in (A1, A2):
        for b in weights_up_to_length(P.datum, 3):
            assert spherical_from_hat(P, b) == e_polynomial(P, b).spherical(), b


def test_conjugation(A1, A2):
    for P, b in [(A1, (0,)), (A1, (1,)), (A1, (-1,)), (A2, (1, 0)), (A2, (0, -1))]:
        lhs, rhs = conjugate_e(P, b)
        assert lhs == rhs, b


def test_symmetric_p_is_invariant(A1):
    Pm = symmetric_p(A1, (-1,))
    V = PolyRep(A1)
    assert Pm.coeff((1,)).is_one() and Pm.coeff((-1,)).is_one()
    assert V.s(0, Pm) == Pm


def test_zero_k_filter():
    # with k_lng = 0 only short roots contribute to the products
    P = Params(build_root_datum("B", 2), 1, 0)
    for b in weights_up_to_length(P.datum, 3):
        d, p = spherical_value(P, b)
        assert d == p, b


def test_specialized_k_a2():
    P = Params(build_root_datum("A", 2), 2)
    for b in weights_up_to_length(P.datum, 3):
        d, p = spherical_value(P, b)
        assert d == p


def test_orthogonal_to_higher_monomials(A1):
    from daha.aweyl import succeeds
    from daha.polyrep import inner_product_circ
    R = A1.datum
    D = 10
    ws = weights_up_to_length(R, 4)
    for b in ws:
        E = e_polynomial(A1, b).poly
        for c in ws:
            if succeeds(R, c, b):
                ip = inner_product_circ(A1, E, LaurentPoly.monomial(c), D)
                assert ip.coefficients() == {}, (b, c)


def test_some_weight_has_two_words():
    P = Params(build_root_datum("A", 2))
    # the path-independence test above is not vacuous
    pib, _ = pi_decomposition(P.datum, (-1, -1))
    assert len(reduced_words(pib, limit=3)) == 2
