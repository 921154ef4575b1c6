from fractions import Fraction

import pytest

from daha.aweyl import elements_up_to_length, pi_element, simple_reflection
from daha.coeff import ONE, ZERO, RatFunc
from daha.fourier import (FourierError, FuncElem, discretize, discretize_pi,
                          gauss_integral_check, h_theta, inverse_transform, jackson_sum_eta,
                          mu_bullet, mu_bullet_pi, plancherel_sides, spherical_e,
                          t_bullet, transform_phi, transform_psi, verify_transform_window,
                          x_bullet)
from daha.macdonald import b_sharp, norm, spherical_at
from daha.polyrep import LaurentPoly
from daha.rootsys import KScalar, Params, build_root_datum


@pytest.fixture(scope="module")
def A1():
    return Params(build_root_datum("A", 1))


@pytest.fixture(scope="module")
def A2():
    return Params(build_root_datum("A", 2))


def test_delta_values(A1):
    d = FuncElem.delta_pi(A1, (0,))
    assert d.value_pi((0,)) == ONE
    assert d.value_pi((1,)) == ZERO


def test_non_pi_element_rejected(A1):
    FuncElem.delta(A1, pi_element(A1.datum, 0))
    with pytest.raises(FourierError):
        FuncElem.delta(A1, simple_reflection(A1.datum, 0))


def test_discretize_constant_and_monomial(A1):
    ws = [(0,), (1,), (-1,), (2,)]
    one = discretize_pi(A1, LaurentPoly.constant(1), ws)
    assert all(one.value_pi(b) == ONE for b in ws)
    x = discretize_pi(A1, LaurentPoly.monomial((1,)), [(0,)])
    # X(q^{-rho_k}) = q^{-k/2} = t^{-1/2}
    assert x.value_pi((0,)) == RatFunc.mono(0, -1, 0)


def test_discretized_e_is_dual(A2):
    ws = [(0, 0), (1, 0), (0, -1), (-1, 1)]
    for b in ws:
        h = discretize_pi(A2, spherical_e(A2, b), ws)
        for c in ws:
            assert h.value_pi(c) == spherical_at(A2, c, b_sharp(A2, b))


def test_mu_bullet_small(A1):
    assert mu_bullet_pi(A1, (1,)) == ONE
    for b in [(0,), (1,), (-1,), (2,), (-2,)]:
        assert mu_bullet_pi(A1, b) == norm(A1, b).inverse()


def test_mu_bullet_is_real(A1):
    R = A1.datum
    xi = (Fraction(1, 7),)
    P = Params(R, grid=28)
    for x in elements_up_to_length(R, 3):
        m = mu_bullet(P, x, xi)
        assert m.conj() == m


def _values_pairing(P, f, g, xi, conj=False):
    total = ZERO
    for x in set(f.coeffs) | set(g.coeffs):
        gv = g.value(x).conj() if conj else g.value(x)
        total = total + f.value(x) * gv * mu_bullet(P, x, xi)
    return total


def test_self_adjoint_and_unitary_generic_xi():
    R = build_root_datum("A", 1)
    P = Params(R, grid=28)
    xi = (Fraction(1, 7),)
    els = elements_up_to_length(R, 3)
    f = FuncElem(P, {els[1]: ONE, els[4]: RatFunc.mono(1, 1, 0)}, xi)
    g = FuncElem(P, {els[2]: ONE, els[3]: RatFunc.mono(0, 1, 0), els[1]: RatFunc.const(2)}, xi)
    for i in [-1, 0]:
        assert _values_pairing(P, t_bullet(P, i, f), g, xi) == _values_pairing(P, f, t_bullet(P, i, g), xi)
        assert _values_pairing(P, t_bullet(P, i, f), t_bullet(P, i, g), xi, True) == \
            _values_pairing(P, f, g, xi, True)
    assert _values_pairing(P, x_bullet(P, (1,), f), g, xi) == _values_pairing(P, f, x_bullet(P, (1,), g), xi)


def test_delta_side_matches_polynomial_side(A1):
    """T_i commutes with discretization on a window where no delta leaves it."""
    from daha.polyrep import PolyRep
    V = PolyRep(A1)
    R = A1.datum
    f = LaurentPoly({(1,): ONE, (-1,): RatFunc.const(3)})
    els = elements_up_to_length(R, 6)
    lhs = discretize(A1, V.T(0, f), els)
    rhs = t_bullet(A1, 0, discretize(A1, f, els))
    for x in elements_up_to_length(R, 4):
        assert lhs.value(x) == rhs.value(x)


def test_transforms_match_pairings(A1):
    f = spherical_e(A1, (1,)) + LaurentPoly.monomial((-1,))
    for b, phi_ok, psi_ok in verify_transform_window(A1, f, [(0,), (1,), (-1,), (2,)], 10):
        assert phi_ok and psi_ok, b


def test_inversion(A1, A2):
    f = LaurentPoly({(1,): ONE, (-2,): RatFunc.const(3), (0,): RatFunc.const(-1)})
    assert inverse_transform(A1, transform_phi(A1, f)) == f
    g = LaurentPoly({(1, 0): ONE, (-1, 1): RatFunc.const(2)})
    assert inverse_transform(A2, transform_phi(A2, g)) == g
    assert inverse_transform(A1, transform_phi(A1, LaurentPoly.constant(1))) == LaurentPoly.constant(1)


def test_psi_of_e_is_delta(A1):
    assert transform_psi(A1, spherical_e(A1, (-1,))) == FuncElem.delta_pi(A1, (-1,))


def test_plancherel(A1):
    f = LaurentPoly({(1,): ONE, (-2,): RatFunc.const(3)})
    g = LaurentPoly({(1,): ONE, (-1,): RatFunc.const(2)})
    lhs, rhs = plancherel_sides(A1, f, g, 8)
    assert lhs.first_difference(rhs) is None


@pytest.mark.parametrize("b,c", [((0,), (0,)), ((1,), (-1,)), ((-1,), (-1,))])
def test_gauss_integral_low_order(A1, b, c):
    res = gauss_integral_check(A1, b, c, 8)
    assert res["identity"] and res["constant_ok"]


def test_h_theta():
    P = Params(build_root_datum("A", 1), Fraction(-1, 2))
    assert h_theta(P) == KScalar(-1)
    P = Params(build_root_datum("A", 2, "Q"), Fraction(-1, 3))
    assert h_theta(P) == KScalar(-1)


def test_eta_a1_low_order():
    P = Params(build_root_datum("A", 1), Fraction(-1, 2))
    res = jackson_sum_eta(P, 12)
    assert res["equal"]
    assert len(res["mu_support"]) == 2 and res["support_ok"]


def test_eta_rejects_other_k(A1):
    with pytest.raises(ValueError):
        jackson_sum_eta(A1, 5)
    with pytest.raises(ValueError):
        jackson_sum_eta(Params(build_root_datum("A", 1), 1), 5)
