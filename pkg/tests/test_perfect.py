import json
from fractions import Fraction

import pytest

from daha.coeff import Cyclo
from daha.perfect import (Field, HypothesisError, Matrix, build_negative_sector,
                          build_root_of_unity_sector, check_gaussian, check_positivity,
                          check_psi_epsilon, check_relations, check_spectra, check_stabilizer,
                          check_transforms, check_unitarity, classical_gauss,
                          gauss_from_selberg, gauss_selberg_sum, upsilon_sets)
from daha.rootsys import Params, build_root_datum


def test_matrix_inverse_and_nullspace():
    F = Field()
    from daha.coeff import RatFunc
    one, two = RatFunc.const(1), RatFunc.const(2)
    A = Matrix([[one, two], [two, one]], F)
    assert A * A.inverse() == Matrix.identity(2, F)
    B = Matrix([[one, two], [two, RatFunc.const(4)]], F)
    ns = B.nullspace()
    assert len(ns) == 1


@pytest.mark.parametrize("e", [1, 3, 5])
def test_negative_sector_a1(e):
    rep = build_negative_sector("A", 1, e)
    assert rep.dim == e
    # basis pi_{-j omega}, j < e, up to b -> b + e u_b^{-1} omega
    assert sorted(b[0] % e for b in rep.weights) == list(range(e))
    assert all(check_relations(rep).values())
    assert check_spectra(rep) == {"simple_x_spectrum": True, "y_spectrum_is_negative": True}
    assert all(check_unitarity(rep).values())
    assert all(check_gaussian(rep).values())


def test_negative_sector_stabilizer_e3():
    rep = build_negative_sector("A", 1, 3)
    stab = check_stabilizer(rep)
    assert [s["b"] for s in stab] == [[3]]
    assert stab[0]["mu_one"] and stab[0]["gaussian_one"]


def test_negative_sector_a2_q():
    rep = build_negative_sector("A", 2, 2, "Q")
    assert rep.dim == 4
    assert all(check_relations(rep).values())


def test_negative_sector_hypotheses():
    with pytest.raises(HypothesisError):
        build_negative_sector("A", 1, 2)
    with pytest.raises(HypothesisError):
        build_negative_sector("A", 1, 0)


@pytest.mark.parametrize("N,k,dim", [(4, 1, 4), (5, 1, 6), (5, 2, 2)])
def test_root_of_unity_sector(N, k, dim):
    rep = build_root_of_unity_sector("A", 1, N, k)
    assert rep.dim == dim
    assert rep.field.M == 4 * N
    assert all(check_relations(rep).values())
    assert all(check_psi_epsilon(rep).values())
    assert check_positivity(rep)["positive"]
    assert all(check_transforms(rep).values())


def test_other_branch_is_still_a_representation():
    rep = build_root_of_unity_sector("A", 1, 5, 1, branch=-1)
    assert all(check_relations(rep).values())
    assert all(check_transforms(rep).values())


def test_root_of_unity_hypotheses():
    with pytest.raises(HypothesisError):
        build_root_of_unity_sector("A", 1, 3, 2)
    with pytest.raises(HypothesisError):
        build_root_of_unity_sector("A", 1, 5, Fraction(1, 2))


def test_matrices_serialize():
    rep = build_root_of_unity_sector("A", 1, 5, 1)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["dimension"] == 6
    assert len(data["matrices"]["T1"]) == 6
    assert all(len(row) == 6 for row in data["matrices"]["pi1"])


def test_upsilon_stabilizer_negative_k():
    P = Params(build_root_datum("A", 1), Fraction(-3, 2))
    data = upsilon_sets(P, Field(), 6)
    assert len(data.stabilizer) == 2


def test_upsilon_generic_xi():
    P = Params(build_root_datum("A", 1), grid=28)
    data = upsilon_sets(P, Field(), 3, xi=(Fraction(1, 7),))
    from daha.aweyl import elements_up_to_length
    assert len(data.stabilizer) == 1
    assert len(data.star) == len(elements_up_to_length(P.datum, 3))


def test_classical_gauss_small():
    assert classical_gauss(1)[0] == Cyclo.const(4, 1) + Cyclo.zeta(4, 1)
    assert classical_gauss(2)[0] == Cyclo.zeta(8, 1) * Cyclo.const(8, 2)
    assert classical_gauss(4)[0] == (Cyclo.const(16, 1) + Cyclo.zeta(16, 4)) * Cyclo.const(16, 2)


def test_gauss_selberg_examples():
    lhs, rhs, ok = gauss_selberg_sum(2, 1)
    assert ok and lhs == Cyclo.zeta(8, 1)
    assert gauss_selberg_sum(3, 1)[2]
    assert gauss_selberg_sum(5, 2)[2]
    with pytest.raises(HypothesisError):
        gauss_selberg_sum(3, 2)


@pytest.mark.parametrize("N", range(2, 11))
def test_selberg_reproduces_gauss(N):
    assert gauss_from_selberg(N) == classical_gauss(N)[0]
