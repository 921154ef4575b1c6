from fractions import Fraction

import pytest

from daha.rootsys import (KScalar, KVec, Params, RootDatumError, build_root_datum,
                          extreme_roots, is_strongly_extreme)


@pytest.mark.parametrize("label,rank,npos,order", [
    ("A", 1, 1, 2), ("A", 2, 3, 6), ("A", 3, 6, 24), ("B", 2, 4, 8), ("B", 3, 9, 48),
    ("C", 3, 9, 48), ("D", 4, 12, 192), ("G", 2, 6, 12), ("F", 4, 24, 1152),
])
def test_root_counts_and_weyl_order(label, rank, npos, order):
    R = build_root_datum(label, rank)
    assert len(R.positive_roots) == npos
    assert len(R.weyl_group) == order
    assert R.length(R.w0) == npos


def test_rank_one_data():
    R = build_root_datum("A", 1)
    assert R.rank == 1
    assert R.theta == R.simple_roots[0]
    assert R.O_prime == (0,)


def test_g2_data():
    R = build_root_datum("G", 2, "Q")
    assert R.nu_lng == 3
    assert R.to_alpha(R.theta) == (2, 1)
    assert R.O_prime == ()
    short = [a for a in R.positive_roots if not R.is_long(a)]
    assert len(short) == 3


def test_a2_positive_roots():
    R = build_root_datum("A", 2)
    assert sorted(R.to_alpha(a) for a in R.positive_roots) == [(0, 1), (1, 0), (1, 1)]


def test_short_roots_have_norm_two():
    for label, rank in [("B", 3), ("C", 3), ("G", 2), ("F", 4)]:
        R = build_root_datum(label, rank)
        for a in R.positive_roots:
            assert R.pair(a, a) == (2 if not R.is_long(a) else 2 * R.nu_lng)


def test_unsupported_types():
    for args in [("E", 8), ("A", 0), ("G", 3)]:
        with pytest.raises(RootDatumError):
            build_root_datum(*args)


def test_extreme_roots_a2():
    R = build_root_datum("A", 2)
    ext = extreme_roots(R)
    assert [R.to_alpha(a) for a, _ in ext] == [(1, 1)]
    assert ext[0][1] == KScalar(0, 3, 0)


def test_extreme_roots_b2():
    R = build_root_datum("B", 2)
    ext = {R.to_alpha(a): h for a, h in extreme_roots(R)}
    # eps_2 = alpha_2 and eps_1 = alpha_1 + alpha_2
    assert ext == {(0, 1): KScalar(0, 2, 0), (1, 1): KScalar(0, 2, 2)}


def test_extreme_roots_c3():
    R = build_root_datum("C", 3)
    ext = {R.to_alpha(a): h for a, h in extreme_roots(R)}
    assert ext == {(1, 2, 1): KScalar(0, 4, 2), (1, 1, 0): KScalar(0, 3, 0)}
    # theta is the maximal short root eps_1 + eps_2
    assert R.to_alpha(R.theta) == (1, 2, 1)


def test_extreme_roots_b2_equal_k():
    R = build_root_datum("B", 2)
    ext = extreme_roots(R, "k_lng=k_sht")
    strong = [a for a, _ in ext if is_strongly_extreme(R, a)]
    assert strong == [R.theta] or [R.to_alpha(a) for a, _ in ext] == [R.to_alpha(R.theta)]


def test_w0_and_orbits():
    R = build_root_datum("A", 2)
    assert R.w0((1, 0)) == (0, -1)
    assert sorted(R.orbit((1, 0))) == [(-1, 1), (0, -1), (1, 0)]
    bm, u = R.antidominant((1, 0))
    assert bm == (0, -1) and u((1, 0)) == bm


def test_json_round_fields():
    d = build_root_datum("A", 2).to_json()
    assert d["schema"] == 1
    assert d["cartan"] == [[2, -1], [-1, 2]]
    assert d["theta"] == [1, 1]


def test_params_formal_and_special():
    R = build_root_datum("A", 1)
    P = Params(R)
    assert P.formal and P.grid == 4
    assert P.rho_k == KVec((0,), (1,), (0,))
    S = Params(R, Fraction(-1, 2))
    assert not S.formal
    assert S.rho_k == KVec((Fraction(-1, 2),))
    with pytest.raises(ValueError):
        Params(R, grid=6)


def test_qpow_grid():
    R = build_root_datum("A", 1)
    P = Params(R)
    assert P.qpow(KScalar(Fraction(1, 4))).to_string() == "v"
    with pytest.raises(ValueError):
        P.qpow(KScalar(Fraction(1, 8)))


def test_kscalar_arithmetic():
    assert KScalar(1, 2, 3) + KScalar(1) == KScalar(2, 2, 3)
    assert KScalar(1, 2) * 3 == KScalar(3, 6)
