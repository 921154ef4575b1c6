import random
from fractions import Fraction
from pathlib import Path

import pytest

from daha.aweyl import (AffineElement, affine_simple_root, arrows_from, dump_line,
                        elements_up_to_length, from_word, is_positive_affine, lambda_prime,
                        pi_decomposition, pi_element, pi_length, reduced_words,
                        simple_reflection, succ_compare, weights_up_to_length)
from daha.rootsys import build_root_datum

GOLDEN = Path(__file__).parent / "golden"


def brute_lambda(x, span=12):
    """Positive affine roots [alpha, c] with x[alpha, c] negative, by enumeration."""
    R = x.datum
    out = set()
    for alpha in R.roots:
        nu = R.nu(alpha)
        for j in range(-span, span + 1):
            root = (alpha, Fraction(nu * j))
            if is_positive_affine(R, root) and not is_positive_affine(R, x.act_root(root)):
                out.add(root)
    return out


def test_s1_squared():
    R = build_root_datum("A", 1)
    s1 = simple_reflection(R, 0)
    assert (s1 * s1).is_identity()


def test_pi_squared_a1():
    R = build_root_datum("A", 1)
    p = pi_element(R, 0)
    rng = random.Random(3)
    for _ in range(20):
        z = (Fraction(rng.randint(-40, 40), rng.randint(1, 9)),)
        assert (p * p).act(z) == p.act(p.act(z))
    assert (p * p).is_identity()


@pytest.mark.parametrize("label,rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_lambda_matches_enumeration(label, rank):
    R = build_root_datum(label, rank)
    for x in elements_up_to_length(R, 4):
        assert set(x.lambda_set()) == brute_lambda(x)


def test_lambda_of_translations_a1():
    R = build_root_datum("A", 1)
    assert set(AffineElement.translation(R, (-1,)).lambda_set()) == {affine_simple_root(R, -1)}
    assert set(AffineElement.translation(R, (1,)).lambda_set()) == {affine_simple_root(R, 0)}


def test_reduced_word_round_trip():
    R = build_root_datum("B", 2)
    for x in elements_up_to_length(R, 5):
        r, word = x.reduced_word()
        assert len(word) == x.length()
        assert from_word(R, r, word) == x


def test_all_reduced_words_agree():
    R = build_root_datum("A", 2)
    x = AffineElement.translation(R, (1, 1))
    words = reduced_words(x)
    assert len(words) == 2
    for r, w in words:
        assert from_word(R, r, w) == x


def test_pi_decomposition_a1():
    R = build_root_datum("A", 1)
    pib, u = pi_decomposition(R, (0,))
    assert pib.is_identity() and u == R.identity
    pib, u = pi_decomposition(R, (1,))
    assert pib == pi_element(R, 0) and u == R.s(0) and pib.length() == 0
    pib, u = pi_decomposition(R, (-1,))
    assert pib == AffineElement.translation(R, (-1,)) and u == R.identity


def test_pi_b_maps_zero_to_b():
    R = build_root_datum("C", 2)
    for b in weights_up_to_length(R, 4):
        pib, u = pi_decomposition(R, b)
        assert pib.act((0,) * R.rank) == b
        assert pib.length() == pi_length(R, b)


def test_order_a2():
    R = build_root_datum("A", 2)
    assert succ_compare(R, (1, 0), (1, 0)) == "b=c"
    assert succ_compare(R, (1, 0), (0, 1)) == "incomparable"
    # same orbit: b_- = c_-, compared by Q_+
    assert succ_compare(R, (0, -1), (1, 0)) == "b<c"


def test_arrows_raise_length():
    R = build_root_datum("A", 2)
    for c in weights_up_to_length(R, 3):
        for kind, i, b in arrows_from(R, c):
            if kind == "s":
                assert pi_length(R, b) == pi_length(R, c) + 1
            else:
                assert pi_length(R, b) == pi_length(R, c)


def test_arrows_a1_origin():
    R = build_root_datum("A", 1)
    kinds = {(k, i) for k, i, _ in arrows_from(R, (0,))}
    assert kinds == {("s", -1), ("pi", 0)}
    # (alpha_1^vee, c + d) = 0 at c = 0: no s_1 arrow
    assert ("s", 0) not in kinds


def test_lambda_prime_sizes():
    R = build_root_datum("A", 1)
    assert lambda_prime(R, (1,)) == []
    assert lambda_prime(R, (-1,)) == [(R.simple_roots[0], 1)]
    assert len(lambda_prime(R, (-2,))) == 2


def test_weights_window_sorted_by_length():
    R = build_root_datum("A", 2)
    ws = weights_up_to_length(R, 2)
    assert ws[0] == (0, 0)
    assert [pi_length(R, b) for b in ws] == sorted(pi_length(R, b) for b in ws)
    assert len(ws) == 12


def test_dump_lambda_golden():
    R = build_root_datum("A", 1)
    lines = [dump_line(AffineElement.translation(R, b)) for b in R.lattice_points(3)]
    assert lines == (GOLDEN / "lambda_A1_bound3.txt").read_text().splitlines()
