"""
Acceptance suite.  Each criterion prints one line

    CRITERION <n> PASS|FAIL  <summary>  (<seconds>s, limit <seconds>s)

and asserts both the identity and the runtime bound.  Run directly with
``python tests/test_acceptance.py`` or through pytest (the lines are also
collected into the terminal summary).
"""

import time
from fractions import Fraction

import pytest

from daha.aweyl import weights_up_to_length
from daha.cli import norm_check
from daha.fourier import gauss_integral_check, jackson_sum_eta
from daha.macdonald import spherical_value, verify_duality
from daha.perfect import (build_negative_sector, build_root_of_unity_sector, check_gaussian,
                          check_positivity, check_psi_epsilon, check_relations, check_spectra,
                          check_stabilizer, check_transforms, classical_gauss,
                          gauss_from_selberg, gauss_selberg_sum)
from daha.polyrep import check_relations as poly_relations
from daha.polyrep import consterm_product, monomials_up_to, mu_series
from daha.rootsys import Params, build_root_datum

RESULTS = []


def report(n, ok, summary, elapsed, limit):
    ok = ok and elapsed < limit
    line = "CRITERION %2d %s  %s  (%.1fs, limit %ds)" % (n, "PASS" if ok else "FAIL", summary,
                                                        elapsed, limit)
    print(line)
    RESULTS.append(line)
    return ok


def criterion_1():
    start = time.time()
    bad = [N for N in range(1, 13) if not classical_gauss(N)[2]]
    return report(1, not bad, "classical Gauss sums N=1..12 exact; failures %s" % bad,
                  time.time() - start, 1)


def criterion_2():
    start = time.time()
    bad = []
    count = 0
    for N in range(1, 13):
        for k in range(1, N // 2 + 1):
            count += 1
            if not gauss_selberg_sum(N, k)[2]:
                bad.append((N, k))
        if N >= 2 and gauss_from_selberg(N) != classical_gauss(N)[0]:
            bad.append((N, "k=[N/2]"))
    return report(2, not bad, "Gauss-Selberg sums, %d (N,k) pairs plus k=[N/2]; failures %s"
                  % (count, bad), time.time() - start, 5)


def criterion_3():
    start = time.time()
    bad = []
    for label, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        P = Params(build_root_datum(label, rank))
        ct = mu_series(P, 20).constant_term()
        d = ct.first_difference(consterm_product(P, 20))
        if d is not None:
            bad.append((label + str(rank), d))
    return report(3, not bad, "constant term vs product, A1 A2 B2 G2 formal t, order 20; "
                  "failures %s" % bad, time.time() - start, 120)


WINDOWS = [("A", 1, 6), ("A", 2, 6), ("B", 2, 4)]


def criterion_4():
    start = time.time()
    bad = []
    count = 0
    for label, rank, L in WINDOWS:
        P = Params(build_root_datum(label, rank))
        for b in weights_up_to_length(P.datum, L):
            count += 1
            direct, product = spherical_value(P, b)
            if direct != product:
                bad.append((label + str(rank), b))
    return report(4, not bad, "evaluation formula on %d weights; failures %s" % (count, bad),
                  time.time() - start, 300)


def criterion_5():
    start = time.time()
    bad = []
    pairs = norms = 0
    for label, rank, L in WINDOWS:
        P = Params(build_root_datum(label, rank))
        ws = weights_up_to_length(P.datum, L)
        for i, b in enumerate(ws):
            for c in ws[i:]:
                pairs += 1
                if not verify_duality(P, b, c)[0]:
                    bad.append(("duality", label + str(rank), b, c))
        mu = mu_series(P, 20)
        for b in ws:
            norms += 1
            d = norm_check(P, b, 20, mu)
            if d is not None:
                bad.append(("norm", label + str(rank), b, d))
    return report(5, not bad, "duality on %d pairs, norms vs pairing on %d weights at order 20; "
                  "failures %s" % (pairs, norms, bad), time.time() - start, 600)


RELATION_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("G", 2)]


def criterion_6():
    start = time.time()
    bad = []
    count = 0
    for label, rank in RELATION_TYPES:
        P = Params(build_root_datum(label, rank))
        res = poly_relations(P, monomials_up_to(P.datum, 3))
        count += len(res)
        bad += [(label + str(rank), name, m) for name, m in res.items() if m is not None]
    return report(6, not bad, "%d relations on monomials of degree <= 3, %d root systems; "
                  "failures %s" % (count, len(RELATION_TYPES), bad), time.time() - start, 300)


def criterion_7():
    start = time.time()
    P = Params(build_root_datum("A", 1))
    ws = [(0,), (1,), (-1,)]
    bad = []
    const_ok = True
    for b in ws:
        for c in ws:
            res = gauss_integral_check(P, b, c, 20)
            if not res["identity"]:
                bad.append((b, c))
            const_ok = const_ok and res["constant_ok"]
    return report(7, not bad and const_ok, "Gauss integral on 9 pairs, order 20; master constant "
                  "%s; failures %s" % ("ok" if const_ok else "FAILS", bad), time.time() - start, 120)


def criterion_8():
    start = time.time()
    bad = []
    for label, rank, lat, k in [("A", 1, "P", Fraction(-1, 2)), ("A", 2, "Q", Fraction(-1, 3))]:
        P = Params(build_root_datum(label, rank, lat), k)
        res = jackson_sum_eta(P, 30)
        if not (res["equal"] and res["support_ok"]):
            bad.append((label + str(rank), res["equal"], len(res["mu_support"]), res["pi_flat"]))
    return report(8, not bad, "eta-identity A1 k=-1/2 and A2(Q) k=-1/3 to order 30, "
                  "mu-support = |Pi|, values 1; failures %s" % bad, time.time() - start, 120)


NEGATIVE = [("A", 1, "P", 1, 1), ("A", 1, "P", 3, 3), ("A", 1, "P", 5, 5), ("A", 2, "Q", 2, 4)]
ROOTS_OF_UNITY = [(4, 1), (5, 1), (5, 2)]


def _negative_reps():
    for label, rank, lat, e, dim in NEGATIVE:
        yield "%s%d/%s e=%d" % (label, rank, lat, e), build_negative_sector(label, rank, e, lat), dim


def _unity_reps():
    for N, k in ROOTS_OF_UNITY:
        yield "A1 N=%d k=%d" % (N, k), build_root_of_unity_sector("A", 1, N, k), 2 * (N - 2 * k)


def criterion_9():
    start = time.time()
    bad = []
    for name, rep, dim in _negative_reps():
        checks = {
            "dimension": rep.dim == dim,
            "relations": all(check_relations(rep).values()),
            "spectra": all(check_spectra(rep).values()),
            "stabilizer": all(s["mu_one"] and s["gaussian_one"] for s in check_stabilizer(rep)),
            "gaussian": all(check_gaussian(rep).values()),
        }
        bad += [(name, k) for k, v in checks.items() if not v]
    for name, rep, dim in _unity_reps():
        N = int(name.split("N=")[1].split()[0])
        checks = {
            "dimension": rep.dim == dim,
            "field": rep.field.M == 4 * N,
            "relations": all(check_relations(rep).values()),
            "psi induces epsilon": all(check_psi_epsilon(rep).values()),
            "positivity": check_positivity(rep)["positive"],
        }
        bad += [(name, k) for k, v in checks.items() if not v]
    return report(9, not bad, "perfect representations, 4 negative and 3 root-of-unity; "
                  "failures %s" % bad, time.time() - start, 300)


def criterion_10():
    start = time.time()
    bad = []
    for name, rep, _ in list(_negative_reps()) + list(_unity_reps()):
        bad += [(name, k) for k, v in check_transforms(rep).items() if not v]
    return report(10, not bad, "psi/phi round trips, inversion and Plancherel on 7 "
                   "representations; failures %s" % bad, time.time() - start, 60)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=["criterion_%d" % (i + 1) for i in range(10)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print("%d/%d criteria pass" % (sum(results), len(results)))
