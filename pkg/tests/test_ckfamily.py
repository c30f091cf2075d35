import numpy as np
import pytest

from lmds import codecore as cc
from lmds.ckfamily import (
    build_ck,
    ck4_polynomial,
    ck7_polynomial,
    ck_design_lambdas,
    ck_enumerators,
    ck_lambda,
    ck_matrix,
    ck_min_weight_count,
    ck_verdict,
    zero_sum_verdict,
)
from lmds.designs import check_design, complementary_params
from lmds.errors import InputError
from lmds.gf import field_new
from lmds.subsetsum import count_restricted

from conftest import brute_distribution

F8, F16 = field_new(2, 3), field_new(2, 4)

# brute-force enumeration of all 8^4 messages
C4_Q8 = (1, 0, 0, 49, 49, 882, 1470, 1645)


def test_matrix_rows_are_skipped_powers():
    M = ck_matrix(F8, 4)
    cols = [F8.power_of_alpha(i) for i in range(1, 8)]
    for row, e in zip(M, (0, 1, 2, 4)):
        assert list(row) == [F8.pow(x, e) for x in cols]


@pytest.mark.parametrize("k,n_expected", [(3, 7), (6, 7)])
def test_build_sizes(k, n_expected):
    ck = build_ck(F8, k)
    assert (ck.code.n, ck.code.k, ck.n) == (n_expected, k, 7)
    assert ck.exponents == tuple(range(k - 1)) + (k,)


@pytest.mark.parametrize("F,k", [(F8, 2), (F8, 7), (field_new(3, 2), 3), (field_new(2, 2), 1)])
def test_build_errors(F, k):
    with pytest.raises(InputError):
        build_ck(F, k)


def test_verdict_examples():
    r = ck_verdict(build_ck(F8, 5))
    assert (r.verdict, r.d) == ("MDS", 3)
    assert ck_verdict(build_ck(F8, 6)).verdict == "MDS"
    r = ck_verdict(build_ck(F8, 4))
    assert (r.verdict, r.n, r.k, r.d) == ("1-MDS", 7, 4, 3)
    r = ck_verdict(build_ck(F16, 3))
    assert (r.verdict, r.d) == ("1-MDS", 12)


@pytest.mark.parametrize("F", [F8, F16], ids=lambda F: F.name)
def test_zero_sum_verdict_range(F):
    q = F.q
    for k in range(3, q - 1):
        assert zero_sum_verdict(F, k) == ("MDS" if k >= q - 3 else "1-MDS")


def test_c4_q8_enumerator():
    ck = build_ck(F8, 4)
    assert brute_distribution(ck.code) == C4_Q8
    assert ck_enumerators(F8, 4)[0].counts == C4_Q8
    assert ck4_polynomial(8).counts == C4_Q8
    assert ck_min_weight_count(F8, 4) == 49


@pytest.mark.parametrize("k", range(3, 5))
def test_closed_enumerators_match_enumeration_q8(k):
    ck = build_ck(F8, k)
    A, B = cc.distributions(ck.code)
    cA, cB = ck_enumerators(F8, k)
    assert cA.counts == A.counts and cB.counts == B.counts


@pytest.mark.parametrize("k", range(3, 13))
def test_closed_enumerators_match_enumeration_q16(k):
    A, B = cc.distributions(build_ck(F16, k).code, cap=1 << 28)
    cA, cB = ck_enumerators(F16, k)
    assert cA.counts == A.counts and cB.counts == B.counts


@pytest.mark.parametrize("q", [16, 32, 64, 128])
def test_explicit_polynomials_agree_with_general_formula(q):
    F = field_new(2, q.bit_length() - 1)
    assert ck4_polynomial(q).counts == ck_enumerators(F, 4)[0].counts
    assert ck7_polynomial(q).counts == ck_enumerators(F, 7)[0].counts
    for k in (4, 7):
        assert ck_design_lambdas(q, k) == ck_lambda(F, k)


@pytest.mark.parametrize("F", [F8, F16], ids=lambda F: F.name)
def test_lambda_matches_restricted_count_and_designs(F):
    q = F.q
    for k in range(3, q - 3):
        lam1, lam2 = ck_lambda(F, k)
        assert lam1 == count_restricted(F, k, 1, 2)
        assert lam2 == complementary_params(2, q - 1, k, lam1)
        ck = build_ck(F, k)
        D = cc.dual(ck.code)
        des = check_design(cc.min_weight_supports(D, cap=1 << 28), q - 1, 2)
        assert des is not None and (des.w, des.lam) == (k, lam1)
        des2 = check_design(cc.min_weight_supports(ck.code, cap=1 << 28), q - 1, 2)
        assert des2 is not None and (des2.w, des2.lam) == (q - k - 1, lam2)


def test_default_cap_blocks_q16_k7():
    from lmds.errors import CapExceededError

    with pytest.raises(CapExceededError):
        ck_verdict(build_ck(F16, 7))


def test_lambda_examples():
    assert ck_lambda(F8, 4) == (2, 1)
    assert ck_lambda(F8, 3)[0] == 1
    # supports of the dual at q=16, k=7 counted directly give 87
    assert ck_lambda(F16, 7) == (87, 116)
    with pytest.raises(InputError):
        ck_lambda(F8, 5)


def test_lambda_q16_k7_by_design_check():
    D = cc.dual(build_ck(F16, 7).code)
    des = check_design(cc.min_weight_supports(D, cap=1 << 28), 15, 2)
    assert des.lam == 87
