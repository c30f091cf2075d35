from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmds import codecore as cc
from lmds.errors import CapExceededError, CodeError, ConsistencyError
from lmds.gf import field_new

from conftest import EXAMPLE, brute_codewords, brute_distribution, make, random_codes

EX_A = (1, 0, 0, 10, 18, 54, 76, 54, 18, 12)
EX_B = (1, 0, 0, 0, 14, 8, 26, 22, 10, 0)


def ghw_brute(C, r):
    """Smallest support of an r-dimensional subcode, over all r-tuples of codewords."""
    F = C.field
    words = [w for w in brute_codewords(C) if w.any()]
    best = None
    for combo in combinations(words, r):
        M = np.array(combo)
        if cc.rank(F, M) < r:
            continue
        s = int(np.count_nonzero(M.any(axis=0)))
        best = s if best is None else min(best, s)
    return best


# -- construction -------------------------------------------------------------


def test_example_code_parameters(example_code):
    assert (example_code.n, example_code.k) == (9, 5)


def test_identity_is_full_space():
    C = make(["100", "010", "001"])
    assert (C.n, C.k) == (3, 3)


def test_duplicate_rows_reduce():
    C = make(["110", "110"])
    assert (C.n, C.k) == (3, 1)


@pytest.mark.parametrize("rows", [["000"], ["10", "101"], [[0, 2]]])
def test_bad_rows(rows):
    with pytest.raises(CodeError):
        make(rows)


@given(C=random_codes(max_n=7), data=st.data())
def test_rref_canonical_under_row_operations(C, data):
    F = C.field
    G = np.asarray(C.gen)
    perm = data.draw(st.permutations(range(C.k)))
    c = data.draw(st.integers(1, F.q - 1))
    M = G[list(perm)].copy()
    M[0] = F.mul(c, M[0])
    if C.k > 1:
        M[1] = F.add(M[1], M[0])
    assert cc.code_from_rows(F, M) == C


# -- duals --------------------------------------------------------------------


def test_hamming_dual_is_simplex(hamming):
    D = cc.dual(hamming)
    assert (D.n, D.k) == (7, 3)
    assert np.all(cc.matmul(hamming.field, hamming.gen, D.gen.T) == 0)
    assert cc.weight_distribution(D).counts == (1, 0, 0, 0, 7, 0, 0, 0)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_even_weight_dual_is_repetition(n):
    rows = [[1 if j in (0, i) else 0 for j in range(n)] for i in range(1, n)]
    D = cc.dual(make(rows))
    assert D.rows() == [[1] * n]


def test_example_dual_parameters(example_code):
    D = cc.dual(example_code)
    assert (D.n, D.k, cc.minimum_distance(D)) == (9, 4, 4)


def test_full_space_dual_rejected():
    with pytest.raises(CodeError):
        cc.dual(make(["10", "01"]))


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2), (5, 1), (2, 3)), max_n=7))
def test_dual_orthogonal_and_involutive(C):
    D = cc.dual(C)
    assert D.k == C.n - C.k
    assert np.all(cc.matmul(C.field, C.gen, D.gen.T) == 0)
    fresh = cc.code_from_rows(D.field, D.gen)
    assert cc.dual(fresh) == C


def test_galois_dual_e0_is_euclidean(example_code):
    assert cc.galois_dual(example_code, 0) == cc.dual(example_code)


@given(C=random_codes(fields=((2, 2),), max_n=6))
def test_hermitian_dual_parameters(C):
    H = cc.galois_dual(C, 1)
    E = cc.dual(C)
    assert H.k == E.k
    assert cc.minimum_distance(H) == cc.minimum_distance(E)
    # orthogonality under the twisted product
    F = C.field
    assert np.all(cc.matmul(F, C.gen, F.frobenius(H.gen, 1).T) == 0)


@given(C=random_codes(fields=((2, 3),), max_n=6))
def test_gf8_galois_duals_share_distribution(C):
    e1, e2 = cc.galois_dual(C, 1), cc.galois_dual(C, 2)
    assert brute_distribution(e1) == brute_distribution(e2) == brute_distribution(cc.dual(C))


# -- distributions --------------------------------------------------------------


def test_example_distributions(example_code):
    A, B = cc.distributions(example_code)
    assert A.counts == EX_A and B.counts == EX_B
    assert A.polynomial() == "1+10z^3+18z^4+54z^5+76z^6+54z^7+18z^8+12z^9"
    assert cc.macwilliams(A, 3, 5).counts == EX_B


def test_repetition_distribution():
    assert cc.weight_distribution(make(["111"])).counts == (1, 0, 0, 1)


def test_macwilliams_hamming_to_simplex(hamming):
    A = cc.WeightDistribution(7, (1, 0, 0, 7, 7, 0, 0, 1))
    assert cc.macwilliams(A, 2, 4).counts == brute_distribution(cc.dual(hamming))


@pytest.mark.parametrize("q,n", [(2, 4), (3, 3), (4, 2)])
def test_macwilliams_full_space(q, n):
    from math import comb

    A = cc.WeightDistribution(n, tuple(comb(n, i) * (q - 1) ** i for i in range(n + 1)))
    assert cc.macwilliams(A, q, n).counts == (1,) + (0,) * n


def test_macwilliams_rejects_inconsistent_total():
    with pytest.raises(CodeError):
        cc.macwilliams(cc.WeightDistribution(3, (1, 0, 0, 2)), 2, 1)
    with pytest.raises(ConsistencyError):
        cc.macwilliams(cc.WeightDistribution(3, (1, 0, 0, 3)), 2, 2)


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2), (2, 3)), max_n=7))
def test_distributions_match_brute_force_and_involution(C):
    A, B = cc.distributions(C)
    assert A.counts == brute_distribution(C)
    assert B.counts == brute_distribution(cc.code_from_rows(C.field, cc.dual(C).gen))
    assert A.total == C.q**C.k and A[0] == 1
    assert cc.macwilliams(cc.macwilliams(A, C.field, C.k), C.field, C.n - C.k).counts == A.counts


def test_cap_exceeded():
    F = field_new(2, 4)
    rng = np.random.default_rng(1)
    C = cc.code_from_rows(F, rng.integers(0, 16, size=(6, 12)))
    with pytest.raises(CapExceededError):
        cc.distributions(C, cap=1000)
    # a larger cap lets the same code through
    assert cc.distributions(C, cap=1 << 24)[0].total == 16**C.k


def test_full_space_distribution():
    C = make(["100", "010", "001"], p=3)
    A, B = cc.distributions(C)
    assert A.counts == (1, 6, 12, 8) and B.counts == (1, 0, 0, 0)
    assert cc.dual_distance(C) == 4


# -- classification ------------------------------------------------------------


def test_classify_examples(example_code, hamming):
    r = cc.classify(example_code)
    assert (r.defect, r.dual_defect, r.verdict) == (2, 2, "2-MDS")
    assert cc.classify(hamming).verdict == "1-MDS"
    rep = cc.classify(make(["111"]))
    assert (rep.defect, rep.dual_defect, rep.verdict) == (0, 0, "MDS")


def test_not_lmds_verdict():
    # defects 2 and 1
    r = cc.classify(make(["1110", "0001"]))
    assert (r.defect, r.dual_defect) == (2, 1)
    assert r.ell is None and r.verdict == "not-l-MDS"


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2)), max_n=8))
def test_classify_invariants(C):
    r = cc.classify(C)
    assert r.defect >= 0 and r.dual_defect >= 0
    assert (r.verdict != "not-l-MDS") == (r.defect == r.dual_defect)


# -- generalized Hamming weights ----------------------------------------------


def test_simplex_ghw(hamming):
    S = cc.dual(hamming)
    prof = cc.ghw_profile(S)
    assert prof.weights == (4, 6, 7)
    assert [ghw_brute(S, r) for r in (1, 2, 3)] == [4, 6, 7]


def test_example_ghw(example_code):
    assert cc.ghw_profile(example_code).weights == (3, 5, 7, 8, 9)


def test_ghw_cap():
    with pytest.raises(CapExceededError):
        cc.ghw_profile(make(["1" * 12]), cap=1000)


@given(C=random_codes(fields=((2, 1), (3, 1)), max_n=6))
def test_ghw_properties(C):
    prof = cc.ghw_profile(C).weights
    n, k = C.n, C.k
    assert list(prof) == sorted(set(prof)) and len(prof) == k
    assert prof[0] == cc.minimum_distance(C)
    assert all(prof[r - 1] <= n - k + r for r in range(1, k + 1))
    assert all(ghw_brute(C, r) == prof[r - 1] for r in range(1, min(k, 2) + 1))
    dual_prof = cc.ghw_profile(cc.dual(C)).weights
    assert sorted(list(prof) + [n + 1 - w for w in dual_prof]) == list(range(1, n + 1))


# -- coordinate operations ---------------------------------------------------


@given(C=random_codes(max_n=7), data=st.data())
def test_puncture_and_shorten_are_projections(C, data):
    i = data.draw(st.integers(0, C.n - 1))
    P = cc.puncture(C, i) if np.asarray(C.gen)[:, [j for j in range(C.n) if j != i]].any() else None
    words = list(brute_codewords(C))
    if P is not None:
        want = {tuple(np.delete(w, i)) for w in words}
        assert {tuple(w) for w in brute_codewords(P)} == want
    try:
        S = cc.shorten(C, i)
    except CodeError:
        assert sum(1 for w in words if w[i] == 0) == 1
        return
    want = {tuple(np.delete(w, i)) for w in words if w[i] == 0}
    assert {tuple(w) for w in brute_codewords(S)} == want


def test_puncture_shorten_witnesses(example_code):
    pun, sho = cc.puncture_shorten_witnesses(example_code, 2)
    for i in pun:
        assert cc.classify(cc.puncture(example_code, i)).is_lmds(2)
    for i in sho:
        assert cc.classify(cc.shorten(example_code, i)).is_lmds(2)


# -- supports ----------------------------------------------------------------


def test_min_weight_supports_hamming(hamming):
    blocks = cc.min_weight_supports(hamming)
    assert len(blocks) == 7 and all(len(b) == 3 for b in blocks)


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2)), max_n=7))
def test_min_weight_supports_match_brute_force(C):
    d = cc.minimum_distance(C)
    want = sorted({tuple(int(j) + 1 for j in np.nonzero(w)[0]) for w in brute_codewords(C)
                   if np.count_nonzero(w) == d})
    assert cc.min_weight_supports(C) == want


def test_mask_to_support():
    assert cc.mask_to_support(0b1011) == (1, 2, 4)


# -- file format ---------------------------------------------------------------


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2), (2, 3), (3, 2)), max_n=8))
def test_format_round_trip(C):
    assert cc.parse_code(cc.format_code(C)) == C


def test_packed_rows_and_modulus_forms(tmp_path):
    text = "field 3^1\n9 5\n" + "\n".join(EXAMPLE) + "\n"
    C = cc.parse_code(text)
    assert C == make(EXAMPLE, p=3)
    F8 = cc.parse_code("field 2^3 1,1,0,1\n2 1\n1 5\n").field
    assert F8.modulus == (1, 1, 0, 1) and cc.is_default_modulus(F8)
    p = tmp_path / "c.txt"
    cc.write_code(C, p)
    assert cc.read_code(p) == C


@pytest.mark.parametrize("text", [
    "", "field 2\n", "fld 2\n1 1\n1\n", "field 2\n2 2\n11\n",
    "field 2\nx y\n", "field 2 basis 1,1\n1 1\n1\n", "field 2\n3 1\n12\n",
])
def test_parse_errors(text):
    with pytest.raises(CodeError):
        cc.parse_code(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(CodeError):
        cc.read_code(tmp_path / "missing.txt")
