from collections import Counter
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmds import codecore as cc
from lmds.ckfamily import build_ck
from lmds.designs import (
    check_design,
    complementary_params,
    design_params_from_count,
    min_weight_design,
    supports_at_weight,
)
from lmds.errors import ConsistencyError, InputError
from lmds.gf import field_new

from conftest import brute_codewords, make, random_codes

FANO = sorted(tuple(sorted(((i + s) % 7) + 1 for s in (0, 1, 3))) for i in range(7))


def test_hamming_weight3_supports_are_fano_lines(hamming):
    bm = supports_at_weight(hamming, 3)
    assert sorted(bm.blocks) == FANO
    assert bm.distinct == 7 and len(bm) == 7


def test_repetition_single_block():
    bm = supports_at_weight(make(["111"]), 3)
    assert bm.blocks == ((1, 2, 3),)


def test_c4_q8_min_weight_blocks():
    bm = supports_at_weight(build_ck(field_new(2, 3), 4).code, 3)
    assert len(bm) == 7 and set(bm.counts().values()) == {1}


def test_fano_design():
    des = check_design(FANO, 7, 2)
    assert (des.t, des.lam, des.b, des.name) == (2, 1, 7, "2-(7,3,1)")


def test_c4_q8_design():
    des = min_weight_design(build_ck(field_new(2, 3), 4).code)
    assert des.name == "2-(7,3,1)"


def test_mds_blocks_form_complete_design():
    C = build_ck(field_new(2, 3), 6).code
    des = min_weight_design(C)
    assert des.b == comb(7, 2) and des.lam == 1
    assert sorted(des.blocks) == list(combinations(range(1, 8), 2))


def test_non_design():
    assert check_design([(1, 2), (2, 3)], 3, 2) is None
    assert check_design([(1, 2), (1, 3)], 3, 1) is None
    assert check_design([], 3, 1) is None


def test_check_design_errors():
    with pytest.raises(InputError):
        check_design([(1, 2), (1, 2, 3)], 3, 1)
    with pytest.raises(InputError):
        check_design([(1, 2)], 3, 3)
    with pytest.raises(InputError):
        check_design([(1, 5)], 3, 1)


def test_complementary_params():
    assert complementary_params(2, 7, 3, 1) == 2
    assert complementary_params(2, 7, 3, 0) == 0
    with pytest.raises(ConsistencyError):
        complementary_params(2, 7, 4, 1)


def test_complementary_params_against_complement_blocks():
    comp = [tuple(sorted(set(range(1, 8)) - set(b))) for b in FANO]
    assert check_design(comp, 7, 2).lam == complementary_params(2, 7, 3, 1)


def test_design_params_from_count():
    assert design_params_from_count(7, 3, 2, 7, 2) == (7, 1)
    with pytest.raises(ConsistencyError):
        design_params_from_count(7, 3, 2, 7, 3)


@given(st.permutations(range(1, 8)))
def test_design_permutation_invariant(perm):
    relabel = [tuple(perm[x - 1] for x in b) for b in FANO]
    a, b = check_design(FANO, 7, 2), check_design(relabel, 7, 2)
    assert (a.t, a.lam, a.b) == (b.t, b.lam, b.b)


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2)), max_n=7))
def test_supports_at_every_weight_match_brute_force(C):
    A = cc.weight_distribution(C)
    words = Counter(tuple(int(j) + 1 for j in np.nonzero(w)[0]) for w in brute_codewords(C) if w.any())
    for w in range(1, C.n + 1):
        if not A[w]:
            with pytest.raises(InputError):
                supports_at_weight(C, w)
            continue
        bm = supports_at_weight(C, w)
        want = Counter()
        for s, c in words.items():
            if len(s) == w:
                want[s] = c // (C.q - 1)
        assert bm.counts() == want
        des = check_design(bm.blocks, C.n, 1)
        if des is not None:
            assert des.b * w == des.lam * C.n
