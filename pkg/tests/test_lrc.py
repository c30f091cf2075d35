import numpy as np
import pytest
from hypothesis import given

from lmds import codecore as cc
from lmds.ckfamily import build_ck
from lmds.errors import CodeError
from lmds.gf import field_new
from lmds.lrc import (
    cm_check,
    cm_label,
    cm_surrogate,
    coordinate_localities,
    locality,
    singleton_like,
)

from conftest import brute_codewords, make, random_codes

F8 = field_new(2, 3)


def brute_localities(C):
    """Lightest dual codeword through each coordinate, minus one."""
    D = cc.code_from_rows(C.field, cc.dual(C).gen)
    best = [None] * C.n
    for w in brute_codewords(D):
        wt = int(np.count_nonzero(w))
        for i in np.nonzero(w)[0]:
            if best[i] is None or wt - 1 < best[i]:
                best[i] = wt - 1
    return tuple(best)


def test_c4_and_dual_localities():
    C = build_ck(F8, 4).code
    rep = locality(C)
    assert rep.r == 3 and rep.k_optimal and rep.d_optimal
    drep = locality(cc.dual(C))
    assert drep.r == 2 and drep.k_optimal and drep.d_optimal


def test_repetition_locality():
    rep = locality(make(["111"]))
    assert rep.r == 1 and rep.per_coord == (1, 1, 1)
    assert rep.k_optimal


def test_singleton_like_examples():
    s = singleton_like(7, 4, 3, 3)
    assert (s.bound, s.status) == (3, "equality")
    s = singleton_like(7, 3, 4, 3)
    assert (s.bound, s.slack, s.status) == (5, 1, "slack 1")
    assert singleton_like(7, 4, 4, 3).status == "violated"
    with pytest.raises(CodeError):
        singleton_like(7, 4, 3, 0)


def test_cm_examples():
    c = cm_check(7, 4, 3, 8, 3)
    assert (c.bound, c.slack) == (4, 0) and cm_label(c) == "k-optimal"
    assert cm_check(3, 1, 3, 2, 1).bound == 1
    assert cm_label(cm_check(7, 3, 3, 2, 2)) == "not certified"


def test_cm_surrogate_brute():
    for n in range(2, 15):
        for d in range(1, n + 1):
            for r in range(1, n):
                terms = [r * t + max(0, n - t * (r + 1) - d + 1) for t in range(1, n + 2)]
                assert cm_surrogate(n, d, r) == min(terms)


@pytest.mark.parametrize("q", [8, 16])
def test_ck_grid_localities(q):
    F = field_new(2, q.bit_length() - 1)
    for k in range(3, q - 3):
        C = build_ck(F, k).code
        rep = locality(C, cap=1 << 28)
        assert rep.per_coord == (k - 1,) * (q - 1)
        assert rep.k_optimal and rep.d_optimal
        drep = locality(cc.dual(C), cap=1 << 28)
        assert drep.r == q - k - 2 and drep.k_optimal and drep.d_optimal


@given(C=random_codes(fields=((2, 1), (3, 1), (2, 2)), max_n=7))
def test_localities_match_dual_codewords(C):
    G = np.asarray(C.gen)
    if np.any(np.all(G == 0, axis=0)) or None in brute_localities(C):
        with pytest.raises(CodeError):
            coordinate_localities(C)
        return
    per = coordinate_localities(C)
    assert per == brute_localities(C)
    rep = locality(C)
    assert 1 <= rep.r <= C.n - 1
    assert rep.d_optimal == (singleton_like(C.n, C.k, rep.d, rep.r).slack == 0)


def test_full_space_rejected():
    with pytest.raises(CodeError):
        locality(make(["10", "01"]))
