"""Shared fixtures and brute-force oracles.

The oracles avoid the enumeration kernels: codewords are produced by
explicit message-times-generator products over every message.
"""

from itertools import product

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from lmds import codecore as cc
from lmds.gf import field_new

settings.register_profile("lmds", deadline=None, max_examples=60)
settings.load_profile("lmds")


def brute_codewords(code):
    F, G = code.field, np.asarray(code.gen)
    for msg in product(range(F.q), repeat=code.k):
        w = np.zeros(code.n, dtype=np.int64)
        for c, row in zip(msg, G):
            w = F.add(w, F.mul(c, row))
        yield w


def brute_distribution(code):
    counts = [0] * (code.n + 1)
    for w in brute_codewords(code):
        counts[int(np.count_nonzero(w))] += 1
    return tuple(counts)


def make(rows, p=2, h=1):
    F = field_new(p, h)
    if isinstance(rows[0], str):
        rows = [[int(c) for c in r] for r in rows]
    return cc.code_from_rows(F, rows)


HAMMING = ["1101000", "0110100", "0011010", "0001101"]
EXAMPLE = ["100000112", "010002110", "001001200", "000100021", "000011111"]


@pytest.fixture
def hamming():
    return make(HAMMING)


@pytest.fixture
def example_code():
    return make(EXAMPLE, p=3)


@st.composite
def random_codes(draw, fields=((2, 1), (3, 1), (2, 2)), min_n=2, max_n=8, proper=True):
    """Random codes; ``proper`` keeps 1 <= k < n."""
    p, h = draw(st.sampled_from(fields))
    F = field_new(p, h)
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n - 1 if proper else n))
    rows = draw(
        st.lists(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n), min_size=k, max_size=k)
    )
    if not any(any(r) for r in rows):
        rows[0][0] = 1
    C = cc.code_from_rows(F, rows)
    if proper and C.k == C.n:
        C = cc.code_from_rows(F, [list(r) for r in np.asarray(C.gen)[:-1]])
    return C


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
