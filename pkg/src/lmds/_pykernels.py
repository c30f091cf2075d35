"""Numpy fallback for the compiled kernels; same signatures and results."""

from itertools import combinations, product

import numpy as np

# elements per vectorised block (words x coordinates)
_BLOCK = 1 << 21


def _adder(addt, use_xor):
    if use_xor:
        return np.bitwise_xor
    table = np.asarray(addt, dtype=np.int64)
    return lambda a, b: table[a, b]


def _span(rows, add, n):
    """All words sum(rows[l, d_l]) for digit tuples d."""
    words = np.zeros((1, n), dtype=np.int64)
    for r in rows:
        words = add(words[:, None, :], r[None, :, :]).reshape(-1, n)
    return words


def _split(mult, n):
    m, q = mult.shape[0], mult.shape[1]
    inner = 0
    while inner < m and q ** (inner + 1) * n <= _BLOCK:
        inner += 1
    inner = max(inner, 1) if m else 0
    return m - inner, inner


def _blocks(mult, addt, use_xor, base):
    mult = np.asarray(mult, dtype=np.int64)
    base = np.asarray(base, dtype=np.int64)
    n = base.shape[0]
    q = mult.shape[1] if mult.ndim == 3 else 1
    add = _adder(addt, use_xor)
    outer, inner = _split(mult, n)
    inner_words = _span(mult[outer:], add, n)
    for digits in product(range(q), repeat=outer):
        partial = base
        for lvl, c in enumerate(digits):
            partial = add(partial, mult[lvl, c])
        yield add(inner_words, partial[None, :])


def span_weight_hist(mult, addt, use_xor, base):
    n = len(base)
    hist = np.zeros(n + 1, dtype=np.int64)
    for block in _blocks(mult, addt, use_xor, base):
        hist += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return hist


def span_collect(mult, addt, use_xor, base, target):
    n = len(base)
    if n > 64:
        raise ValueError("support masks need n <= 64")
    bits = [1 << j for j in range(n)]
    out = []
    for block in _blocks(mult, addt, use_xor, base):
        nz = block != 0
        for row in nz[nz.sum(axis=1) == target]:
            out.append(sum(b for b, on in zip(bits, row) if on))
    return out


def _rank(M, exp, log, order, neg, add):
    M = M.copy()
    rows, cols = M.shape
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        lp = log[M[r, col]]
        for i in range(r + 1, rows):
            a = M[i, col]
            if a == 0:
                continue
            f = exp[log[a] - lp + order]
            prod = np.where(M[r] == 0, 0, exp[(log[f] + log[M[r]]) % order])
            M[i] = add(M[i], neg[prod])
        r += 1
    return r


def deficient_subsets(P, d, exp, log, neg, use_xor, addt):
    P = np.asarray(P, dtype=np.int64)
    exp = np.asarray(exp, dtype=np.int64)
    log = np.asarray(log, dtype=np.int64)
    neg = np.asarray(neg, dtype=np.int64)
    n = P.shape[1]
    if n > 64:
        raise ValueError("support masks need n <= 64")
    order = exp.shape[0] // 2
    add = _adder(addt, use_xor)
    out = []
    if d <= 0 or d > n:
        return out
    for cols in combinations(range(n), d):
        if _rank(P[:, cols], exp, log, order, neg, add) < d:
            out.append(sum(1 << c for c in cols))
    return out
