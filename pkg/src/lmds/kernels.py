"""Backend selection for the enumeration kernels.

The compiled module ``_ckernels`` is used when it imports; otherwise the
numpy implementation in ``_pykernels`` takes over.  Setting the environment
variable ``LMDS_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _pykernels
from .gf import FieldSpec

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("LMDS_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def _impl(backend):
    return _BACKENDS[backend or BACKEND]


def _tables(F: FieldSpec):
    use_xor = F.p == 2
    if use_xor:
        addt = np.zeros((1, 1), dtype=np.uint16)
    else:
        addt = np.ascontiguousarray(F.add_table)
    return use_xor, addt


def _mult(F: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """``mult[l, c] = c * rows[l]`` as a contiguous int32 array."""
    rows = np.asarray(rows, dtype=np.int64)
    scal = np.arange(F.q, dtype=np.int64)
    out = F.mul(scal[None, :, None], rows[:, None, :])
    return np.ascontiguousarray(out, dtype=np.int32)


def _projective_tasks(F: FieldSpec, gen: np.ndarray, split: bool):
    """(base, rows) pairs covering one representative per projective point.

    Each nonzero message is scaled so its leading coordinate is 1.
    """
    gen = np.asarray(gen, dtype=np.int64)
    k = gen.shape[0]
    mult = _mult(F, gen)
    tasks = []
    for t in range(k):
        base = np.ascontiguousarray(mult[t, 1], dtype=np.int32)
        rest = mult[t + 1 :]
        if split and rest.shape[0] >= 1:
            for c in range(F.q):
                b2 = np.asarray(F.add(base, rest[0, c]), dtype=np.int32)
                tasks.append((np.ascontiguousarray(b2), np.ascontiguousarray(rest[1:])))
        else:
            tasks.append((base, np.ascontiguousarray(rest)))
    return tasks


def weight_histogram(F: FieldSpec, gen, threads: int = 1, backend: str | None = None) -> np.ndarray:
    """Exact weight counts (A_0..A_n) of the row space of ``gen``."""
    impl = _impl(backend)
    gen = np.asarray(gen, dtype=np.int64)
    n = gen.shape[1]
    use_xor, addt = _tables(F)
    tasks = _projective_tasks(F, gen, split=threads > 1)

    def run(task):
        base, rows = task
        return impl.span_weight_hist(rows, addt, use_xor, base)

    hist = np.zeros(n + 1, dtype=np.int64)
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for h in pool.map(run, tasks):
                hist += h
    else:
        for task in tasks:
            hist += run(task)
    counts = [int(x) * (F.q - 1) for x in hist]
    counts[0] += 1
    return np.array(counts, dtype=object)


def supports_of_weight(F: FieldSpec, gen, w: int, backend: str | None = None) -> list[int]:
    """Support bitmasks of one representative per projective codeword of weight ``w``."""
    impl = _impl(backend)
    use_xor, addt = _tables(F)
    out: list[int] = []
    for base, rows in _projective_tasks(F, gen, split=False):
        out.extend(int(m) for m in impl.span_collect(rows, addt, use_xor, base, int(w)))
    return out


def deficient_subsets(F: FieldSpec, P, d: int, backend: str | None = None) -> list[int]:
    """Bitmasks of ``d``-subsets of columns of ``P`` whose rank is below ``d``."""
    impl = _impl(backend)
    use_xor, addt = _tables(F)
    P = np.ascontiguousarray(np.asarray(P, dtype=np.int32))
    exp = np.ascontiguousarray(F.exp, dtype=np.int64)
    log = np.ascontiguousarray(F.log, dtype=np.int64)
    neg = np.ascontiguousarray(F.neg_table, dtype=np.int64)
    return [int(m) for m in impl.deficient_subsets(P, int(d), exp, log, neg, use_xor, addt)]
