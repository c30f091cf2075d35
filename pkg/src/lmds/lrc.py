"""Locality of linear codes and the two standard LRC optimality bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .codecore import DEFAULT_CAP, LinearCode, distributions, rank
from .errors import CodeError, ConsistencyError


@dataclass(frozen=True)
class BoundCheck:
    bound: int
    value: int

    @property
    def slack(self) -> int:
        return self.bound - self.value

    @property
    def status(self) -> str:
        if self.slack == 0:
            return "equality"
        return f"slack {self.slack}" if self.slack > 0 else "violated"


@dataclass(frozen=True)
class LocalityReport:
    n: int
    k: int
    d: int
    q: int
    r: int
    per_coord: tuple[int, ...]
    k_optimal: bool = False
    d_optimal: bool = False
    cm_bound: int = 0
    singleton_bound: int = 0


def _coord_locality(F, G: np.ndarray, i: int, start: int) -> int:
    """Smallest |R| with column i in the span of the columns indexed by R."""
    n = G.shape[1]
    others = [c for c in range(n) if c != i]
    for size in range(max(start, 1), n):
        for R in combinations(others, size):
            cols = list(R)
            if rank(F, G[:, cols]) == rank(F, G[:, cols + [i]]):
                return size
    raise CodeError(f"coordinate {i + 1} is covered by no dual codeword")


def coordinate_localities(code: LinearCode, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    F, G, n = code.field, np.asarray(code.gen), code.n
    if code.k == n:
        raise CodeError("the full space has no recovering sets")
    if np.any(np.all(G == 0, axis=0)):
        raise CodeError("code has an identically zero coordinate")
    _, Ad = distributions(code, cap)
    dd = Ad.min_distance
    # dual words of minimum weight dd are exactly the dependent dd-column sets of G
    loc = [0] * n
    for m in kernels.deficient_subsets(F, G, dd):
        for j in range(n):
            if m >> j & 1:
                loc[j] = dd - 1
    for j in range(n):
        if not loc[j]:
            loc[j] = _coord_locality(F, G, j, dd)
    return tuple(loc)


def singleton_like(n: int, k: int, d: int, r: int) -> BoundCheck:
    if r < 1:
        raise CodeError("locality must be at least 1")
    return BoundCheck(n - k - (-(-k // r)) + 2, d)


def cm_surrogate(n: int, d: int, r: int) -> int:
    """``min_t r t + max(0, n - t(r+1) - d + 1)`` over t >= 1."""
    best = None
    t = 1
    while True:
        val = r * t + max(0, n - t * (r + 1) - d + 1)
        best = val if best is None else min(best, val)
        if n - t * (r + 1) - d + 1 <= 0:
            break
        t += 1
    return best


def cm_check(n: int, k: int, d: int, q: int, r: int) -> BoundCheck:
    """Compare k with the surrogate dimension bound; equality certifies k-optimality."""
    return BoundCheck(cm_surrogate(n, d, r), k)


def locality(code: LinearCode, cap: int = DEFAULT_CAP) -> LocalityReport:
    A, Ad = distributions(code, cap)
    per = coordinate_localities(code, cap)
    r = max(per)
    if min(per) < Ad.min_distance - 1:
        raise ConsistencyError("a recovering set is smaller than the dual distance allows")
    n, k, d = code.n, code.k, A.min_distance
    s = singleton_like(n, k, d, r)
    c = cm_check(n, k, d, code.q, r)
    return LocalityReport(n, k, d, code.q, r, per, c.slack == 0, s.slack == 0, c.bound, s.bound)


def cm_label(check: BoundCheck) -> str:
    return "k-optimal" if check.slack == 0 else "not certified"
