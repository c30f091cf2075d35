"""Closed-form weight distributions and length / count bounds for l-MDS codes."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .codecore import (
    DEFAULT_CAP,
    LinearCode,
    WeightDistribution,
    classify,
)
from .errors import ConsistencyError, InputError


def _binom(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n and n >= 0 else 0


# -- characterization by distance sums --------------------------------------------


def characterization_hypotheses(n: int, k: int, q: int, ell: int) -> bool:
    return n > (ell - 1) * q + ell + k - 2 and k > (ell - 1) * q + ell - 2


@dataclass(frozen=True)
class Characterization:
    n: int
    k: int
    ell: int
    d: int
    dual_d: int
    hypotheses: bool
    sum_condition: bool  # d + d_perp == n - 2 ell + 2
    is_lmds: bool

    @property
    def status(self) -> str:
        if not self.hypotheses:
            return "hypotheses-unmet"
        return "equivalent-verified" if self.sum_condition == self.is_lmds else "counterexample"


def characterization(code: LinearCode, ell: int, cap: int = DEFAULT_CAP) -> Characterization:
    """Compare ``d + d_perp = n - 2 ell + 2`` against the direct ell-MDS verdict."""
    if ell < 1:
        raise InputError("ell must be at least 1")
    rep = classify(code, cap)
    n, k = code.n, code.k
    return Characterization(
        n, k, ell, rep.d, rep.dual_d,
        characterization_hypotheses(n, k, code.q, ell),
        rep.d + rep.dual_d == n - 2 * ell + 2,
        rep.ell == ell,
    )


# -- weight distributions ----------------------------------------------------------


def _finish(n: int, counts: list, q: int, k: int) -> WeightDistribution:
    if any(c < 0 for c in counts):
        raise ConsistencyError("boundary counts produce a negative weight count")
    if sum(counts) != q**k:
        raise ConsistencyError("boundary counts are inconsistent: total is not q^k")
    return WeightDistribution(n, tuple(counts), "closed-form")


def nmds_distribution(n: int, k: int, q: int, a_min: int):
    """Both distributions of a 1-MDS ``[n, k]_q`` code from ``A_{n-k} = A_perp_k``."""
    A = [0] * (n + 1)
    A[0], A[n - k] = 1, a_min
    for s in range(1, k + 1):
        A[n - k + s] = _binom(n, k - s) * sum(
            (-1) ** i * _binom(n - k + s, i) * (q ** (s - i) - 1) for i in range(s)
        ) + (-1) ** s * _binom(k, s) * a_min
    B = [0] * (n + 1)
    B[0], B[k] = 1, a_min
    for s in range(1, n - k + 1):
        B[k + s] = _binom(n, k + s) * sum(
            (-1) ** i * _binom(k + s, i) * (q ** (s - i) - 1) for i in range(s)
        ) + (-1) ** s * _binom(n - k, s) * a_min
    return _finish(n, A, q, k), _finish(n, B, q, n - k)


def lmds_distribution(n: int, k: int, q: int, ell: int, boundary: Sequence[int]) -> WeightDistribution:
    """Distribution of an ell-MDS ``[n, k]_q`` code.

    ``boundary`` lists ``A_i`` for ``n-k-ell+1 <= i <= n-k+ell-1``.
    """
    if ell < 1 or not 1 <= k < n:
        raise InputError("need ell >= 1 and 1 <= k < n")
    lo, hi = n - k - ell + 1, n - k + ell - 1
    if lo < 1 or len(boundary) != hi - lo + 1:
        raise InputError(f"expected {2 * ell - 1} boundary counts A_{lo}..A_{hi}")
    A = [0] * (n + 1)
    A[0] = 1
    for i, a in zip(range(lo, hi + 1), boundary):
        A[i] = int(a)
    for s in range(k - ell + 1):
        head = _binom(n, k - ell - s) * sum(
            (-1) ** j * _binom(n - k + ell + s, j) * (q ** (ell + s - j) - 1) for j in range(s + 1)
        )
        tail = sum(
            (-1) ** (s + 1) * _binom(n - i, k - ell - s) * _binom(n - i - k + ell + s - 1, s) * A[i]
            for i in range(lo, hi + 1)
        )
        A[n - k + ell + s] = head + tail
    return _finish(n, A, q, k)


def lmds_dual_distribution(n: int, k: int, q: int, ell: int, boundary: Sequence[int]) -> WeightDistribution:
    """Dual-side counterpart; ``boundary`` lists ``A_perp_i`` for ``k-ell+1 <= i <= k+ell-1``."""
    if ell < 1 or not 1 <= k < n:
        raise InputError("need ell >= 1 and 1 <= k < n")
    lo, hi = k - ell + 1, k + ell - 1
    if lo < 1 or len(boundary) != hi - lo + 1:
        raise InputError(f"expected {2 * ell - 1} boundary counts A_perp_{lo}..A_perp_{hi}")
    B = [0] * (n + 1)
    B[0] = 1
    for i, a in zip(range(lo, hi + 1), boundary):
        B[i] = int(a)
    for s in range(n - k - ell + 1):
        head = _binom(n, k + ell + s) * sum(
            (-1) ** j * _binom(k + ell + s, j) * (q ** (ell + s - j) - 1) for j in range(s + 1)
        )
        tail = sum(
            (-1) ** (s + 1) * _binom(n - i, k + ell + s - i) * _binom(k + ell + s - i - 1, s) * B[i]
            for i in range(lo, hi + 1)
        )
        B[k + ell + s] = head + tail
    return _finish(n, B, q, n - k)


# -- minimum-weight counts ----------------------------------------------------------


@dataclass(frozen=True)
class MinWeightBounds:
    bound_A: int
    bound_Adual: int
    tv_A: int
    tv_Adual: int
    # criterion-based predictions that the first pair is strictly tighter
    improves_A: bool
    improves_Adual: bool


def minweight_bounds(n: int, k: int, q: int, ell: int) -> MinWeightBounds:
    """Upper bounds on ``A_{n-k-ell+1}`` and ``A_perp_{k-ell+1}``."""
    if ell < 1 or not 1 <= k < n or ell > min(k, n - k):
        raise InputError("need ell >= 1, 1 <= k < n and ell <= min(k, n-k)")
    g = q**ell - 1
    bA = _binom(n, k - ell) * g // _binom(k + ell - 1, k - ell)
    bD = _binom(n, k + ell) * g // _binom(n - k + ell - 1, 2 * ell - 1)
    tA = _binom(n, k + ell - 1) * (q - 1)
    tD = _binom(n, k - ell + 1) * (q - 1)
    # (q^ell - 1)/(q - 1) < C(., 2 ell - 1), compared without division
    impA = g < (q - 1) * _binom(n - k + ell, 2 * ell - 1)
    impD = g < (q - 1) * _binom(k + ell, 2 * ell - 1)
    return MinWeightBounds(bA, bD, tA, tD, impA, impD)


# -- maximum lengths ---------------------------------------------------------------


def griesmer(k: int, d: int, q: int) -> int:
    if k < 1 or d < 1:
        raise InputError("need k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def binary_length_bound(k: int, ell: int) -> int:
    return k + 2 * ell + ell // 3 + 1


@dataclass(frozen=True)
class MaxLenBounds:
    k: int
    q: int
    ell: int
    item3: Optional[int]
    item5: Optional[int]
    binary: Optional[int]
    lower_chain: int
    lower_base: int
    lower_base_source: str

    @property
    def upper(self) -> Optional[int]:
        vals = [v for v in (self.item3, self.item5, self.binary) if v is not None]
        return min(vals) if vals else None

    @property
    def tightest(self) -> Optional[str]:
        best = self.upper
        for name in ("binary", "item5", "item3"):
            if getattr(self, name) == best and best is not None:
                return name
        return None

    def excludes(self, n: int) -> bool:
        """True when an ``[n, k]`` code with defect ``ell`` is ruled out by an upper bound."""
        return self.upper is not None and n > self.upper


def maxlen_bounds(k: int, q: int, ell: int, base: Optional[int] = None) -> MaxLenBounds:
    """Upper bounds on ``N^ell(k, q)`` and the lower chain from an MDS base length.

    ``base`` is a known value (or lower bound) for the MDS maximum length
    ``N^0(k, q)``; without it the single parity-check ``[k+1, k, 2]`` code
    gives ``k + 1``.
    """
    if k < 1 or ell < 0 or q < 2:
        raise InputError("need k >= 1, ell >= 0, q >= 2")
    item3 = (ell + 1) * q + ell + k - 1 if k >= 2 else None
    item5 = ell * q + ell + k - 1 if ell >= 1 and k > (ell + 1) * q + ell - 1 else None
    binary = binary_length_bound(k, ell) if q == 2 and k >= 3 else None
    src = "user" if base is not None else "parity-check"
    b = base if base is not None else k + 1
    return MaxLenBounds(k, q, ell, item3, item5, binary, b + ell, b, src)


def length_excluded(n: int, k: int, q: int, ell: int) -> bool:
    return maxlen_bounds(k, q, ell).excludes(n)


def equality_hypothesis(k: int, q: int, ell: int, n_upper: int) -> bool:
    """Whether an assumed value of ``N^ell(k, q)`` would force ``N_ell = N^ell``.

    The hypothesis refers to the unknown quantity itself, so only a
    conditional answer is possible.
    """
    return n_upper > ell * q + ell + k - 1 and k > (ell - 1) * q + ell - 2


@dataclass(frozen=True)
class ShiftRecord:
    k: int
    q: int
    ell: int
    s: int
    applicable: bool
    k_hypothesis: bool
    length_threshold: int  # N_ell(k-s+1, q) must exceed this
    length_hypothesis: Optional[bool]
    statement: str

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        if not self.k_hypothesis or self.length_hypothesis is False:
            return "hypothesis-fails"
        return "holds" if self.length_hypothesis else "conditional"


def maxlen_shift(k: int, q: int, ell: int, s: int, n_known: Optional[int] = None) -> ShiftRecord:
    """``N_ell(k,q) <= N_ell(k-s,q) + s`` with its hypotheses.

    ``n_known`` is an optional lower bound for ``N_ell(k-s+1, q)``.
    """
    if not 1 <= s <= k:
        raise InputError("need 1 <= s <= k")
    thr = (ell - 1) * q + k + ell - s - 1
    applicable = s < k
    khyp = k > (ell - 1) * q + ell + s - 3
    lhyp = None if n_known is None else n_known > thr
    stmt = f"N_{ell}({k},{q}) <= N_{ell}({k - s},{q}) + {s}"
    return ShiftRecord(k, q, ell, s, applicable, khyp, thr, lhyp, stmt)
