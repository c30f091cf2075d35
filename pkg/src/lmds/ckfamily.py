"""The family C_k over GF(2^h): rows x^0, ..., x^(k-2), x^k evaluated on F_q^*."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .bounds import nmds_distribution
from .codecore import DEFAULT_CAP, LMDSReport, LinearCode, WeightDistribution, classify, code_from_rows
from .errors import ConsistencyError, InputError
from .gf import FieldSpec
from .subsetsum import count_closed


@dataclass(frozen=True)
class CkCode:
    field: FieldSpec
    k: int
    code: LinearCode

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(range(self.k - 1)) + (self.k,)

    @property
    def n(self) -> int:
        return self.field.q - 1


def _check_field(F: FieldSpec) -> None:
    if F.p != 2 or F.h < 3:
        raise InputError("the family needs q = 2^h with h >= 3")


def ck_matrix(F: FieldSpec, k: int) -> np.ndarray:
    """The k x (q-1) evaluation matrix, columns alpha^1 .. alpha^(q-1)."""
    cols = np.array([F.power_of_alpha(i) for i in range(1, F.q)], dtype=np.int64)
    exps = list(range(k - 1)) + [k]
    return np.stack([F.pow(cols, e) for e in exps])


def build_ck(F: FieldSpec, k: int) -> CkCode:
    _check_field(F)
    if not 3 <= k <= F.q - 2:
        raise InputError(f"k={k} outside [3, {F.q - 2}]")
    C = code_from_rows(F, ck_matrix(F, k))
    if C.k != k:
        raise ConsistencyError("evaluation matrix is rank deficient")
    return CkCode(F, k, C)


def zero_sum_verdict(F: FieldSpec, k: int) -> str:
    """MDS exactly when no k nonzero elements sum to zero, else 1-MDS."""
    return "1-MDS" if count_closed(F, k, 0) > 0 else "MDS"


def ck_verdict(ck: CkCode, cap: int = DEFAULT_CAP, threads: int = 1) -> LMDSReport:
    """Direct classification cross-checked against the zero-sum criterion."""
    rep = classify(ck.code, cap, threads)
    predicted = zero_sum_verdict(ck.field, ck.k)
    if rep.verdict != predicted:
        raise ConsistencyError(
            f"C_{ck.k} over GF({ck.field.q}): enumeration gives {rep.verdict}, zero-sum count gives {predicted}"
        )
    return rep


def _n_ij(q: int, k: int, i: int, j: int) -> int:
    # unrestricted count of (k-2-i-j)-subsets of F* hitting (j+1)x1 + (i+1)x2,
    # split on whether that target vanishes (i and j both odd)
    m = k - i - j
    if (i * j) % 2:
        t = comb(q - 1, m - 2) + (-1) ** (m + m // 2 - 1) * (q - 1) * comb(q // 2 - 1, m // 2 - 1)
    else:
        t = comb(q - 1, m - 2) + (-1) ** (m + m // 2) * comb(q // 2 - 1, m // 2 - 1)
    if t % q:
        raise ConsistencyError(f"N({i},{j}) is not an integer")
    return t // q


def ck_lambda(F: FieldSpec, k: int) -> tuple[int, int]:
    """Design parameters ``(lambda1, lambda2)`` of the dual and primal minimum-weight supports."""
    _check_field(F)
    q = F.q
    if not 3 <= k <= q - 4:
        raise InputError(f"k={k} outside [3, {q - 4}]")
    lam1 = sum((-1) ** (i + j) * _n_ij(q, k, i, j) for i in range(k - 1) for j in range(k - 1 - i))
    num = lam1 * comb(q - 3, k)
    den = comb(q - 3, k - 2)
    if num % den or lam1 <= 0:
        raise ConsistencyError(f"lambda2 = {num}/{den} is not a positive integer")
    return lam1, num // den


def ck_min_weight_count(F: FieldSpec, k: int) -> int:
    q = F.q
    lam1, _ = ck_lambda(F, k)
    num = lam1 * (q - 1) ** 2 * (q - 2)
    if num % (k * (k - 1)):
        raise ConsistencyError("minimum-weight count is not an integer")
    return num // (k * (k - 1))


def ck_enumerators(F: FieldSpec, k: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Closed-form distributions of ``C_k`` and its dual."""
    q = F.q
    return nmds_distribution(q - 1, k, q, ck_min_weight_count(F, k))


def ck_enumerator(F: FieldSpec, k: int) -> WeightDistribution:
    return ck_enumerators(F, k)[0]


def _poly(coeffs: dict, q: int) -> WeightDistribution:
    n = q - 1
    counts = [0] * (n + 1)
    counts[0] = 1
    for w, (num, den) in coeffs.items():
        if num % den:
            raise ConsistencyError("polynomial coefficient is not an integer")
        counts[w] = num // den
    return WeightDistribution(n, tuple(counts), "closed-form")


def ck4_polynomial(q: int) -> WeightDistribution:
    """Explicit polynomial form of the k = 4 enumerator."""
    if q < 8 or q & (q - 1):
        raise InputError("q must be a power of two, at least 8")
    c = (q - 1) ** 2
    return _poly({
        q - 5: (c * (q - 2) * (q - 4), 24),
        q - 4: (c * (q - 2), 6),
        q - 3: (c * (q - 2) * (q + 4), 4),
        q - 2: (c * (2 * q * q + 3 * q + 28), 6),
        q - 1: ((q - 1) * (9 * q**3 + 17 * q * q - 18 * q + 88), 24),
    }, q)


def ck7_polynomial(q: int) -> WeightDistribution:
    """Explicit polynomial form of the k = 7 enumerator."""
    if q < 16 or q & (q - 1):
        raise InputError("q must be a power of two, at least 16")
    c = (q - 1) ** 2
    return _poly({
        q - 8: (c * (q - 2) * (q - 4) * (q - 6) * (q * q - 15 * q + 71), 5040),
        q - 7: (7 * c * (q - 2) * (q - 4) * (q - 6) * (q - 8), 720),
        q - 6: (c * (q - 2) * (q - 4) * (q**3 - 7 * q * q + 49 * q - 216), 240),
        q - 5: (c * (q - 2) * (q - 4) * (2 * q**3 + 9 * q * q - 26 * q + 48), 144),
        q - 4: (c * (q - 2) * (9 * q**4 + 11 * q**3 - 3 * q * q - 26 * q - 816), 144),
        q - 3: (c * (q - 2) * (44 * q**4 + 155 * q**3 + 370 * q * q + 280 * q + 2496), 240),
        q - 2: (c * (265 * q**5 + 663 * q**4 + 1075 * q**3 + 2430 * q * q - 1880 * q + 11712), 720),
        q - 1: ((q - 1) * (1854 * q**6 + 2779 * q**5 + 3423 * q**4 + 2380 * q**3
                           + 11676 * q * q - 18704 * q + 31872), 5040),
    }, q)


def ck_design_lambdas(q: int, k: int) -> Optional[tuple[int, int]]:
    """Explicit polynomial forms of ``(lambda1, lambda2)`` for k = 4 and k = 7."""
    if k == 4:
        return (q - 4) // 2, (q - 4) * (q - 5) * (q - 6) // 24
    if k == 7:
        base = (q - 4) * (q - 6) * (q * q - 15 * q + 71)
        return base // 120, base * (q - 8) * (q - 9) // 5040
    return None
