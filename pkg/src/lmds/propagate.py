"""Extension, augmentation, expurgation and the (u, u+v) combiner, with
the defect predictions each construction admits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .codecore import (
    DEFAULT_CAP,
    LMDSReport,
    LinearCode,
    classify,
    code_from_rows,
    distributions,
    dual,
    dual_distance,
)
from .errors import CodeError, ConsistencyError


@dataclass(frozen=True)
class Prediction:
    rule: str
    d: Optional[int] = None
    dual_d: Optional[int] = None
    verdict: Optional[str] = None  # "MDS", "3-MDS", "not-l-MDS" or None when not predicted
    fsd: Optional[bool] = None


@dataclass(frozen=True)
class PropagationOutcome:
    construction: str
    inputs: tuple
    output: LinearCode
    observed: LMDSReport
    predictions: tuple = ()
    checks: dict = field(default_factory=dict)  # name -> bool

    @property
    def agree(self) -> bool:
        return all(self.checks.values())

    @property
    def predicted(self) -> Optional[Prediction]:
        return self.predictions[0] if self.predictions else None


def _verdict(ell: Optional[int]) -> str:
    if ell is None:
        return "not-l-MDS"
    return "MDS" if ell == 0 else f"{ell}-MDS"


def _require_binary(code: LinearCode) -> None:
    if code.q != 2:
        raise CodeError("construction is defined for binary codes only")


def _ones(n: int) -> np.ndarray:
    return np.ones(n, dtype=np.int64)


def _compare(pred: Prediction, obs: LMDSReport, checks: dict, tag: str) -> None:
    if pred.d is not None:
        checks[f"{tag}.d"] = pred.d == obs.d
    if pred.dual_d is not None:
        checks[f"{tag}.dual_d"] = pred.dual_d == obs.dual_d
    if pred.verdict is not None:
        checks[f"{tag}.verdict"] = pred.verdict == obs.verdict


# -- binary constructions ----------------------------------------------------------


def extended_code(code: LinearCode) -> LinearCode:
    """The bare parity extension, with no hypotheses checked."""
    _require_binary(code)
    G = np.asarray(code.gen)
    return code_from_rows(code.field, np.hstack([G, (G.sum(axis=1) % 2)[:, None]]))


def extend(code: LinearCode, cap: int = DEFAULT_CAP) -> PropagationOutcome:
    """Append an overall parity coordinate."""
    _require_binary(code)
    n, k = code.n, code.k
    if k < n and dual(code).contains(_ones(n)):
        raise CodeError("all-one vector lies in the dual; the extension is trivial")
    if k == n:
        raise CodeError("extension of the full space has no defect to report")
    E = extended_code(code)
    rin = classify(code, cap)
    obs = classify(E, cap)
    checks: dict = {}
    d = rin.d
    preds = [Prediction("parity", d=d if d % 2 == 0 else d + 1)]
    if rin.ell is not None:
        l1 = rin.ell
        dmax = distributions(code, cap)[1].max_weight
        dual_d = n - dmax + 1 if dmax > n - k + l1 - 1 else k - l1 + 1
        if (n - k - l1) % 2:
            v = _verdict(l1 + 1) if dmax == n - k + l1 + 1 else "not-l-MDS"
            preds.append(Prediction("extend-odd", n - k - l1 + 1, dual_d, v))
        else:
            v = _verdict(l1) if dmax <= n - k + l1 else "not-l-MDS"
            preds.append(Prediction("extend-even", n - k - l1 + 2, dual_d, v))
    for p in preds:
        _compare(p, obs, checks, p.rule)
    return PropagationOutcome("extend", (rin,), E, obs, tuple(reversed(preds)), checks)


def augment(code: LinearCode) -> LinearCode:
    """Adjoin the all-one vector."""
    _require_binary(code)
    if code.contains(_ones(code.n)):
        raise CodeError("all-one vector already lies in the code")
    return code_from_rows(code.field, np.vstack([code.gen, _ones(code.n)[None, :]]))


def augment_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """``min(d, n - d')`` with ``d'`` the largest weight present."""
    A = distributions(code, cap)[0]
    return min(A.min_distance, code.n - A.max_weight)


def even_subcode(code: LinearCode) -> LinearCode:
    _require_binary(code)
    G = np.array(code.gen, dtype=np.int64)
    par = G.sum(axis=1) % 2
    odd = np.nonzero(par)[0]
    if odd.size == 0:
        raise CodeError("every codeword already has even weight")
    r = int(odd[0])
    rows = [G[i] ^ G[r] if par[i] else G[i] for i in range(G.shape[0]) if i != r]
    if not rows:
        raise CodeError("expurgation leaves the zero code")
    return code_from_rows(code.field, rows)


def expurgate(code: LinearCode, cap: int = DEFAULT_CAP) -> PropagationOutcome:
    """Keep the even-weight codewords."""
    X = even_subcode(code)
    n, k = code.n, code.k
    rin = classify(code, cap) if k < n else None
    obs = classify(X, cap)
    checks: dict = {}
    preds = []
    if k < n:
        D = dual(code)
        checks["dual-is-augmented"] = dual(X) == augment(D)
        checks["dual-distance"] = obs.dual_d == augment_distance(D, cap)
    if rin is not None and rin.d % 2 == 0:
        preds.append(Prediction("even-distance", d=rin.d))
    if rin is not None and rin.ell is not None and (n - k - rin.ell) % 2:
        l1 = rin.ell
        dmax = distributions(code, cap)[1].max_weight
        v = _verdict(l1 + 1) if dmax == n - k + l1 + 1 else "not-l-MDS"
        preds.insert(0, Prediction("expurgate-odd", n - k - l1 + 1, min(k - l1 + 1, n - dmax), v))
    for p in preds:
        _compare(p, obs, checks, p.rule)
    return PropagationOutcome("expurgate", (rin,), X, obs, tuple(preds), checks)


# -- the (u, u+v) combiner ----------------------------------------------------------


def uuv_code(c1: LinearCode, c2: LinearCode) -> LinearCode:
    if c1.field != c2.field or c1.n != c2.n:
        raise CodeError("inputs must share field and length")
    G1, G2 = np.asarray(c1.gen), np.asarray(c2.gen)
    top = np.hstack([G1, G1])
    bottom = np.hstack([np.zeros_like(G2), G2])
    return code_from_rows(c1.field, np.vstack([top, bottom]))


def fsd_check(code: LinearCode, cap: int = DEFAULT_CAP) -> bool:
    if code.k == code.n:
        return False
    A, B = distributions(code, cap)
    return A.same_counts(B)


def predict_dual_pair(n: int, k: int, d: int, dual_d: int, ell: Optional[int]) -> Prediction:
    """P(C, C^perp): always formally self-dual; defect known when C is l-MDS."""
    dd = min(2 * d, dual_d)
    if ell is None:
        return Prediction("dual-pair", d=dd, dual_d=dd, fsd=True)
    if ell >= 2 * n - 3 * k + 1:
        return Prediction("dual-pair-large", 2 * n - 2 * k + 2 - 2 * ell, 2 * n - 2 * k + 2 - 2 * ell,
                          _verdict(2 * k + 2 * ell - n - 1), True)
    return Prediction("dual-pair-small", k + 1 - ell, k + 1 - ell, _verdict(n - k + ell), True)


def predict_uuv_cases(n: int, k1: int, k2: int, l1: int, l2: int) -> list[Prediction]:
    """Every case of the four-way split that applies to ``(l1, l2)``."""
    t = 2 * k2 - k1 + l1 + 1
    a_up, a_dn = -(-t // 2), t // 2
    B = 2 * k1 - k2 + 2 * l1 - n - 1
    d_small = 2 * n - 2 * k1 - 2 * l1 + 2
    d_large = n - k2 - l2 + 1
    out = []
    if a_up <= l2 <= B:
        v = _verdict(k1 - k2 + 2 * l1 - 1) if l1 == l2 else "not-l-MDS"
        out.append(Prediction("uuv-case1", d=d_small, verdict=v))
    if l2 <= min(a_dn, B):
        v = _verdict(3 * k2 - k1 + 1) if l1 == 2 * k2 - k1 + 1 else "not-l-MDS"
        out.append(Prediction("uuv-case2", d=d_small, verdict=v))
    if l2 >= max(a_up, B):
        v = _verdict(2 * n - 3 * k1 + k2 + 1) if l2 == n - 2 * k1 + k2 + 1 else "not-l-MDS"
        out.append(Prediction("uuv-case3", d=d_large, verdict=v))
    if B <= l2 <= a_dn:
        v = _verdict(k2 + l1) if l2 == k1 + k2 + l1 - n else "not-l-MDS"
        out.append(Prediction("uuv-case4", d=d_large, verdict=v))
    if len({(p.d, p.verdict) for p in out}) > 1:
        raise ConsistencyError(f"overlapping cases disagree: {out}")
    return out


def uuv(c1: LinearCode, c2: LinearCode, cap: int = DEFAULT_CAP) -> PropagationOutcome:
    P = uuv_code(c1, c2)
    n = c1.n
    r1 = classify(c1, cap) if c1.k < n else None
    r2 = classify(c2, cap) if c2.k < n else None
    obs = classify(P, cap)
    checks: dict = {}
    d1 = distributions(c1, cap)[0].min_distance
    d2 = distributions(c2, cap)[0].min_distance
    checks["distance"] = obs.d == min(2 * d1, d2)
    checks["dual-distance"] = obs.dual_d == min(dual_distance(c1, cap), 2 * dual_distance(c2, cap))
    if c1.k < n and c2.k < n:
        swapped = uuv_code(dual(c2), dual(c1))
        checks["dual-distribution"] = distributions(P, cap)[1].same_counts(distributions(swapped, cap)[0])
    preds: list[Prediction] = []
    if c1.k < n and c2 == dual(c1):
        preds.append(predict_dual_pair(n, c1.k, r1.d, r1.dual_d, r1.ell))
        checks["fsd"] = fsd_check(P, cap)
    if r1 is not None and r2 is not None and r1.ell is not None and r2.ell is not None:
        preds.extend(predict_uuv_cases(n, c1.k, c2.k, r1.ell, r2.ell))
    for p in preds:
        _compare(p, obs, checks, p.rule)
    return PropagationOutcome("uuv", (r1, r2), P, obs, tuple(preds), checks)
