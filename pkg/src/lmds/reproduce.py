"""End-to-end reproduction suite: seven groups of reference checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import codecore as cc
from .bounds import (
    characterization,
    lmds_distribution,
    lmds_dual_distribution,
    maxlen_bounds,
    minweight_bounds,
)
from .ckfamily import (
    build_ck,
    ck4_polynomial,
    ck7_polynomial,
    ck_design_lambdas,
    ck_enumerators,
    ck_lambda,
    ck_verdict,
    zero_sum_verdict,
)
from .designs import check_design, supports_at_weight
from .errors import LMDSError
from .gf import field_new
from .lrc import locality
from .propagate import extend, fsd_check, uuv
from .subsetsum import count_brute, count_closed, count_restricted

#: cap used for the two largest C_k cases at q = 16 (16^7 codewords)
RAISED_CAP = 1 << 28

EXAMPLE_ROWS = ["100000112", "010002110", "001001200", "000100021", "000011111"]
EXAMPLE_A = (1, 0, 0, 10, 18, 54, 76, 54, 18, 12)
EXAMPLE_B = (1, 0, 0, 0, 14, 8, 26, 22, 10, 0)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def expect(self, ok: bool, what: str) -> bool:
        if not ok:
            self.passed = False
            self.failures.append(what)
        return ok

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = "; ".join(self.failures[:3]) if self.failures else "ok"
        return f"criterion {self.number} [{status}] {self.title} ({self.seconds:.2f}s): {detail}"


def _timed(fn: Callable[[CriterionResult], None], number: int, title: str) -> CriterionResult:
    res = CriterionResult(number, title)
    t0 = time.perf_counter()
    try:
        fn(res)
    except (LMDSError, AssertionError) as exc:
        res.expect(False, f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    return res


def example_code() -> cc.LinearCode:
    F = field_new(3)
    return cc.code_from_rows(F, [[int(c) for c in r] for r in EXAMPLE_ROWS])


# -- 1 ---------------------------------------------------------------------------


def _crit1(res: CriterionResult) -> None:
    C = example_code()
    A, B = cc.distributions(C)
    res.expect(A.counts == EXAMPLE_A, f"primal enumerator {A.polynomial()}")
    res.expect(B.counts == EXAMPLE_B, f"dual enumerator {B.polynomial()}")
    rep = cc.classify(C)
    res.expect(rep.verdict == "2-MDS", f"verdict {rep.verdict}")
    mb = minweight_bounds(9, 5, 3, 2)
    res.expect((mb.bound_A, mb.bound_Adual, mb.tv_A, mb.tv_Adual) == (33, 28, 168, 252), f"bounds {mb}")
    res.expect(lmds_distribution(9, 5, 3, 2, A.counts[3:6]).counts == EXAMPLE_A, "closed-form primal")
    res.expect(lmds_dual_distribution(9, 5, 3, 2, B.counts[4:7]).counts == EXAMPLE_B, "closed-form dual")


# -- 2 and 3 -----------------------------------------------------------------------


def _ck_cases():
    for h in (3, 4):
        F = field_new(2, h)
        for k in range(3, F.q - 1):
            yield F, k


def _cap_for(F, k: int, cap: int) -> int:
    return max(cap, RAISED_CAP) if F.q ** min(k, F.q - 1 - k) > cap else cap


def _crit2(res: CriterionResult, cap: int = cc.DEFAULT_CAP) -> None:
    for F, k in _ck_cases():
        q = F.q
        tag = f"q={q},k={k}"
        ck = build_ck(F, k)
        kcap = _cap_for(F, k, cap)
        rep = ck_verdict(ck, kcap)
        want = "MDS" if k >= q - 3 else "1-MDS"
        res.expect(rep.verdict == want and zero_sum_verdict(F, k) == want, f"{tag} verdict {rep.verdict}")
        if k >= q - 3:
            continue
        lam1, lam2 = ck_lambda(F, k)
        closed = ck_design_lambdas(q, k)
        if closed is not None:
            res.expect((lam1, lam2) == closed, f"{tag} lambda {(lam1, lam2)} vs {closed}")
        D = cc.dual(ck.code)
        des1 = check_design(supports_at_weight(D, k, kcap).blocks, q - 1, 2)
        des2 = check_design(supports_at_weight(ck.code, q - k - 1, kcap).blocks, q - 1, 2)
        res.expect(des1 is not None and des1.lam == lam1, f"{tag} dual design")
        res.expect(des2 is not None and des2.lam == lam2, f"{tag} primal design")
        A, B = cc.distributions(ck.code, kcap)
        EA, EB = ck_enumerators(F, k)
        res.expect(A.counts == EA.counts and B.counts == EB.counts, f"{tag} enumerator")
        if k == 4:
            res.expect(A.counts == ck4_polynomial(q).counts, f"{tag} k=4 polynomial")
        if k == 7:
            res.expect(A.counts == ck7_polynomial(q).counts, f"{tag} k=7 polynomial")


def _crit3(res: CriterionResult, cap: int = cc.DEFAULT_CAP) -> None:
    for F, k in _ck_cases():
        q = F.q
        if k > q - 4:
            continue
        tag = f"q={q},k={k}"
        kcap = _cap_for(F, k, cap)
        C = build_ck(F, k).code
        L, LD = locality(C, kcap), locality(cc.dual(C), kcap)
        res.expect(L.r == k - 1 and L.k_optimal and L.d_optimal, f"{tag} primal locality {L.r}")
        res.expect(LD.r == q - k - 2 and LD.k_optimal and LD.d_optimal, f"{tag} dual locality {LD.r}")


# -- 4 ---------------------------------------------------------------------------


def _crit4(res: CriterionResult) -> None:
    for p, h in ((2, 2), (2, 3), (3, 2), (2, 4)):
        F = field_new(p, h)
        for r in range(F.q):
            for b in range(F.q):
                res.expect(count_closed(F, r, b) == count_brute(F, r, b), f"q={F.q} r={r} b={b}")
    for h in (3, 4):
        F = field_new(2, h)
        for k in range(3, F.q - 3):
            vals = set()
            for x1 in range(1, F.q):
                for x2 in range(1, F.q):
                    if x1 == x2:
                        continue
                    vals.add(count_restricted(F, k, x1, x2))
            res.expect(len(vals) == 1, f"q={F.q} k={k} depends on (x1,x2): {sorted(vals)}")
            x1, x2 = 1, 2
            brute = count_brute(F, k - 2, x1 ^ x2, {0, x1, x2})
            res.expect(vals == {brute}, f"q={F.q} k={k} restricted {vals} vs brute {brute}")


# -- 5 ---------------------------------------------------------------------------

# construction, initial (n, k, d), derived code, its dual, stated defect;
# the initial codes come from an external database and are not shipped
EXTENSION_ROWS = [
    ("extend", (43, 21, 10), (44, 21, 10), (44, 23, 8), 14),
    ("extend", (44, 22, 10), (45, 22, 10), (45, 23, 9), 14),
    ("extend", (46, 24, 10), (47, 24, 10), (47, 23, 11), 14),
    ("extend", (13, 5, 5), (14, 5, 6), (14, 9, 2), 4),
    ("extend", (37, 17, 9), (38, 17, 10), (38, 21, 6), 9),
    ("extend", (42, 19, 11), (43, 19, 12), (43, 24, 7), 13),
    ("extend", (59, 26, 13), (60, 26, 14), (60, 34, 6), 21),
    ("expurgate", (43, 21, 10), (43, 20, 10), (43, 23, 7), 14),
    ("expurgate", (45, 23, 10), (45, 22, 10), (45, 23, 9), 14),
    ("expurgate", (46, 24, 10), (46, 23, 10), (46, 23, 10), 14),
]


def _row_consistent(kind, init, out, dout, ell) -> bool:
    n, k, d = init
    l1 = n - k - d + 1
    defect = lambda t: t[0] - t[1] - t[2] + 1
    if defect(out) != ell or defect(dout) != ell or out[0] != dout[0] or out[1] + dout[1] != out[0]:
        return False
    if kind == "extend":
        odd = (n - k - l1) % 2 == 1
        return out == (n + 1, k, n - k - l1 + (1 if odd else 2)) and ell == (l1 + 1 if odd else l1)
    return (n - k - l1) % 2 == 1 and out == (n, k - 1, n - k - l1 + 1) and ell == l1 + 1


def small_inputs():
    F = field_new(2)
    mk = lambda *rows: cc.code_from_rows(F, [[int(c) for c in r] for r in rows])
    C1 = mk("111100", "001111")
    C5 = mk("11110")
    C6 = mk("11100", "00111")
    return {"C1": C1, "C2": cc.dual(C1), "C3": cc.dual(C5), "C4": cc.dual(C6), "C5": C5, "C6": C6}


# pair -> expected (n, k, d, verdict); the [6,2,4]/[6,4,2] pair is listed in
# the order that produces the stated distance under P(C,D) = {(u, u+v)}
PAIR_RULES = [
    (("C2", "C1"), (12, 6, 4, "3-MDS")),
    (("C3", "C5"), (10, 5, 2, "4-MDS")),
    (("C3", "C6"), (10, 6, 2, "3-MDS")),
    (("C4", "C5"), (10, 4, 4, "3-MDS")),
    (("C4", "C6"), (10, 5, 3, "3-MDS")),
    (("C1", "C2"), (12, 6, 2, "5-MDS")),
    (("C6", "C4"), (10, 5, 2, "4-MDS")),
]
SMALL_INPUT_PARAMS = {"C1": (6, 2, 4), "C2": (6, 4, 2), "C3": (5, 4, 1), "C4": (5, 3, 2), "C5": (5, 1, 4), "C6": (5, 2, 3)}


def _crit5(res: CriterionResult) -> None:
    F = field_new(2)
    ham3 = cc.code_from_rows(F, [[1, 1, 0, 1, 0, 0, 0], [0, 1, 1, 0, 1, 0, 0],
                                 [0, 0, 1, 1, 0, 1, 0], [0, 0, 0, 1, 1, 0, 1]])
    ham2 = cc.code_from_rows(F, [[1, 1, 1]])
    o = extend(ham3)
    res.expect((o.output.n, o.output.k, o.observed.d, o.observed.verdict) == (8, 4, 4, "1-MDS") and o.agree,
               "extended [7,4,3] Hamming")
    res.expect((o.observed.dual_d, cc.classify(cc.dual(o.output)).verdict) == (4, "1-MDS"), "its dual")
    o = extend(ham2)
    res.expect((o.output.n, o.output.k, o.observed.d, o.observed.verdict) == (4, 1, 4, "MDS") and o.agree,
               "extended [3,1,3] code")
    D = cc.classify(cc.dual(o.output))
    res.expect((D.n, D.k, D.d, D.verdict) == (4, 3, 2, "MDS"), "its dual")

    codes = small_inputs()
    for name, params in SMALL_INPUT_PARAMS.items():
        r = cc.classify(codes[name])
        res.expect((r.n, r.k, r.d, r.verdict) == params + ("1-MDS",), f"input {name} {r}")
    for (a, b), want in PAIR_RULES:
        o = uuv(codes[a], codes[b])
        got = (o.output.n, o.output.k, o.observed.d, o.observed.verdict)
        res.expect(got == want and o.agree, f"P({a},{b}) gave {got}")

    G = field_new(2, 3)
    for k, want in ((6, (14, 7, 4, "4-MDS")), (5, (14, 7, 6, "2-MDS"))):
        C = build_ck(G, k).code
        o = uuv(C, cc.dual(C))
        got = (o.output.n, o.output.k, o.observed.d, o.observed.verdict)
        res.expect(got == want and fsd_check(o.output) and o.agree, f"P(C_{k}, dual) gave {got}")

    for row in EXTENSION_ROWS:
        if not _row_consistent(*row):
            kind, init, out, dout, ell = row
            actual = out[0] - out[1] - out[2] + 1
            res.notes.append(f"{kind} row {init}: stated defect {ell}, parameters give {actual}")
    res.notes.append(f"{len(EXTENSION_ROWS)} rows with database-only initial codes: conditionally verified "
                     "(parameter arithmetic checked; iff statements exercised on available inputs)")


# -- 6 ---------------------------------------------------------------------------


def random_corpus(size: int = 500, seed: int = 20240601, max_side: int = 1 << 14):
    """Random codes with q in {2,3,4,8} and n <= 12; both sides stay enumerable."""
    rng = np.random.default_rng(seed)
    fields = [field_new(2), field_new(3), field_new(2, 2), field_new(2, 3)]
    out = []
    while len(out) < size:
        F = fields[int(rng.integers(len(fields)))]
        n = int(rng.integers(2, 13))
        k = int(rng.integers(1, n))
        if F.q ** max(k, n - k) > max_side:
            continue
        M = rng.integers(0, F.q, size=(k, n))
        try:
            C = cc.code_from_rows(F, M)
        except LMDSError:
            continue
        if C.k == C.n:
            continue
        out.append(C)
    return out


def corpus_checks(C: cc.LinearCode) -> list[str]:
    """Property violations on one corpus code (empty when clean)."""
    bad = []
    n, k, q = C.n, C.k, C.q
    A, B = cc.distributions(C)
    direct = cc.enumerate_distribution(cc.dual(C)) if k <= n - k else cc.enumerate_distribution(C)
    if k <= n - k:
        if direct.counts != B.counts:
            bad.append("MacWilliams differs from enumerated dual")
    elif direct.counts != A.counts:
        bad.append("MacWilliams differs from enumerated primal")
    if cc.macwilliams(cc.macwilliams(A, q, k), q, n - k).counts != A.counts:
        bad.append("MacWilliams not an involution")
    rep = cc.classify(C)
    for ell in range(1, n + 1):
        ch = characterization(C, ell)
        if ch.status == "counterexample":
            bad.append(f"characterization fails at ell={ell}")
    if rep.ell and rep.ell >= 1:
        mb = minweight_bounds(n, k, q, rep.ell)
        if A[rep.d] > mb.bound_A or B[rep.dual_d] > mb.bound_Adual:
            bad.append("minimum-weight count exceeds bound")
        bA = A.counts[n - k - rep.ell + 1: n - k + rep.ell]
        bB = B.counts[k - rep.ell + 1: k + rep.ell]
        if lmds_distribution(n, k, q, rep.ell, bA).counts != A.counts:
            bad.append("closed-form distribution differs")
        if lmds_dual_distribution(n, k, q, rep.ell, bB).counts != B.counts:
            bad.append("closed-form dual distribution differs")
    if n <= 8:
        g1 = cc.ghw_profile(C).weights
        g2 = cc.ghw_profile(cc.dual(C)).weights
        if sorted(list(g1) + [n + 1 - w for w in g2]) != list(range(1, n + 1)):
            bad.append("GHW duality fails")
    return bad


def uuv_checks(c1: cc.LinearCode, c2: cc.LinearCode) -> list[str]:
    o = uuv(c1, c2)
    return [f"uuv {name}" for name, ok in o.checks.items() if not ok]


def _crit6(res: CriterionResult) -> None:
    corpus = random_corpus()
    res.expect(len(corpus) >= 500, "corpus too small")
    for i, C in enumerate(corpus):
        for b in corpus_checks(C):
            res.expect(False, f"code {i}: {b}")
    # pair corpus codes of equal field and length for the (u, u+v) identities
    groups: dict = {}
    for C in corpus:
        groups.setdefault((C.q, C.n), []).append(C)
    pairs = 0
    for (q, n), cs in sorted(groups.items()):
        for a, b in zip(cs, cs[1:]):
            if q ** min(a.k + b.k, 2 * n - a.k - b.k) > 1 << 16:
                continue
            for bad in uuv_checks(a, b):
                res.expect(False, f"pair {q},{n}: {bad}")
            pairs += 1
    res.notes.append(f"{len(corpus)} codes, {pairs} (u,u+v) pairs")


# -- 7 ---------------------------------------------------------------------------


def _crit7(res: CriterionResult) -> None:
    miss = [ell for ell in range(216, 363) if not maxlen_bounds(312, 2, ell).excludes(959)]
    res.expect(not miss, f"[959,312]_2 not excluded for ell in {miss[0]}..{miss[-1]}" if miss else "")
    miss = [ell for ell in range(63, 81) if not maxlen_bounds(495, 2, ell).excludes(683)]
    res.expect(not miss, f"[683,495]_2 not excluded for ell in {miss}")
    for ell in range(1, 401):
        for k in range(3, 501):
            m = maxlen_bounds(k, 2, ell)
            if ell >= 2 and not m.binary < m.item3:
                res.expect(False, f"binary bound vs item 3 at ell={ell}, k={k}")
            if ell >= 5 and m.item5 is not None and not m.binary < m.item5:
                res.expect(False, f"binary bound vs item 5 at ell={ell}, k={k}")


CRITERIA = [
    (1, "worked [9,5,3]_3 example", _crit1),
    (2, "C_k family verdicts, designs and enumerators", _crit2),
    (3, "C_k locality and LRC optimality", _crit3),
    (4, "subset-sum closed forms vs brute force", _crit4),
    (5, "propagation rules", _crit5),
    (6, "random-corpus properties", _crit6),
    (7, "binary length bounds", _crit7),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            return _timed(fn, num, title)
    raise KeyError(number)


def run_all(numbers=None) -> list[CriterionResult]:
    return [_timed(fn, num, title) for num, title, fn in CRITERIA if numbers is None or num in numbers]
