"""Linear codes as row-reduced generator matrices, with exact parameters.

Weight distributions are computed by enumerating whichever of ``C`` and
``C^perp`` has the smaller dimension; the other side comes from the
MacWilliams transform.  Minimum distance is read off the distribution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .errors import CapExceededError, CodeError, ConsistencyError
from .gf import DEFAULT_MODULI, FieldSpec, parse_field

#: Largest number of codewords a single enumeration may visit.
DEFAULT_CAP = 1 << 24
#: Largest number of column subsets examined by :func:`ghw`.
DEFAULT_GHW_CAP = 10**7


# -- linear algebra ------------------------------------------------------------


def rref(F: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    M = np.array(M, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise CodeError("expected a matrix")
    rows, cols = M.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = F.mul(M[r], F.inv(M[r, c]))
        factors = M[:, c].copy()
        factors[r] = 0
        M = F.sub(M, F.mul(factors[:, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: FieldSpec, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def matmul(F: FieldSpec, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, t][:, None], B[t][None, :]))
    return out


# -- data types -----------------------------------------------------------------


@dataclass(frozen=True)
class WeightDistribution:
    """Counts ``(A_0, ..., A_n)``; ``source`` names the route that produced them."""

    n: int
    counts: tuple[int, ...]
    source: str = "enumerated"

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise CodeError("weight distribution must have n+1 entries")
        if self.counts[0] != 1 or any(c < 0 for c in self.counts):
            raise CodeError("weight distribution needs A_0 = 1 and A_i >= 0")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> Optional[int]:
        """Smallest nonzero weight; ``None`` for the zero code."""
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    @property
    def max_weight(self) -> int:
        """Largest weight present (``d'`` in the propagation rules)."""
        return max(i for i, c in enumerate(self.counts) if c)

    def same_counts(self, other: "WeightDistribution") -> bool:
        return self.n == other.n and tuple(self.counts) == tuple(other.counts)

    def polynomial(self) -> str:
        terms = []
        for i, c in enumerate(self.counts):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}z^{i}" if i > 1 else f"{coef}z")
        return "+".join(terms)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An ``[n, k]_q`` code; ``gen`` is kept in reduced row-echelon form."""

    field: FieldSpec
    gen: np.ndarray = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return int(self.gen.shape[1])

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.gen, other.gen)

    def __hash__(self) -> int:
        return hash((self.field, self.gen.tobytes(), self.gen.shape))

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.gen]

    def encode(self, message) -> np.ndarray:
        return matmul(self.field, np.asarray(message, dtype=np.int64)[None, :], self.gen)[0]

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        return rank(self.field, np.vstack([self.gen, word[None, :]])) == self.k

    def codewords(self) -> Iterator[np.ndarray]:
        """Every codeword; for small codes and test oracles only."""
        from itertools import product

        for msg in product(range(self.q), repeat=self.k):
            yield self.encode(msg)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.k, minimum_distance(self)

    @property
    def d(self) -> int:
        return minimum_distance(self)


def code_from_rows(F: FieldSpec, rows) -> LinearCode:
    """Row-reduce ``rows`` into a code; zero rows and dependent rows are dropped."""
    try:
        M = np.array(rows, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise CodeError("rows must have equal length") from exc
    if M.ndim != 2 or M.shape[1] == 0 or M.shape[0] == 0:
        raise CodeError("rows must form a nonempty rectangular matrix")
    if M.min() < 0 or M.max() >= F.q:
        raise CodeError(f"matrix has symbols outside GF({F.name})")
    G, _ = rref(F, M)
    if G.shape[0] == 0:
        raise CodeError("all-zero matrix generates the zero code")
    G.setflags(write=False)
    return LinearCode(F, G)


# -- duals ----------------------------------------------------------------------


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual."""
    if "dual" in code._cache:
        return code._cache["dual"]
    F, G = code.field, np.asarray(code.gen)
    n, k = code.n, code.k
    if k == n:
        raise CodeError("dual of the full space is the zero code")
    _, pivots = rref(F, G)
    free = [c for c in range(n) if c not in pivots]
    H = np.zeros((n - k, n), dtype=np.int64)
    for j, c in enumerate(free):
        H[j, c] = 1
    A = G[:, free]  # k x (n-k)
    for i, c in enumerate(pivots):
        H[:, c] = F.neg(A[i])
    D = code_from_rows(F, H)
    D._cache["dual"] = code
    code._cache["dual"] = D
    return D


def galois_dual(code: LinearCode, e: int) -> LinearCode:
    """e-Galois dual: the Frobenius power ``h - e`` applied to the Euclidean dual."""
    F = code.field
    if not 0 <= e < F.h:
        raise CodeError(f"Galois exponent must lie in [0, {F.h - 1}]")
    D = dual(code)
    if e == 0:
        return D
    return code_from_rows(F, F.frobenius(D.gen, (F.h - e) % F.h))


# -- weight distributions ----------------------------------------------------------


def _krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1)
    )


def macwilliams(dist: WeightDistribution, field, k: int) -> WeightDistribution:
    """Weight distribution of the dual of an ``[n, k]_q`` code.

    ``field`` may be a :class:`FieldSpec` or the integer ``q``.
    """
    q = field.q if isinstance(field, FieldSpec) else int(field)
    n = dist.n
    size = q**k
    if dist.total != size:
        raise CodeError(f"counts sum to {dist.total}, expected q^k = {size}")
    out = []
    for j in range(n + 1):
        s = sum(a * _krawtchouk(n, q, j, i) for i, a in enumerate(dist.counts) if a)
        if s % size:
            raise ConsistencyError("MacWilliams transform produced a non-integer count")
        out.append(s // size)
    return WeightDistribution(n, tuple(out), "macwilliams")


def _check_cap(q: int, dim: int, cap: int) -> None:
    if q**dim > cap:
        raise CapExceededError(f"enumerating {q}^{dim} codewords exceeds cap {cap}")


def enumerate_distribution(code: LinearCode, cap: int = DEFAULT_CAP, threads: int = 1) -> WeightDistribution:
    """Weight distribution of ``code`` by direct enumeration only."""
    _check_cap(code.q, code.k, cap)
    counts = kernels.weight_histogram(code.field, code.gen, threads=threads)
    return WeightDistribution(code.n, tuple(int(c) for c in counts), "enumerated")


def distributions(code: LinearCode, cap: int = DEFAULT_CAP, threads: int = 1):
    """``(A, A_perp)`` for the code and its dual."""
    if "wd" in code._cache and "wd_dual" in code._cache:
        return code._cache["wd"], code._cache["wd_dual"]
    n, k = code.n, code.k
    if k == n:
        A = WeightDistribution(n, tuple(comb(n, i) * (code.q - 1) ** i for i in range(n + 1)), "closed-form")
        Ad = WeightDistribution(n, (1,) + (0,) * n, "closed-form")
        code._cache["wd"], code._cache["wd_dual"] = A, Ad
        return A, Ad
    if k <= n - k:
        if code.q**k > cap and code.q ** (n - k) > cap:
            raise CapExceededError(
                f"both sides exceed cap {cap}: {code.q}^{k} and {code.q}^{n - k} codewords"
            )
        A = enumerate_distribution(code, cap, threads)
        Ad = macwilliams(A, code.field, k)
    else:
        D = dual(code)
        if code.q ** (n - k) > cap:
            raise CapExceededError(
                f"both sides exceed cap {cap}: {code.q}^{k} and {code.q}^{n - k} codewords"
            )
        Ad = enumerate_distribution(D, cap, threads)
        A = macwilliams(Ad, code.field, n - k)
    code._cache["wd"], code._cache["wd_dual"] = A, Ad
    if "dual" in code._cache:
        code._cache["dual"]._cache["wd"] = Ad
        code._cache["dual"]._cache["wd_dual"] = A
    return A, Ad


def weight_distribution(code: LinearCode, cap: int = DEFAULT_CAP, threads: int = 1) -> WeightDistribution:
    return distributions(code, cap, threads)[0]


def dual_distribution(code: LinearCode, cap: int = DEFAULT_CAP, threads: int = 1) -> WeightDistribution:
    return distributions(code, cap, threads)[1]


def minimum_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    return weight_distribution(code, cap).min_distance


def dual_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum distance of the dual; ``n + 1`` by convention for the full space."""
    if code.k == code.n:
        return code.n + 1
    return dual_distribution(code, cap).min_distance


# -- defects and the l-MDS verdict ------------------------------------------------


def singleton_defect(n: int, k: int, d: int) -> int:
    return n - k - d + 1


@dataclass(frozen=True)
class LMDSReport:
    n: int
    k: int
    q: int
    d: int
    dual_d: int
    defect: int
    dual_defect: int
    # the sufficiency window applied to (n, k, defect) and predicted a verdict
    forced_by_sufficiency: bool = False

    @property
    def ell(self) -> Optional[int]:
        return self.defect if self.defect == self.dual_defect else None

    @property
    def verdict(self) -> str:
        if self.ell is None:
            return "not-l-MDS"
        return "MDS" if self.ell == 0 else f"{self.ell}-MDS"

    def is_lmds(self, ell: Optional[int] = None) -> bool:
        if ell is None:
            return self.ell is not None
        return self.ell == ell


def sufficiency_applies(n: int, k: int, q: int, ell: int) -> bool:
    """Length/dimension window in which every ``[n,k,n-k-ell+1]_q`` code is ell-MDS."""
    return n > ell * q + ell + k - 1 and k > (ell - 1) * q + ell - 2


def classify(code: LinearCode, cap: int = DEFAULT_CAP, threads: int = 1) -> LMDSReport:
    n, k, q = code.n, code.k, code.q
    if k == n:
        raise CodeError("the full space has a zero dual; no defect is defined")
    A, Ad = distributions(code, cap, threads)
    d, dd = A.min_distance, Ad.min_distance
    s, sd = singleton_defect(n, k, d), singleton_defect(n, n - k, dd)
    if s < 0 or sd < 0:
        raise ConsistencyError(f"negative Singleton defect for [{n},{k},{d}] / dual distance {dd}")
    forced = sufficiency_applies(n, k, q, s)
    if forced and s != sd:
        raise ConsistencyError(
            f"[{n},{k},{d}]_{q} falls in the sufficiency window but has dual defect {sd} != {s}"
        )
    return LMDSReport(n, k, q, d, dd, s, sd, forced)


# -- generalized Hamming weights ---------------------------------------------------


@dataclass(frozen=True)
class GHWProfile:
    weights: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.weights[r - 1]


def ghw_profile(code: LinearCode, cap: int = DEFAULT_GHW_CAP) -> GHWProfile:
    """All generalized Hamming weights ``d_1 < ... < d_k``.

    Uses the support characterization: the subcode supported inside ``S`` has
    dimension ``k - rank(G restricted to the complement of S)``.
    """
    n, k, F = code.n, code.k, code.field
    if 2**n > cap:
        raise CapExceededError(f"2^{n} column subsets exceed cap {cap}")
    G = np.asarray(code.gen)
    weights: list[int] = []
    cols = range(n)
    for size in range(1, n + 1):
        best = 0
        for S in combinations(cols, size):
            comp = [c for c in cols if c not in S]
            dim = k - (rank(F, G[:, comp]) if comp else 0)
            best = max(best, dim)
            if best == k:
                break
        while len(weights) < best:
            weights.append(size)
        if len(weights) == k:
            break
    return GHWProfile(tuple(weights))


def ghw(code: LinearCode, r: int, cap: int = DEFAULT_GHW_CAP) -> int:
    if not 1 <= r <= code.k:
        raise CodeError(f"r must lie in [1, {code.k}]")
    return ghw_profile(code, cap)[r]


# -- coordinate operations ---------------------------------------------------------


def puncture(code: LinearCode, i: int) -> LinearCode:
    """Delete coordinate ``i``; the dimension drops if a weight-1 word lived there."""
    G = np.delete(np.asarray(code.gen), i, axis=1)
    return code_from_rows(code.field, G)


def shorten(code: LinearCode, i: int) -> LinearCode:
    """Keep codewords vanishing at ``i``, then delete that coordinate."""
    F = code.field
    G = np.array(code.gen, dtype=np.int64)
    nz = np.nonzero(G[:, i])[0]
    if nz.size:
        r = int(nz[0])
        f = F.div(G[:, i], G[r, i])
        f[r] = 0
        G = F.sub(G, F.mul(f[:, None], G[r][None, :]))
        G = np.delete(G, r, axis=0)
    if G.shape[0] == 0:
        raise CodeError("shortening leaves the zero code")
    return code_from_rows(F, np.delete(G, i, axis=1))


def puncture_shorten_witnesses(code: LinearCode, ell: int, cap: int = DEFAULT_CAP):
    """Coordinates whose puncturing / shortening keeps an ell-MDS code.

    Returns ``(punctured, shortened)`` lists of coordinate indices whose
    result is an ell-MDS ``[n-1, k]`` resp. ``[n-1, k-1]`` code.
    """
    pun, sho = [], []
    for i in range(code.n):
        try:
            P = puncture(code, i)
            if P.k == code.k and P.k < P.n and classify(P, cap).is_lmds(ell):
                pun.append(i)
        except CodeError:
            pass
        try:
            S = shorten(code, i)
            if S.k == code.k - 1 and S.k < S.n and classify(S, cap).is_lmds(ell):
                sho.append(i)
        except CodeError:
            pass
    return pun, sho


# -- minimum-weight supports -------------------------------------------------------


def mask_to_support(mask: int) -> tuple[int, ...]:
    """Bitmask to a sorted tuple of 1-based coordinates."""
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j + 1)
        mask >>= 1
        j += 1
    return tuple(out)


def min_weight_supports(code: LinearCode, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Distinct supports of minimum-weight codewords (1-based coordinates).

    A ``d``-subset ``S`` carries a codeword exactly when the parity-check
    columns indexed by ``S`` are dependent; at minimum weight that codeword
    has full support ``S`` and is unique up to scaling.
    """
    n, k = code.n, code.k
    d = minimum_distance(code, cap)
    if k == n:
        return [(i + 1,) for i in range(n)]
    H = dual(code).gen
    masks = kernels.deficient_subsets(code.field, H, d)
    return sorted(mask_to_support(m) for m in masks)


def supports_of_weight(code: LinearCode, w: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Supports (with multiplicity, one per projective codeword) of weight-``w`` words."""
    _check_cap(code.q, code.k, cap)
    masks = kernels.supports_of_weight(code.field, code.gen, w)
    return sorted(mask_to_support(m) for m in masks)


# -- file format ---------------------------------------------------------------


def format_code(code: LinearCode) -> str:
    F = code.field
    lines = [f"field {F.name} modulus {F.modulus_str()}", f"{code.n} {code.k}"]
    lines += [" ".join(str(int(x)) for x in row) for row in code.gen]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) < 2:
        raise CodeError("code file needs a field line and an 'n k' line")
    head = lines[0].split()
    if head[0] != "field" or len(head) not in (2, 3, 4):
        raise CodeError("first line must read 'field p^h [modulus c0,c1,...]'")
    modulus = None
    if len(head) == 4:
        if head[2] != "modulus":
            raise CodeError("expected 'modulus' keyword")
        modulus = head[3]
    elif len(head) == 3:
        modulus = head[2]
    F = parse_field(head[1], modulus)
    try:
        n, k = (int(x) for x in lines[1].split())
    except ValueError as exc:
        raise CodeError("second line must read 'n k'") from exc
    body = lines[2:]
    if len(body) != k:
        raise CodeError(f"expected {k} rows, found {len(body)}")
    rows = []
    for ln in body:
        toks = ln.split()
        # a packed row such as 100000112 is accepted for q <= 10
        if len(toks) == 1 and len(toks[0]) == n and F.q <= 10:
            toks = list(toks[0])
        if len(toks) != n:
            raise CodeError(f"row {ln!r} does not have {n} symbols")
        rows.append([int(t) for t in toks])
    return code_from_rows(F, rows)


def read_code(path) -> LinearCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CodeError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_code(text)


def write_code(code: LinearCode, path) -> None:
    Path(path).write_text(format_code(code))


def is_default_modulus(F: FieldSpec) -> bool:
    return DEFAULT_MODULI.get((F.p, F.h)) == F.modulus
