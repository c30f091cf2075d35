"""Support designs of codeword weight classes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from . import kernels
from .codecore import (
    DEFAULT_CAP,
    LinearCode,
    _check_cap,
    distributions,
    mask_to_support,
    min_weight_supports,
)
from .errors import ConsistencyError, InputError


@dataclass(frozen=True)
class BlockMultiset:
    """Supports of weight-``w`` codewords, multiplicities already divided by ``q - 1``."""

    n: int
    w: int
    blocks: tuple[tuple[int, ...], ...]  # sorted, repeated per multiplicity
    exact: bool = True  # raw multiplicities were divisible by q - 1

    def counts(self) -> Counter:
        return Counter(self.blocks)

    @property
    def distinct(self) -> int:
        return len(set(self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class DesignInstance:
    n: int
    w: int
    t: int
    lam: int
    b: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.t}-({self.n},{self.w},{self.lam})"


def supports_at_weight(code: LinearCode, w: int, cap: int = DEFAULT_CAP) -> BlockMultiset:
    """Support multiset of the weight-``w`` class (1-based points).

    At the minimum distance the supports come from dependent column sets of
    a parity-check matrix; otherwise the code is enumerated projectively,
    which visits each support class once per ``q - 1`` scalar multiples.
    """
    A, _ = distributions(code, cap)
    if not 0 < w <= code.n or A[w] == 0:
        raise InputError(f"no codewords of weight {w}")
    if w == A.min_distance:
        blocks = min_weight_supports(code, cap)
    else:
        _check_cap(code.q, code.k, cap)
        blocks = sorted(mask_to_support(m) for m in kernels.supports_of_weight(code.field, code.gen, w))
    if len(blocks) * (code.q - 1) != A[w]:
        raise ConsistencyError(f"found {len(blocks)} supports at weight {w} but A_{w} = {A[w]}")
    return BlockMultiset(code.n, w, tuple(blocks), True)


def check_design(blocks: Iterable[Iterable[int]], n: int, t: int) -> Optional[DesignInstance]:
    """The ``t``-design formed by ``blocks`` on points ``1..n``, or ``None``."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    if not blocks:
        return None
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise InputError("blocks have different sizes")
    w = sizes.pop()
    if not 0 <= t <= w:
        raise InputError(f"strength t={t} exceeds block size {w}")
    if any(not 1 <= x <= n for b in blocks for x in b):
        raise InputError(f"block points must lie in 1..{n}")
    cover = Counter()
    for b in blocks:
        cover.update(combinations(b, t))
    total = comb(n, t)
    if len(cover) != total:
        return None
    vals = set(cover.values())
    if len(vals) != 1:
        return None
    lam = vals.pop()
    b = len(blocks)
    if b * comb(w, t) != lam * total:
        raise ConsistencyError("block count inconsistent with lambda")
    return DesignInstance(n, w, t, lam, b, blocks)


def complementary_params(t: int, n: int, w: int, lam: int) -> int:
    """lambda of the complementary design (blocks of size ``n - w``)."""
    if lam == 0:
        return 0
    num = lam * comb(n - t, w)
    den = comb(n - t, w - t)
    if den == 0 or num % den:
        raise ConsistencyError(f"complementary lambda {num}/{den} is not an integer")
    return num // den


def design_params_from_count(n: int, w: int, t: int, a_w: int, q: int) -> tuple[int, int]:
    """``(b, lambda)`` implied by ``A_w`` codewords, assuming they support a t-design."""
    if a_w % (q - 1):
        raise ConsistencyError("A_w is not a multiple of q - 1")
    b = a_w // (q - 1)
    num = b * comb(w, t)
    if num % comb(n, t):
        raise ConsistencyError("A_w does not yield an integer lambda")
    return b, num // comb(n, t)


def min_weight_design(code: LinearCode, t: int = 2, cap: int = DEFAULT_CAP) -> Optional[DesignInstance]:
    A, _ = distributions(code, cap)
    bm = supports_at_weight(code, A.min_distance, cap)
    return check_design(bm.blocks, code.n, t)
