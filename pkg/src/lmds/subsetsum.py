"""Counting r-subsets of nonzero field elements with a prescribed sum."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import CapExceededError, ConsistencyError, InputError
from .gf import FieldSpec

DEFAULT_BRUTE_CAP = 10**8


@dataclass(frozen=True)
class SubsetSumQuery:
    field: FieldSpec
    r: int
    b: int
    excluded: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not 0 <= self.b < self.field.q:
            raise InputError(f"target {self.b} is not an element of GF({self.field.name})")
        if any(not 0 <= x < self.field.q for x in self.excluded):
            raise InputError("excluded set must contain field elements")
        pool = self.field.q - 1 - len(self.excluded - {0})
        if not 0 <= self.r <= pool:
            raise InputError(f"subset size r={self.r} outside [0, {pool}]")


def _scalar(F: FieldSpec, m: int, x: int) -> int:
    """The integer multiple ``m * x`` (m copies of x added together)."""
    return int(F.mul(m % F.p, x))


def count_closed(F: FieldSpec, r: int, b: int) -> int:
    """Number of r-subsets of the nonzero elements summing to ``b``."""
    q, p = F.q, F.p
    if not 0 <= r <= q - 1:
        raise InputError(f"subset size r={r} outside [0, {q - 1}]")
    if not 0 <= b < q:
        raise InputError(f"target {b} is not a field element")
    v = q - 1 if b == 0 else -1
    m = r // p
    total = comb(q - 1, r) + (-1) ** (r + m) * v * comb(q // p - 1, m)
    if total % q:
        raise ConsistencyError(f"closed form not divisible by q at r={r}, b={b}")
    return total // q


def count_brute(F: FieldSpec, r: int, b: int, excluded=(), cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Exhaustive count of r-subsets of ``F* minus excluded`` summing to ``b``."""
    query = SubsetSumQuery(F, r, b, frozenset(excluded))
    pool = [x for x in range(1, F.q) if x not in query.excluded]
    if comb(len(pool), r) > cap:
        raise CapExceededError(f"C({len(pool)},{r}) subsets exceed cap {cap}")
    if F.p == 2:
        count = 0
        for S in combinations(pool, r):
            acc = 0
            for x in S:
                acc ^= x
            count += acc == b
        return count
    add = F.add_table
    count = 0
    for S in combinations(pool, r):
        acc = 0
        for x in S:
            acc = add[acc, x]
        count += acc == b
    return count


def count_restricted(F: FieldSpec, k: int, x1: int, x2: int) -> int:
    """``(k-2)``-subsets of ``F minus {0, x1, x2}`` summing to ``x1 + x2``.

    Inclusion-exclusion reduces this to unrestricted counts over ``F*``.
    """
    q = F.q
    if F.p != 2:
        raise InputError("restricted count needs characteristic 2")
    if not 3 <= k <= q - 4:
        raise InputError(f"k={k} outside [3, {q - 4}]")
    if x1 == x2 or not (0 < x1 < q and 0 < x2 < q):
        raise InputError("x1, x2 must be distinct nonzero elements")
    total = 0
    for i in range(k - 1):
        for j in range(k - 1 - i):
            target = int(F.add(_scalar(F, j + 1, x1), _scalar(F, i + 1, x2)))
            total += (-1) ** (i + j) * count_closed(F, k - 2 - i - j, target)
    return total
