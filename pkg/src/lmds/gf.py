"""Arithmetic in GF(p^h) with log/antilog tables.

Elements are integers in ``[0, q-1]``; the integer ``sum(c_i * p**i)`` stands
for the polynomial ``sum(c_i * x**i)`` reduced modulo the field's primitive
modulus.  All vector operations accept numpy arrays and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import FieldError

#: Field sizes above this are refused unless ``cap`` is raised explicitly.
DEFAULT_FIELD_CAP = 4096

# Smallest primitive polynomial per (p, h) when coefficient vectors
# (constant term first) are read as base-p integers.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _poly_divides(divisor: Sequence[int], poly: Sequence[int], p: int) -> bool:
    """True if the monic ``divisor`` divides ``poly`` over GF(p)."""
    rem = list(poly)
    dd = len(divisor) - 1
    for deg in range(len(rem) - 1, dd - 1, -1):
        c = rem[deg]
        if c:
            for i in range(dd + 1):
                rem[deg - dd + i] = (rem[deg - dd + i] - c * divisor[i]) % p
    return not any(rem[:dd])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= h/2."""
    h = len(modulus) - 1
    if h == 1:
        return True
    for deg in range(1, h // 2 + 1):
        for v in range(p**deg):
            cand = [(v // p**i) % p for i in range(deg)] + [1]
            if _poly_divides(cand, modulus, p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """A concrete GF(p^h) with fixed primitive modulus.

    Build with :func:`field_new`; the constructor assumes validated input.
    """

    p: int
    h: int
    modulus: tuple[int, ...]
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def alpha(self) -> int:
        return int(self.exp[1])

    @property
    def order(self) -> int:
        return self.q - 1

    @property
    def name(self) -> str:
        return f"{self.p}^{self.h}"

    def __repr__(self) -> str:
        return f"GF({self.name}, modulus={self.modulus_str()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))

    def modulus_str(self) -> str:
        return ",".join(str(c) for c in self.modulus)

    # -- tables -----------------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        """Full q x q addition table (uint16), built on first use."""
        elems = np.arange(self.q, dtype=np.int64)
        return self._add_digits(elems[:, None], elems[None, :]).astype(np.uint16)

    @cached_property
    def neg_table(self) -> np.ndarray:
        elems = np.arange(self.q, dtype=np.int64)
        if self.p == 2:
            return elems
        out = np.zeros(self.q, dtype=np.int64)
        scale = 1
        for _ in range(self.h):
            out += ((-(elems // scale)) % self.p) * scale
            scale *= self.p
        return out

    def _add_digits(self, a, b):
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.h):
            out += (((a // scale) % self.p + (b // scale) % self.p) % self.p) * scale
            scale *= self.p
        return out

    # -- vectorised arithmetic ------------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.h == 1:
            return (a + b) % self.p
        return self.add_table[a, b].astype(np.int64)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.h == 1:
            return (-a) % self.p
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.exp[(self.log[a] + self.log[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in GF(%s)" % self.name)
        return self.exp[(-self.log[a]) % self.order]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        res = self.exp[(self.log[a] * e) % self.order]
        return np.where(a == 0, 0, res)

    def frobenius(self, x, e: int = 1):
        """``x ** (p**e)``; the Frobenius automorphism applied ``e`` times."""
        return self.pow(x, self.p ** (e % self.h))

    def power_of_alpha(self, i: int) -> int:
        return int(self.exp[i % self.order])

    def elements(self) -> range:
        return range(self.q)

    def parse_element(self, text: str) -> int:
        """Accept an integer code or ``a^i`` power notation (``a^0`` is 1)."""
        text = text.strip()
        if text.startswith(("a^", "alpha^")):
            return self.power_of_alpha(int(text.split("^", 1)[1]))
        value = int(text)
        if not 0 <= value < self.q:
            raise FieldError(f"symbol {value} outside GF({self.name})")
        return value

    def format_element(self, x: int) -> str:
        x = int(x)
        return "0" if x == 0 else f"a^{int(self.log[x])}"


def field_new(
    p: int,
    h: int = 1,
    modulus: Optional[Sequence[int]] = None,
    cap: int = DEFAULT_FIELD_CAP,
) -> FieldSpec:
    """Build GF(p^h), checking that ``modulus`` is irreducible and primitive.

    ``modulus`` lists coefficients constant term first and must be monic of
    degree ``h``.  When omitted the built-in table is used.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if h < 1:
        raise FieldError("extension degree must be at least 1")
    q = p**h
    if q > cap:
        raise FieldError(f"field size {q} exceeds cap {cap}")
    if modulus is None:
        if (p, h) not in DEFAULT_MODULI:
            raise FieldError(f"no default modulus for GF({p}^{h}); pass one")
        modulus = DEFAULT_MODULI[(p, h)]
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != h + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {h}")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over GF({p})")

    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    # digits of the current power of x, constant term first
    cur = [1] + [0] * (h - 1)
    for i in range(q - 1):
        code = sum(c * p**j for j, c in enumerate(cur))
        if i > 0 and code == 1:
            raise FieldError(f"modulus {modulus} is not primitive (order of x is {i})")
        exp[i] = code
        log[code] = i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(cur[j] - top * modulus[j]) % p for j in range(h)]
    if sum(c * p**j for j, c in enumerate(cur)) != 1:
        raise FieldError(f"modulus {modulus} is not primitive")
    exp[q - 1 :] = exp[: q - 1]
    # log[0] is meaningless; mul() masks zero operands
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldSpec(p=p, h=h, modulus=modulus, exp=exp, log=log)


def parse_field(text: str, modulus: Optional[str] = None) -> FieldSpec:
    """Parse ``p^h`` (or a bare prime) plus an optional ``c0,c1,...`` modulus."""
    text = text.strip()
    try:
        if "^" in text:
            p_s, h_s = text.split("^", 1)
            p, h = int(p_s), int(h_s)
        else:
            p, h = int(text), 1
    except ValueError as exc:
        raise FieldError(f"cannot parse field {text!r}; expected p^h") from exc
    mod = None
    if modulus:
        try:
            mod = [int(c) for c in modulus.split(",")]
        except ValueError as exc:
            raise FieldError(f"cannot parse modulus {modulus!r}") from exc
    return field_new(p, h, mod)


def arith(F: FieldSpec, a: int, b: int = 0, which: str = "add") -> int:
    """Scalar arithmetic; ``which`` is one of add, sub, mul, div, inv, pow.

    For ``pow`` the second operand is an integer exponent.
    """
    for x in (a,) if which in ("inv", "pow") else (a, b):
        if not 0 <= int(x) < F.q:
            raise FieldError(f"{x} is not an element of GF({F.name})")
    if which == "add":
        return int(F.add(a, b))
    if which == "sub":
        return int(F.sub(a, b))
    if which == "mul":
        return int(F.mul(a, b))
    if which == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return int(F.div(a, b))
    if which == "inv":
        return int(F.inv(a))
    if which == "pow":
        return int(F.pow(a, b))
    raise ValueError(f"unknown operation {which!r}")


def frobenius(F: FieldSpec, x, e: int):
    if not 0 <= e < F.h:
        raise FieldError(f"Frobenius exponent must lie in [0, {F.h - 1}]")
    out = F.frobenius(x, e)
    return int(out) if np.ndim(out) == 0 else out


def galois_inner(F: FieldSpec, x, y, e: int = 0) -> int:
    """e-Galois inner product ``sum(x_i * y_i ** (p**e))``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape:
        raise FieldError("vectors differ in length")
    if not 0 <= e < F.h:
        raise FieldError(f"Galois exponent must lie in [0, {F.h - 1}]")
    return vec_sum(F, F.mul(x, F.frobenius(y, e)))


def vec_sum(F: FieldSpec, v) -> int:
    v = np.asarray(v, dtype=np.int64).ravel()
    if F.p == 2:
        return int(np.bitwise_xor.reduce(v)) if v.size else 0
    if F.h == 1:
        return int(v.sum() % F.p)
    acc = 0
    scale = 1
    for _ in range(F.h):
        acc += int(((v // scale) % F.p).sum() % F.p) * scale
        scale *= F.p
    return acc
