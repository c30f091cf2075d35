import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmds.errors import FieldError
from lmds.gf import (
    DEFAULT_MODULI,
    arith,
    field_new,
    frobenius,
    galois_inner,
    is_irreducible,
    parse_field,
)

SMALL = [(p, h) for (p, h) in DEFAULT_MODULI if p**h <= 64]


def poly_mulmod(a, b, mod, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    h = len(mod) - 1
    for top in range(len(out) - 1, h - 1, -1):
        c = out[top]
        if c:
            for j in range(h + 1):
                out[top - h + j] = (out[top - h + j] - c * mod[j]) % p
    return (out + [0] * h)[:h]


def to_int(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


def test_gf8_default_modulus_and_order():
    F = field_new(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    # order of x computed with plain polynomial arithmetic
    x, cur = [0, 1, 0], [1, 0, 0]
    orders = []
    for i in range(1, 8):
        cur = poly_mulmod(cur, x, list(F.modulus), 2)
        if cur == [1, 0, 0]:
            orders.append(i)
    assert orders == [7]
    assert F.order == 7


def test_prime_field_alpha():
    F = field_new(3, 1)
    assert F.alpha == 2


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError, match="reducible"):
        field_new(2, 3, [1, 1, 1, 1])


def test_nonprimitive_modulus_rejected():
    # x^4+x^3+x^2+x+1 is irreducible over GF(2) but x has order 5
    assert is_irreducible((1, 1, 1, 1, 1), 2)
    with pytest.raises(FieldError, match="primitive"):
        field_new(2, 4, [1, 1, 1, 1, 1])


@pytest.mark.parametrize("bad", ["6^1", "2^0", "x^2", "4"])
def test_parse_field_errors(bad):
    with pytest.raises(FieldError):
        parse_field(bad)


def test_arith_examples():
    F = field_new(2, 3)
    a = F.alpha
    assert arith(F, a, F.power_of_alpha(6), "mul") == 1
    assert F.power_of_alpha(3) == 3  # alpha + 1
    assert arith(field_new(3), 2, which="inv") == 2
    with pytest.raises(ZeroDivisionError):
        arith(F, 3, 0, "div")
    with pytest.raises(FieldError):
        arith(F, 8, 1, "add")


def test_frobenius_examples():
    F8, F9 = field_new(2, 3), field_new(3, 2)
    assert frobenius(F8, F8.alpha, 1) == F8.power_of_alpha(2)
    assert frobenius(F9, F9.alpha, 1) == F9.power_of_alpha(3)
    with pytest.raises(FieldError):
        frobenius(F8, 1, 3)


def test_galois_inner_examples():
    F8, F4 = field_new(2, 3), field_new(2, 2)
    assert galois_inner(F8, [1, 1], [1, 1], 0) == 0
    a = F4.alpha
    assert galois_inner(F4, [a, 0], [a, 1], 1) == 1
    assert galois_inner(F4, [a, 3], [0, 0], 1) == 0


@pytest.mark.parametrize("p,h", SMALL)
def test_mul_matches_polynomial_arithmetic(p, h):
    F = field_new(p, h)
    digits = lambda x: [(x // p**i) % p for i in range(h)]
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == to_int(poly_mulmod(digits(a), digits(b), list(F.modulus), p), p)


@pytest.mark.parametrize("p,h", SMALL)
def test_field_axioms_exhaustive(p, h):
    F = field_new(p, h)
    e = np.arange(F.q)
    A, B = np.meshgrid(e, e)
    assert np.array_equal(F.add(A, B), F.add(B, A))
    assert np.array_equal(F.mul(A, B), F.mul(B, A))
    assert np.array_equal(F.add(F.sub(A, B), B), A)
    nz = e[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert sorted(F.power_of_alpha(i) for i in range(F.q - 1)) == list(nz)
    for x in e:
        assert F.frobenius(x, 0) == x
        y = x
        for _ in range(h):
            y = F.frobenius(y, 1)
        assert y == x


@given(st.sampled_from(SMALL), st.data())
def test_distributivity_and_frobenius_homomorphism(ph, data):
    F = field_new(*ph)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    e = data.draw(st.integers(0, F.h - 1))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.frobenius(F.add(a, b), e) == F.add(F.frobenius(a, e), F.frobenius(b, e))
    assert F.frobenius(F.mul(a, b), e) == F.mul(F.frobenius(a, e), F.frobenius(b, e))
    assert F.pow(a, F.q) == a


def test_parse_element_forms():
    F = field_new(2, 3)
    assert F.parse_element("a^3") == 3
    assert F.parse_element("5") == 5
    assert F.format_element(0) == "0"
    assert F.parse_element(F.format_element(6)) == 6
