from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandwich_rm.errors import (
    FieldTooLarge,
    NonPrime,
    NonPrimitiveModulus,
    OddExtension,
    ReducibleModulus,
)
from sandwich_rm.field import (
    CONWAY,
    build_field,
    canonical_modulus,
    field_for_q,
    is_irreducible,
    is_primitive_poly,
    least_primitive_poly,
    prime_power,
)

from oracles import poly_is_primitive, powers_of_x

GF81 = field_for_q(3, 4)
SMALL = [(2, 1, 4), (3, 1, 4), (2, 2, 4), (5, 1, 2), (3, 2, 2), (2, 1, 6)]


def test_gf81_primitive():
    ctx = GF81
    assert ctx.N == 80
    assert ctx.pow(ctx.alpha(), 80) == 0
    assert ctx.pow(ctx.alpha(), 40) != 0
    orders = {k for k in range(1, 81) if ctx.pow(1, k) == 0}
    assert min(orders) == 80


def test_gf16():
    ctx = build_field(2, 1, 4)
    assert ctx.N == 15 and ctx.q == 2


def test_subfield_sizes():
    ctx = GF81
    elems = ctx.elements()
    assert int(np.count_nonzero(ctx.in_subfield(elems, 2))) == 9
    assert int(np.count_nonzero(ctx.in_subfield(elems, 1))) == 3
    assert ctx.in_subfield(10, 2)
    assert not ctx.in_subfield(1, 1)


def test_log_arithmetic():
    ctx = GF81
    assert ctx.mul(3, 79) == 2
    assert ctx.inv(7) == 73
    a = 17
    assert ctx.add(a, ctx.neg(a)) == ctx.ZERO
    assert ctx.arith("mul", 3, 79) == 2
    assert ctx.arith("pow", 5, k=3) == 15


def test_frobenius():
    ctx = GF81
    assert ctx.frobenius(11, 1) == 33
    assert ctx.frobenius(ctx.ZERO, 3) == ctx.ZERO
    a = np.arange(ctx.N + 1)
    assert np.array_equal(ctx.frobenius(ctx.frobenius(a, 1), 3), a)


@pytest.mark.parametrize("p,l,n", SMALL)
def test_tables_match_schoolbook_powers(p, l, n):
    """alpha^i * alpha^j and alpha^i + alpha^j against polynomial arithmetic."""
    ctx = build_field(p, l, n)
    pw = powers_of_x(p, ctx.modulus)
    assert len(pw) == ctx.N
    index = {v: i for i, v in enumerate(pw)}
    for i in range(0, ctx.N, 3):
        for j in range(0, ctx.N, 5):
            s = tuple((a + b) % p for a, b in zip(pw[i], pw[j]))
            expect = index.get(s, ctx.ZERO)
            assert ctx.add(i, j) == expect
    assert [tuple(int(v) for v in ctx.digits[i]) for i in range(ctx.N)] == pw


@pytest.mark.parametrize("key", sorted(k for k in CONWAY if k[0] ** k[1] <= 5**4))
def test_conway_entries_are_primitive(key):
    p, d = key
    f = list(CONWAY[key])
    assert f[-1] == 1
    assert is_irreducible(f, p)
    assert is_primitive_poly(f, p)
    assert poly_is_primitive(p, f)
    assert tuple(canonical_modulus(p, d)) == tuple(f)


@pytest.mark.parametrize("p,d", [(2, 4), (3, 4), (5, 2), (2, 6), (3, 3)])
def test_least_primitive_is_primitive(p, d):
    f = least_primitive_poly(p, d)
    assert len(f) == d + 1 and poly_is_primitive(p, list(f))


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(Exception):
        prime_power(6)


def test_errors():
    with pytest.raises(NonPrime):
        build_field(4, 1, 2)
    with pytest.raises(OddExtension):
        build_field(3, 1, 3)
    with pytest.raises(ReducibleModulus):
        build_field(2, 1, 4, [1, 0, 1, 0, 1])  # (x^2+1)^2
    with pytest.raises(NonPrimitiveModulus):
        build_field(2, 1, 4, [1, 1, 1, 1, 1])  # irreducible, order 5
    with pytest.raises(FieldTooLarge):
        build_field(2, 1, 30)


def test_custom_modulus_and_descriptor():
    ctx = build_field(2, 1, 4, [1, 0, 0, 1, 1])
    assert ctx.modulus == (1, 0, 0, 1, 1)
    assert ctx.descriptor() == "GF(2^1)^4/19"
    assert GF81.descriptor() == "GF(3^1)^4/89"
    info = GF81.info()
    assert info["N"] == 80 and info["modulus"] == [2, 0, 0, 2, 1]


def test_fq_encoding():
    F = GF81.fq
    assert F.order == 3
    assert np.array_equal(F.add, np.array([[0, 1, 2], [1, 2, 0], [2, 0, 1]]))
    ctx4 = field_for_q(4, 2)
    F4 = ctx4.fq
    assert F4.order == 4 and F4.add[1, 1] == 0
    assert sorted(F4.mul[2, 1:].tolist()) == [1, 2, 3]


logs = st.integers(min_value=0, max_value=80)


@settings(max_examples=200, deadline=None)
@given(logs, logs, logs)
def test_field_axioms(a, b, c):
    ctx = GF81
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
    assert ctx.sub(ctx.add(a, b), b) == a
    if b != ctx.ZERO:
        assert ctx.mul(ctx.div(a, b), b) == a


@settings(max_examples=100, deadline=None)
@given(logs, st.integers(min_value=0, max_value=7))
def test_frobenius_is_power(a, k):
    ctx = GF81
    assert ctx.frobenius(a, k) == ctx.pow(a, 3**k)
