import random

import pytest

from salemsurf.errors import (ContextMismatch, LogOfZero, ParseError,
                              ReducibleModulus)
from salemsurf.gf2m import (FieldElement, dlog, embed, ext_context,
                            field_make, format_elem, frobenius, gf32,
                            min_subfield_degree, parse_elem, unembed)


def test_canonical_context_has_order_31_generator(ctx):
    assert ctx.m == 5
    x = ctx.one()
    seen = set()
    for _ in range(31):
        x = x * ctx.gen()
        seen.add(x.bits)
    assert x == ctx.one()
    assert len(seen) == 31


def test_defining_relation(ctx):
    # g^5 + g^2 = 1 in the canonical modulus
    assert ctx.gen_pow(5) + ctx.gen_pow(2) == ctx.one()
    assert ctx.gen_pow(5) + ctx.gen_pow(2) + ctx.one() == ctx.zero()


def test_prime_field():
    gf2 = field_make(1, 0b11)
    assert gf2.one() + gf2.one() == gf2.zero()
    assert gf2.mul_bits(1, 1) == 1


def test_reducible_modulus_rejected():
    # t^4 + t^2 + 1 = (t^2 + t + 1)^2
    with pytest.raises(ReducibleModulus):
        field_make(4, 0b10101)


def test_self_addition_vanishes(ctx):
    for bits in range(32):
        x = ctx.elem(bits)
        assert (x + x).bits == 0


def test_exponent_arithmetic(ctx):
    assert ctx.gen_pow(16) * ctx.gen_pow(20) == ctx.gen_pow(5)
    assert ctx.gen_pow(31) == ctx.one()


@pytest.mark.parametrize("m", [5, 10])
def test_multiplicative_group_order(m):
    f = ext_context(m)
    for bits in range(1, 1 << m):
        assert f.pow_bits(bits, (1 << m) - 1) == 1


def test_dlog(ctx):
    assert dlog(ctx.one()) == 0
    assert dlog(ctx.elem(0b101)) == 5  # t^2 + 1 = g^5
    with pytest.raises(LogOfZero):
        dlog(ctx.zero())
    for k in range(31):
        assert dlog(ctx.gen_pow(k)) == k


def test_context_interning(ctx):
    assert field_make(5, 0b100101) is ctx
    assert ext_context(5) is ctx
    assert ext_context(10) is ext_context(10)


def test_context_mismatch_raises(ctx):
    other = ext_context(10)
    with pytest.raises(ContextMismatch):
        ctx.gen() + other.gen()


def test_embedding_into_degree_10():
    sub, sup = gf32(), ext_context(10)
    assert embed(sub.zero(), sub, sup) == sup.zero()
    im = embed(sub.gen(), sub, sup)
    assert im ** 5 + im ** 2 + sup.one() == sup.zero()
    assert im ** 31 == sup.one()
    assert min_subfield_degree(im) == 5


def test_embedding_is_ring_homomorphism():
    sub, sup = gf32(), ext_context(10)
    rng = random.Random(101)
    for _ in range(40):
        a = sub.elem(rng.randrange(32))
        b = sub.elem(rng.randrange(32))
        assert embed(a + b, sub, sup) == embed(a, sub, sup) + embed(b, sub, sup)
        assert embed(a * b, sub, sup) == embed(a, sub, sup) * embed(b, sub, sup)
        assert unembed(embed(a, sub, sup), sub) == a


def test_frobenius(ctx):
    g = ctx.gen()
    assert frobenius(g, 5) == g
    assert frobenius(g, 1) == g * g
    rng = random.Random(102)
    for _ in range(40):
        a = ctx.elem(rng.randrange(32))
        b = ctx.elem(rng.randrange(32))
        assert frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1)
        assert frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1)


def test_element_text_format(ctx):
    assert format_elem(ctx.zero()) == "0"
    assert format_elem(ctx.one()) == "1"
    assert format_elem(ctx.gen()) == "g"
    assert format_elem(ctx.gen_pow(5)) == "g^5"
    assert parse_elem("g^5", ctx) == ctx.gen_pow(5)
    # bit-strings are low degree first
    assert parse_elem("0b01001", ctx).bits == 0b10010
    for bits in range(32):
        x = ctx.elem(bits)
        assert parse_elem(format_elem(x), ctx) == x


@pytest.mark.parametrize("bad", ["", "g^", "g^x", "0b", "0b012", "zeta"])
def test_element_parse_errors(bad, ctx):
    with pytest.raises(ParseError):
        parse_elem(bad, ctx)


def test_division_and_inverse(ctx):
    for bits in range(1, 32):
        x = ctx.elem(bits)
        assert x * x.inverse() == ctx.one()
        assert (x / x) == ctx.one()
    assert ctx.gen_pow(7) ** -1 == ctx.gen_pow(24)


def test_sqrt_is_inverse_frobenius(ctx):
    for bits in range(32):
        x = ctx.elem(bits)
        assert x.sqrt() * x.sqrt() == x
