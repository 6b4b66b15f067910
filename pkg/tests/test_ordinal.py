from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexpart.ordinal import (
    ONE, OMEGA, ZERO, Ordinal, OrdinalSyntaxError, add, cmp, format_ordinal,
    indecomposable_parts, leading_term, left_subtract, mul, natural_sum, omega_power,
    ordinal, parse_ordinal,
)
from strategies import deep_ordinals, small_ordinals, w

P = parse_ordinal


def test_cmp_examples():
    assert cmp(0, 0) == 0
    assert cmp(OMEGA, P("w+1")) < 0
    assert cmp(P("w^2"), P("w*5+3")) > 0


def _as_tuple(a: Ordinal, width=3):
    # a below w^width with natural coefficients as a lexicographic key
    key = [0] * width
    for e, c in a.terms:
        key[width - 1 - int(e)] = c
    return tuple(key)


@given(small_ordinals(max_exp=2, max_coef=10), small_ordinals(max_exp=2, max_coef=10))
def test_cmp_matches_tuple_order_below_w3(a, b):
    ka, kb = _as_tuple(a), _as_tuple(b)
    assert cmp(a, b) == (ka > kb) - (ka < kb)


def test_add_examples():
    assert add(1, OMEGA) == OMEGA
    assert add(OMEGA, 1) == P("w+1")
    assert add(P("w^2+w"), P("w^2")) == P("w^2*2")


def test_natural_sum_examples():
    assert natural_sum(OMEGA, P("w^2")) == P("w^2+w")
    assert natural_sum(OMEGA, OMEGA) == P("w*2")
    assert natural_sum(P("w^2+1"), P("w*3")) == P("w^2+w*3+1")


def test_mul_examples():
    assert mul(OMEGA, OMEGA) == P("w^2")
    assert mul(2, OMEGA) == OMEGA
    assert mul(P("w+1"), OMEGA) == P("w^2")
    assert mul(P("w+1"), 2) == P("w*2+1")


def test_parts_and_leading_term():
    assert indecomposable_parts(P("w^2+w*3+5")) == [P("w^2"), P("w*3"), ordinal(5)]
    assert indecomposable_parts(OMEGA) == [OMEGA]
    assert indecomposable_parts(P("w^(w)*2")) == [P("w^(w)*2")]
    assert leading_term(P("w^2+w")) == (ordinal(2), 1)
    assert leading_term(7) == (ZERO, 7)
    assert leading_term(P("w^(w)*3+w")) == (OMEGA, 3)


def test_rejects_malformed():
    with pytest.raises(ValueError):
        Ordinal([(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        Ordinal([(1, 0)])
    for bad in ("", "w+", "w^", "(w", "w*w", "x"):
        with pytest.raises(OrdinalSyntaxError):
            P(bad)


def test_left_subtract():
    assert left_subtract(OMEGA, P("w^2+w")) == P("w^2+w")
    assert left_subtract(OMEGA, P("w+3")) == ordinal(3)
    assert left_subtract(3, OMEGA) == OMEGA
    with pytest.raises(ValueError):
        left_subtract(P("w+1"), OMEGA)


@given(small_ordinals(), small_ordinals(), small_ordinals())
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@given(small_ordinals(), small_ordinals(), small_ordinals())
def test_add_strictly_monotone_on_the_right(a, b, c):
    if a < b:
        assert add(c, a) < add(c, b)


@given(small_ordinals(), small_ordinals(), small_ordinals())
def test_natural_sum_commutative_associative(a, b, c):
    assert natural_sum(a, b) == natural_sum(b, a)
    assert natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c))


def _interleavings(xs, ys):
    if not xs:
        yield list(ys)
        return
    if not ys:
        yield list(xs)
        return
    for rest in _interleavings(xs[1:], ys):
        yield [xs[0]] + rest
    for rest in _interleavings(xs, ys[1:]):
        yield [ys[0]] + rest


def _ordinal_sum(parts):
    total = ZERO
    for p in parts:
        total = add(total, p)
    return total


@given(small_ordinals(), small_ordinals())
def test_natural_sum_is_max_interleaving(a, b):
    best = max(_ordinal_sum(s) for s in _interleavings(a.terms and indecomposable_parts(a),
                                                        b.terms and indecomposable_parts(b)))
    assert natural_sum(a, b) == best


@given(small_ordinals(), small_ordinals(), small_ordinals())
def test_mul_left_distributes(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(small_ordinals(), small_ordinals(), small_ordinals())
def test_mul_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(deep_ordinals())
def test_parse_format_round_trip(a):
    assert parse_ordinal(format_ordinal(a)) == a


@given(deep_ordinals(), deep_ordinals())
def test_cmp_total_and_antisymmetric(a, b):
    assert cmp(a, b) == -cmp(b, a)
    assert (cmp(a, b) == 0) == (a == b)


@given(deep_ordinals())
def test_parts_sum_back(a):
    if a.is_zero():
        with pytest.raises(ValueError):
            indecomposable_parts(a)
        return
    assert _ordinal_sum(indecomposable_parts(a)) == a


@given(small_ordinals(), small_ordinals())
def test_left_subtract_inverts_add(a, b):
    # left cancellation
    assert left_subtract(a, add(a, b)) == b
