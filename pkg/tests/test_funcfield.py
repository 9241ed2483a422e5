"""Exact GF(2)(t) arithmetic, the square test, and the invertible-translate rule."""

import random

import pytest

from ringlab import build_ring, evaluate, exceptional_example_check, is_square, translates_invertible
from ringlab.funcfield import (NEG_INFINITY, RF_ONE, RF_T, RF_ZERO, RatFunc, poly_degree,
                               poly_divmod, poly_format, poly_gcd, poly_is_square,
                               poly_mul, ratfunc_arith)

from oracles import poly_mul_int


def test_poly_basics():
    assert poly_degree(0) == NEG_INFINITY
    assert poly_degree(1) == 0
    assert poly_degree(0b1011) == 3
    assert poly_format(0b1011) == "t^3+t+1"
    assert poly_format(0) == "0"
    q, r = poly_divmod(0b1011, 0b11)
    assert poly_mul(q, 0b11) ^ r == 0b1011
    assert poly_gcd(0b101, 0b11) == 0b11  # t^2+1 = (t+1)^2 over GF(2)


def test_poly_mul_matches_oracle():
    rng = random.Random(2)
    for _ in range(200):
        a, b = rng.randrange(256), rng.randrange(256)
        assert poly_mul(a, b) == poly_mul_int(a, b)


def test_ratfunc_canonical_form():
    f = RatFunc.make(0b11, 0b101)  # (t+1)/(t^2+1)
    assert (f.num, f.den) == (1, 0b11)
    assert str(f) == "1/(t+1)"
    assert RatFunc.make(0, 0b110) == RF_ZERO
    assert RF_T + RF_T == RF_ZERO
    assert (RF_ONE / RF_T) * RF_T == RF_ONE
    with pytest.raises(ZeroDivisionError):
        RatFunc.make(1, 0)
    with pytest.raises(ZeroDivisionError):
        RF_ONE / RF_ZERO
    # normalizing a normalized value is the identity
    g = RatFunc.make(f.num, f.den)
    assert g == f


def test_ratfunc_arith_dispatch():
    assert ratfunc_arith("add", RF_T, RF_T) == RF_ZERO
    assert ratfunc_arith("mul", RF_ONE / RF_T, RF_T) == RF_ONE
    assert ratfunc_arith("sub", RF_T, RF_T) == RF_ZERO
    assert ratfunc_arith("div", RF_T, RF_T) == RF_ONE


def _random_ratfunc(rng, max_deg=6):
    num = rng.randrange(1 << (max_deg + 1))
    den = rng.randrange(1, 1 << (max_deg + 1))
    return RatFunc.make(num, den)


def test_field_axioms_on_random_triples():
    rng = random.Random(17)
    for _ in range(200):
        a, b, c = (_random_ratfunc(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + a == RF_ZERO
        if a != RF_ZERO:
            assert a * a.reciprocal() == RF_ONE


def test_is_square_on_random_squares_and_nonsquares():
    rng = random.Random(23)
    squares = 0
    while squares < 100:
        g = _random_ratfunc(rng)
        if g == RF_ZERO:
            continue
        assert is_square(g * g)
        assert not is_square(RF_T * g * g)
        squares += 1
    assert not is_square(RF_T)
    assert is_square(RatFunc.make(0b101))       # t^2+1 = (t+1)^2
    assert is_square(RatFunc.make(1, 0b100))    # 1/t^2
    assert poly_is_square(0)


def test_translates_invertible_cases():
    ring = build_ring("M(2,FF(2))")
    yes = evaluate(ring, "[[1,1],[t,1]]")
    assert translates_invertible(yes) == "yes"
    assert translates_invertible(evaluate(ring, "[[1,1],[1,1]]")) == "no"
    assert translates_invertible(evaluate(ring, "[[1,0],[0,0]]")) == "undecided"


def test_translates_yes_means_nonzero_determinants():
    ring = build_ring("M(2,FF(2))")
    a = evaluate(ring, "[[1,1],[t,1]]")
    rng = random.Random(31)
    betas = [RF_ZERO, RF_ONE, RF_T, RF_ONE / RF_T, RF_ONE + RF_T]
    while len(betas) < 20:
        betas.append(_random_ratfunc(rng))
    for beta in betas:
        shifted = ring.add(a, tuple(beta if i in (0, 3) else RF_ZERO for i in range(4)))
        assert ring.det(shifted) != RF_ZERO


@pytest.mark.parametrize("case", ["remark10i", "remark10ii", "example4"])
def test_exceptional_example_checks_pass(case):
    result = exceptional_example_check(case)
    assert result.verdict == "pass", [s for s in result.sub_assertions if not s.ok]


def test_exceptional_example_witness():
    result = exceptional_example_check("remark10i")
    named = {s.name: s for s in result.sub_assertions}
    assert named["canonical witness is a"].witness == "[[1,1],[1,1]]"


def test_unknown_case_rejected():
    with pytest.raises(ValueError):
        exceptional_example_check("remark99")
