"""Inner derivations: images, criteria, and the brute-force oracle."""

import random

import pytest

from ringlab import (HypothesisError, InnerDerivation, bracket_set, build_ring,
                     cor2_criterion, d_semiprime_oracle, derivation_image, evaluate,
                     full_set, make_set, thm21_criterion)


@pytest.fixture(scope="module")
def m2f2():
    return build_ring("M(2,GF(2))")


@pytest.fixture(scope="module")
def m2f3():
    return build_ring("M(2,GF(3))")


@pytest.mark.parametrize("spec", ["Z(6)", "GF(9)", "M(2,GF(2))", "UT(2,GF(3))"])
def test_leibniz_rule_exhaustive(spec):
    ring = build_ring(spec)
    elems = ring.element_list()
    for b in elems[:: max(1, len(elems) // 8)]:
        d = InnerDerivation(ring, b)
        for x in elems:
            for y in elems:
                assert d.apply(ring.mul(x, y)) == ring.add(
                    ring.mul(d.apply(x), y), ring.mul(x, d.apply(y))
                )


def test_leibniz_rule_sampled_large():
    ring = build_ring("M(3,GF(2))")
    rng = random.Random(13)
    elems = ring.element_list()
    for _ in range(300):
        b, x, y = (rng.choice(elems) for _ in range(3))
        d = InnerDerivation(ring, b)
        assert d.apply(ring.mul(x, y)) == ring.add(
            ring.mul(d.apply(x), y), ring.mul(x, d.apply(y))
        )


def test_derivation_image_examples(m2f2, m2f3):
    img = derivation_image(m2f2, evaluate(m2f2, "e(1,2)"), full_set(m2f2))
    assert len(img) == 4
    assert img.member_set == {m2f2.zero, evaluate(m2f2, "e(1,2)"), m2f2.one,
                              evaluate(m2f2, "I+e(1,2)")}
    assert derivation_image(m2f2, m2f2.one, full_set(m2f2)).is_zero_set
    img3 = derivation_image(m2f3, evaluate(m2f3, "e(1,1)"), full_set(m2f3))
    assert len(img3) == 9


def test_derivation_image_requires_additively_closed(m2f2):
    raw_not_closed = make_set(m2f2, [m2f2.one, evaluate(m2f2, "e(1,2)")])
    with pytest.raises(HypothesisError):
        derivation_image(m2f2, m2f2.one, raw_not_closed)


def test_image_inside_commutator_span(m2f2, m2f3):
    for ring in (m2f2, m2f3):
        rr = bracket_set(ring, full_set(ring), full_set(ring))
        for b in ring.element_list()[:: max(1, ring.cardinality // 16)]:
            img = derivation_image(ring, b, full_set(ring))
            assert img.member_set <= rr.member_set


def test_thm21_criterion_examples(m2f2, m2f3):
    assert not thm21_criterion(m2f2, evaluate(m2f2, "e(1,2)"))
    assert thm21_criterion(m2f2, evaluate(m2f2, "[[0,1],[1,1]]"))
    assert not thm21_criterion(m2f3, m2f3.zero)
    with pytest.raises(HypothesisError):
        thm21_criterion(build_ring("Z(6)"), 1)


def test_cor2_criterion_examples(m2f2, m2f3):
    assert cor2_criterion(m2f2, evaluate(m2f2, "[[0,1],[1,1]]"))
    assert not cor2_criterion(m2f2, evaluate(m2f2, "e(1,2)"))
    assert cor2_criterion(m2f3, evaluate(m2f3, "[[0,2],[1,0]]"))
    with pytest.raises(HypothesisError):
        cor2_criterion(build_ring("UT(2,GF(2))"), build_ring("UT(2,GF(2))").one)
    with pytest.raises(HypothesisError):
        cor2_criterion(build_ring("M(2,Z(4))"), build_ring("M(2,Z(4))").one)


def test_oracle_examples(m2f2, m2f3):
    assert not d_semiprime_oracle(m2f2, evaluate(m2f2, "e(1,2)"), full_set(m2f2)).holds
    assert d_semiprime_oracle(m2f2, evaluate(m2f2, "[[0,1],[1,1]]"), full_set(m2f2)).holds
    v = d_semiprime_oracle(m2f3, evaluate(m2f3, "e(1,1)"), full_set(m2f3))
    assert not v.holds
    a = v.witness
    img = derivation_image(m2f3, evaluate(m2f3, "e(1,1)"), full_set(m2f3))
    assert all(m2f3.mul(m2f3.mul(a, x), a) == m2f3.zero for x in img.members)


def test_oracle_degenerate_central_b(m2f2):
    v = d_semiprime_oracle(m2f2, m2f2.one, full_set(m2f2))
    assert not v.holds and v.witness == m2f2.one


def test_criterion_oracle_equivalence_small_sweep(m2f2):
    for b in m2f2.element_list():
        assert thm21_criterion(m2f2, b) == d_semiprime_oracle(m2f2, b, full_set(m2f2)).holds
        assert cor2_criterion(m2f2, b) == thm21_criterion(m2f2, b)
