"""Subgroup and Lie-ideal lattices."""

import pytest

from ringlab import (HypothesisError, NonEnumerableError, build_ring, closure,
                     enumerate_additive_subgroups, evaluate, set_predicates,
                     special_subset)


def test_m2f2_subgroup_count():
    ring = build_ring("M(2,GF(2))")
    subgroups = enumerate_additive_subgroups(ring, "all")
    assert len(subgroups) == 67
    # every output really is an additive subgroup
    for s in subgroups[:20]:
        assert ring.zero in s.member_set
        for a in s.members:
            for b in s.members:
                assert ring.add(a, b) in s.member_set


def test_m2f2_lie_ideals_include_expected():
    ring = build_ring("M(2,GF(2))")
    lie = enumerate_additive_subgroups(ring, "lie_ideals")
    found = {s.members for s in lie}
    zero = ring.zero
    one = ring.one
    e12 = evaluate(ring, "e(1,2)")
    swap = evaluate(ring, "[[0,1],[1,0]]")
    assert (zero,) in found
    assert tuple(sorted([zero, one])) in found
    assert closure(ring, [e12], "lie").members in found
    assert closure(ring, [one, swap], "additive").members in found
    trace_zero = tuple(sorted(a for a in ring.element_list()
                              if ring.trace(a) == ring.base.zero))
    assert trace_zero in found
    assert ring.element_list() in found
    assert len(lie) == 7


@pytest.mark.parametrize("spec", [
    "Z(4)", "Z(6)", "GF(4)", "GF(8)", "GF(9)", "UT(2,GF(2))", "UT(2,GF(3))",
    "M(2,GF(2))", "M(2,GF(3))", "prod(M(2,GF(2)),GF(2))",
])
def test_lie_filter_complete_against_brute_force(spec):
    ring = build_ring(spec)
    everything = enumerate_additive_subgroups(ring, "all")
    brute = {s.members for s in everything if set_predicates(ring, s).is_lie_ideal}
    fast = {s.members for s in enumerate_additive_subgroups(ring, "lie_ideals")}
    assert fast == brute


def test_commutative_ring_every_subgroup_is_lie_ideal():
    ring = build_ring("GF(4)")
    assert len(enumerate_additive_subgroups(ring, "all")) == \
        len(enumerate_additive_subgroups(ring, "lie_ideals")) == 5


def test_noncentral_filter():
    ring = build_ring("M(2,GF(2))")
    z = special_subset(ring, "Z").member_set
    noncentral = enumerate_additive_subgroups(ring, "noncentral_lie_ideals")
    assert len(noncentral) == 5
    for s in noncentral:
        assert not (s.member_set <= z)


def test_m3f2_lie_lattice():
    ring = build_ring("M(3,GF(2))")
    lie = enumerate_additive_subgroups(ring, "lie_ideals")
    assert sorted(len(s) for s in lie) == [1, 2, 256, 512]
    noncentral = enumerate_additive_subgroups(ring, "noncentral_lie_ideals")
    assert sorted(len(s) for s in noncentral) == [256, 512]


def test_limits():
    with pytest.raises(HypothesisError):
        enumerate_additive_subgroups(build_ring("M(3,GF(2))"), "all")
    with pytest.raises(NonEnumerableError):
        enumerate_additive_subgroups(build_ring("M(2,FF(2))"), "lie_ideals")
    with pytest.raises(ValueError):
        enumerate_additive_subgroups(build_ring("Z(4)"), "everything")


def test_lattice_deterministic():
    ring = build_ring("M(2,GF(3))")
    first = [s.members for s in enumerate_additive_subgroups(ring, "all")]
    ring._memo.pop(("lattice", "all"))
    second = [s.members for s in enumerate_additive_subgroups(ring, "all")]
    assert first == second
