"""Enumeration of additive subgroups and Lie ideals of small rings."""

from __future__ import annotations

from .errors import HypothesisError, NonEnumerableError
from .rings import Ring
from .sets import ElemSet, _additive_span, _extend_span, special_subset

MAX_ALL = 256
MAX_LIE = 6561


def enumerate_additive_subgroups(ring: Ring, filt: str = "all") -> tuple[ElemSet, ...]:
    """All additive subgroups, or just the (noncentral) Lie ideals.

    filter=all walks the subgroup lattice by single-generator extensions
    (|R| <= 256).  The lie filters saturate the lie-closures of single
    elements under pairwise additive joins, which reaches every Lie ideal
    because each one is the join of the closures of its elements
    (|R| <= 6561).  Output is deduplicated and sorted by (size, members).
    """
    if not ring.is_enumerable:
        raise NonEnumerableError(f"{ring.spec_text} is not enumerable")
    if filt not in ("all", "lie_ideals", "noncentral_lie_ideals"):
        raise ValueError(f"unknown lattice filter {filt!r}")
    key = ("lattice", filt)
    cached = ring._memo.get(key)
    if cached is not None:
        return cached
    if filt == "all":
        if ring.cardinality > MAX_ALL:
            raise HypothesisError(
                f"{ring.spec_text} has {ring.cardinality} elements; filter=all allows <= {MAX_ALL}"
            )
        result = _all_subgroups(ring)
    else:
        if ring.cardinality > MAX_LIE:
            raise HypothesisError(
                f"{ring.spec_text} has {ring.cardinality} elements; lie filters allow <= {MAX_LIE}"
            )
        result = _lie_ideals(ring)
        if filt == "noncentral_lie_ideals":
            z = special_subset(ring, "Z").member_set
            result = tuple(s for s in result if not (s.member_set <= z))
    ring._memo[key] = result
    return result


def _all_subgroups(ring: Ring) -> tuple[ElemSet, ...]:
    elems = ring.element_list()
    trivial = frozenset({ring.zero})
    seen: dict[frozenset, tuple] = {trivial: ()}
    frontier = [(trivial, ())]
    while frontier:
        members, gens = frontier.pop()
        for g in elems:
            if g in members:
                continue
            new_members, new_gens = _extend_span(ring, set(members), list(gens), [g])
            fs = frozenset(new_members)
            if fs not in seen:
                seen[fs] = tuple(new_gens)
                frontier.append((fs, tuple(new_gens)))
    return _as_sorted_sets(ring, seen, "additive")


def _lie_ideals(ring: Ring) -> tuple[ElemSet, ...]:
    from .sets import closure

    seen: dict[frozenset, tuple] = {}
    for g in ring.element_list():
        c = closure(ring, [g], "lie")
        seen.setdefault(c.member_set, c.span_gens())
    # close under pairwise joins until stable; the join of two Lie ideals is
    # their additive span, itself a Lie ideal
    worklist = list(seen.items())
    while worklist:
        next_round = []
        current = list(seen.items())
        for fs_a, gens_a in worklist:
            for fs_b, gens_b in current:
                if fs_a <= fs_b or fs_b <= fs_a:
                    continue
                members, gens = _additive_span(ring, gens_a + gens_b)
                fs = frozenset(members)
                if fs not in seen:
                    seen[fs] = tuple(gens)
                    next_round.append((fs, tuple(gens)))
        worklist = next_round
    return _as_sorted_sets(ring, seen, "lie")


def _as_sorted_sets(ring: Ring, seen: dict, kind: str) -> tuple[ElemSet, ...]:
    out = []
    for members, gens in seen.items():
        ordered = tuple(sorted(members))
        out.append(ElemSet(ring, ordered, kind, tuple(gens)))
    out.sort(key=lambda s: (len(s.members), s.members))
    return tuple(out)
