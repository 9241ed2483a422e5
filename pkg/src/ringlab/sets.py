"""Distinguished subsets and the closure/bracket/annihilator calculus.

An ElemSet is a finite subset of one ring, stored as a sorted tuple of
canonical payloads (set equality is sequence equality, so reports are
deterministic).  Additively closed sets carry a small reduced generator
sequence; bilinear operations (brackets, products, sandwich tests) only
ever touch generators, which keeps closure costs proportional to the
ring's additive rank instead of its cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError, NonEnumerableError
from .rings import Ring

CLOSURE_KINDS = ("raw", "additive", "subring", "ideal", "right_ideal", "lie")


class ElemSet:
    """Finite subset of a ring with an optional certified closure kind."""

    __slots__ = ("ring", "members", "member_set", "generators", "closure_kind", "_span")

    def __init__(self, ring: Ring, members_sorted: tuple, closure_kind: str, generators):
        self.ring = ring
        self.members = members_sorted
        self.member_set = frozenset(members_sorted)
        self.generators = generators
        self.closure_kind = closure_kind
        self._span = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, payload) -> bool:
        return payload in self.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElemSet)
            and self.ring.spec_text == other.ring.spec_text
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.ring.spec_text, self.members))

    def __repr__(self) -> str:
        return f"<ElemSet {self.ring.spec_text} size={len(self.members)} kind={self.closure_kind}>"

    @property
    def is_zero_set(self) -> bool:
        return self.members == (self.ring.zero,)

    def span_gens(self) -> tuple:
        """Reduced additive generators of the additive span of this set.

        For additively closed sets this generates the set itself; for raw
        sets it generates the additive closure, which is interchangeable
        for every bilinear use (sandwich conditions, brackets, products,
        annihilators) by additivity.
        """
        if self.generators is not None:
            return self.generators
        if self._span is None:
            _, gens = _additive_span(self.ring, self.members)
            self._span = tuple(gens)
        return self._span

    def describe(self) -> str:
        gens = self.span_gens()
        shown = ",".join(self.ring.format_elem(g) for g in gens)
        return f"add{{{shown}}}" if gens else "add{0}"


def make_set(ring: Ring, members, closure_kind: str = "raw", generators=None) -> ElemSet:
    if closure_kind not in CLOSURE_KINDS:
        raise ValueError(f"unknown closure kind {closure_kind!r}")
    ordered = tuple(sorted(set(members)))
    if not ordered:
        raise HypothesisError("empty subset")
    return ElemSet(ring, ordered, closure_kind, tuple(generators) if generators else None)


def full_set(ring: Ring) -> ElemSet:
    """The whole ring as an ElemSet (enumerable rings only)."""
    key = "full_set"
    cached = ring._memo.get(key)
    if cached is None:
        cached = ElemSet(ring, ring.element_list(), "ideal", ring.additive_generators)
        ring._memo[key] = cached
    return cached


def zero_set(ring: Ring) -> ElemSet:
    return ElemSet(ring, (ring.zero,), "additive", ())


def _require_enumerable(ring: Ring) -> None:
    if not ring.is_enumerable:
        raise NonEnumerableError(f"{ring.spec_text} is not enumerable")


def _additive_span(ring: Ring, seed) -> tuple[set, list]:
    """Smallest additive subgroup containing the seed, plus reduced generators."""
    members = {ring.zero}
    gens: list = []
    add, neg = ring.add, ring.neg
    for s in sorted(set(seed)):
        if s in members:
            continue
        gens.append(s)
        # cyclic subgroup generated by s (finite additive order)
        cyc = [ring.zero]
        cur = s
        while cur != ring.zero:
            cyc.append(cur)
            cur = add(cur, s)
        members = {add(m, c) for m in members for c in cyc}
    # subgroup of a finite group: negation closure is automatic, but keep it exact
    assert all(neg(m) in members for m in gens)
    return members, gens


def _extend_span(ring: Ring, members: set, gens: list, extra) -> tuple[set, list]:
    add = ring.add
    for s in sorted(set(extra)):
        if s in members:
            continue
        gens.append(s)
        cyc = [ring.zero]
        cur = s
        while cur != ring.zero:
            cyc.append(cur)
            cur = add(cur, s)
        members = {add(m, c) for m in members for c in cyc}
    return members, gens


def additively_closed(ring: Ring, members) -> bool:
    mset = set(members)
    if ring.zero not in mset:
        return False
    span, _ = _additive_span(ring, mset)
    return span == mset


def closure(ring: Ring, seed, mode: str) -> ElemSet:
    """Saturate the seed under the requested closure mode.

    Modes: additive, subring, ideal, right_ideal, lie.  Saturation
    multiplies or brackets generators only (against the current span
    generators and the ring's additive generators), which is exact by
    bilinearity.
    """
    _require_enumerable(ring)
    if isinstance(seed, ElemSet):
        seed = seed.members
    seed = list(seed)
    if not seed:
        raise HypothesisError("empty seed")
    members, gens = _additive_span(ring, seed)
    if mode == "additive":
        return ElemSet(ring, tuple(sorted(members)), "additive", tuple(gens))
    if mode not in CLOSURE_KINDS or mode == "raw":
        raise ValueError(f"unknown closure mode {mode!r}")
    ring_gens = ring.additive_generators
    mul, bracket = ring.mul, ring.bracket
    while True:
        if mode == "subring":
            produced = {mul(a, b) for a in gens for b in gens}
        elif mode == "ideal":
            produced = {mul(g, x) for x in gens for g in ring_gens}
            produced |= {mul(x, g) for x in gens for g in ring_gens}
        elif mode == "right_ideal":
            produced = {mul(x, g) for x in gens for g in ring_gens}
        else:  # lie
            produced = {bracket(x, g) for x in gens for g in ring_gens}
        new = produced - members
        if not new:
            return ElemSet(ring, tuple(sorted(members)), mode, tuple(gens))
        members, gens = _extend_span(ring, members, gens, new)


def special_subset(ring: Ring, kind: str) -> ElemSet:
    """One of the distinguished subsets Id, U, N, Z, E (cached per ring)."""
    _require_enumerable(ring)
    key = ("special", kind)
    cached = ring._memo.get(key)
    if cached is not None:
        return cached
    elems = ring.element_list()
    mul = ring.mul
    zero, one = ring.zero, ring.one
    if kind == "Id":
        result = make_set(ring, [e for e in elems if mul(e, e) == e], "raw")
    elif kind == "U":
        from .rings import ProductRing

        if isinstance(ring, ProductRing):
            # inverses in a direct product are componentwise
            import itertools

            factor_units = [special_subset(f, "U").members for f in ring.factors]
            result = make_set(ring, itertools.product(*factor_units), "raw")
        else:
            inv_map = {}
            for u in elems:
                for v in elems:
                    if mul(u, v) == one and mul(v, u) == one:
                        inv_map[u] = v
                        break
            ring._memo.setdefault("inverse_map", inv_map)
            result = make_set(ring, sorted(inv_map), "raw")
    elif kind == "N":
        # iterated squaring up to exponent >= cardinality bounds the nil index
        steps = max(1, (ring.cardinality - 1).bit_length())
        nil = []
        for a in elems:
            x = a
            for _ in range(steps + 1):
                if x == zero:
                    nil.append(a)
                    break
                x = mul(x, x)
        result = make_set(ring, nil, "raw")
    elif kind == "Z":
        gens = ring.additive_generators
        central = [z for z in elems if all(mul(z, g) == mul(g, z) for g in gens)]
        members, zgens = _additive_span(ring, central)
        assert members == set(central)
        result = ElemSet(ring, tuple(sorted(members)), "additive", tuple(zgens))
    elif kind == "E":
        idem = special_subset(ring, "Id")
        result = closure(ring, idem.members, "additive")
    else:
        raise ValueError(f"unknown special subset {kind!r}")
    ring._memo[key] = result
    return result


def bracket_set(ring: Ring, a: ElemSet, b: ElemSet) -> ElemSet:
    """Additive subgroup generated by all commutators [x, y], x in A, y in B."""
    _require_enumerable(ring)
    br = ring.bracket
    seeds = {br(x, y) for x in a.span_gens() for y in b.span_gens()}
    seeds.add(ring.zero)
    return closure(ring, seeds, "additive")


def derived_set(ring: Ring, op: str, a: ElemSet, b_or_n) -> ElemSet:
    """product = span{xy}; power_set = n-fold iterated product; elementwise_power = {x^n}."""
    _require_enumerable(ring)
    mul = ring.mul
    if op == "product":
        b: ElemSet = b_or_n
        seeds = {mul(x, y) for x in a.span_gens() for y in b.span_gens()}
        seeds.add(ring.zero)
        return closure(ring, seeds, "additive")
    if op == "power_set":
        n = int(b_or_n)
        if n < 1:
            raise HypothesisError("power_set requires n >= 1")
        acc = closure(ring, a.members, "additive")
        for _ in range(n - 1):
            acc = derived_set(ring, "product", acc, a)
        return acc
    if op == "elementwise_power":
        n = int(b_or_n)
        if n < 1:
            raise HypothesisError("elementwise_power requires n >= 1")
        return make_set(ring, {ring.pow_elem(x, n) for x in a.members}, "raw")
    raise ValueError(f"unknown derived-set operation {op!r}")


def annihilator(ring: Ring, x: ElemSet, side: str) -> ElemSet:
    """Left: {a : a*X = 0}; right: {a : X*a = 0}.  Result is a raw set."""
    _require_enumerable(ring)
    if side not in ("left", "right"):
        raise ValueError(f"annihilator side must be left or right, got {side!r}")
    gens = x.span_gens()
    mul, zero = ring.mul, ring.zero
    if side == "left":
        members = [a for a in ring.element_list() if all(mul(a, g) == zero for g in gens)]
    else:
        members = [a for a in ring.element_list() if all(mul(g, a) == zero for g in gens)]
    return make_set(ring, members, "raw")


@dataclass(frozen=True)
class SetFlags:
    is_lie_ideal: bool
    is_central: bool
    is_special_invariant: bool


def square_zero_elements(ring: Ring) -> tuple:
    key = "square_zero"
    cached = ring._memo.get(key)
    if cached is None:
        zero = ring.zero
        cached = tuple(t for t in ring.element_list() if ring.mul(t, t) == zero)
        ring._memo[key] = cached
    return cached


def set_predicates(ring: Ring, x: ElemSet) -> SetFlags:
    """Exhaustively decided structural flags for a subset."""
    _require_enumerable(ring)
    closed = additively_closed(ring, x.member_set)
    gens = x.span_gens()
    ring_gens = ring.additive_generators
    mul, bracket = ring.mul, ring.bracket
    lie = closed and all(bracket(g, r) in x.member_set for g in gens for r in ring_gens)
    central = all(mul(g, r) == mul(r, g) for g in gens for r in ring_gens)
    # conjugation by 1+t with t^2 = 0; (1+t)^-1 = 1-t
    probe = gens if closed else x.members
    one = ring.one
    invariant = True
    for t in square_zero_elements(ring):
        u = ring.add(one, t)
        v = ring.sub(one, t)
        if not all(mul(mul(u, m), v) in x.member_set for m in probe):
            invariant = False
            break
    return SetFlags(lie, central, invariant)


@dataclass(frozen=True)
class CenterDims:
    center_size: int
    dim_R_over_C: int
    dim_LC_over_C: int


def center_dimension(ring: Ring, l: ElemSet) -> CenterDims:
    """Dimensions of R and of L*Z(R) over the center (prime rings only)."""
    from .predicates import primeness

    _require_enumerable(ring)
    if primeness(ring).kind != "prime":
        raise HypothesisError(f"{ring.spec_text} is not prime; center is not a field")
    z = special_subset(ring, "Z")
    mul = ring.mul
    seeds = {mul(zg, xg) for zg in z.span_gens() for xg in l.span_gens()}
    seeds.add(ring.zero)
    lc = closure(ring, seeds, "additive")
    czi = len(z)

    def logdim(size: int) -> int:
        d = round(math_log(size, czi))
        if czi**d != size:
            raise HypothesisError(
                f"|set| = {size} is not a power of |Z(R)| = {czi} in {ring.spec_text}"
            )
        return d

    return CenterDims(czi, logdim(ring.cardinality), logdim(len(lc)))


def math_log(a: int, base: int) -> float:
    import math

    return math.log(a) / math.log(base)
