"""The registry of verifiable statements.

Each check runs against one catalog ring and returns a CheckResult.
Checks declare their hypotheses and report skipped("hypotheses unmet")
or skipped("non-enumerable") when a ring does not qualify; a "pass"
always means the statement was actually verified.  Expected-failure
directions (counterexample reproductions) are encoded as positive
sub-assertions that the failure occurs with its documented witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import derivations, funcfield, predicates, sets
from .errors import HypothesisError
from .exprs import parse_subset
from .lattice import enumerate_additive_subgroups
from .predicates import classify_ring, primeness, x_prime, x_semiprime
from .result import CheckResult, SubAssertion, from_assertions, skipped
from .rings import GFRing, MatrixRing, ProductRing, Ring, UpperTriRing, build_ring
from .sets import ElemSet, _additive_span, annihilator, bracket_set, closure, derived_set
from .sets import full_set, set_predicates, special_subset, square_zero_elements

X_SUITE = ("add{1}", "Id", "U", "N", "Z", "E", "[E,R]", "[R,R]", "R")

LATTICE_RING_LIMIT = 512      # lie-ideal sweeps run on rings up to this size
LEMMA_LATTICE_LIMIT = 512
B_SWEEP_FULL = 256            # full b sweeps up to this size, else sampled
B_SAMPLE_LARGE = 200
B_SAMPLE_THM23 = 64
SAMPLE_SEED = 20230814

_SUBSET_CACHE: dict[tuple[str, str], ElemSet] = {}


def named_subset(ring: Ring, expr: str) -> ElemSet:
    key = (ring.spec_text, expr)
    cached = _SUBSET_CACHE.get(key)
    if cached is None:
        cached = parse_subset(ring, expr)
        _SUBSET_CACHE[key] = cached
    return cached


def _fmt(ring: Ring, payload) -> str:
    return ring.format_elem(payload)


def _fmt_pair(ring: Ring, pair) -> str:
    return f"a={ring.format_elem(pair[0])}, b={ring.format_elem(pair[1])}"


def _lie_lattice(ring: Ring) -> tuple[ElemSet, ...]:
    return enumerate_additive_subgroups(ring, "lie_ideals")


def _noncentral_lie(ring: Ring) -> tuple[ElemSet, ...]:
    return enumerate_additive_subgroups(ring, "noncentral_lie_ideals")


def _b_sample(ring: Ring, count: int) -> tuple:
    elems = ring.element_list()
    if len(elems) <= count:
        return elems
    rng = random.Random(SAMPLE_SEED)
    return tuple(sorted(rng.sample(elems, count)))


# ---------------------------------------------------------------------------
# gates
# ---------------------------------------------------------------------------

def _enumerable(ring: Ring) -> str | None:
    return None if ring.is_enumerable else "non-enumerable"


def _semiprime(ring: Ring) -> str | None:
    r = _enumerable(ring)
    if r:
        return r
    return None if primeness(ring).kind != "not_semiprime" else "hypotheses unmet"


def _prime(ring: Ring) -> str | None:
    r = _enumerable(ring)
    if r:
        return r
    return None if primeness(ring).kind == "prime" else "hypotheses unmet"


def _small_lattice(ring: Ring, limit: int = LEMMA_LATTICE_LIMIT) -> str | None:
    r = _enumerable(ring)
    if r:
        return r
    return None if ring.cardinality <= limit else "hypotheses unmet"


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def chk_definition(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("definition", ring.spec_text, reason)
    one_set = named_subset(ring, "add{1}")
    cls = classify_ring(ring)
    sp = x_semiprime(ring, one_set)
    pr = x_prime(ring, one_set)
    subs = [
        SubAssertion(
            "X={1}: x_semiprime == reduced",
            sp.holds == cls.reduced,
            None if sp.holds else _fmt(ring, sp.witness),
        ),
        SubAssertion(
            "X={1}: x_prime == domain",
            pr.holds == cls.domain,
            None if pr.holds else _fmt_pair(ring, pr.witness),
        ),
    ]
    return from_assertions("definition", ring.spec_text, subs)


def chk_prop1(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason:
        return skipped("prop1", ring.spec_text, reason)
    subs = []
    xs = [(expr, named_subset(ring, expr)) for expr in X_SUITE]
    if ring.cardinality <= 100:
        xs += [(f"lie#{i}", l) for i, l in enumerate(_lie_lattice(ring)) if not l.is_zero_set]
    for name, x in xs:
        sp = x_semiprime(ring, x)
        if not sp.holds:
            continue
        pr = x_prime(ring, x)
        subs.append(
            SubAssertion(
                f"{name}: x_semiprime implies x_prime",
                pr.holds,
                None if pr.holds else _fmt_pair(ring, pr.witness),
            )
        )
    if not subs:
        subs.append(SubAssertion("no X-semiprime subset exercised", True))
    return from_assertions("prop1", ring.spec_text, subs)


def chk_thm9(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("thm9", ring.spec_text, reason)
    e_sp = x_semiprime(ring, named_subset(ring, "E"))
    if not e_sp.holds:
        return from_assertions(
            "thm9",
            ring.spec_text,
            [SubAssertion("not E-semiprime: implication vacuous", True, _fmt(ring, e_sp.witness))],
        )
    u_sp = x_semiprime(ring, named_subset(ring, "U"))
    return from_assertions(
        "thm9",
        ring.spec_text,
        [SubAssertion("E-semiprime implies U-semiprime", u_sp.holds,
                      None if u_sp.holds else _fmt(ring, u_sp.witness))],
    )


def chk_lem16(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("lem16", ring.spec_text, reason)
    e = named_subset(ring, "E")
    flags = set_predicates(ring, e)
    er = bracket_set(ring, e, full_set(ring))
    u_span = closure(ring, named_subset(ring, "U").members, "additive")
    subs = [
        SubAssertion("E(R) is a Lie ideal", flags.is_lie_ideal),
        SubAssertion("[E,R] inside the additive span of U(R)",
                     er.member_set <= u_span.member_set),
    ]
    return from_assertions("lem16", ring.spec_text, subs)


def chk_lem17(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("lem17", ring.spec_text, reason)
    e = named_subset(ring, "E")
    er = bracket_set(ring, e, full_set(ring))
    ee = bracket_set(ring, e, e)
    return from_assertions(
        "lem17",
        ring.spec_text,
        [SubAssertion("[E,R] == [E,E]", er == ee)],
    )


def _lemma_lattice_check(check_id: str, ring: Ring, per_l) -> CheckResult:
    reason = _small_lattice(ring)
    if reason:
        return skipped(check_id, ring.spec_text, reason)
    subs = []
    for l in _lie_lattice(ring):
        subs.extend(per_l(l))
    if not subs:
        subs.append(SubAssertion("no applicable Lie ideal", True))
    return from_assertions(check_id, ring.spec_text, subs)


def chk_lem5(ring: Ring) -> CheckResult:
    def per_l(l: ElemSet):
        ll = bracket_set(ring, l, l)
        lhs = closure(ring, ll.members, "ideal")
        l_sq = derived_set(ring, "product", l, l)
        rhs = closure(ring, set(l.members) | set(l_sq.members), "additive")
        ok = lhs.member_set <= rhs.member_set
        return [SubAssertion(f"I([L,L]) inside L+L^2 for L={l.describe()}", ok)]

    return _lemma_lattice_check("lem5", ring, per_l)


def chk_lem4ii(ring: Ring) -> CheckResult:
    def per_l(l: ElemSet):
        ll_ideal = closure(ring, bracket_set(ring, l, l).members, "ideal")
        left = bracket_set(ring, ll_ideal, full_set(ring))
        mid = bracket_set(ring, l, full_set(ring))
        ok = left.member_set <= mid.member_set <= l.member_set
        return [SubAssertion(f"[I([L,L]),R] in [L,R] in L for L={l.describe()}", ok)]

    return _lemma_lattice_check("lem4ii", ring, per_l)


def chk_lem13(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and predicates.is_commutative(ring):
        reason = "hypotheses unmet"
    if reason:
        return skipped("lem13", ring.spec_text, reason)
    rr = bracket_set(ring, full_set(ring), full_set(ring))
    inner = bracket_set(ring, rr, rr)
    return from_assertions(
        "lem13",
        ring.spec_text,
        [SubAssertion("[[R,R],[R,R]] is nonzero (I = J = R)", not inner.is_zero_set)],
    )


def chk_thm3(ring: Ring) -> CheckResult:
    pk = primeness(ring).kind if ring.is_enumerable else None

    def per_l(l: ElemSet):
        crit = predicates.thm3_criterion(ring, l)
        out = []
        if pk in ("prime", "semiprime_not_prime") and crit.subring_closure_is_R:
            v = x_semiprime(ring, l)
            out.append(
                SubAssertion(
                    f"subring closure = R forces L-semiprime, L={l.describe()}",
                    v.holds,
                    None if v.holds else _fmt(ring, v.witness),
                )
            )
        if pk == "prime" and crit.bracket_LL_nonzero:
            v = x_prime(ring, l)
            out.append(
                SubAssertion(
                    f"[L,L] != 0 forces L-prime, L={l.describe()}",
                    v.holds,
                    None if v.holds else _fmt_pair(ring, v.witness),
                )
            )
        return out

    return _lemma_lattice_check("thm3", ring, per_l)


def chk_thm5(ring: Ring) -> CheckResult:
    pk = primeness(ring).kind if ring.is_enumerable else None
    r_full = full_set(ring) if ring.is_enumerable else None

    def per_l(l: ElemSet):
        ll_ideal = closure(ring, bracket_set(ring, l, l).members, "ideal")
        if len(ll_ideal) != ring.cardinality:
            return []
        out = []
        lr = bracket_set(ring, l, r_full)
        rr = bracket_set(ring, r_full, r_full)
        out.append(SubAssertion(f"[L,R] == [R,R] for L={l.describe()}", lr == rr))
        rr_sq = derived_set(ring, "power_set", rr, 2)
        out.append(SubAssertion("R == [R,R]^2", len(rr_sq) == ring.cardinality))
        if pk in ("prime", "semiprime_not_prime"):
            v = x_semiprime(ring, lr)
            out.append(
                SubAssertion(
                    "semiprime case: R is [L,R]-semiprime",
                    v.holds,
                    None if v.holds else _fmt(ring, v.witness),
                )
            )
        return out

    return _lemma_lattice_check("thm5", ring, per_l)


def chk_remark6i(ring: Ring) -> CheckResult:
    applies = (
        ring.is_enumerable
        and isinstance(ring, MatrixRing)
        and not isinstance(ring, UpperTriRing)
        and ring.n == 2
        and isinstance(ring.base, GFRing)
        and ring.characteristic == 2
    )
    if not applies:
        return skipped("remark6i", ring.spec_text, "hypotheses unmet")
    l = bracket_set(ring, full_set(ring), full_set(ring))
    ll = bracket_set(ring, l, l)
    z = special_subset(ring, "Z")
    ideal_ll = closure(ring, ll.members, "ideal")
    v = x_semiprime(ring, ll)
    subs = [
        SubAssertion("[L,L] nonzero for L=[R,R]", not ll.is_zero_set),
        SubAssertion("[L,L] central", ll.member_set <= z.member_set),
        SubAssertion("I([L,L]) = R", len(ideal_ll) == ring.cardinality),
        SubAssertion(
            "R is not [L,L]-semiprime",
            not v.holds,
            None if v.holds else _fmt(ring, v.witness),
        ),
    ]
    return from_assertions("remark6i", ring.spec_text, subs)


def chk_thm7(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and not classify_ring(ring).has_nontrivial_idempotent:
        reason = "hypotheses unmet"
    if reason:
        return skipped("thm7", ring.spec_text, reason)
    v = x_prime(ring, named_subset(ring, "[E,R]"))
    return from_assertions(
        "thm7",
        ring.spec_text,
        [SubAssertion("R is [E,R]-prime", v.holds,
                      None if v.holds else _fmt_pair(ring, v.witness))],
    )


def chk_thm11(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and predicates.is_commutative(ring):
        reason = "hypotheses unmet"
    if reason:
        return skipped("thm11", ring.spec_text, reason)
    v = x_prime(ring, named_subset(ring, "[R,R]"))
    return from_assertions(
        "thm11",
        ring.spec_text,
        [SubAssertion("R is [I,J]-prime with I = J = R", v.holds,
                      None if v.holds else _fmt_pair(ring, v.witness))],
    )


def _matrix_over_semiprime(ring: Ring) -> bool:
    return (
        ring.is_enumerable
        and isinstance(ring, MatrixRing)
        and not isinstance(ring, UpperTriRing)
        and ring.n > 1
        and ring.base.is_enumerable
        and primeness(ring.base).kind != "not_semiprime"
    )


def chk_thm4(ring: Ring) -> CheckResult:
    if not _matrix_over_semiprime(ring):
        reason = _enumerable(ring) or "hypotheses unmet"
        return skipped("thm4", ring.spec_text, reason)
    v = x_semiprime(ring, named_subset(ring, "[E,R]"))
    return from_assertions(
        "thm4",
        ring.spec_text,
        [SubAssertion("matrix ring over semiprime base is [E,R]-semiprime", v.holds,
                      None if v.holds else _fmt(ring, v.witness))],
        predicted=True,
        observed=v.holds,
    )


def chk_cor6(ring: Ring) -> CheckResult:
    if not _matrix_over_semiprime(ring):
        reason = _enumerable(ring) or "hypotheses unmet"
        return skipped("cor6", ring.spec_text, reason)
    v = x_semiprime(ring, named_subset(ring, "Id"))
    return from_assertions(
        "cor6",
        ring.spec_text,
        [SubAssertion("matrix ring over semiprime base is idempotent semiprime", v.holds,
                      None if v.holds else _fmt(ring, v.witness))],
        predicted=True,
        observed=v.holds,
    )


def chk_cor5(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason:
        return skipped("cor5", ring.spec_text, reason)
    if not x_semiprime(ring, named_subset(ring, "E")).holds:
        return skipped("cor5", ring.spec_text, "hypotheses unmet")
    if classify_ring(ring).domain:
        return from_assertions(
            "cor5", ring.spec_text, [SubAssertion("ring is a domain", True)]
        )
    v = x_prime(ring, named_subset(ring, "[E,R]"))
    return from_assertions(
        "cor5",
        ring.spec_text,
        [SubAssertion("not a domain, so [E,R]-prime", v.holds,
                      None if v.holds else _fmt_pair(ring, v.witness))],
    )


def chk_thm8(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and classify_ring(ring).domain:
        reason = "hypotheses unmet"
    if reason is None and ring.cardinality > LATTICE_RING_LIMIT:
        reason = "hypotheses unmet"
    if reason:
        return skipped("thm8", ring.spec_text, reason)
    subs = []
    for l in _noncentral_lie(ring):
        cls = predicates.thm8_classify(ring, l)
        ok = cls.applicable and cls.predicted_L_prime == cls.oracle_L_prime
        subs.append(
            SubAssertion(
                f"classifier == oracle for L={l.describe()}",
                ok,
                f"predicted={cls.predicted_L_prime}, oracle={cls.oracle_L_prime}",
            )
        )
    if not subs:
        subs.append(SubAssertion("no noncentral Lie ideal", True))
    return from_assertions("thm8", ring.spec_text, subs)


def chk_remark10i(ring: Ring) -> CheckResult:
    if ring.spec_text != "M(2,GF(2))":
        return skipped("remark10i", ring.spec_text, "hypotheses unmet")
    return funcfield.exceptional_example_check("remark10i")


def chk_remark10ii(ring: Ring) -> CheckResult:
    if ring.spec_text != "M(2,FF(2))":
        return skipped("remark10ii", ring.spec_text, "hypotheses unmet")
    return funcfield.exceptional_example_check("remark10ii")


def chk_example4(ring: Ring) -> CheckResult:
    if ring.spec_text != "M(2,FF(2))":
        return skipped("example4", ring.spec_text, "hypotheses unmet")
    return funcfield.exceptional_example_check("example4")


def chk_thm10(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and not classify_ring(ring).has_nontrivial_idempotent:
        reason = "hypotheses unmet"
    if reason:
        return skipped("thm10", ring.spec_text, reason)
    candidates = [(expr, named_subset(ring, expr)) for expr in X_SUITE]
    candidates.append(("sq0", sets.make_set(ring, square_zero_elements(ring), "raw")))
    subs = []
    for name, x in candidates:
        flags = set_predicates(ring, x)
        if not flags.is_special_invariant or flags.is_central:
            continue
        v = x_prime(ring, x)
        subs.append(
            SubAssertion(
                f"{name}: special-invariant noncentral set forces X-prime",
                v.holds,
                None if v.holds else _fmt_pair(ring, v.witness),
            )
        )
    if not subs:
        subs.append(SubAssertion("no qualifying subset", True))
    return from_assertions("thm10", ring.spec_text, subs)


def chk_cor7(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason is None and not classify_ring(ring).has_nontrivial_idempotent:
        reason = "hypotheses unmet"
    if reason:
        return skipped("cor7", ring.spec_text, reason)
    is_prime = primeness(ring).kind == "prime"
    u_prime = x_prime(ring, named_subset(ring, "U")).holds
    n_prime = x_prime(ring, named_subset(ring, "N")).holds
    subs = [
        SubAssertion("prime == U(R)-prime", is_prime == u_prime,
                     f"prime={is_prime}, U-prime={u_prime}"),
        SubAssertion("prime == N(R)-prime", is_prime == n_prime,
                     f"prime={is_prime}, N-prime={n_prime}"),
    ]
    return from_assertions("cor7", ring.spec_text, subs)


def chk_thm21(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason:
        return skipped("thm21", ring.spec_text, reason)
    bs = ring.element_list() if ring.cardinality <= B_SWEEP_FULL else _b_sample(ring, B_SAMPLE_LARGE)
    r_full = full_set(ring)
    mismatch = None
    for b in bs:
        crit = derivations.thm21_criterion(ring, b)
        oracle = derivations.d_semiprime_oracle(ring, b, r_full).holds
        if crit != oracle:
            mismatch = (b, crit, oracle)
            break
    label = f"criterion == oracle for {len(bs)} values of b"
    if mismatch is None:
        subs = [SubAssertion(label, True)]
    else:
        b, crit, oracle = mismatch
        subs = [SubAssertion(label, False, f"b={_fmt(ring, b)}, criterion={crit}, oracle={oracle}")]
    return from_assertions("thm21", ring.spec_text, subs)


def chk_cor2(ring: Ring) -> CheckResult:
    applies = (
        ring.is_enumerable
        and isinstance(ring, MatrixRing)
        and not isinstance(ring, UpperTriRing)
        and isinstance(ring.base, GFRing)
        and ring.n > 1
    )
    if not applies:
        return skipped("cor2", ring.spec_text, "hypotheses unmet")
    bs = ring.element_list() if ring.cardinality <= B_SWEEP_FULL else _b_sample(ring, B_SAMPLE_LARGE)
    mismatch = None
    for b in bs:
        det_crit = derivations.cor2_criterion(ring, b)
        ann_crit = derivations.thm21_criterion(ring, b)
        if det_crit != ann_crit:
            mismatch = (b, det_crit, ann_crit)
            break
    label = f"determinant criterion == annihilator criterion for {len(bs)} values of b"
    if mismatch is None:
        subs = [SubAssertion(label, True)]
    else:
        b, d, a = mismatch
        subs = [SubAssertion(label, False, f"b={_fmt(ring, b)}, det={d}, annihilator={a}")]
    return from_assertions("cor2", ring.spec_text, subs)


def chk_thm23ii(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None:
        cls = classify_ring(ring)
        if cls.domain or cls.exceptional or ring.cardinality > LATTICE_RING_LIMIT:
            reason = "hypotheses unmet"
    if reason:
        return skipped("thm23ii", ring.spec_text, reason)
    bs = ring.element_list() if ring.cardinality <= B_SWEEP_FULL else _b_sample(ring, B_SAMPLE_THM23)
    lies = list(_noncentral_lie(ring))
    r_full = full_set(ring)
    mismatch = None
    checked = 0
    for b in bs:
        verdict_r = derivations.d_semiprime_oracle(ring, b, r_full).holds
        for l in lies:
            checked += 1
            verdict_l = derivations.d_semiprime_oracle(ring, b, l).holds
            if verdict_l != verdict_r:
                mismatch = (b, l, verdict_l, verdict_r)
                break
        if mismatch:
            break
    label = f"d(L) == d(R) verdicts over {len(bs)} b and {len(lies)} noncentral L"
    if mismatch is None:
        subs = [SubAssertion(label, True)]
    else:
        b, l, vl, vr = mismatch
        subs = [SubAssertion(label, False,
                             f"b={_fmt(ring, b)}, L={l.describe()}, d(L)={vl}, d(R)={vr}")]
    return from_assertions("thm23ii", ring.spec_text, subs)


def chk_lem8(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("lem8", ring.spec_text, reason)

    def per_l(l: ElemSet):
        v = x_semiprime(ring, l)
        if v.holds:
            return []
        a = v.witness
        a_set = sets.make_set(ring, [a], "raw")
        br = bracket_set(ring, a_set, l)
        return [
            SubAssertion(
                f"aLa=0 witness commutes with L (L={l.describe()})",
                br.is_zero_set,
                _fmt(ring, a),
            )
        ]

    return _lemma_lattice_check("lem8", ring, per_l)


def chk_lem9(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("lem9", ring.spec_text, reason)
    subs = []
    pair_names = ("Id", "U", "E", "R")
    verdicts = {n: x_semiprime(ring, named_subset(ring, n)).holds for n in pair_names}
    for xn in pair_names:
        for yn in pair_names:
            if not (verdicts[xn] and verdicts[yn]):
                continue
            prod = derived_set(ring, "product", named_subset(ring, xn),
                               named_subset(ring, yn))
            v = x_semiprime(ring, prod)
            subs.append(
                SubAssertion(
                    f"{xn},{yn}-semiprime implies {xn}*{yn}-semiprime",
                    v.holds,
                    None if v.holds else _fmt(ring, v.witness),
                )
            )
    for xn in X_SUITE:
        if not x_semiprime(ring, named_subset(ring, xn)).holds:
            continue
        for n in (2, 3):
            p = derived_set(ring, "power_set", named_subset(ring, xn), n)
            v = x_semiprime(ring, p)
            subs.append(
                SubAssertion(
                    f"{xn}-semiprime implies {xn}^{n}-semiprime",
                    v.holds,
                    None if v.holds else _fmt(ring, v.witness),
                )
            )
    if not subs:
        subs.append(SubAssertion("no semiprime subset exercised", True))
    return from_assertions("lem9", ring.spec_text, subs)


def chk_cor10(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and (ring.characteristic == 2 or ring.cardinality > LATTICE_RING_LIMIT):
        reason = "hypotheses unmet"
    if reason:
        return skipped("cor10", ring.spec_text, reason)
    subs = []
    for l in _noncentral_lie(ring):
        v = x_semiprime(ring, l)
        subs.append(
            SubAssertion(
                f"char != 2 noncentral Lie ideal forces L-semiprime, L={l.describe()}",
                v.holds,
                None if v.holds else _fmt(ring, v.witness),
            )
        )
    if not subs:
        subs.append(SubAssertion("no noncentral Lie ideal", True))
    return from_assertions("cor10", ring.spec_text, subs)


def chk_cor12(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("cor12", ring.spec_text, reason)

    def per_l(l: ElemSet):
        lr = bracket_set(ring, l, full_set(ring))
        if not annihilator(ring, lr, "left").is_zero_set:
            return []
        left = x_semiprime(ring, l).holds
        right = x_semiprime(ring, lr).holds
        return [
            SubAssertion(
                f"L-semiprime == [L,R]-semiprime for L={l.describe()}",
                left == right,
                f"L: {left}, [L,R]: {right}",
            )
        ]

    return _lemma_lattice_check("cor12", ring, per_l)


def chk_cor13(ring: Ring) -> CheckResult:
    reason = _prime(ring)
    if reason is None and ring.cardinality > LATTICE_RING_LIMIT:
        reason = "hypotheses unmet"
    if reason:
        return skipped("cor13", ring.spec_text, reason)
    subs = []
    for l in _noncentral_lie(ring):
        left = x_semiprime(ring, l).holds
        right = x_semiprime(ring, bracket_set(ring, l, full_set(ring))).holds
        subs.append(
            SubAssertion(
                f"L-semiprime == [L,R]-semiprime for L={l.describe()}",
                left == right,
                f"L: {left}, [L,R]: {right}",
            )
        )
    if not subs:
        subs.append(SubAssertion("no noncentral Lie ideal", True))
    return from_assertions("cor13", ring.spec_text, subs)


def chk_cor14(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason is None and ring.characteristic % 2 == 0:
        reason = "hypotheses unmet"
    if reason:
        return skipped("cor14", ring.spec_text, reason)

    def per_l(l: ElemSet):
        lr = bracket_set(ring, l, full_set(ring))
        ann_zero = annihilator(ring, lr, "left").is_zero_set
        v = x_semiprime(ring, lr).holds
        return [
            SubAssertion(
                f"[L,R]-semiprime iff left annihilator vanishes, L={l.describe()}",
                v == ann_zero,
                f"semiprime: {v}, annihilator zero: {ann_zero}",
            )
        ]

    return _lemma_lattice_check("cor14", ring, per_l)


def _idempotent_bracket_biconditional(check_id: str, ring: Ring, b: ElemSet, label: str):
    br = bracket_set(ring, b, full_set(ring))
    ann = annihilator(ring, br, "left")
    v = x_semiprime(ring, br)
    ok = ann.is_zero_set == v.holds
    witness = f"annihilator size {len(ann)}, semiprime {v.holds}"
    return SubAssertion(f"{label}: annihilator-zero iff bracket-semiprime", ok, witness), ann, v


def chk_thm13(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm13", ring.spec_text, reason)
    idem = named_subset(ring, "Id")
    z = special_subset(ring, "Z")
    subs = []
    predicted = observed = None
    for label, members in (
        ("B=Id(R)", idem.members),
        ("B=central idempotents", tuple(e for e in idem.members if e in z.member_set)),
    ):
        b = sets.make_set(ring, members, "raw")
        b_plus = closure(ring, b.members, "additive")
        if not set_predicates(ring, b_plus).is_lie_ideal:
            continue
        sub, ann, v = _idempotent_bracket_biconditional("thm13", ring, b, label)
        subs.append(sub)
        if label == "B=Id(R)":
            predicted = ann.is_zero_set
            observed = v.holds
    return from_assertions("thm13", ring.spec_text, subs, predicted=predicted, observed=observed)


def chk_thm16(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm16", ring.spec_text, reason)
    er = named_subset(ring, "[E,R]")
    ann = annihilator(ring, er, "left")
    v = x_semiprime(ring, er)
    ok = ann.is_zero_set == v.holds
    return from_assertions(
        "thm16",
        ring.spec_text,
        [SubAssertion("left annihilator of [E,R] vanishes iff R is [E,R]-semiprime",
                      ok, f"annihilator size {len(ann)}, semiprime {v.holds}")],
        predicted=ann.is_zero_set,
        observed=v.holds,
    )


_TRIPLE_PRODUCT = "prod(GF(2),M(2,GF(2)),M(2,GF(3)))"


def triple_product_lie_ideal(ring: Ring) -> ElemSet:
    """0 x span{I,swap} x sl2 inside GF(2) x M(2,GF(2)) x M(2,GF(3))."""
    from .rings import evaluate

    seeds = [
        evaluate(ring, "(0, [[1,0],[0,1]], 0)"),
        evaluate(ring, "(0, [[0,1],[1,0]], 0)"),
        evaluate(ring, "(0, 0, [[0,1],[0,0]])"),
        evaluate(ring, "(0, 0, [[0,0],[1,0]])"),
        evaluate(ring, "(0, 0, [[1,0],[0,2]])"),
    ]
    return closure(ring, seeds, "additive")


def chk_thm19(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm19", ring.spec_text, reason)
    subs = []
    if ring.cardinality <= 256:
        for l in _lie_lattice(ring):
            dec = predicates.thm19_decompose(ring, l)
            bad = [k for k, v in dec.properties_verified.items() if not v]
            subs.append(
                SubAssertion(
                    f"decomposition verified for L={l.describe()}",
                    dec.ok,
                    None if dec.ok else ",".join(bad),
                )
            )
    if ring.spec_text == _TRIPLE_PRODUCT:
        l = triple_product_lie_ideal(ring)
        subs.append(SubAssertion("special L is a Lie ideal",
                                 set_predicates(ring, l).is_lie_ideal))
        dec = predicates.thm19_decompose(ring, l)
        subs.append(SubAssertion("decomposition verified for the special L", dec.ok))
        expected = (
            rings_evaluate(ring, "(1, 0, 0)"),
            rings_evaluate(ring, "(0, [[1,0],[0,1]], 0)"),
            rings_evaluate(ring, "(0, 0, [[1,0],[0,1]])"),
        )
        got = (dec.e1, dec.e2, dec.e3)
        subs.append(
            SubAssertion(
                "idempotents split the three components",
                got == expected,
                ", ".join(_fmt(ring, e) for e in got if e is not None),
            )
        )
    if not subs:
        subs.append(SubAssertion("lattice too large; no Lie ideal exercised", True))
    return from_assertions("thm19", ring.spec_text, subs)


def rings_evaluate(ring: Ring, text: str):
    from .rings import evaluate

    return evaluate(ring, text)


def chk_thm22(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm22", ring.spec_text, reason)

    mul, zero, one = ring.mul, ring.zero, ring.one

    def per_l(l: ElemSet):
        lr = bracket_set(ring, l, full_set(ring))
        if not annihilator(ring, lr, "left").is_zero_set:
            return []
        ltilde = closure(ring, l.members, "subring")
        squares = sorted({mul(x, x) for x in ltilde.members})
        seeds = {ring.bracket(s, g) for s in squares for g in ring.additive_generators}
        seeds.add(zero)
        ideal_j = closure(ring, seeds, "ideal")
        jgens = ideal_j.span_gens()
        ann = [a for a in ring.element_list() if all(mul(a, g) == zero for g in jgens)]
        e = predicates._ideal_identity(ring, ann or [zero])
        out = [SubAssertion(f"central idempotent e found for L={l.describe()}", e is not None)]
        if e is None:
            return out
        central = lambda a: all(
            mul(a, g) == mul(g, a) for g in ring.additive_generators
        )
        out.append(
            SubAssertion("e*x^2 central for all x in the subring closure",
                         all(central(mul(e, s)) for s in squares))
        )
        f = ring.sub(one, e)
        corner = sorted({mul(f, r) for r in ring.element_list()})
        lgens = [mul(f, g) for g in l.span_gens()]
        ok = True
        wit = None
        for a in corner:
            if a == zero:
                continue
            if all(mul(mul(a, g), a) == zero for g in lgens):
                ok = False
                wit = _fmt(ring, a)
                break
        out.append(SubAssertion("(1-e)R is (1-e)L-semiprime", ok, wit))
        if ring.characteristic % 2 == 1:
            v = x_semiprime(ring, l)
            out.append(SubAssertion("2-torsion-free tail: e = 0", e == zero, _fmt(ring, e)))
            out.append(
                SubAssertion("2-torsion-free tail: R is L-semiprime", v.holds,
                             None if v.holds else _fmt(ring, v.witness))
            )
        return out

    return _lemma_lattice_check("thm22", ring, per_l)


def chk_example3(ring: Ring) -> CheckResult:
    if ring.spec_text != "prod(M(2,GF(2)),GF(2))":
        return skipped("example3", ring.spec_text, "hypotheses unmet")
    cls = classify_ring(ring)
    e_v = x_semiprime(ring, named_subset(ring, "E"))
    er = named_subset(ring, "[E,R]")
    ann = annihilator(ring, er, "left")
    expected_ann = closure(ring, [rings_evaluate(ring, "(0, 1)")], "additive")
    er_v = x_semiprime(ring, er)
    subs = [
        SubAssertion("ring is regular", cls.regular),
        SubAssertion("ring is E-semiprime", e_v.holds,
                     None if e_v.holds else _fmt(ring, e_v.witness)),
        SubAssertion("left annihilator of [E,R] is 0 + GF(2)",
                     ann.member_set == expected_ann.member_set and len(ann) == 2,
                     ",".join(_fmt(ring, a) for a in ann)),
        SubAssertion("ring is not [E,R]-semiprime", not er_v.holds,
                     None if er_v.holds else _fmt(ring, er_v.witness)),
    ]
    return from_assertions("example3", ring.spec_text, subs)


def chk_example6(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason is None and ring.cardinality > 256:
        reason = "hypotheses unmet"
    if reason:
        return skipped("example6", ring.spec_text, reason)
    seen: set[frozenset] = set()
    subs = []
    for g in ring.element_list():
        rho = closure(ring, [g], "right_ideal")
        if rho.member_set in seen:
            continue
        seen.add(rho.member_set)
        ann_zero = annihilator(ring, rho, "left").is_zero_set
        for n in (1, 2, 3):
            power = derived_set(ring, "power_set", rho, n)
            v = x_semiprime(ring, power).holds
            if v != ann_zero:
                subs.append(
                    SubAssertion(
                        f"rho^{n}-semiprime iff left annihilator of rho vanishes, "
                        f"rho={rho.describe()}",
                        False,
                        f"semiprime: {v}, annihilator zero: {ann_zero}",
                    )
                )
    if not subs:
        subs = [SubAssertion(
            f"rho^n-semiprime iff annihilator vanishes across {len(seen)} principal "
            "right ideals, n = 1..3", True)]
    return from_assertions("example6", ring.spec_text, subs)


# -- prime-quotient (corner) machinery --------------------------------------

def central_primitive_idempotents(ring: Ring) -> tuple:
    """Atoms of the central idempotent lattice of a finite semiprime ring."""
    cached = ring._memo.get("central_atoms")
    if cached is not None:
        return cached
    idem = special_subset(ring, "Id")
    z = special_subset(ring, "Z")
    mul, zero = ring.mul, ring.zero
    cents = [e for e in idem.members if e in z.member_set and e != zero]
    atoms = []
    for e in cents:
        below = [f for f in cents if f != e and mul(f, e) == f]
        if not below:
            atoms.append(e)
    cached = tuple(atoms)
    ring._memo["central_atoms"] = cached
    return cached


@dataclass(frozen=True)
class _Corner:
    ring: Ring
    e: object
    members: tuple

    def idempotents(self) -> list:
        mul = self.ring.mul
        return [f for f in self.members if mul(f, f) == f]

    def central(self, x) -> bool:
        mul = self.ring.mul
        return all(mul(x, m) == mul(m, x) for m in self.members)

    def is_domain(self) -> bool:
        mul, zero = self.ring.mul, self.ring.zero
        nz = [m for m in self.members if m != zero]
        return all(mul(a, b) != zero for a in nz for b in nz)

    def span_gens(self, subset) -> list:
        return _additive_span(self.ring, subset)[1]

    def x_prime_inside(self, xgens) -> bool:
        mul, zero = self.ring.mul, self.ring.zero
        nz = [m for m in self.members if m != zero]
        if not xgens:
            return len(nz) == 0
        for a in nz:
            ag = [mul(a, g) for g in xgens]
            for b in nz:
                if all(mul(v, b) == zero for v in ag):
                    return False
        return True

    def x_semiprime_inside(self, xgens) -> bool:
        mul, zero = self.ring.mul, self.ring.zero
        for a in self.members:
            if a == zero:
                continue
            if all(mul(mul(a, g), a) == zero for g in xgens):
                return False
        return True


def _corners(ring: Ring) -> list[_Corner]:
    cached = ring._memo.get("corners")
    if cached is None:
        mul = ring.mul
        cached = [
            _Corner(ring, e, tuple(sorted({mul(e, r) for r in ring.element_list()})))
            for e in central_primitive_idempotents(ring)
        ]
        ring._memo["corners"] = cached
    return cached


def chk_thm1(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm1", ring.spec_text, reason)
    idem = special_subset(ring, "Id")
    mul = ring.mul
    hypothesis = True
    for corner in _corners(ring):
        if corner.is_domain():
            continue
        if any(not corner.central(mul(corner.e, f)) for f in idem.members):
            continue
        hypothesis = False
        break
    if not hypothesis:
        return skipped("thm1", ring.spec_text, "hypotheses unmet")
    v = x_semiprime(ring, idem if idem.members else idem)
    return from_assertions(
        "thm1",
        ring.spec_text,
        [SubAssertion(
            "every prime quotient a domain or with noncentral idempotent image: "
            "ring is idempotent semiprime",
            v.holds,
            None if v.holds else _fmt(ring, v.witness),
        )],
    )


def chk_thm2(ring: Ring) -> CheckResult:
    reason = _enumerable(ring)
    if reason:
        return skipped("thm2", ring.spec_text, reason)
    cls = classify_ring(ring)
    if not cls.regular:
        return skipped("thm2", ring.spec_text, "hypotheses unmet")
    v = x_semiprime(ring, named_subset(ring, "Id"))
    return from_assertions(
        "thm2",
        ring.spec_text,
        [SubAssertion("regular ring is idempotent semiprime", v.holds,
                      None if v.holds else _fmt(ring, v.witness))],
    )


def _product_factor_sets(ring: ProductRing, kind: str) -> list[ElemSet]:
    return [special_subset(f, kind) for f in ring.factors]


def chk_thm110(ring: Ring) -> CheckResult:
    if not (isinstance(ring, ProductRing) and ring.is_enumerable):
        return skipped("thm110", ring.spec_text, "hypotheses unmet")
    import itertools

    subs = []
    for kind in ("Id", "U", "N", "E"):
        whole = special_subset(ring, kind)
        parts = _product_factor_sets(ring, kind)
        combined = {t for t in itertools.product(*(p.members for p in parts))}
        subs.append(
            SubAssertion(f"{kind} of the product is the product of the {kind}s",
                         combined == set(whole.members))
        )
        product_verdict = x_semiprime(ring, whole).holds
        component_verdicts = [
            x_semiprime(f, p).holds for f, p in zip(ring.factors, parts)
        ]
        subs.append(
            SubAssertion(
                f"{kind}-semiprime iff every component is",
                product_verdict == all(component_verdicts),
                f"product: {product_verdict}, components: {component_verdicts}",
            )
        )
    return from_assertions("thm110", ring.spec_text, subs)


def chk_prop4(ring: Ring) -> CheckResult:
    if not (isinstance(ring, ProductRing) and ring.is_enumerable):
        return skipped("prop4", ring.spec_text, "hypotheses unmet")
    whole = x_semiprime(ring, named_subset(ring, "Id")).holds
    components = [
        x_semiprime(f, special_subset(f, "Id")).holds for f in ring.factors
    ]
    return from_assertions(
        "prop4",
        ring.spec_text,
        [SubAssertion("idempotent semiprime iff every component is",
                      whole == all(components),
                      f"product: {whole}, components: {components}")],
    )


def chk_thm14(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm14", ring.spec_text, reason)
    idem = special_subset(ring, "Id")
    mul = ring.mul
    corners = _corners(ring)
    if not all(
        any(not c.central(mul(c.e, f)) for f in idem.members) for c in corners
    ):
        return skipped("thm14", ring.spec_text, "hypotheses unmet")
    v = x_semiprime(ring, named_subset(ring, "[E,R]"))
    subs = [
        SubAssertion("(i) R is [E,R]-semiprime", v.holds,
                     None if v.holds else _fmt(ring, v.witness)),
    ]
    for c in corners:
        e_gens = c.span_gens(c.idempotents())
        br_gens = c.span_gens({ring.bracket(g, m) for g in e_gens for m in c.members})
        ok = c.x_prime_inside(br_gens)
        subs.append(
            SubAssertion(
                f"(ii) prime quotient at e={_fmt(ring, c.e)} is [E,R]-prime", ok
            )
        )
    subs.append(
        SubAssertion("(iii) subdirect factors all [E,R]-prime",
                     all(s.ok for s in subs[1:]))
    )
    return from_assertions("thm14", ring.spec_text, subs)


def chk_thm15(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm15", ring.spec_text, reason)
    mul = ring.mul
    e_whole = named_subset(ring, "E")
    corners = _corners(ring)
    lift_ok = True
    factors_prime = True
    for c in corners:
        image = {mul(c.e, xx) for xx in e_whole.members}
        corner_e = set(_additive_span(ring, c.idempotents())[0])
        if image != corner_e:
            lift_ok = False
            break
        e_gens = c.span_gens(c.idempotents())
        br_gens = c.span_gens(
            {ring.bracket(g, m) for g in e_gens for m in c.members}
        )
        if not c.x_prime_inside(br_gens):
            factors_prime = False
    if not (lift_ok and factors_prime):
        return skipped("thm15", ring.spec_text, "hypotheses unmet")
    v = x_semiprime(ring, named_subset(ring, "[E,R]"))
    return from_assertions(
        "thm15",
        ring.spec_text,
        [
            SubAssertion("E image equals E of every prime quotient", lift_ok),
            SubAssertion("subdirect product of [E,R]-prime rings is [E,R]-semiprime",
                         v.holds, None if v.holds else _fmt(ring, v.witness)),
        ],
    )


def chk_thm17(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("thm17", ring.spec_text, reason)
    mul, zero = ring.mul, ring.zero
    idem = special_subset(ring, "Id")
    corners = _corners(ring)
    for c in corners:
        image = {mul(c.e, f) for f in idem.members}
        if set(c.idempotents()) != image:
            return skipped("thm17", ring.spec_text, "hypotheses unmet")
        if all(f in (zero, c.e) for f in c.idempotents()):
            return skipped("thm17", ring.spec_text, "hypotheses unmet")
    v = x_semiprime(ring, named_subset(ring, "[E,R]"))
    return from_assertions(
        "thm17",
        ring.spec_text,
        [SubAssertion(
            "suitable ring with nontrivial idempotents in every quotient is "
            "[E,R]-semiprime",
            v.holds,
            None if v.holds else _fmt(ring, v.witness),
        )],
    )


def chk_prop2(ring: Ring) -> CheckResult:
    reason = _semiprime(ring)
    if reason:
        return skipped("prop2", ring.spec_text, reason)
    mul = ring.mul
    idem = special_subset(ring, "Id")
    e_whole = named_subset(ring, "E")
    subs = []
    for c in _corners(ring):
        id_image = {mul(c.e, f) for f in idem.members}
        subs.append(
            SubAssertion(
                f"idempotents lift onto the quotient at e={_fmt(ring, c.e)}",
                id_image == set(c.idempotents()),
            )
        )
        e_image = {mul(c.e, xx) for xx in e_whole.members}
        corner_e = set(_additive_span(ring, c.idempotents())[0])
        subs.append(
            SubAssertion(
                f"E image equals E of the quotient at e={_fmt(ring, c.e)}",
                e_image == corner_e,
            )
        )
    return from_assertions("prop2", ring.spec_text, subs)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    check_id: str
    statement: str
    run: Callable[[Ring], CheckResult]


REGISTRY: dict[str, Check] = {}


def _register(check_id: str, statement: str, fn: Callable[[Ring], CheckResult]) -> None:
    REGISTRY[check_id] = Check(check_id, statement, fn)


_register("definition", "X = {1}: X-semiprime iff reduced, X-prime iff domain", chk_definition)
_register("prop1", "prime rings: X-semiprime implies X-prime", chk_prop1)
_register("thm9", "E(R)-semiprime implies U(R)-semiprime", chk_thm9)
_register("lem16", "E(R) is a Lie ideal and [E,R] lies in the additive span of U(R)", chk_lem16)
_register("lem17", "[E(R),R] = [E(R),E(R)]", chk_lem17)
_register("lem5", "I([L,L]) is contained in L + L^2", chk_lem5)
_register("lem4ii", "[I([L,L]),R] is contained in [L,R], itself contained in L", chk_lem4ii)
_register("lem13", "noncommutative prime: [[I,J],[I,J]] != 0 for nonzero ideals", chk_lem13)
_register("thm3", "subring closure = R forces L-semiprime; [L,L] != 0 forces L-prime", chk_thm3)
_register("thm5", "I([L,L]) = R forces [L,R] = [R,R], R = [R,R]^2, and [L,R]-semiprime", chk_thm5)
_register("thm7", "prime with nontrivial idempotent is [E,R]-prime", chk_thm7)
_register("thm11", "noncommutative prime is [I,J]-prime for nonzero ideals", chk_thm11)
_register("thm4", "matrix ring over a semiprime base is [E,R]-semiprime", chk_thm4)
_register("cor5", "prime E-semiprime ring is a domain or [E,R]-prime", chk_cor5)
_register("cor6", "matrix ring over a semiprime base is idempotent semiprime", chk_cor6)
_register("remark6i", "M_2 over a char-2 field: [L,L] central nonzero, I([L,L]) = R, "
                      "yet not [L,L]-semiprime", chk_remark6i)
_register("thm8", "classifier for L-primeness agrees with the exhaustive oracle", chk_thm8)
_register("remark10i", "span{I,swap} over GF(2): [L,L] = 0 and aLa = 0 with a nonzero",
          chk_remark10i)
_register("remark10ii", "span{I,[[0,1],[t,0]]} over FF(2): invertible translates "
                        "force L-primeness", chk_remark10ii)
_register("example4", "inner derivation with d(L) in L: d(L)-semiprime fails, "
                      "d(R) criterion holds", chk_example4)
_register("thm10", "special-automorphism-invariant noncentral sets force X-prime", chk_thm10)
_register("cor7", "with a nontrivial idempotent: prime iff U-prime iff N-prime", chk_cor7)
_register("thm21", "inner derivation: sandwich oracle iff all central translates "
                   "left- or right-regular", chk_thm21)
_register("cor2", "matrix rings over fields: determinant criterion matches the "
                  "annihilator criterion", chk_cor2)
_register("thm23ii", "non-exceptional prime non-domain: d(L)-verdict = d(R)-verdict",
          chk_thm23ii)
_register("lem8", "semiprime: aLa = 0 forces [a,L] = 0", chk_lem8)
_register("lem9", "X,Y-semiprime implies XY-semiprime; X-semiprime implies X^n-semiprime",
          chk_lem9)
_register("cor10", "prime of characteristic != 2: noncentral Lie ideals force L-semiprime",
          chk_cor10)
_register("cor12", "left annihilator of [L,R] zero: L-semiprime iff [L,R]-semiprime",
          chk_cor12)
_register("cor13", "prime with noncentral L: L-semiprime iff [L,R]-semiprime", chk_cor13)
_register("cor14", "2-torsion-free semiprime: [L,R]-semiprime iff annihilator vanishes",
          chk_cor14)
_register("thm13", "B inside Id(R) with B+ a Lie ideal: annihilator-zero iff "
                   "[B,R]-semiprime", chk_thm13)
_register("thm16", "left annihilator of [E,R] vanishes iff [E,R]-semiprime", chk_thm16)
_register("thm19", "orthogonal central idempotents e1+e2+e3 = 1 with the three "
                   "decomposition properties", chk_thm19)
_register("thm22", "annihilator-free [L,R]: central idempotent splits squares-central "
                   "part from semiprime part", chk_thm22)
_register("example3", "regular product with a division-ring factor: E-semiprime but "
                      "not [E,R]-semiprime", chk_example3)
_register("example6", "principal right ideals: rho^n-semiprime iff annihilator of rho "
                      "vanishes", chk_example6)
_register("thm1", "prime quotients domains or with noncentral idempotents: idempotent "
                  "semiprime", chk_thm1)
_register("thm2", "every regular ring is idempotent semiprime", chk_thm2)
_register("thm110", "products: X-semiprime iff every component is (X respects products)",
          chk_thm110)
_register("prop4", "products are idempotent semiprime iff each component is", chk_prop4)
_register("thm14", "noncentral idempotent images in all quotients: [E,R]-semiprime with "
                   "[E,R]-prime factors", chk_thm14)
_register("thm15", "E lifts to prime quotients + factors [E,R]-prime: [E,R]-semiprime",
          chk_thm15)
_register("thm17", "suitable semiprime with nontrivial idempotents in quotients: "
                   "[E,R]-semiprime", chk_thm17)
_register("prop2", "suitable rings: idempotents and E lift onto every prime quotient",
          chk_prop2)
