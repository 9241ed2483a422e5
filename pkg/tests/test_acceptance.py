"""Acceptance criteria.

Every criterion is exact or property-based; each test prints one
PASS/FAIL line (run with `pytest -v -s` to see them all).  Criterion 2
includes M(2,Z(4)), where the asserted predicates are mathematically
false (a = 2I satisfies a*x*a = 4x = 0 for every x); that parametrized
case is kept faithful to the criterion and fails by design.
"""

import json
import time

import pytest

import ringlab as rl
from ringlab.checks import (REGISTRY, SAMPLE_SEED, X_SUITE, named_subset,
                            triple_product_lie_ideal)
from ringlab.harness import Catalog, DEFAULT_CATALOG, _run_one, run_suite

ENUMERABLE = tuple(s for s in DEFAULT_CATALOG if s != "M(2,FF(2))")


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {criterion}: {tag}"
    if detail:
        line += f" ({detail})"
    print(line)


# -- criterion 1 -------------------------------------------------------------

def _reduced_oracle(ring) -> bool:
    zero = ring.zero
    return all(ring.mul(a, a) != zero for a in ring.element_list() if a != zero)


def _domain_oracle(ring) -> bool:
    zero = ring.zero
    nz = [a for a in ring.element_list() if a != zero]
    for a in nz:
        for b in nz:
            if ring.mul(a, b) == zero:
                return False
    return True


def test_criterion_1_definition_fidelity():
    start = time.perf_counter()
    mismatches = []
    for spec in ENUMERABLE:
        ring = rl.build_ring(spec)
        one_set = rl.make_set(ring, [ring.one])
        if rl.x_semiprime(ring, one_set).holds != _reduced_oracle(ring):
            mismatches.append((spec, "reduced"))
        if rl.x_prime(ring, one_set).holds != _domain_oracle(ring):
            mismatches.append((spec, "domain"))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 1.0
    _report("1 definition fidelity", ok, f"{elapsed:.2f}s")
    assert not mismatches, mismatches
    assert elapsed < 1.0, f"took {elapsed:.2f}s, budget 1s"


# -- criterion 2 -------------------------------------------------------------

MATRIX_RINGS = ["M(2,GF(2))", "M(2,GF(3))", "M(2,GF(4))", "M(2,Z(4))", "M(3,GF(2))"]


@pytest.mark.parametrize("spec", MATRIX_RINGS)
def test_criterion_2_bracket_and_idempotent_semiprime(spec):
    ring = rl.build_ring(spec)
    start = time.perf_counter()
    er = rl.x_semiprime(ring, named_subset(ring, "[E,R]"))
    idem = rl.x_semiprime(ring, named_subset(ring, "Id"))
    elapsed = time.perf_counter() - start
    ok = er.holds and idem.holds and elapsed < 5.0
    _report(f"2 [E,R]- and Id-semiprime on {spec}", ok, f"{elapsed:.2f}s")
    assert elapsed < 5.0
    assert er.holds and idem.holds, (
        f"{spec} is not Id/[E,R]-semiprime: witness "
        f"{ring.format_elem((er if not er.holds else idem).witness)} "
        "annihilates every x in the sandwich sense"
    )


def test_criterion_2_companion_m2z4_actual_behavior():
    # 2*e22 is the canonically smallest a with a*X*a = 0 for both subsets
    ring = rl.build_ring("M(2,Z(4))")
    witness = rl.evaluate(ring, "[[0,0],[0,2]]")
    for expr in ("Id", "[E,R]"):
        v = rl.x_semiprime(ring, named_subset(ring, expr))
        assert not v.holds and v.witness == witness
    _report("2-companion M(2,Z(4)) refutation pinned", True)


# -- criterion 3 -------------------------------------------------------------

def test_criterion_3_remark10i_reproduction():
    ring = rl.build_ring("M(2,GF(2))")
    swap = rl.evaluate(ring, "[[0,1],[1,0]]")
    lie_l = rl.closure(ring, [ring.one, swap], "additive")
    ll_zero = rl.bracket_set(ring, lie_l, lie_l).is_zero_set
    a = rl.evaluate(ring, "[[1,1],[1,1]]")
    sandwich = all(ring.mul(ring.mul(a, x), a) == ring.zero for x in lie_l.members)
    sp = rl.x_semiprime(ring, lie_l)
    xp = rl.x_prime(ring, lie_l)
    ok = ll_zero and sandwich and not sp.holds and sp.witness == a and not xp.holds
    _report("3 span{I,swap} counterexample", ok)
    assert ll_zero and sandwich
    assert not sp.holds and sp.witness == a
    assert not xp.holds


# -- criterion 4 -------------------------------------------------------------

def test_criterion_4_classifier_vs_oracle_full_lattice():
    start = time.perf_counter()
    disagreements = []
    for spec in ("M(2,GF(2))", "M(2,GF(3))"):
        ring = rl.build_ring(spec)
        z = rl.special_subset(ring, "Z").member_set
        # the saturation lattice must match the brute subgroup lattice
        brute = {
            s.members
            for s in rl.enumerate_additive_subgroups(ring, "all")
            if rl.set_predicates(ring, s).is_lie_ideal and not (s.member_set <= z)
        }
        fast = rl.enumerate_additive_subgroups(ring, "noncentral_lie_ideals")
        assert {s.members for s in fast} == brute
        for lie_l in fast:
            cls = rl.thm8_classify(ring, lie_l)
            if not cls.applicable or cls.predicted_L_prime != cls.oracle_L_prime:
                disagreements.append((spec, lie_l.describe()))
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 30.0
    _report("4 L-primeness classifier == oracle", ok, f"{elapsed:.2f}s")
    assert not disagreements, disagreements
    assert elapsed < 30.0


# -- criterion 5 -------------------------------------------------------------

def test_criterion_5_derivation_criterion_vs_oracle():
    start = time.perf_counter()
    disagreements = []
    for spec in ("M(2,GF(2))", "M(2,GF(3))"):
        ring = rl.build_ring(spec)
        r_full = rl.full_set(ring)
        for b in ring.element_list():
            crit = rl.thm21_criterion(ring, b)
            oracle = rl.d_semiprime_oracle(ring, b, r_full).holds
            det = rl.cor2_criterion(ring, b)
            if not (crit == oracle == det):
                disagreements.append((spec, ring.format_elem(b), crit, oracle, det))
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 30.0
    _report("5 derivation criterion == oracle (16 + 81 b)", ok, f"{elapsed:.2f}s")
    assert not disagreements, disagreements[:3]
    assert elapsed < 30.0


# -- criterion 6 -------------------------------------------------------------

def test_criterion_6_d_of_l_matches_d_of_r():
    import random

    disagreements = []
    for spec, count in (("M(2,GF(3))", None), ("M(3,GF(2))", 64)):
        ring = rl.build_ring(spec)
        elems = ring.element_list()
        bs = elems if count is None else sorted(random.Random(SAMPLE_SEED).sample(elems, count))
        lies = rl.enumerate_additive_subgroups(ring, "noncentral_lie_ideals")
        r_full = rl.full_set(ring)
        for b in bs:
            verdict_r = rl.d_semiprime_oracle(ring, b, r_full).holds
            for lie_l in lies:
                if rl.d_semiprime_oracle(ring, b, lie_l).holds != verdict_r:
                    disagreements.append((spec, ring.format_elem(b), lie_l.describe()))
    ok = not disagreements
    _report("6 d(L)-verdict == d(R)-verdict", ok)
    assert not disagreements, disagreements[:3]


# -- criterion 7 -------------------------------------------------------------

def test_criterion_7_annihilator_biconditional():
    violations = []
    for spec in ENUMERABLE:
        ring = rl.build_ring(spec)
        if rl.primeness(ring).kind == "not_semiprime":
            continue
        br = rl.bracket_set(ring, named_subset(ring, "Id"), rl.full_set(ring))
        ann_zero = rl.annihilator(ring, br, "left").is_zero_set
        holds = rl.x_semiprime(ring, br).holds
        if ann_zero != holds:
            violations.append(spec)
    example_ring = rl.build_ring("prod(M(2,GF(2)),GF(2))")
    br = rl.bracket_set(example_ring, named_subset(example_ring, "Id"),
                        rl.full_set(example_ring))
    ann = rl.annihilator(example_ring, br, "left")
    expected = (example_ring.zero, rl.evaluate(example_ring, "(0, 1)"))
    failure_direction = (
        ann.members == expected
        and len(ann) == 2
        and not rl.x_semiprime(example_ring, br).holds
    )
    ok = not violations and failure_direction
    _report("7 annihilator-zero iff [Id,R]-semiprime", ok)
    assert not violations, violations
    assert failure_direction


# -- criterion 8 -------------------------------------------------------------

LEMMA_CHECKS = ("lem5", "lem4ii", "lem16", "lem17", "lem8", "lem9", "lem13", "remark6i")


def test_criterion_8_lemma_suite():
    failures = []
    for cid in LEMMA_CHECKS:
        for spec in ENUMERABLE:
            result = _run_one(cid, spec)
            if result.failed:
                failures.append((cid, spec, [s.name for s in result.sub_assertions if not s.ok]))
    ok = not failures
    _report("8 lemma suite across the catalog", ok)
    assert not failures, failures


# -- criterion 9 -------------------------------------------------------------

def test_criterion_9_semiprime_implications():
    violations = []
    for spec in ENUMERABLE:
        ring = rl.build_ring(spec)
        if rl.x_semiprime(ring, named_subset(ring, "E")).holds and \
                not rl.x_semiprime(ring, named_subset(ring, "U")).holds:
            violations.append((spec, "E-semiprime but not U-semiprime"))
        if rl.primeness(ring).kind != "prime":
            continue
        xs = [(expr, named_subset(ring, expr)) for expr in X_SUITE]
        if ring.cardinality <= 100:
            xs += [(f"lie#{i}", l)
                   for i, l in enumerate(rl.enumerate_additive_subgroups(ring, "lie_ideals"))
                   if not l.is_zero_set]
        for name, x in xs:
            if rl.x_semiprime(ring, x).holds and not rl.x_prime(ring, x).holds:
                violations.append((spec, name))
    ok = not violations
    _report("9 X-semiprime implies U-semiprime / X-prime", ok)
    assert not violations, violations


# -- criterion 10 ------------------------------------------------------------

def test_criterion_10_three_component_decomposition():
    ring = rl.build_ring("prod(GF(2),M(2,GF(2)),M(2,GF(3)))")
    lie_l = triple_product_lie_ideal(ring)
    dec = rl.thm19_decompose(ring, lie_l)
    expected = (
        rl.evaluate(ring, "(1, 0, 0)"),
        rl.evaluate(ring, "(0, [[1,0],[0,1]], 0)"),
        rl.evaluate(ring, "(0, 0, [[1,0],[0,1]])"),
    )
    ok = dec.ok and (dec.e1, dec.e2, dec.e3) == expected
    _report("10 three-idempotent decomposition", ok)
    assert (dec.e1, dec.e2, dec.e3) == expected
    assert dec.ok, dec.properties_verified


# -- criterion 11 ------------------------------------------------------------

def test_criterion_11_function_field_layer():
    import random

    from ringlab.funcfield import RF_T, RatFunc

    start = time.perf_counter()
    rng = random.Random(97)
    bad = []
    produced = 0
    while produced < 100:
        num = rng.randrange(1, 128)
        den = rng.randrange(1, 128)
        g = RatFunc.make(num, den)
        if not rl.is_square(g * g):
            bad.append(("square", str(g)))
        if rl.is_square(RF_T * g * g):
            bad.append(("nonsquare", str(g)))
        produced += 1
    r10 = rl.exceptional_example_check("remark10ii")
    e4 = rl.exceptional_example_check("example4")
    ring = rl.build_ring("M(2,FF(2))")
    tv = rl.translates_invertible(rl.evaluate(ring, "[[1,1],[t,1]]"))
    elapsed = time.perf_counter() - start
    ok = (not bad and r10.verdict == "pass" and e4.verdict == "pass"
          and tv == "yes" and elapsed < 5.0)
    _report("11 function-field layer", ok, f"{elapsed:.2f}s")
    assert not bad, bad[:3]
    assert r10.verdict == "pass" and e4.verdict == "pass"
    assert tv == "yes"
    assert elapsed < 5.0


# -- criterion 12 ------------------------------------------------------------

def test_criterion_12_regular_rings():
    violations = []
    for spec in ENUMERABLE:
        ring = rl.build_ring(spec)
        if rl.classify_ring(ring).regular and \
                not rl.x_semiprime(ring, named_subset(ring, "Id")).holds:
            violations.append(spec)
    ut = rl.build_ring("UT(2,GF(2))")
    ut_ok = (not rl.classify_ring(ut).regular
             and rl.primeness(ut).kind == "not_semiprime")
    ok = not violations and ut_ok
    _report("12 regular rings idempotent semiprime", ok)
    assert not violations, violations
    assert ut_ok


# -- criterion 13 ------------------------------------------------------------

def _normalized_json(report) -> str:
    payload = report.to_json()
    for row in payload["results"]:
        row["ms"] = 0.0
    return json.dumps(payload, indent=2)


def test_criterion_13_determinism_and_budget():
    start = time.perf_counter()
    first = run_suite(Catalog())
    mid = time.perf_counter()
    second = run_suite(Catalog())
    end = time.perf_counter()
    identical = _normalized_json(first) == _normalized_json(second)
    no_failures = not first.failed and not second.failed
    in_budget = (mid - start) < 120.0 and (end - mid) < 120.0
    ok = identical and no_failures and in_budget
    _report("13 determinism and 2-minute budget", ok,
            f"runs {mid - start:.1f}s / {end - mid:.1f}s")
    assert identical
    assert no_failures, [r.check_id for r in first.failed]
    assert in_budget
