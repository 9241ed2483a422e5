"""Registry execution, report schema, determinism, catalog handling."""

import json
import os

import pytest

from ringlab import Catalog, UnknownCheckError, run_check, run_suite
from ringlab.checks import REGISTRY
from ringlab.harness import DEFAULT_CATALOG, _run_one
from ringlab.report import render_table, write_json

EXPECTED_IDS = {
    "definition", "prop1", "thm9", "lem16", "lem17", "lem5", "lem4ii", "lem13",
    "thm3", "thm5", "thm7", "thm11", "thm4", "cor5", "cor6", "remark6i", "thm8",
    "remark10i", "remark10ii", "example4", "thm10", "cor7", "thm21", "cor2",
    "thm23ii", "lem8", "lem9", "cor10", "cor12", "cor13", "cor14", "thm13",
    "thm16", "thm19", "thm22", "example3", "example6", "thm1", "thm2", "thm110",
    "prop4", "thm14", "thm15", "thm17", "prop2",
}


def test_registry_ids():
    assert set(REGISTRY) == EXPECTED_IDS
    for check in REGISTRY.values():
        assert check.statement


def test_registry_ids_documented_in_readme():
    readme = os.path.join(os.path.dirname(__file__), "..", "README.md")
    with open(readme, "r", encoding="utf-8") as fh:
        text = fh.read()
    for cid in REGISTRY:
        assert f"`{cid}`" in text, f"check id {cid} missing from README"


def test_unknown_check_id():
    with pytest.raises(UnknownCheckError):
        run_check("nosuch")


def test_run_check_thm16_passes():
    result = run_check("thm16")
    assert result.verdict == "pass"
    assert result.check_id == "thm16"


def test_run_check_prop4_passes():
    result = run_check("prop4", Catalog(("prod(M(2,GF(2)),GF(2))",)))
    assert result.verdict == "pass"


def test_semiprime_checks_skip_on_z4():
    for cid in ("thm16", "thm13", "thm19", "lem8"):
        result = _run_one(cid, "Z(4)")
        assert result.verdict == "skipped(hypotheses unmet)"


def test_brute_force_checks_skip_on_infinite_ring():
    rep = run_suite(Catalog(("M(2,FF(2))",)))
    by_id = {r.check_id: r for r in rep.results}
    assert by_id["remark10ii"].verdict == "pass"
    assert by_id["example4"].verdict == "pass"
    assert by_id["definition"].verdict == "skipped(non-enumerable)"
    assert by_id["thm16"].verdict == "skipped(non-enumerable)"
    assert by_id["remark10i"].verdict == "skipped(hypotheses unmet)"
    assert not rep.failed


def test_hypothesis_gated_skips():
    assert _run_one("thm4", "M(2,Z(4))").verdict == "skipped(hypotheses unmet)"
    assert _run_one("cor6", "M(2,Z(4))").verdict == "skipped(hypotheses unmet)"
    assert _run_one("thm2", "UT(2,GF(2))").verdict == "skipped(hypotheses unmet)"
    assert _run_one("thm23ii", "M(2,GF(2))").verdict == "skipped(hypotheses unmet)"
    assert _run_one("cor10", "M(2,GF(3))").verdict == "pass"


def test_expected_failure_directions_have_witnesses():
    r3 = _run_one("example3", "prod(M(2,GF(2)),GF(2))")
    assert r3.verdict == "pass"
    named = {s.name: s for s in r3.sub_assertions}
    assert named["left annihilator of [E,R] is 0 + GF(2)"].witness is not None
    r10 = _run_one("remark10i", "M(2,GF(2))")
    assert r10.verdict == "pass"
    witnesses = [s.witness for s in r10.sub_assertions if s.witness]
    assert "[[1,1],[1,1]]" in witnesses


def test_report_json_schema(tmp_path):
    rep = run_suite(Catalog(("Z(6)", "GF(4)")))
    payload = rep.to_json()
    assert list(payload) == ["version", "catalog", "results"]
    assert payload["catalog"] == ["Z(6)", "GF(4)"]
    for row in payload["results"]:
        assert list(row) == ["check_id", "ring", "verdict", "sub_assertions",
                             "predicted", "observed", "ms"]
        for sub in row["sub_assertions"]:
            assert list(sub) == ["name", "ok", "witness"]
    path = tmp_path / "report.json"
    write_json(rep, str(path))
    loaded = json.loads(path.read_text())
    assert loaded["version"] == payload["version"]


def test_results_totally_ordered():
    rep = run_suite(Catalog(("Z(6)", "GF(4)")))
    keys = [(r.check_id, r.ring) for r in rep.results]
    assert keys == sorted(keys)


def _strip_ms(payload: dict) -> str:
    for row in payload["results"]:
        row["ms"] = 0.0
    return json.dumps(payload, indent=2)


def test_two_runs_identical_modulo_timing():
    catalog = Catalog(("Z(6)", "GF(9)", "M(2,GF(2))", "UT(2,GF(2))"))
    first = _strip_ms(run_suite(catalog).to_json())
    second = _strip_ms(run_suite(catalog).to_json())
    assert first == second


def test_parallel_run_matches_serial():
    catalog = Catalog(("Z(6)", "M(2,GF(2))"))
    serial = _strip_ms(run_suite(catalog, parallel=False).to_json())
    parallel = _strip_ms(run_suite(catalog, parallel=True).to_json())
    assert serial == parallel


def test_catalog_load_and_validate(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"rings": ["Z(6)", "M(2, GF(2))"]}))
    catalog = Catalog.load(str(path))
    assert catalog.rings == ("Z(6)", "M(2,GF(2))")
    path2 = tmp_path / "catalog2.json"
    path2.write_text(json.dumps(["GF(4)"]))
    assert Catalog.load(str(path2)).rings == ("GF(4)",)


def test_default_catalog_builds():
    assert len(DEFAULT_CATALOG) == 17
    assert Catalog().validate().rings == DEFAULT_CATALOG


def test_render_table_contains_summary():
    rep = run_suite(Catalog(("GF(4)",)))
    table = render_table(rep)
    assert "pass" in table and "skipped" in table
