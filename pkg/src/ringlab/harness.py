"""Catalog, check execution, and report assembly."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .checks import REGISTRY
from .errors import UnknownCheckError
from .result import CheckResult, SubAssertion
from .rings import build_ring

__version__ = "0.1.0"

DEFAULT_CATALOG = (
    "Z(4)",
    "Z(6)",
    "GF(2)",
    "GF(3)",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "M(2,GF(2))",
    "M(2,GF(3))",
    "M(2,GF(4))",
    "M(2,Z(4))",
    "M(3,GF(2))",
    "UT(2,GF(2))",
    "UT(2,GF(3))",
    "prod(M(2,GF(2)),GF(2))",
    "prod(GF(2),M(2,GF(2)),M(2,GF(3)))",
    "M(2,FF(2))",
)


@dataclass(frozen=True)
class Catalog:
    rings: tuple[str, ...] = DEFAULT_CATALOG

    def validate(self) -> "Catalog":
        normalized = []
        for text in self.rings:
            normalized.append(build_ring(text).spec_text)
        return Catalog(tuple(normalized))

    @staticmethod
    def load(path: str) -> "Catalog":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        rings = data["rings"] if isinstance(data, dict) else data
        return Catalog(tuple(rings)).validate()


@dataclass
class Report:
    version: str
    catalog: tuple[str, ...]
    results: list[CheckResult] = field(default_factory=list)

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if r.failed]

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "catalog": list(self.catalog),
            "results": [r.to_json() for r in self.results],
        }

    def json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _run_one(check_id: str, ring_text: str) -> CheckResult:
    check = REGISTRY[check_id]
    ring = build_ring(ring_text)
    start = time.perf_counter()
    result = check.run(ring)
    result.ms = round((time.perf_counter() - start) * 1000.0, 3)
    return result


def run_check(check_id: str, catalog: Catalog | None = None, params=None) -> CheckResult:
    """Run one registered check across the catalog and aggregate the outcome."""
    if check_id not in REGISTRY:
        raise UnknownCheckError(f"unknown check id {check_id!r}")
    catalog = (catalog or Catalog()).validate()
    results = [_run_one(check_id, text) for text in catalog.rings]
    return aggregate(check_id, results)


def aggregate(check_id: str, results: list[CheckResult]) -> CheckResult:
    subs = []
    for r in results:
        if r.skipped:
            subs.append(SubAssertion(f"{r.ring}: {r.verdict}", True))
            continue
        for s in r.sub_assertions:
            subs.append(SubAssertion(f"{r.ring}: {s.name}", s.ok, s.witness))
    ran = [r for r in results if not r.skipped]
    if not ran:
        verdict = "skipped(hypotheses unmet)"
    elif any(r.failed for r in ran):
        verdict = "fail"
    else:
        verdict = "pass"
    return CheckResult(
        check_id=check_id,
        ring=f"catalog[{len(results)}]",
        verdict=verdict,
        sub_assertions=tuple(subs),
        ms=round(sum(r.ms for r in results), 3),
    )


def run_suite(catalog: Catalog | None = None, parallel: bool = False) -> Report:
    """Run the whole registry; results are totally ordered by (check_id, ring)."""
    catalog = (catalog or Catalog()).validate()
    jobs = [(cid, ring_text) for cid in REGISTRY for ring_text in catalog.rings]
    if parallel:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda j: _run_one(*j), jobs))
    else:
        results = [_run_one(*j) for j in jobs]
    results.sort(key=lambda r: (r.check_id, r.ring))
    return Report(version=__version__, catalog=catalog.rings, results=results)
