"""Check outcome records shared by the harness and the example checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SubAssertion:
    name: str
    ok: bool
    witness: str | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "witness": self.witness}


@dataclass
class CheckResult:
    check_id: str
    ring: str
    verdict: str  # "pass" | "fail" | "skipped(reason)"
    sub_assertions: tuple[SubAssertion, ...] = ()
    predicted: bool | None = None
    observed: bool | None = None
    ms: float = 0.0

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    @property
    def skipped(self) -> bool:
        return self.verdict.startswith("skipped")

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "ring": self.ring,
            "verdict": self.verdict,
            "sub_assertions": [s.to_json() for s in self.sub_assertions],
            "predicted": self.predicted,
            "observed": self.observed,
            "ms": self.ms,
        }


def skipped(check_id: str, ring: str, reason: str) -> CheckResult:
    return CheckResult(check_id=check_id, ring=ring, verdict=f"skipped({reason})")


def from_assertions(check_id: str, ring: str, subs, predicted=None, observed=None) -> CheckResult:
    subs = tuple(subs)
    verdict = "pass" if all(s.ok for s in subs) else "fail"
    return CheckResult(
        check_id=check_id,
        ring=ring,
        verdict=verdict,
        sub_assertions=subs,
        predicted=predicted,
        observed=observed,
    )
