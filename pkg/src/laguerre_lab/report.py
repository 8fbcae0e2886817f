"""Check modes, violation records, and the report type all verifiers emit.

A report is deterministic for equal (plane, check, mode): enumeration
order is canonical and sampling is a pure function of the seed, so two
runs differ at most in `elapsed_seconds`.  JSON serialization therefore
pins the key order and writes elapsedSeconds as 0.0 unless real timings
are explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckMode", "Violation", "CheckReport", "MAX_VIOLATIONS", "EXHAUSTIVE_LIMIT"]

# Violations recorded per report; counting continues past the cap.
MAX_VIOLATIONS = 20

# Exhaustive runs are refused when the generator's a-priori choice space
# is larger than this.
EXHAUSTIVE_LIMIT = 10**8


@dataclass(frozen=True)
class CheckMode:
    kind: str  # "exhaustive" | "sample"
    count: int | None = None
    seed: int | None = None

    @classmethod
    def exhaustive(cls) -> "CheckMode":
        return cls("exhaustive")

    @classmethod
    def sample(cls, count: int, seed: int) -> "CheckMode":
        if count <= 0:
            raise ValueError("sample count must be positive")
        return cls("sample", count=count, seed=int(seed))

    @property
    def is_sample(self) -> bool:
        return self.kind == "sample"

    def label(self) -> str:
        return "exhaustive" if self.kind == "exhaustive" else f"sample:{self.count}"


@dataclass(frozen=True)
class Violation:
    """One failed configuration, replayable from point/circle ids."""

    kind: str
    points: tuple[int, ...] = ()
    circles: tuple[int, ...] = ()
    data: tuple[tuple[str, int], ...] = ()

    def to_obj(self, plane) -> dict:
        circles = []
        for cid in self.circles:
            coef = plane.circle_coef(cid)
            circles.append({"id": int(cid), "coef": None if coef is None else list(coef)})
        return {
            "kind": self.kind,
            "points": [int(p) for p in self.points],
            "circles": circles,
            "data": {k: int(v) for k, v in self.data},
        }


@dataclass
class CheckReport:
    check_id: str
    mode: CheckMode
    configurations: int = 0
    hypothesis_hits: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0  # total, including those past the record cap
    verdict: str = ""
    elapsed_seconds: float = 0.0
    notes: tuple[str, ...] = ()

    def finalize(self) -> "CheckReport":
        if not self.verdict:
            if self.violation_count:
                self.verdict = "Fails"
            elif self.mode.is_sample:
                self.verdict = "Holds(sampled)"
            else:
                self.verdict = "Holds"
        return self

    @property
    def holds(self) -> bool:
        return self.verdict in ("Holds", "Holds(sampled)")

    @property
    def fails(self) -> bool:
        return self.verdict == "Fails"

    def add_violation(self, violation: Violation) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(violation)

    def to_obj(self, plane, timings: bool = False) -> dict:
        # Pinned key order; floats appear only in elapsedSeconds.
        return {
            "check": self.check_id,
            "q": int(plane.q),
            "model": plane.label,
            "mode": self.mode.label(),
            "seed": None if self.mode.seed is None else int(self.mode.seed),
            "configurations": int(self.configurations),
            "skipped": int(self.skipped),
            "violations": [v.to_obj(plane) for v in self.violations],
            "verdict": self.verdict,
            "elapsedSeconds": round(self.elapsed_seconds, 6) if timings else 0.0,
        }

    def to_json(self, plane, timings: bool = False) -> str:
        return json.dumps(self.to_obj(plane, timings=timings), separators=(",", ":"))

    def to_text(self, plane) -> str:
        head = (
            f"[{self.verdict:>14}] {self.check_id:<10} q={plane.q} model={plane.label} "
            f"mode={self.mode.label()} configs={self.configurations} "
            f"hits={self.hypothesis_hits} skipped={self.skipped} "
            f"violations={self.violation_count} ({self.elapsed_seconds:.2f}s)"
        )
        lines = [head]
        for v in self.violations:
            lines.append(f"    {v.kind}: points={list(v.points)} circles={list(v.circles)} "
                         f"data={dict(v.data)}")
        lines.extend(f"    note: {n}" for n in self.notes)
        return "\n".join(lines)


CSV_FIELDS = ("check", "q", "model", "mode", "seed", "configurations",
              "skipped", "violationCount", "verdict", "elapsedSeconds")


def report_csv_row(report: CheckReport, plane, timings: bool = False) -> list:
    return [
        report.check_id,
        int(plane.q),
        plane.label,
        report.mode.label(),
        "" if report.mode.seed is None else int(report.mode.seed),
        int(report.configurations),
        int(report.skipped),
        int(report.violation_count),
        report.verdict,
        round(report.elapsed_seconds, 6) if timings else 0.0,
    ]
