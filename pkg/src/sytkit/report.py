"""Uniform result object for the exhaustive checks."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of one named sweep.

    ``violations`` holds self-contained witnesses (text forms only), listed
    in sweep order; the check passed iff the list is empty.  ``elapsed_ms``
    is wall-clock time and is the only field excluded from determinism
    comparisons.
    """

    check: str
    range: dict[str, Any]
    checked: int
    violations: list[dict[str, Any]]
    elapsed_ms: float
    skipped: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def replay_key(self) -> tuple:
        return (
            self.check,
            tuple(sorted(self.range.items())),
            self.checked,
            self.skipped,
            json.dumps(self.violations, sort_keys=True),
            json.dumps(self.details, sort_keys=True),
        )

    def to_json(self, include_elapsed: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "range": self.range,
            "checked": self.checked,
            "violations": self.violations,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if not include_elapsed:
            del out["elapsed_ms"]
        if self.skipped:
            out["skipped"] = self.skipped
        if self.details:
            out["details"] = self.details
        return out

    def text_lines(self, max_witnesses: int = 20) -> list[str]:
        lines = [f"check: {self.check}"]
        for key in sorted(self.range):
            lines.append(f"{key}: {self.range[key]}")
        lines.append(f"checked: {self.checked}")
        if self.skipped:
            lines.append(f"skipped: {self.skipped}")
        for key in sorted(self.details):
            value = self.details[key]
            if isinstance(value, dict):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"{key}: {value}")
        lines.append(f"violations: {len(self.violations)}")
        for witness in self.violations[:max_witnesses]:
            lines.append("  witness: " + json.dumps(witness, sort_keys=True))
        if len(self.violations) > max_witnesses:
            lines.append(f"  ... and {len(self.violations) - max_witnesses} more")
        lines.append("PASS" if self.passed else "FAIL")
        return lines


class stopwatch:
    """Context manager measuring elapsed milliseconds."""

    def __enter__(self) -> "stopwatch":
        self._t0 = time.perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *exc) -> None:
        self.ms = (time.perf_counter() - self._t0) * 1000.0
