"""Verdict containers.

A Report is a named suite of per-identity verdicts.  Each failing identity
carries the lexicographically-first failing basis tuple (as a tuple of basis
labels) and the exact residual vector, rendered as scalar strings.  Reports
are immutable and render deterministically, so output is byte-identical
across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    witness: tuple[str, ...] | None = None
    residual: tuple[str, ...] | None = None

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "passed": self.passed}
        if not self.passed:
            d["witness"] = list(self.witness) if self.witness is not None else None
            d["residual"] = list(self.residual) if self.residual is not None else None
        return d


@dataclass(frozen=True)
class Report:
    suite: str
    checks: tuple[IdentityCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[IdentityCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def check(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def prefixed(self, prefix: str) -> tuple[IdentityCheck, ...]:
        """The checks re-labelled under `prefix:`, for merging into a bigger report."""
        return tuple(
            IdentityCheck(f"{prefix}:{c.name}", c.passed, c.witness, c.residual)
            for c in self.checks
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def render(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            if c.passed:
                lines.append(f"  [PASS] {c.name}")
            else:
                w = "(" + ", ".join(c.witness) + ")" if c.witness else "-"
                r = "(" + ", ".join(c.residual) + ")" if c.residual else "-"
                lines.append(f"  [FAIL] {c.name}  witness={w}  residual={r}")
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def merge(suite: str, *parts) -> Report:
    """Collect Reports, bare IdentityChecks, and prefixed() tuples into one Report."""
    checks: list[IdentityCheck] = []
    for part in parts:
        if isinstance(part, IdentityCheck):
            checks.append(part)
        elif isinstance(part, Report):
            checks.extend(part.checks)
        else:
            checks.extend(part)
    return Report(suite, tuple(checks))


class PreconditionError(Exception):
    """A construction's verified precondition failed; carries the inner report."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
