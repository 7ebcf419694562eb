"""Pass/fail reports shared by the exhaustive verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LawResult:
    law: str
    passed: bool
    checked: int = 0
    witness: str | None = None

    def to_dict(self) -> dict:
        d = {"law": self.law, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    subject: str
    results: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, law, passed, checked=0, witness=None) -> LawResult:
        res = LawResult(law, bool(passed), checked, witness)
        self.results.append(res)
        return res

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        d = {"subject": self.subject, "ok": self.ok, "results": [r.to_dict() for r in self.results]}
        if self.flags:
            d["flags"] = dict(self.flags)
        return d

    def lines(self) -> list:
        out = []
        for r in self.results:
            line = f"[{'PASS' if r.passed else 'FAIL'}] {r.law} ({r.checked} checked)"
            if r.witness:
                line += f" witness: {r.witness}"
            out.append(line)
        return out


class LawTally:
    """Accumulates one law over many instances, keeping the first witness."""

    def __init__(self, law: str):
        self.law = law
        self.checked = 0
        self.witness = None

    def record(self, passed: bool, witness=None):
        self.checked += 1
        if not passed and self.witness is None:
            self.witness = witness() if callable(witness) else str(witness)

    def into(self, report: Report) -> LawResult:
        return report.add(self.law, self.witness is None, self.checked, self.witness)
