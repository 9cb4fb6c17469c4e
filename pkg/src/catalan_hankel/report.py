"""Pass/fail reports produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .exact import render


@dataclass
class CaseResult:
    label: str
    passed: bool
    expected: Any = None
    actual: Any = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        out = {"case": self.label, "passed": self.passed}
        if not self.passed or self.expected is not None:
            out["expected"] = _text(self.expected)
            out["actual"] = _text(self.actual)
        if self.detail:
            out["detail"] = self.detail
        return out


def _text(value):
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return [_text(v) for v in value]
    return render(value)


@dataclass
class ConjectureReport:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    cases: List[CaseResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, label: str, expected, actual, detail: str = "") -> CaseResult:
        case = CaseResult(label, expected == actual, expected, actual, detail)
        self.cases.append(case)
        return case

    def check(self, label: str, ok: bool, detail: str = "") -> CaseResult:
        case = CaseResult(label, bool(ok), detail=detail)
        self.cases.append(case)
        return case

    def extend(self, other: "ConjectureReport", prefix: str = "") -> None:
        for c in other.cases:
            self.cases.append(CaseResult(prefix + c.label, c.passed, c.expected, c.actual, c.detail))
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def counterexample(self) -> Optional[CaseResult]:
        return next((c for c in self.cases if not c.passed), None)

    def __len__(self):
        return len(self.cases)

    def to_dict(self) -> Dict[str, Any]:
        ce = self.counterexample
        return {
            "name": self.name,
            "params": {k: _text(v) for k, v in self.params.items()},
            "verdict": "pass" if self.passed else "fail",
            "n_cases": len(self.cases),
            "n_failed": sum(not c.passed for c in self.cases),
            "counterexample": ce.to_dict() if ce else None,
            "cases": [c.to_dict() for c in self.cases],
            "notes": list(self.notes),
        }
