"""Machine-readable catalog reports.

Rationals are written as ``"p/q"`` strings so that nothing passes through
floating point.  Case timings are omitted (``ms = null``) unless requested,
which keeps repeated runs byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .ring import RingElement

REPORT_VERSION = "1"


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def element_str(a: RingElement) -> str:
    """``"p/q"`` for scalars, the normal form otherwise."""
    if a.ring.ngens == 0 or set(a.terms) <= {(0,) * a.ring.ngens}:
        return rational_str(a.constant_term())
    return a.format()


@dataclass
class CaseEntry:
    name: str
    theoryPair: str
    lhs: str
    rhs: str
    equal: bool
    oracle: Optional[str]
    ms: Optional[float]

    @classmethod
    def from_report(cls, report, timings: bool = False) -> "CaseEntry":
        oracle = None if report.oracle is None else rational_str(report.oracle)
        ms = round(report.ms, 3) if timings else None
        return cls(report.case_name, report.theory_pair, element_str(report.lhs),
                   element_str(report.rhs), report.equal, oracle, ms)

    @property
    def passed(self) -> bool:
        if not self.equal:
            return False
        return self.oracle is None or self.lhs == self.oracle


@dataclass
class ReportDocument:
    precision: int
    cases: list[CaseEntry] = field(default_factory=list)
    version: str = REPORT_VERSION

    @classmethod
    def from_reports(cls, reports, precision: int, timings: bool = False) -> "ReportDocument":
        return cls(precision, [CaseEntry.from_report(r, timings) for r in reports])

    @property
    def summary(self) -> dict:
        passed = sum(c.passed for c in self.cases)
        return {"passed": passed, "failed": len(self.cases) - passed, "total": len(self.cases)}

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "precision": self.precision,
            "cases": [
                {"name": c.name, "theoryPair": c.theoryPair, "lhs": c.lhs, "rhs": c.rhs,
                 "equal": c.equal, "oracle": c.oracle, "ms": c.ms}
                for c in self.cases
            ],
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        doc = cls(data["precision"], [CaseEntry(**c) for c in data["cases"]], data["version"])
        if doc.summary != data["summary"]:
            raise ValueError("summary does not match the listed cases")
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))
