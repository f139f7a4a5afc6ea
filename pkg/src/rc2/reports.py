"""Verification reports and the size guard for exhaustive checks.

Report property tags used across the package:

  A1   every vertex pair is joined by two internally disjoint rainbow paths
  A2   every vertex has a rainbow fan to any two other vertices (paths share
       only the source)
  A3   any four vertices admit a pairing joined by two fully disjoint
       rainbow paths
  A4   the vertex-to-color map is injective
  A5   each mapped color is used on exactly one edge, incident to the
       mapped vertex
  B1   before attaching an ear, its endpoints are joined by a rainbow path
       avoiding the color reserved for the attachment vertex
  B2   the reserved color sits on exactly one edge, incident to the
       attachment vertex
  structure   shape facts (decomposition layout, forest structure)
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SizeGuard:
    """Limits above which exhaustive path enumeration is refused."""

    max_vertices: int = 12
    max_edges: int = 24

    def allows(self, vertex_count: int, edge_count: int) -> bool:
        return vertex_count <= self.max_vertices and edge_count <= self.max_edges


DEFAULT_GUARD = SizeGuard()


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: tuple
    reason: str

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "subject": list(self.subject), "reason": self.reason}


@dataclass
class VerificationReport:
    """Outcome of one verification pass.

    ``passed`` is true exactly when ``violations`` is empty.  A report whose
    ``skipped`` flag is set was not actually checked: the input exceeded the
    size guard and the single violation entry says so.
    """

    passed: bool
    checked_property: str
    witnesses: list = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    skipped: bool = False

    def to_json_obj(self) -> dict:
        return {
            "passed": self.passed,
            "checked_property": self.checked_property,
            "skipped": self.skipped,
            "witnesses": [list(w) for w in self.witnesses],
            "violations": [v.to_json_obj() for v in self.violations],
        }


def passing(prop: str, witnesses: list | None = None) -> VerificationReport:
    return VerificationReport(True, prop, witnesses or [])


def failing(prop: str, violations: list[Violation]) -> VerificationReport:
    if not violations:
        raise ValueError("a failing report needs at least one violation")
    return VerificationReport(False, prop, [], violations)


def skipped(prop: str, reason: str) -> VerificationReport:
    v = Violation("skipped", (), reason)
    return VerificationReport(False, prop, [], [v], skipped=True)
