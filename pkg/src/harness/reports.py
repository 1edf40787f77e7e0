"""
Bound Check Reports

Every inequality is stored as lhs <= rhs (lower bounds put the bound on the
left, upper bounds on the right), equalities as lhs == rhs, and yes/no
statements as a predicate outcome.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class BoundStatus(Enum):
    HOLDS = "holds"
    TIGHT = "tight"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"
    SKIPPED = "skipped"


class Relation(Enum):
    LE = "<="
    EQ = "=="
    PREDICATE = "holds"


@dataclass
class BoundCheck:
    name: str
    theorem: str
    relation: Relation = Relation.LE
    applicable: bool = True
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    outcome: Optional[bool] = None
    reason: str = ""

    @property
    def evaluated(self) -> bool:
        if not self.applicable:
            return False
        if self.relation is Relation.PREDICATE:
            return self.outcome is not None
        return self.lhs is not None and self.rhs is not None

    @property
    def holds(self) -> bool:
        if not self.evaluated:
            return True
        if self.relation is Relation.PREDICATE:
            return bool(self.outcome)
        if self.relation is Relation.EQ:
            return self.lhs == self.rhs
        return self.lhs <= self.rhs

    @property
    def slack(self) -> Optional[int]:
        if not self.evaluated or self.relation is Relation.PREDICATE:
            return None
        return self.rhs - self.lhs

    @property
    def tight(self) -> bool:
        return self.evaluated and self.relation is Relation.LE and self.lhs == self.rhs

    @property
    def status(self) -> BoundStatus:
        if not self.applicable:
            return BoundStatus.NOT_APPLICABLE
        if not self.evaluated:
            return BoundStatus.SKIPPED
        if not self.holds:
            return BoundStatus.VIOLATED
        return BoundStatus.TIGHT if self.tight else BoundStatus.HOLDS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "theorem": self.theorem,
            "relation": self.relation.value,
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "outcome": self.outcome,
            "holds": self.holds,
            "slack": self.slack,
            "status": self.status.value,
            "reason": self.reason,
        }


@dataclass
class BoundCheckReport:
    graph_id: str
    n: int
    m: int
    gamma_sp: Optional[int]
    exact: bool
    checks: List[BoundCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def add(self, check: BoundCheck) -> BoundCheck:
        self.checks.append(check)
        return check

    def violations(self) -> List[BoundCheck]:
        return [check for check in self.checks if check.status is BoundStatus.VIOLATED]

    def tight(self) -> List[BoundCheck]:
        return [check for check in self.checks if check.tight]

    def check(self, name: str) -> BoundCheck:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)

    @property
    def holds(self) -> bool:
        return not self.violations()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "gamma_sp": self.gamma_sp,
            "exact": self.exact,
            "holds": self.holds,
            "violations": len(self.violations()),
            "tight": [check.name for check in self.tight()],
            "checks": [check.to_dict() for check in self.checks],
            "notes": list(self.notes),
            "extra": self.extra,
        }
