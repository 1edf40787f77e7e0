"""
Universal Vertex Checks

For a universal vertex v and S ∈ S(G):
  - if v ∈ S̄ ∪ S* for some S* ∈ P(S), then γ_sp(G) = n − 1
  - if v ∉ S̄ ∪ S* for some S* ∈ P(S), then λ(G) ≥ I(G), where I(G)
    counts the vertices of degree one
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config import get_config
from graphs.graph import Graph, VertexSet
from graphs.structure import degree_one_count, universal_vertices
from invariants.search import check_cap
from superdom.enumeration import enumerate_min_superdom_sets, enumerate_pstar
from superdom.lambda_number import lambda_number

logger = logging.getLogger(__name__)


@dataclass
class UniversalVertexReport:
    applicable: bool
    universal: List[int] = field(default_factory=list)
    gamma_sp: Optional[int] = None
    order_minus_one_instances: int = 0
    order_minus_one_holds: bool = True
    avoiding_pair: Optional[Tuple[VertexSet, VertexSet]] = None
    degree_one: int = 0
    lambda_value: Optional[int] = None
    degree_one_holds: Optional[bool] = None
    reason: str = ""

    @property
    def avoiding_hypothesis(self) -> bool:
        return self.avoiding_pair is not None

    @property
    def holds(self) -> bool:
        return self.order_minus_one_holds and self.degree_one_holds is not False

    def to_dict(self) -> Dict:
        return {
            "applicable": self.applicable,
            "universal": self.universal,
            "gamma_sp": self.gamma_sp,
            "order_minus_one_instances": self.order_minus_one_instances,
            "order_minus_one_holds": self.order_minus_one_holds,
            "avoiding_hypothesis": self.avoiding_hypothesis,
            "avoiding_pair": (
                {"S": self.avoiding_pair[0].to_list(), "Sstar": self.avoiding_pair[1].to_list()}
                if self.avoiding_pair else None
            ),
            "degree_one": self.degree_one,
            "lambda": self.lambda_value,
            "degree_one_holds": self.degree_one_holds,
            "reason": self.reason,
        }


def universal_vertex_checks(graph: Graph, cap: int = None) -> UniversalVertexReport:
    """
    Verify both universal-vertex statements over all S ∈ S(G), S* ∈ P(S)

    Graphs without a universal vertex give a not-applicable report.
    """
    cap = cap or get_config().solver.enumeration_cap
    universal = universal_vertices(graph)
    if not universal:
        return UniversalVertexReport(applicable=False, reason="no universal vertex")
    check_cap(graph.n, cap, "universal_vertex_checks")

    report = UniversalVertexReport(
        applicable=True,
        universal=universal.to_list(),
        degree_one=degree_one_count(graph),
    )
    family = enumerate_min_superdom_sets(graph, cap=cap)
    report.gamma_sp = len(family[0])
    for s in family:
        for sstar in enumerate_pstar(graph, s, cap=cap, gamma_sp=len(s)):
            touched = s.complement() | sstar
            for v in universal:
                if v in touched:
                    report.order_minus_one_instances += 1
                    if report.gamma_sp != graph.n - 1:
                        report.order_minus_one_holds = False
                        logger.error(
                            f"universal vertex {v} in outside/witness side of {s.to_list()} "
                            f"but gamma_sp={report.gamma_sp} != n-1"
                        )
                elif report.avoiding_pair is None:
                    report.avoiding_pair = (s, sstar)

    if report.avoiding_hypothesis:
        report.lambda_value = lambda_number(graph, cap=cap).value
        report.degree_one_holds = report.lambda_value >= report.degree_one
        if not report.degree_one_holds:
            logger.error(f"lambda={report.lambda_value} < I(G)={report.degree_one}")
    return report
