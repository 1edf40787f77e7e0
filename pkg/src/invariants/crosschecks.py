"""
Classical Identity Cross-Checks

Gallai (α + β = n), König–Egerváry (α′ = β on bipartite graphs) and
Meir–Moon (γ = ρ on trees), each evaluated with independently computed
sides.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import networkx as nx

from graphs.graph import Graph
from graphs.io import to_networkx
from graphs.structure import is_bipartite, is_tree
from invariants.domination import domination_number
from invariants.independence import independence_number, vertex_cover_number
from invariants.matching import matching_number
from invariants.oracles import bf_vertex_cover_number
from invariants.packing import two_packing_number

logger = logging.getLogger(__name__)

DIRECT_COVER_LIMIT = 12


@dataclass
class IdentityCheck:
    name: str
    applicable: bool
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    @property
    def holds(self) -> bool:
        return not self.applicable or self.lhs == self.rhs

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }


@dataclass
class CrosscheckReport:
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(check.holds for check in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.holds]

    def to_dict(self) -> Dict:
        return {"holds": self.holds, "checks": [check.to_dict() for check in self.checks]}


def _direct_cover_number(graph: Graph) -> int:
    """β without going through the bitset independence search"""
    if graph.n <= DIRECT_COVER_LIMIT:
        return bf_vertex_cover_number(graph)[0]
    clique, _ = nx.max_weight_clique(nx.complement(to_networkx(graph)), weight=None)
    return graph.n - len(clique)


def identity_crosschecks(graph: Graph) -> CrosscheckReport:
    report = CrosscheckReport()

    alpha = independence_number(graph).value
    report.checks.append(
        IdentityCheck("gallai: alpha + beta = n", True, alpha + _direct_cover_number(graph), graph.n)
    )

    if is_bipartite(graph):
        report.checks.append(
            IdentityCheck(
                "konig-egervary: alpha' = beta",
                True,
                matching_number(graph).value,
                vertex_cover_number(graph).value,
            )
        )
    else:
        report.checks.append(IdentityCheck("konig-egervary: alpha' = beta", False))

    if is_tree(graph):
        report.checks.append(
            IdentityCheck(
                "meir-moon: gamma = rho",
                True,
                domination_number(graph).value,
                two_packing_number(graph).value,
            )
        )
    else:
        report.checks.append(IdentityCheck("meir-moon: gamma = rho", False))

    for failure in report.failures():
        logger.error(f"identity violated: {failure.name} ({failure.lhs} != {failure.rhs})")
    return report
