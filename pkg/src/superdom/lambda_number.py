"""
λ(G)

λ(G) = max over S ∈ S(G), S* ∈ P(S) of the largest X ⊆ S with
N(X) ∩ (S̄ ∪ S*) = ∅. The condition is per vertex, so the largest X is
simply every member of S whose neighbourhood avoids S̄ ∪ S*.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, NamedTuple

from config import get_config
from graphs.graph import Graph, VertexSet, iter_bits
from invariants.search import check_cap
from superdom.enumeration import enumerate_min_superdom_sets, enumerate_pstar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LambdaWitness:
    S: VertexSet
    Sstar: VertexSet
    X: VertexSet

    @property
    def value(self) -> int:
        return len(self.X)

    def revalidate(self, graph: Graph) -> bool:
        """X ⊆ S, N(X) ∩ (S̄ ∪ S*) = ∅ and X independent"""
        blocked = self.S.complement().bits | self.Sstar.bits
        return (
            self.X.issubset(self.S)
            and all(graph.adj[x] & blocked == 0 for x in self.X)
            and all(graph.adj[x] & self.X.bits == 0 for x in self.X)
        )

    def to_dict(self) -> Dict:
        return {
            "lambda": self.value,
            "S": self.S.to_list(),
            "Sstar": self.Sstar.to_list(),
            "X": self.X.to_list(),
        }


class LambdaResult(NamedTuple):
    value: int
    witness: LambdaWitness


def avoiding_members(graph: Graph, s: VertexSet, sstar: VertexSet) -> VertexSet:
    """Members of S with no neighbour in S̄ ∪ S*"""
    blocked = s.complement().bits | sstar.bits
    return VertexSet(graph.n, sum(1 << x for x in s if graph.adj[x] & blocked == 0))


def lambda_number(graph: Graph, cap: int = None) -> LambdaResult:
    """
    λ(G) with the first maximising (S, S*, X)

    S and S* are scanned in increasing bitmask order.

    Raises:
        CapExceededError: if n exceeds the enumeration cap
    """
    cap = cap or get_config().solver.enumeration_cap
    check_cap(graph.n, cap, "lambda_number")
    best = None
    for s in enumerate_min_superdom_sets(graph, cap=cap):
        for sstar in enumerate_pstar(graph, s, cap=cap, gamma_sp=len(s)):
            witness = LambdaWitness(s, sstar, avoiding_members(graph, s, sstar))
            if best is None or witness.value > best.value:
                best = witness
    logger.debug(f"lambda={best.value} witness={best.to_dict()}")
    return LambdaResult(best.value, best)


def lambda_bruteforce(graph: Graph, cap: int = 10) -> int:
    """Literal definition: the largest X ⊆ S over every subset of every S, S* pair"""
    check_cap(graph.n, cap, "lambda_bruteforce")
    best = 0
    for s in enumerate_min_superdom_sets(graph, cap=max(cap, graph.n)):
        members = s.to_list()
        for sstar in enumerate_pstar(graph, s, cap=max(cap, graph.n), gamma_sp=len(s)):
            blocked = set((s.complement() | sstar).to_list())
            for size in range(len(members), best, -1):
                if any(
                    not any(w in blocked for x in subset for w in iter_bits(graph.adj[x]))
                    for subset in combinations(members, size)
                ):
                    best = size
                    break
    return best
