"""
Enumeration of S(G) and P(S)

S(G) is the family of all γ_sp(G)-sets; for S ∈ S(G), P(S) collects the
witness sets S* ⊆ S with |S*| = |S̄| realising the private-neighbour
condition for every outside vertex.
"""

import logging
from itertools import product
from typing import Dict, List

from config import get_config
from graphs.graph import Graph, VertexSet
from invariants.search import check_cap, subsets_of_size
from superdom.bnb import gamma_sp_bnb
from superdom.certificate import is_super_dominating_mask, private_witnesses

logger = logging.getLogger(__name__)


class NotAGammaSpSetError(ValueError):
    """enumerate_pstar was given a set that is not a minimum super dominating set"""


def enumerate_min_superdom_sets(graph: Graph, cap: int = None) -> List[VertexSet]:
    """All super dominating sets of size γ_sp(G), in increasing bitmask order"""
    cap = cap or get_config().solver.enumeration_cap
    check_cap(graph.n, cap, "enumerate_min_superdom_sets")
    k = gamma_sp_bnb(graph, timeout=0, workers=1).gamma_sp
    family = [
        VertexSet(graph.n, mask)
        for mask in subsets_of_size(graph.n, k)
        if is_super_dominating_mask(graph.adj, graph.full_mask, mask)
    ]
    logger.debug(f"|S(G)|={len(family)} at gamma_sp={k}")
    return family


def private_neighbor_graph(graph: Graph, s: VertexSet) -> Dict[int, List[int]]:
    """
    The bipartite graph {(v, u): v ∈ S, u ∈ S̄, N(v) ∩ S̄ = {u}}

    Keyed by u. A v with a single outside neighbour appears under exactly
    one key, so the candidate lists are pairwise disjoint.
    """
    return private_witnesses(graph, s.bits)


def enumerate_pstar(graph: Graph, s: VertexSet, cap: int = None, gamma_sp: int = None) -> List[VertexSet]:
    """
    P(S) for a γ_sp-set S, in increasing bitmask order

    Perfect assignments S̄ → S* pick one candidate per outside vertex. The
    candidate lists are disjoint, so every choice is automatically injective
    and P(S) is the product of the lists.

    Raises:
        NotAGammaSpSetError: if S is not a minimum super dominating set
    """
    cap = cap or get_config().solver.enumeration_cap
    check_cap(graph.n, cap, "enumerate_pstar")
    if s.universe != graph.n:
        raise NotAGammaSpSetError(
            f"vertex set universe {s.universe} does not match graph order {graph.n}"
        )
    if not is_super_dominating_mask(graph.adj, graph.full_mask, s.bits):
        raise NotAGammaSpSetError(f"{s.to_list()} is not super dominating")
    value = gamma_sp if gamma_sp is not None else gamma_sp_bnb(graph, timeout=0, workers=1).gamma_sp
    if len(s) != value:
        raise NotAGammaSpSetError(
            f"{s.to_list()} has {len(s)} vertices but gamma_sp(G)={value}"
        )

    options = [candidates for _, candidates in sorted(private_neighbor_graph(graph, s).items())]
    family = {VertexSet.of(graph.n, choice) for choice in product(*options)}
    return sorted(family, key=lambda vs: vs.bits)
