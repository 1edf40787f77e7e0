"""
Maximum Matching
Edmonds' blossom algorithm (via NetworkX) for general graphs
"""

import logging
from typing import Iterable, List, NamedTuple, Tuple

import networkx as nx

from graphs.graph import Graph
from graphs.io import to_networkx

logger = logging.getLogger(__name__)


class MatchingResult(NamedTuple):
    """α'(G) with a maximum matching as sorted (u, v) pairs, u < v"""
    value: int
    edges: Tuple[Tuple[int, int], ...]


def is_matching(graph: Graph, edges: Iterable[Tuple[int, int]]) -> bool:
    """Edges of G, pairwise without a shared endpoint"""
    used = 0
    for u, v in edges:
        if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
            return False
        ends = 1 << u | 1 << v
        if used & ends:
            return False
        used |= ends
    return True


def _blossom_size(g: nx.Graph) -> int:
    return len(nx.max_weight_matching(g, maxcardinality=True))


def matching_number(graph: Graph) -> MatchingResult:
    """
    α'(G): augmenting-path search with blossom contraction

    NetworkX's max_weight_matching with maxcardinality=True on unit weights
    is Edmonds' algorithm. The certificate is the lexicographically smallest
    maximum matching: edges are scanned in sorted order and an edge is kept
    when the graph left after deleting its endpoints still has a matching of
    the remaining size.
    """
    g = to_networkx(graph)
    value = _blossom_size(g)
    alive = set(g.nodes)
    edges: List[Tuple[int, int]] = []
    for u, v in sorted(graph.edges()):
        if len(edges) == value:
            break
        if u not in alive or v not in alive:
            continue
        rest = alive - {u, v}
        if _blossom_size(g.subgraph(rest)) == value - len(edges) - 1:
            edges.append((u, v))
            alive = rest
    logger.debug(f"alpha'={value} matching={edges}")
    return MatchingResult(value, tuple(edges))
