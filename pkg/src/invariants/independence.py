"""
Independence and Vertex Cover
Bitset branch-and-bound for α(G); β(G) = n - α(G) by Gallai's theorem
"""

import logging
from typing import Optional

from graphs.graph import Graph, GraphInputError, VertexSet, iter_bits
from invariants.search import Optimum, canonical_optimum

logger = logging.getLogger(__name__)


def _clique_cover_bound(adj, cand: int) -> int:
    """Greedy clique cover size of cand; an independent set meets each clique once"""
    cliques = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        common = adj[v] & rest
        while common:
            w_bit = common & -common
            clique |= w_bit
            common &= adj[w_bit.bit_length() - 1]
        rest &= ~clique
        cliques += 1
    return cliques


def max_independent_size(adj, cand: int) -> int:
    """Size of a maximum independent set inside cand (adjacency given as bitmasks)"""
    best = [0]

    def search(cand: int, size: int):
        if cand == 0:
            if size > best[0]:
                best[0] = size
            return
        if size + cand.bit_count() <= best[0]:
            return
        if size + _clique_cover_bound(adj, cand) <= best[0]:
            return
        low_v, low_deg, high_v, high_deg = -1, None, -1, -1
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if low_deg is None or d < low_deg:
                low_v, low_deg = v, d
            if d > high_deg:
                high_v, high_deg = v, d
        # a vertex of degree at most one lies in some maximum independent set
        if low_deg <= 1:
            search(cand & ~(adj[low_v] | 1 << low_v), size + 1)
            return
        search(cand & ~(adj[high_v] | 1 << high_v), size + 1)
        search(cand & ~(1 << high_v), size)

    search(cand, 0)
    return best[0]


def _constrained_independent(graph: Graph, forced: int, forbidden: int) -> Optional[int]:
    if forced & forbidden:
        return None
    blocked = 0
    for v in iter_bits(forced):
        if graph.adj[v] & forced:
            return None
        blocked |= graph.adj[v]
    cand = graph.full_mask & ~forced & ~forbidden & ~blocked
    return forced.bit_count() + max_independent_size(graph.adj, cand)


def is_independent(graph: Graph, vertices: VertexSet) -> bool:
    _same_universe(graph, vertices)
    return all(graph.adj[v] & vertices.bits == 0 for v in vertices)


def is_vertex_cover(graph: Graph, vertices: VertexSet) -> bool:
    _same_universe(graph, vertices)
    return all(u in vertices or v in vertices for u, v in graph.edges())


def _same_universe(graph: Graph, vertices: VertexSet):
    if vertices.universe != graph.n:
        raise GraphInputError(
            f"vertex set universe {vertices.universe} does not match graph order {graph.n}"
        )


def _maximum_independent(graph: Graph, prefer_high: bool) -> Optimum:
    value = max_independent_size(graph.adj, graph.full_mask)
    mask = canonical_optimum(
        graph.n, value, lambda f, x: _constrained_independent(graph, f, x), prefer_high=prefer_high
    )
    return Optimum(value, VertexSet(graph.n, mask))


def independence_number(graph: Graph) -> Optimum:
    """α(G) with the smallest-bitmask maximum independent set"""
    result = _maximum_independent(graph, prefer_high=False)
    logger.debug(f"alpha={result.value} for {graph}")
    return result


def vertex_cover_number(graph: Graph) -> Optimum:
    """
    β(G) with the smallest-bitmask minimum vertex cover

    The complement of the largest-bitmask maximum independent set.
    """
    independent = _maximum_independent(graph, prefer_high=True)
    return Optimum(graph.n - independent.value, independent.certificate.complement())
