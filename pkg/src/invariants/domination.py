"""
Domination and Secure Domination
Exact bitset branch-and-bound for γ(G), subset enumeration for γ_s(G)
"""

import logging
from typing import Optional

from config import get_config
from graphs.graph import Graph, GraphInputError, VertexSet, iter_bits, neighborhood_mask
from invariants.search import Optimum, canonical_optimum, check_cap, subsets_of_size

logger = logging.getLogger(__name__)


def _dominated_by(graph: Graph, mask: int) -> int:
    dominated = mask
    for x in iter_bits(mask):
        dominated |= graph.adj[x]
    return dominated


def _same_universe(graph: Graph, vertices: VertexSet):
    if vertices.universe != graph.n:
        raise GraphInputError(
            f"vertex set universe {vertices.universe} does not match graph order {graph.n}"
        )


def is_dominating(graph: Graph, vertices: VertexSet) -> bool:
    """Every vertex outside S has a neighbour in S"""
    _same_universe(graph, vertices)
    return _dominated_by(graph, vertices.bits) == graph.full_mask


def min_dominating_size(graph: Graph, forced: int = 0, forbidden: int = 0) -> Optional[int]:
    """
    Smallest dominating set containing forced and avoiding forbidden

    Branches on the undominated vertex with the fewest admissible
    dominators; each branch excludes the dominators tried before it, so the
    branches partition the search space.

    Returns:
        The optimum size, or None when the constraints admit no dominating set
    """
    full = graph.full_mask
    closed = [graph.closed_mask(v) for v in range(graph.n)]
    if forced & forbidden:
        return None
    best = [graph.n + 1]

    def search(dominated: int, size: int, allowed: int):
        if dominated == full:
            if size < best[0]:
                best[0] = size
            return
        undominated = full & ~dominated
        cover = max((closed[v] & undominated).bit_count() for v in iter_bits(allowed)) if allowed else 0
        if cover == 0:
            return
        remaining = undominated.bit_count()
        if size + -(-remaining // cover) >= best[0]:
            return
        target, target_options = -1, None
        for w in iter_bits(undominated):
            options = closed[w] & allowed
            if target_options is None or options.bit_count() < target_options.bit_count():
                target, target_options = w, options
                if options.bit_count() <= 1:
                    break
        if not target_options:
            return
        ordered = sorted(iter_bits(target_options), key=lambda c: (-(closed[c] & undominated).bit_count(), c))
        for c in ordered:
            search(dominated | closed[c], size + 1, allowed)
            allowed &= ~(1 << c)

    search(_dominated_by(graph, forced), forced.bit_count(), full & ~forced & ~forbidden)
    return best[0] if best[0] <= graph.n else None


def domination_number(graph: Graph) -> Optimum:
    """γ(G) with the smallest-bitmask minimum dominating set"""
    value = min_dominating_size(graph)
    mask = canonical_optimum(graph.n, value, lambda f, x: min_dominating_size(graph, f, x))
    logger.debug(f"gamma={value} for {graph}")
    return Optimum(value, VertexSet(graph.n, mask))


def _dominates(graph: Graph, mask: int) -> bool:
    return _dominated_by(graph, mask) == graph.full_mask


def _is_secure_mask(graph: Graph, mask: int) -> bool:
    if not _dominates(graph, mask):
        return False
    outside = graph.full_mask & ~mask
    for v in iter_bits(outside):
        defenders = graph.adj[v] & mask
        if not any(_dominates(graph, (mask & ~(1 << u)) | 1 << v) for u in iter_bits(defenders)):
            return False
    return True


def is_secure_dominating(graph: Graph, vertices: VertexSet) -> bool:
    """
    S dominates and every v outside S has a defender u ∈ N(v) ∩ S such that
    (S ∖ {u}) ∪ {v} still dominates
    """
    _same_universe(graph, vertices)
    return _is_secure_mask(graph, vertices.bits)


def secure_domination_number(graph: Graph, cap: int = None) -> Optimum:
    """γ_s(G) by ascending-cardinality enumeration in increasing bitmask order"""
    cap = cap or get_config().solver.secure_cap
    check_cap(graph.n, cap, "secure domination")
    start = min_dominating_size(graph) or 0
    for k in range(start, graph.n + 1):
        for mask in subsets_of_size(graph.n, k):
            if _is_secure_mask(graph, mask):
                return Optimum(k, VertexSet(graph.n, mask))
    raise AssertionError("V(G) is always secure dominating")


def is_open_irredundant(graph: Graph, vertices: VertexSet) -> bool:
    """N(u) ∖ N[S ∖ {u}] is non-empty for every u ∈ S"""
    _same_universe(graph, vertices)
    mask = vertices.bits
    for u in iter_bits(mask):
        rest = mask & ~(1 << u)
        if graph.adj[u] & ~(rest | neighborhood_mask(graph, rest)) == 0:
            return False
    return True


def open_irredundant_dominating_set(graph: Graph, cap: int = None) -> Optional[VertexSet]:
    """
    A minimum dominating set that is open irredundant

    One exists whenever G has no isolated vertices; the first such set in
    increasing bitmask order is returned, None if none exists.
    """
    cap = cap or get_config().solver.bruteforce_cap
    check_cap(graph.n, cap, "open irredundant dominating set search")
    gamma = min_dominating_size(graph)
    for mask in subsets_of_size(graph.n, gamma):
        if _dominates(graph, mask):
            candidate = VertexSet(graph.n, mask)
            if is_open_irredundant(graph, candidate):
                return candidate
    return None
