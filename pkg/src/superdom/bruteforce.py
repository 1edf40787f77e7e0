"""
Brute-Force γ_sp Oracle
Ascending-cardinality subset enumeration starting at ⌈n/2⌉
"""

import logging
import time

from config import get_config
from graphs.graph import Graph, VertexSet
from invariants.search import check_cap, subsets_of_size
from superdom.certificate import SolveResult, is_super_dominating, is_super_dominating_mask

logger = logging.getLogger(__name__)


def gamma_sp_bruteforce(graph: Graph, cap: int = None) -> SolveResult:
    """
    Exact γ_sp(G) by exhaustive search

    Every graph satisfies γ_sp(G) ≥ ⌈n/2⌉, so smaller sizes are skipped.
    Within a size, subsets come in increasing bitmask order and the first
    hit is the canonical certificate.

    Raises:
        CapExceededError: if n exceeds the brute-force cap
    """
    cap = cap or get_config().solver.bruteforce_cap
    check_cap(graph.n, cap, "gamma_sp_bruteforce")
    started = time.monotonic()
    checked = 0
    for k in range(-(-graph.n // 2), graph.n + 1):
        for mask in subsets_of_size(graph.n, k):
            checked += 1
            if is_super_dominating_mask(graph.adj, graph.full_mask, mask):
                certificate = is_super_dominating(graph, VertexSet(graph.n, mask))
                elapsed = time.monotonic() - started
                logger.debug(f"bruteforce gamma_sp={k} after {checked} subsets ({elapsed:.3f}s)")
                return SolveResult(
                    gamma_sp=k,
                    certificate=certificate,
                    exact=True,
                    bounds=(k, k),
                    method="bruteforce",
                    nodes=checked,
                    elapsed=elapsed,
                )
    raise AssertionError("V(G) is always super dominating")
