"""
Branch-and-Bound γ_sp Solver

Searches over the outside set U = D̄ instead of D. A set U is feasible
when every u ∈ U has a witness v ∉ U with N(v) ∩ U = {u}; feasibility is
hereditary (every subset of a feasible U is feasible), so the search only
ever adds vertices that keep U feasible, and γ_sp(G) = n − max |U|.

Pruning caps |U| by ⌊n/2⌋ (γ_sp ≥ ⌈n/2⌉), by α′(G) (γ_sp ≥ n − α′) and by
the twin class count t (γ_sp ≥ n − t). On bipartite graphs α′ = β by
König's theorem, so the bipartite γ_sp ≥ n − β and γ_sp ≥ α bounds are
already covered by the matching cap.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from config import get_config
from graphs.graph import Graph, VertexSet, iter_bits
from graphs.structure import has_isolated_vertices, max_degree
from graphs.twins import twin_partition
from invariants.matching import matching_number
from invariants.search import check_cap
from superdom.certificate import SolveResult, is_super_dominating

logger = logging.getLogger(__name__)


class _DeadlineReached(Exception):
    pass


class _OutsideSearch:
    """Depth-first search for a maximum feasible outside set"""

    def __init__(self, adj, n: int, order: List[int], cap: int, deadline: Optional[float]):
        self.adj = adj
        self.n = n
        self.full = (1 << n) - 1
        self.order = order
        self.cap = cap
        self.deadline = deadline
        self.nodes = 0
        self.best_size = 0
        self.best_mask = 0

    def feasible(self, outside: int) -> bool:
        covered = 0
        for v in iter_bits(self.full & ~outside):
            x = self.adj[v] & outside
            if x and not x & (x - 1):
                covered |= x
        return covered == outside

    def extendable(self, outside: int, cand: int) -> int:
        """Members of cand that can join U without breaking feasibility"""
        keep = 0
        for v in iter_bits(cand):
            if self.feasible(outside | 1 << v):
                keep |= 1 << v
        return keep

    def pick(self, cand: int) -> int:
        for v in self.order:
            if cand >> v & 1:
                return v
        raise ValueError("empty candidate set")

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 63 and time.monotonic() > self.deadline:
            raise _DeadlineReached()

    def greedy(self):
        """Maximal feasible U in branching order; seeds the incumbent"""
        outside = 0
        for v in self.order:
            if self.feasible(outside | 1 << v):
                outside |= 1 << v
        self.best_size, self.best_mask = outside.bit_count(), outside

    def maximise(self, outside: int, cand: int):
        if self.best_size >= self.cap:
            return
        self.tick()
        cand = self.extendable(outside, cand)
        size = outside.bit_count()
        if size > self.best_size:
            self.best_size, self.best_mask = size, outside
        if not cand or size + cand.bit_count() <= self.best_size:
            return
        v = self.pick(cand)
        bit = 1 << v
        self.maximise(outside | bit, cand & ~bit)
        self.maximise(outside, cand & ~bit)

    def canonical(self, k: int) -> Optional[int]:
        """
        Largest-bitmask feasible U with |U| = k

        Decides vertices from n-1 downward, include first, so the first
        complete set reached is the numerically largest one; its complement
        is the smallest-bitmask minimum D.
        """

        def descend(outside: int, cand: int) -> Optional[int]:
            self.tick()
            size = outside.bit_count()
            if size == k:
                return outside
            cand = self.extendable(outside, cand)
            if size + cand.bit_count() < k:
                return None
            bit = 1 << (cand.bit_length() - 1)
            found = descend(outside | bit, cand & ~bit)
            if found is not None:
                return found
            return descend(outside, cand & ~bit)

        return descend(0, self.full)


def _branch_order(graph: Graph) -> List[int]:
    """Descending degree, ties by index"""
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))


def outside_cap(graph: Graph) -> int:
    """Upper bound on |D̄| from ⌊n/2⌋, α′(G) and the twin class count"""
    if graph.n == 0:
        return 0
    return min(graph.n // 2, matching_number(graph).value, twin_partition(graph).t)


def _degree_upper(graph: Graph) -> int:
    if graph.n == 0 or has_isolated_vertices(graph):
        return graph.n
    delta = max_degree(graph)
    return graph.n * delta // (delta + 1)


def _frontier(search: _OutsideSearch, outside: int, cand: int, depth: int, out: list):
    cand = search.extendable(outside, cand)
    if depth == 0 or not cand:
        out.append((outside, cand))
        return
    bit = 1 << search.pick(cand)
    _frontier(search, outside | bit, cand & ~bit, depth - 1, out)
    _frontier(search, outside, cand & ~bit, depth - 1, out)


def _solve_subtree(task) -> Tuple[int, int, int, bool]:
    """Worker entry point: (best size, best mask, nodes, timed out)"""
    adj, n, order, cap, deadline, incumbent, outside, cand = task
    search = _OutsideSearch(adj, n, order, cap, deadline)
    search.best_size = incumbent
    search.best_mask = -1
    timed_out = False
    try:
        search.maximise(outside, cand)
    except _DeadlineReached:
        timed_out = True
    return search.best_size, search.best_mask, search.nodes, timed_out


def _parallel_maximise(search: _OutsideSearch, workers: int) -> bool:
    """Split the top of the tree across processes; returns True on timeout"""
    tasks: list = []
    _frontier(search, 0, search.full, max(1, math.ceil(math.log2(workers * 4))), tasks)
    payloads = [
        (search.adj, search.n, search.order, search.cap, search.deadline, search.best_size, outside, cand)
        for outside, cand in tasks
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_solve_subtree, payloads))
    timed_out = False
    for size, mask, nodes, subtree_timed_out in results:
        search.nodes += nodes
        timed_out = timed_out or subtree_timed_out
        if mask < 0:
            continue
        # larger U wins; at equal size the larger U mask, i.e. the smaller D
        if (size, mask) > (search.best_size, search.best_mask):
            search.best_size, search.best_mask = size, mask
    return timed_out


def gamma_sp_bnb(
    graph: Graph,
    timeout: float = None,
    workers: int = None,
    max_vertices: int = None,
) -> SolveResult:
    """
    Exact γ_sp(G) with its smallest-bitmask certificate

    Args:
        graph: input graph
        timeout: seconds before giving up (0 or None from config = no limit)
        workers: process count for the first phase
        max_vertices: refuse graphs above this order

    Returns:
        SolveResult; on timeout gamma_sp is None, exact is False and bounds
        holds the proven interval together with the best certificate found
    """
    solver_config = get_config().solver
    timeout = solver_config.timeout_seconds if timeout is None else timeout
    workers = workers or solver_config.workers
    check_cap(graph.n, max_vertices or solver_config.max_vertices, "gamma_sp_bnb")

    started = time.monotonic()
    deadline = started + timeout if timeout and timeout > 0 else None
    cap = outside_cap(graph)
    search = _OutsideSearch(graph.adj, graph.n, _branch_order(graph), cap, deadline)
    search.greedy()
    logger.debug(f"bnb start n={graph.n} cap={cap} greedy={search.best_size}")

    timed_out = False
    try:
        if search.best_size < cap:
            if workers > 1 and graph.n >= 12:
                timed_out = _parallel_maximise(search, workers)
            else:
                search.maximise(0, search.full)
    except _DeadlineReached:
        timed_out = True

    notes: List[str] = []
    if timed_out:
        lower = graph.n - cap
        upper = min(graph.n - search.best_size, _degree_upper(graph))
        certificate = is_super_dominating(graph, VertexSet(graph.n, graph.full_mask & ~search.best_mask))
        elapsed = time.monotonic() - started
        logger.warning(
            f"gamma_sp search timed out after {elapsed:.2f}s; interval [{lower}, {upper}]"
        )
        return SolveResult(
            gamma_sp=None,
            certificate=certificate,
            exact=False,
            bounds=(lower, upper),
            nodes=search.nodes,
            elapsed=elapsed,
            notes=["timeout"],
        )

    k = search.best_size
    outside = search.best_mask
    try:
        canonical = search.canonical(k)
        if canonical is not None:
            outside = canonical
    except _DeadlineReached:
        notes.append("certificate not canonicalised before the deadline")
        logger.warning("deadline reached while canonicalising the certificate")

    value = graph.n - k
    certificate = is_super_dominating(graph, VertexSet(graph.n, graph.full_mask & ~outside))
    elapsed = time.monotonic() - started
    logger.debug(f"bnb explored {search.nodes} nodes")
    logger.debug(f"gamma_sp={value} (n={graph.n}) in {elapsed:.3f}s")
    return SolveResult(
        gamma_sp=value,
        certificate=certificate,
        exact=True,
        bounds=(value, value),
        nodes=search.nodes,
        elapsed=elapsed,
        notes=notes,
    )
