"""
Brute-Force Oracles
Plain subset loops over Python sets, independent of the bitset solvers.
Only meant for small graphs (n ≤ 12).
"""

from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Set, Tuple

from graphs.graph import Graph


def _neighbors(graph: Graph) -> List[Set[int]]:
    return [{w for w in range(graph.n) if graph.has_edge(v, w)} for v in range(graph.n)]


def _dominates(nbrs: List[Set[int]], n: int, chosen: Set[int]) -> bool:
    return all(v in chosen or nbrs[v] & chosen for v in range(n))


def bf_domination_number(graph: Graph) -> Tuple[int, FrozenSet[int]]:
    nbrs = _neighbors(graph)
    for k in range(graph.n + 1):
        for subset in combinations(range(graph.n), k):
            if _dominates(nbrs, graph.n, set(subset)):
                return k, frozenset(subset)
    raise AssertionError("unreachable")


def bf_secure_domination_number(graph: Graph) -> Tuple[int, FrozenSet[int]]:
    nbrs = _neighbors(graph)
    n = graph.n
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            chosen = set(subset)
            if not _dominates(nbrs, n, chosen):
                continue
            secure = all(
                any(_dominates(nbrs, n, (chosen - {u}) | {v}) for u in nbrs[v] & chosen)
                for v in range(n)
                if v not in chosen
            )
            if secure:
                return k, frozenset(subset)
    raise AssertionError("unreachable")


def bf_matching_number(graph: Graph) -> Tuple[int, List[Tuple[int, int]]]:
    """Exhaustive recursion: the lowest free vertex is matched to a free neighbour or skipped"""
    nbrs = _neighbors(graph)

    @lru_cache(maxsize=None)
    def best_from(free: FrozenSet[int]) -> Tuple[Tuple[int, int], ...]:
        if not free:
            return ()
        v = min(free)
        best = best_from(free - {v})
        for w in sorted(nbrs[v] & free):
            candidate = ((v, w),) + best_from(free - {v, w})
            if len(candidate) > len(best):
                best = candidate
        return best

    edges = list(best_from(frozenset(range(graph.n))))
    return len(edges), edges


def bf_smallest_maximum_matching(graph: Graph) -> List[Tuple[int, int]]:
    """First maximum matching among edge subsets in lexicographic order"""
    edges = [(u, v) for u in range(graph.n) for v in range(u + 1, graph.n) if graph.has_edge(u, v)]
    for k in range(graph.n // 2, -1, -1):
        for subset in combinations(edges, k):
            ends = [x for edge in subset for x in edge]
            if len(set(ends)) == len(ends):
                return list(subset)
    raise AssertionError("unreachable")


def _independent(nbrs: List[Set[int]], subset) -> bool:
    return all(not (nbrs[v] & set(subset)) for v in subset)


def bf_independence_number(graph: Graph) -> Tuple[int, FrozenSet[int]]:
    nbrs = _neighbors(graph)
    for k in range(graph.n, -1, -1):
        for subset in combinations(range(graph.n), k):
            if _independent(nbrs, subset):
                return k, frozenset(subset)
    raise AssertionError("unreachable")


def bf_vertex_cover_number(graph: Graph) -> Tuple[int, FrozenSet[int]]:
    edges = graph.edges()
    for k in range(graph.n + 1):
        for subset in combinations(range(graph.n), k):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return k, frozenset(subset)
    raise AssertionError("unreachable")


def bf_two_packing_number(graph: Graph) -> Tuple[int, FrozenSet[int]]:
    closed = [nb | {v} for v, nb in enumerate(_neighbors(graph))]
    for k in range(graph.n, -1, -1):
        for subset in combinations(range(graph.n), k):
            if all(not (closed[u] & closed[v]) for u, v in combinations(subset, 2)):
                return k, frozenset(subset)
    raise AssertionError("unreachable")


def has_dominating_set_of_size(graph: Graph, k: int) -> Optional[FrozenSet[int]]:
    """A dominating set with exactly k vertices, if one exists"""
    nbrs = _neighbors(graph)
    for subset in combinations(range(graph.n), k):
        if _dominates(nbrs, graph.n, set(subset)):
            return frozenset(subset)
    return None
