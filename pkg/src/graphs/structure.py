"""
Structural Predicates
Connectivity, bipartiteness, degree statistics and family recognition
"""

from dataclasses import dataclass
from typing import List, Optional

from graphs.graph import Graph, VertexSet, iter_bits


@dataclass(frozen=True)
class BipartiteResult:
    """Outcome of a bipartiteness test with a 2-colouring witness"""
    is_bipartite: bool
    coloring: Optional[tuple] = None  # colour (0/1) per vertex when bipartite

    def __bool__(self) -> bool:
        return self.is_bipartite


def connected_components(graph: Graph) -> List[VertexSet]:
    """Components as vertex sets, ordered by smallest member"""
    seen = 0
    components = []
    for start in range(graph.n):
        if seen >> start & 1:
            continue
        component = frontier = 1 << start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= graph.adj[v]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        components.append(VertexSet(graph.n, component))
    return components


def is_connected(graph: Graph) -> bool:
    return graph.n > 0 and len(connected_components(graph)) == 1


def is_bipartite(graph: Graph) -> BipartiteResult:
    """BFS 2-colouring per component; colour 0 goes to the smallest vertex"""
    color: List[Optional[int]] = [None] * graph.n
    for start in range(graph.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in iter_bits(graph.adj[v]):
                if color[w] is None:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False)
    return BipartiteResult(True, tuple(color))


def is_empty(graph: Graph) -> bool:
    return graph.edge_count == 0


def is_complete(graph: Graph) -> bool:
    return graph.edge_count == graph.n * (graph.n - 1) // 2


def max_degree(graph: Graph) -> int:
    return max((row.bit_count() for row in graph.adj), default=0)


def degree_one_count(graph: Graph) -> int:
    """I(G): number of vertices of degree one"""
    return sum(1 for row in graph.adj if row.bit_count() == 1)


def universal_vertices(graph: Graph) -> VertexSet:
    """Vertices adjacent to every other vertex"""
    return VertexSet.of(graph.n, [v for v in range(graph.n) if graph.degree(v) == graph.n - 1])


def has_isolated_vertices(graph: Graph) -> bool:
    return any(row == 0 for row in graph.adj)


def is_tree(graph: Graph) -> bool:
    return is_connected(graph) and graph.edge_count == graph.n - 1


def is_path_graph(graph: Graph) -> bool:
    """True when G is isomorphic to P_n (n ≥ 1)"""
    if not is_tree(graph):
        return False
    return max_degree(graph) <= 2


def is_cycle_graph(graph: Graph) -> bool:
    """True when G is isomorphic to C_n (n ≥ 3)"""
    if graph.n < 3 or not is_connected(graph):
        return False
    return all(row.bit_count() == 2 for row in graph.adj)
