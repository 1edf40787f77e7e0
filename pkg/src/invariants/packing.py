"""
2-Packing Number
ρ(G) as a maximum independent set of the closed-neighbourhood conflict graph
"""

from graphs.graph import Graph, GraphInputError, VertexSet, iter_bits
from invariants.independence import independence_number
from invariants.search import Optimum


def conflict_graph(graph: Graph) -> Graph:
    """u ~ v iff u ≠ v and N[u] ∩ N[v] ≠ ∅ (distance at most two)"""
    closed = [graph.closed_mask(v) for v in range(graph.n)]
    adj = []
    for u in range(graph.n):
        reach = 0
        for w in iter_bits(closed[u]):
            reach |= closed[w]
        adj.append(reach & ~(1 << u))
    return Graph.from_adjacency(adj)


def is_two_packing(graph: Graph, vertices: VertexSet) -> bool:
    """N[u] ∩ N[v] = ∅ for every pair of distinct members"""
    if vertices.universe != graph.n:
        raise GraphInputError(
            f"vertex set universe {vertices.universe} does not match graph order {graph.n}"
        )
    covered = 0
    for v in vertices:
        closed = graph.closed_mask(v)
        if covered & closed:
            return False
        covered |= closed
    return True


def two_packing_number(graph: Graph) -> Optimum:
    """ρ(G) with the smallest-bitmask maximum 2-packing"""
    return independence_number(conflict_graph(graph))
