"""
Graph Operations
Disjoint union, join, Cartesian and corona products, line graphs
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from graphs.graph import Graph, GraphInputError, iter_bits


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G ∪ H with H's vertices shifted by |V(G)|"""
    shift = g.n
    return Graph.from_adjacency(list(g.adj) + [row << shift for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    """G + H: the disjoint union plus every edge between the two sides"""
    shift = g.n
    g_side = g.full_mask
    h_side = h.full_mask << shift
    adj = [row | h_side for row in g.adj] + [(row << shift) | g_side for row in h.adj]
    return Graph.from_adjacency(adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    G □ H

    Vertex (a, b) is encoded as a * |V(H)| + b. (a, b) ~ (a', b') iff
    a = a' and bb' ∈ E(H), or aa' ∈ E(G) and b = b'.
    """
    m = h.n
    adj = []
    for a in range(g.n):
        for b in range(m):
            row = h.adj[b] << (a * m)
            for a2 in iter_bits(g.adj[a]):
                row |= 1 << (a2 * m + b)
            adj.append(row)
    return Graph.from_adjacency(adj)


def corona_block(g: Graph, h: Graph, i: int) -> range:
    """Vertices of the i-th copy of H inside G ⊙ H"""
    return range(g.n + i * h.n, g.n + (i + 1) * h.n)


def corona_product(g: Graph, h: Graph) -> Graph:
    """
    G ⊙ H

    Vertices 0..n-1 are G; copy i of H occupies corona_block(g, h, i) and
    vertex i is joined to its whole block.
    """
    if g.n < 1:
        raise GraphInputError("corona product needs a first factor with at least one vertex")
    n, m = g.n, h.n
    adj = [0] * (n * (1 + m))
    for i in range(n):
        block = corona_block(g, h, i)
        offset = block.start
        adj[i] = g.adj[i] | (h.full_mask << offset)
        for local, row in enumerate(h.adj):
            adj[offset + local] = (row << offset) | (1 << i)
    return Graph.from_adjacency(adj)


@dataclass(frozen=True)
class LineGraph:
    """L(G) together with the vertex ↔ edge correspondence"""
    graph: Graph
    edges: Tuple[Tuple[int, int], ...]

    def vertex_of(self) -> Dict[Tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}


def line_graph(g: Graph) -> LineGraph:
    """
    L(G); vertex i of L(G) is the i-th edge of G in lexicographic order

    Raises:
        GraphInputError: if G has no edges
    """
    edges = tuple(g.edges())
    if not edges:
        raise GraphInputError("line graph is undefined for a graph without edges")
    incident: List[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return LineGraph(Graph.from_adjacency(adj), edges)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by vertices, relabelled 0..k-1 in the given order"""
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in index:
                row |= 1 << index[w]
        adj.append(row)
    return Graph.from_adjacency(adj)


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Graph with vertex v renamed mapping[v]; mapping must be a permutation"""
    if sorted(mapping) != list(range(g.n)):
        raise GraphInputError("relabelling map is not a permutation of the vertices")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        new_row = 0
        for w in iter_bits(row):
            new_row |= 1 << mapping[w]
        adj[mapping[v]] = new_row
    return Graph.from_adjacency(adj)


def product_swap_map(n_g: int, n_h: int) -> List[int]:
    """Map (a, b) ↦ (b, a) from the encoding of G□H to that of H□G"""
    return [b * n_g + a for a in range(n_g) for b in range(n_h)]
