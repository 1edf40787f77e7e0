"""
Graph Core
Immutable simple undirected graphs over vertices 0..n-1 with bitset adjacency
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple
import logging

logger = logging.getLogger(__name__)


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad files)"""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per listed vertex"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """Subset of 0..universe-1 stored as a bitmask"""
    universe: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise GraphInputError(
                f"vertex set {bin(self.bits)} does not fit a universe of {self.universe}"
            )

    @classmethod
    def of(cls, universe: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < universe:
                raise GraphInputError(f"vertex {v} out of range 0..{universe - 1}")
        return cls(universe, mask_of(vertices))

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, (1 << universe) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe, ((1 << self.universe) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph

    adj[v] is the bitmask of N(v). Instances are immutable and safe to share
    between worker processes.
    """
    n: int
    adj: Tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphInputError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        degree_sum = 0
        for u, row in enumerate(self.adj):
            if row >> u & 1:
                raise GraphInputError(f"loop at vertex {u}")
            if row >> self.n:
                raise GraphInputError(f"vertex {u} has a neighbour out of range")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")
            degree_sum += row.bit_count()
        if degree_sum != 2 * self.edge_count:
            raise GraphInputError(
                f"edge_count {self.edge_count} disagrees with degree sum {degree_sum}"
            )

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        return cls(len(adj), adj, sum(row.bit_count() for row in adj) // 2)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list

    Duplicate edges collapse silently; loops and out-of-range endpoints are
    rejected.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"loop edge ({u}, {u}) is not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.from_adjacency(adj)


def _check_vertex(graph: Graph, v: int):
    if not 0 <= v < graph.n:
        raise GraphInputError(f"vertex {v} out of range 0..{graph.n - 1}")


def open_neighborhood(graph: Graph, v: int) -> VertexSet:
    """N(v)"""
    _check_vertex(graph, v)
    return VertexSet(graph.n, graph.adj[v])


def closed_neighborhood(graph: Graph, v: int) -> VertexSet:
    """N[v] = N(v) plus v"""
    _check_vertex(graph, v)
    return VertexSet(graph.n, graph.closed_mask(v))


def neighborhood_mask(graph: Graph, mask: int) -> int:
    """Bitmask of N(X), the union of the open neighbourhoods of X"""
    result = 0
    for x in iter_bits(mask):
        result |= graph.adj[x]
    return result


def set_neighborhood(graph: Graph, vertices: VertexSet) -> VertexSet:
    """N(X) for a vertex set X"""
    if vertices.universe != graph.n:
        raise GraphInputError(
            f"vertex set universe {vertices.universe} does not match graph order {graph.n}"
        )
    return VertexSet(graph.n, neighborhood_mask(graph, vertices.bits))
