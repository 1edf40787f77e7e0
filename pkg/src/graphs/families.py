"""
Graph Families
Canonically labelled constructors for the standard families

Labelling:
- path P_n:        0-1-...-(n-1)
- cycle C_n:       path plus the edge (n-1, 0)
- star K_{1,r}:    centre 0, leaves 1..r
- multipartite:    parts are consecutive vertex blocks in the given order
- hypercube Q_k:   vertex index is the coordinate bitmask
- hamming H_{k,q}: vertex index is the base-q coordinate tuple, most
                   significant digit first (matches cartesian_product)
"""

from enum import Enum
from itertools import combinations
from typing import List, Sequence

from graphs.graph import Graph, GraphInputError, build_graph


class FamilyKind(Enum):
    """Named graph families"""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    HYPERCUBE = "hypercube"
    HAMMING = "hamming"


def _require(value: int, minimum: int, what: str):
    if value < minimum:
        raise GraphInputError(f"{what} must be at least {minimum}, got {value}")


def path(n: int) -> Graph:
    _require(n, 1, "path order")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n, 3, "cycle order")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n, 1, "complete graph order")
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _require(n, 1, "empty graph order")
    return build_graph(n, [])


def star(r: int) -> Graph:
    _require(r, 1, "star leaf count")
    return build_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise GraphInputError("complete multipartite graph needs at least one part")
    for size in parts:
        _require(size, 1, "part size")
    blocks: List[range] = []
    start = 0
    for size in parts:
        blocks.append(range(start, start + size))
        start += size
    edges = [
        (u, v)
        for a, b in combinations(blocks, 2)
        for u in a
        for v in b
    ]
    return build_graph(start, edges)


def complete_bipartite(r: int, t: int) -> Graph:
    _require(r, 1, "first part size")
    _require(t, 1, "second part size")
    return complete_multipartite([r, t])


def hypercube(k: int) -> Graph:
    _require(k, 1, "hypercube dimension")
    n = 1 << k
    return build_graph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(k) if v < v ^ (1 << i)])


def hamming(k: int, q: int) -> Graph:
    """H_{k,q}: k-fold Cartesian power of K_q"""
    _require(k, 1, "hamming dimension")
    _require(q, 2, "hamming alphabet size")
    n = q ** k
    weights = [q ** (k - 1 - i) for i in range(k)]
    edges = []
    for v in range(n):
        for i, w in enumerate(weights):
            digit = v // w % q
            for other in range(digit + 1, q):
                edges.append((v, v + (other - digit) * w))
    return build_graph(n, edges)


_BUILDERS = {
    FamilyKind.PATH: (path, 1),
    FamilyKind.CYCLE: (cycle, 1),
    FamilyKind.COMPLETE: (complete, 1),
    FamilyKind.EMPTY: (empty, 1),
    FamilyKind.STAR: (star, 1),
    FamilyKind.COMPLETE_BIPARTITE: (complete_bipartite, 2),
    FamilyKind.HYPERCUBE: (hypercube, 1),
    FamilyKind.HAMMING: (hamming, 2),
}


def family(kind, params: Sequence[int]) -> Graph:
    """
    Construct a family member by kind

    Args:
        kind: FamilyKind or its string value
        params: integer parameters (all part sizes for multipartite)
    """
    kind = FamilyKind(kind)
    params = list(params)
    if kind is FamilyKind.COMPLETE_MULTIPARTITE:
        return complete_multipartite(params)
    builder, arity = _BUILDERS[kind]
    if len(params) != arity:
        raise GraphInputError(f"{kind.value} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
