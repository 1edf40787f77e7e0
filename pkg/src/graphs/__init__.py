"""Graph core: representation, constructions, predicates and I/O"""

from graphs.graph import (
    Graph,
    GraphInputError,
    VertexSet,
    build_graph,
    closed_neighborhood,
    iter_bits,
    mask_of,
    open_neighborhood,
    set_neighborhood,
)
from graphs.families import FamilyKind, family
from graphs.operations import (
    cartesian_product,
    corona_product,
    disjoint_union,
    join,
    line_graph,
)
from graphs.twins import TwinKind, TwinPartition, twin_partition

__all__ = [
    "Graph",
    "GraphInputError",
    "VertexSet",
    "build_graph",
    "closed_neighborhood",
    "iter_bits",
    "mask_of",
    "open_neighborhood",
    "set_neighborhood",
    "FamilyKind",
    "family",
    "cartesian_product",
    "corona_product",
    "disjoint_union",
    "join",
    "line_graph",
    "TwinKind",
    "TwinPartition",
    "twin_partition",
]
