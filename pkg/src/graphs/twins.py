"""
Twin Equivalence Classes

x R y  iff  N[x] = N[y] or N(x) = N(y)
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from graphs.graph import Graph, VertexSet


class TwinKind(Enum):
    """Kind of a twin equivalence class"""
    SINGLETON = "singleton"
    FALSE_TWIN = "false-twin"  # equal open neighbourhoods
    TRUE_TWIN = "true-twin"    # equal closed neighbourhoods


@dataclass(frozen=True)
class TwinClass:
    members: VertexSet
    kind: TwinKind

    def to_dict(self) -> Dict:
        return {"members": self.members.to_list(), "kind": self.kind.value}


@dataclass(frozen=True)
class TwinPartition:
    """Partition of V(G) into twin classes, ordered by smallest member"""
    classes: Tuple[TwinClass, ...]

    @property
    def t(self) -> int:
        return len(self.classes)

    def class_of(self) -> List[int]:
        """Class index per vertex"""
        owner: Dict[int, int] = {}
        for index, twin_class in enumerate(self.classes):
            for v in twin_class.members:
                owner[v] = index
        return [owner[v] for v in sorted(owner)]

    def to_dict(self) -> Dict:
        return {"t": self.t, "classes": [c.to_dict() for c in self.classes]}


def twin_partition(graph: Graph) -> TwinPartition:
    """
    Maximal twin classes

    A vertex with an open-neighbourhood twin cannot also have a distinct
    closed-neighbourhood twin, so grouping by N(v) first and N[v] second
    yields the partition directly.
    """
    by_open: Dict[int, int] = defaultdict(int)
    by_closed: Dict[int, int] = defaultdict(int)
    for v in range(graph.n):
        by_open[graph.adj[v]] |= 1 << v
        by_closed[graph.closed_mask(v)] |= 1 << v

    assigned = 0
    classes = []
    for v in range(graph.n):
        if assigned >> v & 1:
            continue
        open_group = by_open[graph.adj[v]]
        closed_group = by_closed[graph.closed_mask(v)]
        if open_group.bit_count() > 1:
            members, kind = open_group, TwinKind.FALSE_TWIN
        elif closed_group.bit_count() > 1:
            members, kind = closed_group, TwinKind.TRUE_TWIN
        else:
            members, kind = 1 << v, TwinKind.SINGLETON
        assigned |= members
        classes.append(TwinClass(VertexSet(graph.n, members), kind))
    return TwinPartition(tuple(classes))
