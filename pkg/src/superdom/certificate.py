"""
Super Domination Certificates

D is super dominating when every u outside D has a private neighbour
v ∈ D with N(v) ∩ D̄ = {u}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from graphs.graph import Graph, GraphInputError, VertexSet, iter_bits


def is_super_dominating_mask(adj, full: int, inside: int) -> bool:
    """Bitmask form of the private-neighbour condition"""
    outside = full & ~inside
    covered = 0
    for v in iter_bits(inside):
        x = adj[v] & outside
        if x and not x & (x - 1):
            covered |= x
    return covered == outside


@dataclass(frozen=True)
class SuperDomCertificate:
    """
    Super dominating set D with its witnesses

    assignment holds (u, u*) pairs sorted by u, with N(u*) ∩ D̄ = {u}.
    """
    D: VertexSet
    Dstar: VertexSet
    assignment: Tuple[Tuple[int, int], ...]

    @property
    def outside(self) -> VertexSet:
        return self.D.complement()

    @property
    def size(self) -> int:
        return len(self.D)

    def witness_of(self) -> Dict[int, int]:
        return dict(self.assignment)

    def revalidate(self, graph: Graph) -> bool:
        """Re-check the private-neighbour condition pair by pair and the bijection D̄ → D*"""
        if self.D.universe != graph.n:
            return False
        outside = self.outside.bits
        assigned = self.witness_of()
        if sorted(assigned) != self.outside.to_list():
            return False
        if sorted(assigned.values()) != self.Dstar.to_list():
            return False
        if not self.Dstar.issubset(self.D):
            return False
        return all(graph.adj[w] & outside == 1 << u for u, w in assigned.items())

    def to_dict(self) -> Dict:
        return {
            "D": self.D.to_list(),
            "Dstar": self.Dstar.to_list(),
            "assignment": {str(u): w for u, w in self.assignment},
        }


@dataclass
class SolveResult:
    """
    Outcome of a γ_sp computation

    When exact is False the search hit its deadline: gamma_sp is None,
    bounds holds the proven interval and certificate the best set found.
    """
    gamma_sp: Optional[int]
    certificate: Optional[SuperDomCertificate]
    exact: bool
    bounds: Tuple[int, int]
    method: str = "bnb"
    nodes: int = 0
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        payload = {"gamma_sp": self.gamma_sp}
        if self.certificate is not None:
            payload.update(self.certificate.to_dict())
        payload["exact"] = self.exact
        payload["bounds"] = list(self.bounds)
        return payload


def private_witnesses(graph: Graph, inside: int) -> Dict[int, List[int]]:
    """For each u ∈ D̄ the sorted list of v ∈ D with N(v) ∩ D̄ = {u}"""
    outside = graph.full_mask & ~inside
    witnesses: Dict[int, List[int]] = {u: [] for u in iter_bits(outside)}
    for v in iter_bits(inside):
        x = graph.adj[v] & outside
        if x and not x & (x - 1):
            witnesses[x.bit_length() - 1].append(v)
    return witnesses


def is_super_dominating(graph: Graph, vertices: VertexSet) -> Optional[SuperDomCertificate]:
    """
    Certificate for D, or None when D is not super dominating

    The smallest valid witness is taken for every u. A valid witness has
    exactly one neighbour in D̄, so it can serve only that u and the choices
    never collide; the assignment is therefore a bijection without any
    matching search.
    """
    if vertices.universe != graph.n:
        raise GraphInputError(
            f"vertex set universe {vertices.universe} does not match graph order {graph.n}"
        )
    witnesses = private_witnesses(graph, vertices.bits)
    if any(not options for options in witnesses.values()):
        return None
    assignment = tuple((u, options[0]) for u, options in sorted(witnesses.items()))
    dstar = VertexSet.of(graph.n, [w for _, w in assignment])
    return SuperDomCertificate(vertices, dstar, assignment)
