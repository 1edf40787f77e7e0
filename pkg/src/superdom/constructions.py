"""
Constructive Witnesses

Explicit super dominating sets that realise the upper bounds: n − γ(G),
n − ρ(L(G)), the Cartesian bound built from λ(G), and nn′ − n − n′ + 4.
"""

import logging
from typing import Optional

from graphs.graph import Graph, GraphInputError, VertexSet
from graphs.operations import cartesian_product, induced_subgraph, line_graph
from graphs.structure import connected_components, has_isolated_vertices
from graphs.twins import twin_partition
from invariants.domination import open_irredundant_dominating_set
from invariants.packing import two_packing_number
from superdom.bnb import gamma_sp_bnb
from superdom.certificate import SuperDomCertificate, is_super_dominating
from superdom.lambda_number import lambda_number

logger = logging.getLogger(__name__)


def superdom_from_open_irredundant(graph: Graph) -> Optional[SuperDomCertificate]:
    """
    V ∖ S for an open irredundant γ-set S, of size n − γ(G)

    Raises:
        GraphInputError: if G has isolated vertices
    """
    if has_isolated_vertices(graph):
        raise GraphInputError("an open irredundant gamma-set needs a graph without isolated vertices")
    s = open_irredundant_dominating_set(graph)
    if s is None:
        logger.error(f"no open irredundant minimum dominating set found for {graph}")
        return None
    return is_super_dominating(graph, s.complement())


def superdom_from_line_packing(graph: Graph) -> Optional[SuperDomCertificate]:
    """
    V ∖ X of size n − ρ(L(G))

    X takes the smaller endpoint of every edge in a maximum 2-packing of
    L(G); the other endpoint is its private neighbour.

    Raises:
        GraphInputError: if G has no edges
    """
    line = line_graph(graph)
    packing = two_packing_number(line.graph).certificate
    x = VertexSet.of(graph.n, [line.edges[i][0] for i in packing])
    return is_super_dominating(graph, x.complement())


def cartesian_upper_witness(g: Graph, h: Graph, cap: int = None) -> Optional[SuperDomCertificate]:
    """
    W = V(G□H) ∖ ((S̄ × V(H)) ∪ (X × S̄′)) on G□H

    (S, S*, X) is the λ-witness of G and S′ the canonical γ_sp-set of H,
    so |W| = n′γ_sp(G) − λ(G)(n′ − γ_sp(H)).
    """
    witness = lambda_number(g, cap=cap).witness
    s_prime = gamma_sp_bnb(h, timeout=0, workers=1).certificate.D
    m = h.n
    outside = 0
    for a in witness.S.complement():
        for b in range(m):
            outside |= 1 << (a * m + b)
    for a in witness.X:
        for b in s_prime.complement():
            outside |= 1 << (a * m + b)
    product = cartesian_product(g, h)
    return is_super_dominating(product, VertexSet(product.n, product.full_mask & ~outside))


def order_bound_witness(g: Graph, h: Graph) -> Optional[SuperDomCertificate]:
    """
    Super dominating set of size nn′ − n − n′ + 4 on G□H

    With x1x2 and y1y2 the first edges of G and H, the outside set is
    ((V(G) ∖ {x1, x2}) × {y1}) ∪ ({x1} × (V(H) ∖ {y1, y2})).

    Raises:
        GraphInputError: if either factor has no edges
    """
    g_edges, h_edges = g.edges(), h.edges()
    if not g_edges or not h_edges:
        raise GraphInputError("the order bound needs an edge in both factors")
    (x1, x2), (y1, y2) = g_edges[0], h_edges[0]
    m = h.n
    outside = 0
    for a in range(g.n):
        if a not in (x1, x2):
            outside |= 1 << (a * m + y1)
    for b in range(m):
        if b not in (y1, y2):
            outside |= 1 << (x1 * m + b)
    product = cartesian_product(g, h)
    return is_super_dominating(product, VertexSet(product.n, product.full_mask & ~outside))


def twin_class_check(graph: Graph, certificate: SuperDomCertificate) -> bool:
    """Every twin class meets D̄ and D* in at most one vertex"""
    outside = certificate.outside.bits
    for twin_class in twin_partition(graph).classes:
        if (twin_class.members.bits & outside).bit_count() > 1:
            return False
        if (twin_class.members.bits & certificate.Dstar.bits).bit_count() > 1:
            return False
    return True


def gamma_sp_by_components(graph: Graph) -> int:
    """Sum of γ_sp over the connected components"""
    total = 0
    for component in connected_components(graph):
        total += gamma_sp_bnb(induced_subgraph(graph, component.to_list()), timeout=0, workers=1).gamma_sp
    return total
