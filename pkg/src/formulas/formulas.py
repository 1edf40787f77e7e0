"""
Closed-Form γ_sp

Every family with a settled value. A spec outside a formula's hypothesis
raises NotApplicableError rather than returning a number.
"""

import logging
from typing import Callable, Dict, List, Optional

from formulas.specs import FamilySpec, SpecKind, construct
from graphs.graph import Graph
from graphs.structure import is_complete, is_empty, max_degree

logger = logging.getLogger(__name__)


class NotApplicableError(ValueError):
    """The formula's hypothesis does not hold for this input"""


def _need(condition: bool, message: str):
    if not condition:
        raise NotApplicableError(message)


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def multipartite_rule(parts: List[int]) -> int:
    """n − 1 if at most one part exceeds one vertex, n − 2 otherwise"""
    n = sum(parts)
    return n - 1 if sum(1 for a in parts if a > 1) <= 1 else n - 2


def _path(spec: FamilySpec) -> int:
    (n,) = spec.params
    _need(n >= 3, f"path formula needs n >= 3, got {n}")
    return _ceil_half(n)


def _cycle(spec: FamilySpec) -> int:
    (n,) = spec.params
    _need(n >= 3, f"cycle formula needs n >= 3, got {n}")
    return _ceil_half(n) if n % 4 in (0, 3) else _ceil_half(n + 1)


def _complete(spec: FamilySpec) -> int:
    (n,) = spec.params
    _need(n >= 2, f"complete graph formula needs n >= 2, got {n}")
    return n - 1


def _empty(spec: FamilySpec) -> int:
    (n,) = spec.params
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return n


def _star(spec: FamilySpec) -> int:
    (r,) = spec.params
    _need(r >= 1, f"star needs r >= 1, got {r}")
    return r


def _complete_bipartite(spec: FamilySpec) -> int:
    r, t = spec.params
    _need(r >= 1 and t >= 1, f"complete bipartite needs both parts non-empty, got {r},{t}")
    return multipartite_rule([r, t])


def _complete_multipartite(spec: FamilySpec) -> int:
    parts = list(spec.params)
    _need(len(parts) >= 2, f"complete multipartite formula needs at least two parts, got {len(parts)}")
    _need(all(a >= 1 for a in parts), f"part sizes must be positive, got {parts}")
    return multipartite_rule(parts)


def _hypercube(spec: FamilySpec) -> int:
    (k,) = spec.params
    _need(k >= 1, f"hypercube needs k >= 1, got {k}")
    return 1 << (k - 1)


def _complete_box_complete(n: int, m: int) -> int:
    n, m = max(n, m), min(n, m)
    if m == 2:
        return n
    if m == 3:
        return 2 * n
    _need(m >= 4, f"K_n box K_m has no settled value for m={m}")
    return n * m - n - m + 4


def _hamming(spec: FamilySpec) -> int:
    k, q = spec.params
    _need(k >= 1 and q >= 2, f"hamming graph needs k >= 1 and q >= 2, got {k},{q}")
    if k == 1:
        return q - 1
    if q == 2:
        return 1 << (k - 1)
    _need(k == 2, f"no settled value for the hamming graph H({k},{q})")
    return _complete_box_complete(q, q)


def _corona(spec: FamilySpec) -> int:
    g_spec, h_spec = spec.factors
    g, h = construct(g_spec), construct(h_spec)
    if is_empty(h):
        return g.n * h.n
    return g.n * (factor_gamma_sp(h_spec, h) + 1)


def _g_box_k2(spec: FamilySpec) -> int:
    g = construct(spec.factors[0])
    _need(g.n >= 2, f"G box K_2 formula needs |V(G)| >= 2, got {g.n}")
    return g.n


def _kn_box_km(spec: FamilySpec) -> int:
    n, m = spec.params
    _need(n >= 4 and m >= 4, f"K_n box K_m formula needs n, m >= 4, got {n},{m}")
    return n * m - n - m + 4


def _kn_box_k3(spec: FamilySpec) -> int:
    (n,) = spec.params
    _need(n >= 3, f"K_n box K_3 formula needs n >= 3, got {n}")
    return 2 * n


def _star_box_star(spec: FamilySpec) -> int:
    r, r2 = spec.params
    _need(r >= r2 >= 1, f"star box star formula needs r >= r' >= 1, got {r},{r2}")
    return r * r2 + 1


def _star_leaves(graph: Graph) -> Optional[int]:
    """r when G is K_{1,r} with r >= 2"""
    if graph.n >= 3 and graph.edge_count == graph.n - 1 and max_degree(graph) == graph.n - 1:
        return graph.n - 1
    return None


def _box(spec: FamilySpec) -> int:
    """
    Generic G □ H, classified by shape: a K_2 factor, two complete graphs,
    two stars, or a factor with γ_sp equal to half its order
    """
    g_spec, h_spec = spec.factors
    g, h = construct(g_spec), construct(h_spec)
    _need(g.n >= 2 and h.n >= 2, "box formulas need both factors of order >= 2")
    if is_complete(g) and is_complete(h):
        return _complete_box_complete(g.n, h.n)
    for factor, other in ((g, h), (h, g)):
        if factor.n == 2 and is_complete(factor):
            return other.n
    stars = (_star_leaves(g), _star_leaves(h))
    if all(stars):
        return stars[0] * stars[1] + 1
    for factor_spec, factor in ((g_spec, g), (h_spec, h)):
        if factor.n % 2 == 0 and factor_gamma_sp(factor_spec, factor) == factor.n // 2:
            return g.n * h.n // 2
    raise NotApplicableError(f"no settled value for {spec.to_string()}")


_FORMULAS: Dict[SpecKind, Callable[[FamilySpec], int]] = {
    SpecKind.PATH: _path,
    SpecKind.CYCLE: _cycle,
    SpecKind.COMPLETE: _complete,
    SpecKind.EMPTY: _empty,
    SpecKind.STAR: _star,
    SpecKind.COMPLETE_BIPARTITE: _complete_bipartite,
    SpecKind.COMPLETE_MULTIPARTITE: _complete_multipartite,
    SpecKind.HYPERCUBE: _hypercube,
    SpecKind.HAMMING: _hamming,
    SpecKind.CORONA: _corona,
    SpecKind.BOX: _box,
    SpecKind.G_BOX_K2: _g_box_k2,
    SpecKind.KN_BOX_KM: _kn_box_km,
    SpecKind.KN_BOX_K3: _kn_box_k3,
    SpecKind.STAR_BOX_STAR: _star_box_star,
}


def gamma_sp_formula(spec: FamilySpec) -> int:
    """
    γ_sp of the family member named by spec

    Raises:
        NotApplicableError: when the spec lies outside every settled case
    """
    return _FORMULAS[spec.kind](spec)


def factor_gamma_sp(spec: FamilySpec, graph: Graph = None) -> int:
    """γ_sp of a factor: the formula when one applies, the solver otherwise"""
    try:
        return gamma_sp_formula(spec)
    except NotApplicableError:
        from superdom.bnb import gamma_sp_bnb

        graph = graph if graph is not None else construct(spec)
        logger.debug(f"no formula for {spec.to_string()}, solving exactly")
        return gamma_sp_bnb(graph, timeout=0, workers=1).gamma_sp


def extremal_characterisations(graph: Graph, gamma_sp: int) -> Dict[str, bool]:
    """
    γ_sp(G) = n iff G is empty; γ_sp(G) = 1 iff G is K_1 or K_2.
    Each entry is True when the equivalence holds on this graph.
    """
    small_complete = graph.n in (1, 2) and is_complete(graph)
    return {
        "order iff empty": (gamma_sp == graph.n) == is_empty(graph),
        "one iff K1 or K2": (gamma_sp == 1) == small_complete,
    }
