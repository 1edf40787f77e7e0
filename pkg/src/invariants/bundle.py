"""
Invariant Bundle

All companion invariants of a graph with their certificates, plus a
validation pass that re-checks every certificate, the chain
1 ≤ γ ≤ ⌈n/2⌉ ≤ γ_sp ≤ n − 1 on graphs without isolated vertices, and the
relations γ ≤ γ_s, ρ ≤ γ and γ ≥ ⌈n/(Δ+1)⌉.

Certificates of the structural entries:
    t       one representative (smallest member) per twin class
    Delta   every vertex of maximum degree
    I       every vertex of degree one
    lambda  the set X of the maximising (S, S*, X), with the full triple
            kept as the entry's witness
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from config import get_config
from graphs.graph import Graph, VertexSet
from graphs.structure import degree_one_count, has_isolated_vertices, max_degree
from graphs.twins import twin_partition
from invariants.domination import domination_number, is_dominating, is_secure_dominating, secure_domination_number
from invariants.independence import independence_number, is_independent, is_vertex_cover, vertex_cover_number
from invariants.matching import is_matching, matching_number
from invariants.packing import is_two_packing, two_packing_number

logger = logging.getLogger(__name__)

INVARIANT_NAMES = (
    "gamma", "gamma_s", "alpha_prime", "beta", "alpha", "rho", "t", "Delta", "I", "lambda", "gamma_sp"
)

# Skipped above their cap unless asked for by name
CAPPED = {"gamma_s": "secure_cap", "lambda": "enumeration_cap"}

Certificate = Union[VertexSet, Tuple[Tuple[int, int], ...], None]


class InvariantMethod(Enum):
    EXACT = "exact"
    FORMULA = "formula"
    BOUNDS = "bounds"


@dataclass
class InvariantEntry:
    name: str
    value: Optional[int]
    certificate: Certificate
    method: InvariantMethod = InvariantMethod.EXACT
    bounds: Optional[Tuple[int, int]] = None
    witness: Any = None

    def to_dict(self) -> Dict:
        if isinstance(self.certificate, VertexSet):
            certificate = self.certificate.to_list()
        elif self.certificate is None:
            certificate = None
        else:
            certificate = [list(edge) for edge in self.certificate]
        payload = {
            "name": self.name,
            "value": self.value,
            "certificate": certificate,
            "method": self.method.value,
        }
        if self.bounds is not None:
            payload["bounds"] = list(self.bounds)
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


@dataclass
class InvariantBundle:
    graph: Graph
    entries: Dict[str, InvariantEntry] = field(default_factory=dict)
    skipped: Dict[str, str] = field(default_factory=dict)

    def value(self, name: str) -> Optional[int]:
        entry = self.entries.get(name)
        return entry.value if entry else None

    def to_dict(self) -> Dict:
        return {
            "n": self.graph.n,
            "m": self.graph.edge_count,
            "invariants": {
                name: self.entries[name].to_dict() for name in INVARIANT_NAMES if name in self.entries
            },
            "skipped": dict(sorted(self.skipped.items())),
        }

    def validate(self) -> List[str]:
        """Problems found; an empty list means every check passed"""
        problems: List[str] = []
        graph = self.graph
        predicates = {
            "gamma": lambda c: is_dominating(graph, c),
            "gamma_s": lambda c: is_secure_dominating(graph, c),
            "alpha_prime": lambda c: is_matching(graph, c),
            "beta": lambda c: is_vertex_cover(graph, c),
            "alpha": lambda c: is_independent(graph, c),
            "rho": lambda c: is_two_packing(graph, c),
            "t": lambda c: c == _twin_representatives(graph),
            "Delta": lambda c: c == _vertices_of_degree(graph, max_degree(graph)),
            "I": lambda c: c == _vertices_of_degree(graph, 1),
        }
        for name, entry in self.entries.items():
            if entry.method is InvariantMethod.BOUNDS or entry.certificate is None:
                continue
            if name == "gamma_sp":
                from superdom.certificate import is_super_dominating

                ok = is_super_dominating(graph, entry.certificate) is not None
            elif name == "lambda":
                ok = entry.witness is not None and entry.witness.revalidate(graph) and entry.witness.X == entry.certificate
            else:
                ok = predicates[name](entry.certificate)
            if not ok:
                problems.append(f"{name}: certificate fails its defining predicate")
            if name == "Delta":
                if entry.value != max_degree(graph):
                    problems.append(f"Delta: value {entry.value} != max degree {max_degree(graph)}")
            elif len(entry.certificate) != entry.value:
                problems.append(f"{name}: certificate size {len(entry.certificate)} != value {entry.value}")

        lam = self.entries.get("lambda")
        gamma_sp = self.value("gamma_sp")
        if lam is not None and lam.witness is not None and gamma_sp is not None and len(lam.witness.S) != gamma_sp:
            problems.append(f"lambda: |S|={len(lam.witness.S)} != gamma_sp={gamma_sp}")

        problems.extend(self._relations())
        for problem in problems:
            logger.error(problem)
        return problems

    def _relations(self) -> List[str]:
        """Chain and inequalities between the computed values"""
        problems: List[str] = []
        graph = self.graph
        gamma, gamma_sp = self.value("gamma"), self.value("gamma_sp")
        gamma_s, rho, delta = self.value("gamma_s"), self.value("rho"), self.value("Delta")
        if gamma is not None and gamma_s is not None and gamma > gamma_s:
            problems.append(f"gamma={gamma} > gamma_s={gamma_s}")
        if gamma is not None and rho is not None and rho > gamma:
            problems.append(f"rho={rho} > gamma={gamma}")
        if graph.n and not has_isolated_vertices(graph):
            half = -(-graph.n // 2)
            if gamma is not None and not 1 <= gamma <= half:
                problems.append(f"chain: gamma={gamma} outside [1, {half}]")
            if gamma_sp is not None and not half <= gamma_sp <= graph.n - 1:
                problems.append(f"chain: gamma_sp={gamma_sp} outside [{half}, {graph.n - 1}]")
            if gamma is not None and delta is not None and gamma * (delta + 1) < graph.n:
                problems.append(f"degree bound: gamma={gamma} < n/(Delta+1) = {graph.n}/{delta + 1}")
        return problems


def _twin_representatives(graph: Graph) -> VertexSet:
    return VertexSet.of(graph.n, [min(c.members) for c in twin_partition(graph).classes])


def _vertices_of_degree(graph: Graph, degree: int) -> VertexSet:
    return VertexSet.of(graph.n, [v for v in range(graph.n) if graph.degree(v) == degree])


def compute_invariants(
    graph: Graph,
    names: Optional[Iterable[str]] = None,
    timeout: float = None,
    solved=None,
) -> InvariantBundle:
    """
    Exact invariants of G

    solved, a SolveResult for the same graph, is reused for γ_sp instead of
    searching again.

    γ_s and λ are skipped above their caps when they were not asked for
    explicitly; asking for one explicitly raises CapExceededError instead.
    """
    requested = list(names) if names is not None else list(INVARIANT_NAMES)
    unknown = [name for name in requested if name not in INVARIANT_NAMES]
    if unknown:
        raise ValueError(f"unknown invariants: {', '.join(unknown)}")

    config = get_config().solver
    bundle = InvariantBundle(graph)
    for name in INVARIANT_NAMES:
        if name not in requested:
            continue
        if name in CAPPED and names is None:
            cap = getattr(config, CAPPED[name])
            if graph.n > cap:
                bundle.skipped[name] = f"n={graph.n} above {CAPPED[name].replace('_', ' ')} {cap}"
                logger.warning(f"{name} skipped: {bundle.skipped[name]}")
                continue
        if name == "gamma":
            result = domination_number(graph)
            bundle.entries[name] = InvariantEntry(name, result.value, result.certificate)
        elif name == "gamma_s":
            result = secure_domination_number(graph)
            bundle.entries[name] = InvariantEntry(name, result.value, result.certificate)
        elif name == "alpha_prime":
            matching = matching_number(graph)
            bundle.entries[name] = InvariantEntry(name, matching.value, matching.edges)
        elif name == "beta":
            result = vertex_cover_number(graph)
            bundle.entries[name] = InvariantEntry(name, result.value, result.certificate)
        elif name == "alpha":
            result = independence_number(graph)
            bundle.entries[name] = InvariantEntry(name, result.value, result.certificate)
        elif name == "rho":
            result = two_packing_number(graph)
            bundle.entries[name] = InvariantEntry(name, result.value, result.certificate)
        elif name == "t":
            representatives = _twin_representatives(graph)
            bundle.entries[name] = InvariantEntry(name, len(representatives), representatives)
        elif name == "Delta":
            delta = max_degree(graph)
            bundle.entries[name] = InvariantEntry(name, delta, _vertices_of_degree(graph, delta))
        elif name == "I":
            bundle.entries[name] = InvariantEntry(name, degree_one_count(graph), _vertices_of_degree(graph, 1))
        elif name == "lambda":
            from superdom.lambda_number import lambda_number

            result = lambda_number(graph, cap=config.enumeration_cap)
            bundle.entries[name] = InvariantEntry(name, result.value, result.witness.X, witness=result.witness)
        elif name == "gamma_sp":
            from superdom.bnb import gamma_sp_bnb

            if solved is None:
                solved = gamma_sp_bnb(graph, timeout=timeout)
            if solved.exact:
                bundle.entries[name] = InvariantEntry(name, solved.gamma_sp, solved.certificate.D)
            else:
                bundle.entries[name] = InvariantEntry(
                    name, None, solved.certificate.D, InvariantMethod.BOUNDS, solved.bounds
                )
    return bundle
