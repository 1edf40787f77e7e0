"""
Reference Fixtures

Small named graphs with known γ_sp, λ and P(S) values, plus the list of
graphs on which each bound is attained. run_fixture_suite() recomputes all
of them and reports pass/fail per expectation.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from graphs.families import complete, complete_bipartite, cycle, empty, hypercube, path, star
from graphs.graph import Graph, build_graph
from graphs.operations import corona_product
from graphs.structure import degree_one_count
from graphs.twins import twin_partition
from harness.bounds import check_all_bounds
from harness.products import check_cartesian_bounds
from superdom.bnb import gamma_sp_bnb
from superdom.enumeration import enumerate_pstar
from superdom.lambda_number import lambda_bruteforce, lambda_number

logger = logging.getLogger(__name__)


def twin_rich_graph() -> Graph:
    """Nine vertices, five twin classes, γ_sp = n - t + 1 = 5"""
    return build_graph(9, [
        (0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5),
        (5, 8), (8, 7), (7, 6), (6, 5), (2, 4), (4, 7),
    ])


def butterfly_with_pendants() -> Graph:
    """K_1 + (K_2 ∪ K_2 ∪ N_2) with the universal vertex last; λ = I = 2"""
    return build_graph(7, [(0, 1), (2, 3)] + [(i, 6) for i in range(6)])


def paw() -> Graph:
    """Triangle 0-1-3 with pendant 2 on the universal vertex 3; λ = 1"""
    return build_graph(4, [(0, 1), (0, 3), (1, 3), (2, 3)])


def triple_tight_graph() -> Graph:
    """γ_sp = 5 attains n - γ, n - ρ and ⌊nΔ/(Δ+1)⌋ at once"""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 6), (4, 6)])


# (label, graph factory, bound expected to be attained)
TIGHTNESS_WITNESSES: List[Tuple[str, Callable[[], Graph], str]] = [
    ("C_8", lambda: cycle(8), "matching"),
    ("K_1,4", lambda: star(4), "bipartite-cover"),
    ("K_1,4", lambda: star(4), "bipartite-independence"),
    ("Q_3", lambda: hypercube(3), "bipartite-cover"),
    ("Q_3", lambda: hypercube(3), "bipartite-independence"),
    ("K_1,4", lambda: star(4), "secure"),
    ("K_4", lambda: complete(4), "twins"),
    ("K_3,3", lambda: complete_bipartite(3, 3), "twins"),
    ("twin-rich", twin_rich_graph, "twins-connected"),
    ("triple-tight", triple_tight_graph, "order-minus-domination"),
    ("triple-tight", triple_tight_graph, "two-packing"),
    ("triple-tight", triple_tight_graph, "max-degree"),
    ("P_2 corona K_2", lambda: corona_product(path(2), complete(2)), "order-minus-domination"),
    ("P_2 corona K_2", lambda: corona_product(path(2), complete(2)), "two-packing"),
    ("P_2 corona N_2", lambda: corona_product(path(2), empty(2)), "order-minus-domination"),
    ("P_2 corona N_2", lambda: corona_product(path(2), empty(2)), "two-packing"),
    ("paw", paw, "line-packing"),
    ("butterfly-with-pendants", butterfly_with_pendants, "line-packing"),
]

# (G label, G factory, H label, H factory, product bound expected to be attained)
PRODUCT_TIGHTNESS_WITNESSES: List[Tuple[str, Callable[[], Graph], str, Callable[[], Graph], str]] = [
    ("K_4", lambda: complete(4), "K_3", lambda: complete(3), "main-upper (H)"),
    ("paw", paw, "K_4", lambda: complete(4), "universal-degree-one (G)"),
]


@dataclass
class FixtureResult:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> Dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "passed": self.passed}


@dataclass
class FixtureSuiteReport:
    results: List[FixtureResult] = field(default_factory=list)

    def expect(self, name: str, expected: Any, actual: Any) -> FixtureResult:
        result = FixtureResult(name, expected, actual)
        self.results.append(result)
        if not result.passed:
            logger.error(f"fixture {name}: expected {expected}, got {actual}")
        return result

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[FixtureResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "total": len(self.results),
            "failed": len(self.failures()),
            "results": [result.to_dict() for result in self.results],
        }


def _pstar_lists(graph: Graph, members: List[int]) -> List[List[int]]:
    s = graph.vertex_set(members)
    return [sstar.to_list() for sstar in enumerate_pstar(graph, s, gamma_sp=len(s))]


def run_fixture_suite() -> FixtureSuiteReport:
    """Recompute every fixture expectation"""
    report = FixtureSuiteReport()

    twin_rich = twin_rich_graph()
    report.expect("twin-rich: gamma_sp", 5, gamma_sp_bnb(twin_rich).gamma_sp)
    report.expect("twin-rich: t", 5, twin_partition(twin_rich).t)

    butterfly = butterfly_with_pendants()
    report.expect("butterfly-with-pendants: gamma_sp", 5, gamma_sp_bnb(butterfly).gamma_sp)
    report.expect("butterfly-with-pendants: P(S)", [[0, 2]], _pstar_lists(butterfly, [0, 2, 4, 5, 6]))
    report.expect("butterfly-with-pendants: lambda", 2, lambda_number(butterfly).value)
    report.expect("butterfly-with-pendants: lambda literal", 2, lambda_bruteforce(butterfly))
    report.expect("butterfly-with-pendants: I", 2, degree_one_count(butterfly))

    paw_graph = paw()
    report.expect("paw: gamma_sp", 3, gamma_sp_bnb(paw_graph).gamma_sp)
    report.expect("paw: P(S)", [[0], [3]], _pstar_lists(paw_graph, [0, 2, 3]))
    report.expect("paw: lambda", 1, lambda_number(paw_graph).value)
    report.expect("paw: lambda literal", 1, lambda_bruteforce(paw_graph))

    triple = triple_tight_graph()
    triple_report = check_all_bounds(triple, "triple-tight")
    report.expect("triple-tight: gamma_sp", 5, triple_report.gamma_sp)
    report.expect("triple-tight: bounds hold", True, triple_report.holds)

    product = check_cartesian_bounds(paw_graph, complete(4), "paw", "K_4")
    report.expect("paw x K_4: gamma_sp", 11, product.gamma_sp)

    for label, factory, bound in TIGHTNESS_WITNESSES:
        check = check_all_bounds(factory(), label).check(bound)
        report.expect(f"{label}: {bound} tight", "tight", check.status.value)

    for g_label, g_factory, h_label, h_factory, bound in PRODUCT_TIGHTNESS_WITNESSES:
        check = check_cartesian_bounds(g_factory(), h_factory(), g_label, h_label).check(bound)
        report.expect(f"{g_label} x {h_label}: {bound} tight", "tight", check.status.value)

    logger.info(f"fixture suite: {len(report.results) - len(report.failures())}/{len(report.results)} passed")
    return report
