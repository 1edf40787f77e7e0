"""
Single-Graph Bound Checks

Evaluates every known lower and upper bound on γ_sp(G) with exact
invariant values. Bounds whose hypotheses fail are recorded as not
applicable, never dropped.
"""

import logging

from config import get_config
from formulas.formulas import extremal_characterisations
from graphs.graph import Graph
from graphs.operations import line_graph
from graphs.structure import has_isolated_vertices, is_bipartite, is_connected, max_degree
from graphs.twins import twin_partition
from harness.reports import BoundCheck, BoundCheckReport, Relation
from invariants.crosschecks import identity_crosschecks
from invariants.domination import domination_number, secure_domination_number
from invariants.independence import independence_number, vertex_cover_number
from invariants.matching import matching_number
from invariants.packing import two_packing_number
from superdom.bnb import gamma_sp_bnb
from superdom.constructions import superdom_from_line_packing, superdom_from_open_irredundant, twin_class_check

logger = logging.getLogger(__name__)


def _not_applicable(name: str, theorem: str, reason: str, relation: Relation = Relation.LE) -> BoundCheck:
    return BoundCheck(name, theorem, relation, applicable=False, reason=reason)


def check_all_bounds(graph: Graph, graph_id: str = "G", timeout: float = None) -> BoundCheckReport:
    """
    Bound report for one graph

    Needs γ_sp exactly; when the solver times out the report carries no
    checks and a note instead.
    """
    solved = gamma_sp_bnb(graph, timeout=timeout)
    report = BoundCheckReport(graph_id, graph.n, graph.edge_count, solved.gamma_sp, solved.exact)
    if not solved.exact:
        report.notes.append(f"solver timed out; gamma_sp in {list(solved.bounds)}; bounds skipped")
        logger.warning(f"{graph_id}: bounds skipped after solver timeout")
        return report
    if graph.n == 0:
        report.notes.append("graph without vertices")
        return report

    n = graph.n
    value = solved.gamma_sp
    isolate_free = not has_isolated_vertices(graph)
    bipartite = bool(is_bipartite(graph))
    alpha_prime = matching_number(graph).value
    alpha = independence_number(graph).value
    beta = vertex_cover_number(graph).value
    gamma = domination_number(graph).value
    rho = two_packing_number(graph).value
    t = twin_partition(graph).t
    delta = max_degree(graph)
    report.extra = {
        "gamma": gamma,
        "alpha_prime": alpha_prime,
        "alpha": alpha,
        "beta": beta,
        "rho": rho,
        "t": t,
        "max_degree": delta,
        "certificate": solved.certificate.to_dict(),
    }
    no_isolates = "graph has isolated vertices"

    report.add(BoundCheck("floor", "gamma_sp >= ceil(n/2)", lhs=-(-n // 2), rhs=value))
    report.add(BoundCheck("matching", "gamma_sp >= n - alpha'", lhs=n - alpha_prime, rhs=value))
    if bipartite:
        report.add(BoundCheck("bipartite-cover", "bipartite: gamma_sp >= n - beta", lhs=n - beta, rhs=value))
        report.add(BoundCheck("bipartite-independence", "bipartite: gamma_sp >= alpha", lhs=alpha, rhs=value))
    else:
        report.add(_not_applicable("bipartite-cover", "bipartite: gamma_sp >= n - beta", "not bipartite"))
        report.add(_not_applicable("bipartite-independence", "bipartite: gamma_sp >= alpha", "not bipartite"))

    secure_cap = get_config().solver.secure_cap
    if n <= secure_cap:
        gamma_s = secure_domination_number(graph).value
        report.extra["gamma_s"] = gamma_s
        report.add(BoundCheck("secure", "gamma_sp >= gamma_s", lhs=gamma_s, rhs=value))
    else:
        report.add(BoundCheck("secure", "gamma_sp >= gamma_s", reason=f"n above secure cap {secure_cap}"))

    report.add(BoundCheck("twins", "gamma_sp >= n - t", lhs=n - t, rhs=value))
    if is_connected(graph) and t >= 3:
        report.add(BoundCheck("twins-connected", "connected, t >= 3: gamma_sp >= n - t + 1", lhs=n - t + 1, rhs=value))
    else:
        report.add(_not_applicable("twins-connected", "connected, t >= 3: gamma_sp >= n - t + 1", "needs connected G with t >= 3"))

    if isolate_free:
        report.add(BoundCheck("order-minus-domination", "gamma_sp <= n - gamma", lhs=value, rhs=n - gamma))
        report.add(BoundCheck("two-packing", "gamma_sp <= n - rho", lhs=value, rhs=n - rho))
        report.add(BoundCheck("max-degree", "gamma_sp <= floor(n*D/(D+1))", lhs=value, rhs=n * delta // (delta + 1)))
    else:
        report.add(_not_applicable("order-minus-domination", "gamma_sp <= n - gamma", no_isolates))
        report.add(_not_applicable("two-packing", "gamma_sp <= n - rho", no_isolates))
        report.add(_not_applicable("max-degree", "gamma_sp <= floor(n*D/(D+1))", no_isolates))

    if graph.edge_count:
        rho_line = two_packing_number(line_graph(graph).graph).value
        report.extra["rho_line"] = rho_line
        report.add(BoundCheck("line-packing", "gamma_sp <= n - rho(L(G))", lhs=value, rhs=n - rho_line))
    else:
        report.add(_not_applicable("line-packing", "gamma_sp <= n - rho(L(G))", "graph has no edges"))

    half_theorem = "gamma = n/2 implies gamma_sp = n/2"
    if isolate_free and 2 * gamma == n:
        report.add(BoundCheck("half-domination", half_theorem, Relation.EQ, lhs=value, rhs=n // 2))
    else:
        report.add(_not_applicable("half-domination", half_theorem, "needs isolate-free G with gamma = n/2", Relation.EQ))

    gb_theorem = "bipartite, gamma = beta implies gamma_sp = alpha"
    if bipartite and isolate_free and gamma == beta:
        report.add(BoundCheck("bipartite-gamma-beta", gb_theorem, Relation.EQ, lhs=value, rhs=alpha))
    else:
        report.add(_not_applicable("bipartite-gamma-beta", gb_theorem, "needs isolate-free bipartite G with gamma = beta", Relation.EQ))

    for name, outcome in extremal_characterisations(graph, value).items():
        report.add(BoundCheck(f"extremal: {name}", name, Relation.PREDICATE, outcome=outcome))

    if isolate_free:
        chain = 1 <= gamma <= -(-n // 2) <= value <= n - 1
        report.add(BoundCheck("chain", "1 <= gamma <= ceil(n/2) <= gamma_sp <= n-1", Relation.PREDICATE, outcome=chain))
    else:
        report.add(_not_applicable("chain", "1 <= gamma <= ceil(n/2) <= gamma_sp <= n-1", no_isolates, Relation.PREDICATE))

    report.add(BoundCheck(
        "twin-classes", "twin classes meet D-bar and D* at most once", Relation.PREDICATE,
        outcome=twin_class_check(graph, solved.certificate),
    ))

    for identity in identity_crosschecks(graph).checks:
        report.add(BoundCheck(
            f"identity: {identity.name.split(':')[0]}", identity.name, Relation.EQ,
            applicable=identity.applicable, lhs=identity.lhs, rhs=identity.rhs,
        ))

    _add_witness_checks(report, graph, gamma, isolate_free)

    for violation in report.violations():
        logger.error(f"{graph_id}: bound violated: {violation.theorem} (lhs={violation.lhs}, rhs={violation.rhs})")
    return report


def _add_witness_checks(report: BoundCheckReport, graph: Graph, gamma: int, isolate_free: bool):
    """The explicit constructions behind the two upper bounds must be valid"""
    theorem = "V - S for an open irredundant gamma-set is super dominating"
    if isolate_free and graph.n <= get_config().solver.bruteforce_cap:
        certificate = superdom_from_open_irredundant(graph)
        ok = certificate is not None and certificate.size == graph.n - gamma
        report.add(BoundCheck("witness: open irredundant", theorem, Relation.PREDICATE, outcome=ok))
    else:
        report.add(_not_applicable("witness: open irredundant", theorem, "needs isolate-free G within the brute-force cap", Relation.PREDICATE))

    theorem = "V - X from a 2-packing of L(G) is super dominating"
    if graph.edge_count:
        certificate = superdom_from_line_packing(graph)
        ok = certificate is not None and certificate.size == graph.n - report.extra["rho_line"]
        report.add(BoundCheck("witness: line packing", theorem, Relation.PREDICATE, outcome=ok))
    else:
        report.add(_not_applicable("witness: line packing", theorem, "graph has no edges", Relation.PREDICATE))
