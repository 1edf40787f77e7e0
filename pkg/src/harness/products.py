"""
Cartesian Product Bound Checks

Evaluates the product bounds on G □ H against the exact γ_sp(G □ H). A
product above the configured order cap gets a bounds-only report: each
bound's value is listed and the implied interval recorded, with no
exact value.
"""

import logging
from typing import List, Optional

from config import get_config
from formulas.cartesian import cartesian_parity_bounds, half_order_rule
from graphs.families import FamilyKind
from graphs.graph import Graph, GraphInputError
from graphs.operations import cartesian_product
from graphs.structure import degree_one_count, is_bipartite, is_cycle_graph, is_path_graph, universal_vertices
from harness.reports import BoundCheck, BoundCheckReport, Relation
from invariants.independence import independence_number
from superdom.bnb import gamma_sp_bnb
from superdom.constructions import cartesian_upper_witness, order_bound_witness
from superdom.lambda_number import lambda_number
from superdom.universal import universal_vertex_checks

logger = logging.getLogger(__name__)


def check_cartesian_bounds(
    g: Graph,
    h: Graph,
    g_id: str = "G",
    h_id: str = "H",
    product_cap: int = None,
    timeout: float = None,
) -> BoundCheckReport:
    """
    Product bound report for G □ H

    Raises:
        GraphInputError: if either factor has fewer than two vertices
    """
    if g.n < 2 or h.n < 2:
        raise GraphInputError("product bounds need factors of order at least 2")
    config = get_config()
    product_cap = product_cap or config.harness.product_cap
    enumeration_cap = config.solver.enumeration_cap

    product = cartesian_product(g, h)
    n, m = g.n, h.n
    gamma_g = gamma_sp_bnb(g, timeout=0, workers=1).gamma_sp
    gamma_h = gamma_sp_bnb(h, timeout=0, workers=1).gamma_sp

    value: Optional[int] = None
    exact = False
    notes: List[str] = []
    if product.n <= product_cap:
        solved = gamma_sp_bnb(product, timeout=timeout)
        if solved.exact:
            value, exact = solved.gamma_sp, True
        else:
            notes.append(f"solver timed out; gamma_sp(GxH) in {list(solved.bounds)}")
    else:
        notes.append(f"product order {product.n} above cap {product_cap}: bounds only")
        logger.warning(f"{g_id}x{h_id}: bounds-only report (order {product.n})")

    report = BoundCheckReport(f"{g_id}x{h_id}", product.n, product.edge_count, value, exact, notes=notes)
    report.extra = {"gamma_sp_G": gamma_g, "gamma_sp_H": gamma_h, "n_G": n, "n_H": m}

    def lower(name: str, theorem: str, bound: int):
        report.add(BoundCheck(name, theorem, lhs=bound, rhs=value, reason="" if exact else "no exact product value"))

    def upper(name: str, theorem: str, bound: int):
        report.add(BoundCheck(name, theorem, lhs=value, rhs=bound, reason="" if exact else "no exact product value"))

    lower("product-floor", "gamma_sp(GxH) >= ceil(nn'/2)", -(-n * m // 2))
    upper("min-upper", "gamma_sp(GxH) <= min(n' gamma_sp(G), n gamma_sp(H))", min(m * gamma_g, n * gamma_h))
    lower("vizing-like", "gamma_sp(GxH) >= gamma_sp(G) gamma_sp(H)", gamma_g * gamma_h)

    lambdas = {}
    sides = (("G", "H", g, h, gamma_g, gamma_h), ("H", "G", h, g, gamma_h, gamma_g))
    for side, other_side, factor, other, gamma_f, gamma_o in sides:
        theorem = (
            f"gamma_sp(GxH) <= |V({other_side})| gamma_sp({side}) "
            f"- lambda({side})(|V({other_side})| - gamma_sp({other_side}))"
        )
        if factor.n <= enumeration_cap:
            lam = lambda_number(factor).value
            lambdas[side] = lam
            upper(f"main-upper ({side})", theorem, other.n * gamma_f - lam * (other.n - gamma_o))
        else:
            report.add(BoundCheck(f"main-upper ({side})", theorem, applicable=False, reason="factor above enumeration cap"))
        _universal_checks(report, factor, other, gamma_f, gamma_o, side, value, exact, enumeration_cap)
    report.extra["lambda"] = lambdas

    theorem = "nonempty G, H: gamma_sp(GxH) <= nn' - n - n' + 4"
    if g.edge_count and h.edge_count:
        upper("order-bound", theorem, n * m - n - m + 4)
        witness = order_bound_witness(g, h)
        report.add(BoundCheck(
            "witness: order bound", "explicit set of size nn' - n - n' + 4 is super dominating",
            Relation.PREDICATE, outcome=witness is not None and witness.size == n * m - n - m + 4,
        ))
    else:
        report.add(BoundCheck("order-bound", theorem, applicable=False, reason="a factor has no edges"))

    theorem = "bipartite G, H: gamma_sp(GxH) >= alpha(G)alpha(H) + min(beta(G), beta(H))"
    alpha_g, alpha_h = independence_number(g).value, independence_number(h).value
    if is_bipartite(g) and is_bipartite(h):
        lower("bipartite-product", theorem, alpha_g * alpha_h + min(n - alpha_g, m - alpha_h))
    else:
        report.add(BoundCheck("bipartite-product", theorem, applicable=False, reason="a factor is not bipartite"))

    theorem = "alpha(GxH) >= alpha(G)alpha(H) + min(n - alpha(G), n' - alpha(H))"
    if exact:
        report.add(BoundCheck(
            "independence-product", theorem,
            lhs=alpha_g * alpha_h + min(n - alpha_g, m - alpha_h), rhs=independence_number(product).value,
        ))
    else:
        report.add(BoundCheck("independence-product", theorem, reason="product too large"))

    _parity_checks(report, g, h, value)

    rule = half_order_rule(g, h, gamma_g, gamma_h)
    theorem = "gamma_sp(G) = n/2 or gamma_sp(H) = n'/2 implies gamma_sp(GxH) = nn'/2"
    if rule is not None:
        report.add(BoundCheck("half-order", theorem, Relation.EQ, lhs=value, rhs=rule))
    else:
        report.add(BoundCheck("half-order", theorem, Relation.EQ, applicable=False, reason="neither factor has gamma_sp = order/2"))

    if exact and g.n <= enumeration_cap:
        witness = cartesian_upper_witness(g, h)
        bound = m * gamma_g - lambdas["G"] * (m - gamma_h)
        report.add(BoundCheck(
            "witness: main upper", "explicit set from a lambda-witness is super dominating",
            Relation.PREDICATE, outcome=witness is not None and witness.size == bound,
        ))

    _record_interval(report)
    for violation in report.violations():
        logger.error(f"{report.graph_id}: product bound violated: {violation.theorem}")
    return report


def _universal_checks(report, factor, other, gamma_f, gamma_o, side, value, exact, enumeration_cap):
    """The I(factor) bound, asserted only after its hypothesis is verified"""
    bound = other.n * gamma_f - degree_one_count(factor) * (other.n - gamma_o)
    reason = "" if exact else "no exact product value"
    theorem = f"universal v outside S-bar and S*: gamma_sp(GxH) <= n' gamma_sp({side}) - I({side})(n' - gamma_sp)"
    if not universal_vertices(factor):
        report.add(BoundCheck(f"universal-degree-one ({side})", theorem, applicable=False, reason="no universal vertex"))
        report.add(BoundCheck(f"universal-factor-degree ({side})", theorem, applicable=False, reason="no universal vertex"))
        return
    if factor.n <= enumeration_cap and universal_vertex_checks(factor).avoiding_hypothesis:
        report.add(BoundCheck(f"universal-degree-one ({side})", theorem, lhs=value, rhs=bound, reason=reason))
    else:
        report.add(BoundCheck(
            f"universal-degree-one ({side})", theorem, applicable=False,
            reason="hypothesis not verified (no S, S* leave a universal vertex out)",
        ))
    statement = f"Delta({side}) = n-1 and gamma_sp({side}) <= n-2: same bound"
    if gamma_f <= factor.n - 2:
        report.add(BoundCheck(f"universal-factor-degree ({side})", statement, lhs=value, rhs=bound, reason=reason))
    else:
        report.add(BoundCheck(f"universal-factor-degree ({side})", statement, applicable=False, reason="gamma_sp = n-1"))


def _parity_checks(report: BoundCheckReport, g: Graph, h: Graph, value: Optional[int]):
    for factor, other, side in ((g, h, "G"), (h, g, "H")):
        kind = None
        if factor.n >= 3 and is_path_graph(factor):
            kind = FamilyKind.PATH
        elif is_cycle_graph(factor):
            kind = FamilyKind.CYCLE
        name = f"parity ({side})"
        if kind is None:
            report.add(BoundCheck(name, "P_n or C_n factor: parity interval", Relation.PREDICATE, applicable=False, reason="factor is not a path or cycle"))
            continue
        interval = cartesian_parity_bounds(kind, factor.n, other)
        report.add(BoundCheck(
            name, f"{kind.value} factor of order {factor.n}: gamma_sp(GxH) in [{interval.lower}, {interval.upper}]",
            Relation.PREDICATE, outcome=None if value is None else interval.contains(value),
            reason="" if value is not None else "no exact product value",
        ))


def _record_interval(report: BoundCheckReport):
    """Interval implied by the evaluated-or-not bound values"""
    lowers = [c.lhs for c in report.checks if c.applicable and c.relation is Relation.LE and c.rhs is None and c.lhs is not None]
    uppers = [c.rhs for c in report.checks if c.applicable and c.relation is Relation.LE and c.lhs is None and c.rhs is not None]
    if report.gamma_sp is None and (lowers or uppers):
        report.extra["interval"] = [max(lowers) if lowers else None, min(uppers) if uppers else None]
