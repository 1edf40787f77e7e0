"""
Cartesian Product Rules

Parity bounds for P_n □ H and C_n □ H, and the half-order rule
γ_sp(G) = n/2 or γ_sp(H) = n′/2  ⇒  γ_sp(G □ H) = nn′/2.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from formulas.formulas import NotApplicableError
from graphs.families import FamilyKind
from graphs.graph import Graph


@dataclass(frozen=True)
class Interval:
    """Closed integer interval"""
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self) -> Dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def cartesian_parity_bounds(kind, n: int, h: Graph) -> Interval:
    """
    γ_sp(P_n □ H) or γ_sp(C_n □ H) by the parity of n

    Args:
        kind: FamilyKind.PATH or FamilyKind.CYCLE (or their string values)
        n: order of the path or cycle, at least 3
        h: the other factor, of order at least 2

    Raises:
        NotApplicableError: outside the hypotheses
    """
    kind = FamilyKind(kind)
    if kind not in (FamilyKind.PATH, FamilyKind.CYCLE):
        raise NotApplicableError(f"parity bounds only cover paths and cycles, got {kind.value}")
    m = h.n
    if n < 3 or m < 2:
        raise NotApplicableError(f"parity bounds need n >= 3 and n' >= 2, got {n}, {m}")
    lower = -(-n * m // 2)
    if kind is FamilyKind.PATH:
        if n % 2 == 0:
            return Interval(n * m // 2, n * m // 2)
        return Interval(lower, (n + 1) * m // 2)
    if n % 4 == 0:
        return Interval(n * m // 2, n * m // 2)
    if n % 4 == 2:
        return Interval(lower, (n + 2) * m // 2)
    return Interval(lower, (n + 1) * m // 2)


def half_order_rule(g: Graph, h: Graph, gamma_g: int = None, gamma_h: int = None) -> Optional[int]:
    """
    nn′/2 when one factor has γ_sp equal to half its order, else None

    Missing factor values are solved exactly.
    """
    if g.n < 2 or h.n < 2:
        return None
    from superdom.bnb import gamma_sp_bnb

    if gamma_g is None:
        gamma_g = gamma_sp_bnb(g, timeout=0, workers=1).gamma_sp
    if 2 * gamma_g == g.n:
        return g.n * h.n // 2
    if gamma_h is None:
        gamma_h = gamma_sp_bnb(h, timeout=0, workers=1).gamma_sp
    if 2 * gamma_h == h.n:
        return g.n * h.n // 2
    return None
