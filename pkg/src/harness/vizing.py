"""
Vizing-Like Scan

Falsification search for γ_sp(G □ H) ≥ γ_sp(G) γ_sp(H) over every
unordered pair of a corpus (self-pairs included).
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List

from config import get_config
from graphs.io import format_graph_json
from graphs.operations import cartesian_product
from harness.corpus import Corpus
from superdom.bnb import gamma_sp_bnb

logger = logging.getLogger(__name__)


@dataclass
class VizingScanReport:
    pairs: int = 0
    evaluated: int = 0
    skipped: List[str] = field(default_factory=list)
    violations: List[Dict] = field(default_factory=list)
    min_ratio: float = None

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "pairs": self.pairs,
            "evaluated": self.evaluated,
            "skipped": list(self.skipped),
            "violations": list(self.violations),
            "min_ratio": self.min_ratio,
            "holds": self.holds,
        }

    def dump_counterexamples(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.violations, indent=2))
        return path


def vizing_like_scan(corpus: Corpus, product_cap: int = None, timeout: float = None) -> VizingScanReport:
    """
    Evaluate the product inequality on all pairs whose product fits the cap

    min_ratio is the smallest γ_sp(G□H) / (γ_sp(G) γ_sp(H)) seen.
    """
    product_cap = product_cap or get_config().harness.product_cap
    report = VizingScanReport()
    values = {graph_id: gamma_sp_bnb(graph, timeout=0, workers=1) for graph_id, graph in corpus}

    for i, (g_id, g) in enumerate(corpus):
        for h_id, h in corpus[i:]:
            report.pairs += 1
            if g.n * h.n > product_cap:
                report.skipped.append(f"{g_id}x{h_id}")
                continue
            product = cartesian_product(g, h)
            solved = gamma_sp_bnb(product, timeout=timeout)
            if not solved.exact:
                report.skipped.append(f"{g_id}x{h_id}")
                continue
            report.evaluated += 1
            left = values[g_id].gamma_sp * values[h_id].gamma_sp
            ratio = solved.gamma_sp / left if left else float("inf")
            if report.min_ratio is None or ratio < report.min_ratio:
                report.min_ratio = ratio
            if solved.gamma_sp < left:
                logger.error(f"Vizing-like inequality fails for {g_id} x {h_id}: {solved.gamma_sp} < {left}")
                report.violations.append({
                    "G": {"id": g_id, "graph": json.loads(format_graph_json(g)), **values[g_id].to_dict()},
                    "H": {"id": h_id, "graph": json.loads(format_graph_json(h)), **values[h_id].to_dict()},
                    "product": {"graph": json.loads(format_graph_json(product)), **solved.to_dict()},
                })
    logger.info(f"Vizing-like scan: {report.evaluated}/{report.pairs} pairs, {len(report.violations)} violations")
    return report
