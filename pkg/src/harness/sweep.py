"""
Theorem Sweeps

Runs check_all_bounds over a corpus and summarises applicability,
tightness and violations per bound with pandas.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from config import get_config
from harness.bounds import check_all_bounds
from harness.corpus import Corpus, all_labeled_corpus, atlas_corpus, graph6_corpus, random_corpus
from harness.reports import BoundCheckReport, BoundStatus
from invariants.search import CapExceededError

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["bound", "applicable", "holds", "tight", "violated", "not_applicable", "skipped"]


class SweepMode(Enum):
    ALL_LABELED = "all-labeled"
    RANDOM = "random"
    GRAPH6 = "graph6"
    ATLAS = "atlas"


@dataclass
class SweepSummary:
    mode: SweepMode
    reports: List[BoundCheckReport] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    @property
    def graphs(self) -> int:
        return len(self.reports)

    def violations(self) -> List[Tuple[str, str]]:
        return [(report.graph_id, check.name) for report in self.reports for check in report.violations()]

    def inexact(self) -> List[str]:
        return [report.graph_id for report in self.reports if not report.exact]

    def table(self) -> pd.DataFrame:
        """One row per bound, counts over the whole corpus"""
        rows = [
            {"bound": check.name, "status": check.status.value}
            for report in self.reports
            for check in report.checks
        ]
        if not rows:
            return pd.DataFrame(columns=SUMMARY_COLUMNS)
        frame = pd.DataFrame(rows)
        counts = pd.crosstab(frame["bound"], frame["status"])
        for status in BoundStatus:
            if status.value not in counts.columns:
                counts[status.value] = 0
        order = list(dict.fromkeys(frame["bound"]))
        counts = counts.reindex(order)
        summary = pd.DataFrame({
            "bound": order,
            "applicable": (counts.sum(axis=1) - counts[BoundStatus.NOT_APPLICABLE.value]).to_numpy(),
            "holds": (counts[BoundStatus.HOLDS.value] + counts[BoundStatus.TIGHT.value]).to_numpy(),
            "tight": counts[BoundStatus.TIGHT.value].to_numpy(),
            "violated": counts[BoundStatus.VIOLATED.value].to_numpy(),
            "not_applicable": counts[BoundStatus.NOT_APPLICABLE.value].to_numpy(),
            "skipped": counts[BoundStatus.SKIPPED.value].to_numpy(),
        })
        return summary[SUMMARY_COLUMNS]

    def to_dict(self) -> Dict:
        return {
            "mode": self.mode.value,
            "graphs": self.graphs,
            "violations": [{"graph_id": g, "bound": b} for g, b in self.violations()],
            "inexact": self.inexact(),
            "errors": list(self.errors),
            "bounds": [
                {key: (int(value) if key != "bound" else value) for key, value in row.items()}
                for row in self.table().to_dict(orient="records")
            ],
        }

    def to_csv(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.table().to_csv(path, index=False)
        return path


def graph_id_key(graph_id: str) -> Tuple[str, int]:
    """Sort key: "file.g6:10" after "file.g6:2"; other ids sort as text"""
    source, _, index = graph_id.rpartition(":")
    if source and index.isdigit():
        return source, int(index)
    return graph_id, -1


def _check(item) -> BoundCheckReport:
    graph_id, graph, timeout = item
    return check_all_bounds(graph, graph_id, timeout=timeout)


def run_sweep(
    corpus: Corpus,
    mode: SweepMode,
    workers: int = None,
    timeout: float = None,
    errors: Sequence[str] = (),
) -> SweepSummary:
    """Check every graph; results are ordered by graph id whatever the worker count"""
    workers = workers or get_config().solver.workers
    items = [(graph_id, graph, timeout) for graph_id, graph in corpus]
    logger.info(f"sweep {mode.value}: {len(items)} graphs, {workers} worker(s)")
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_check, items, chunksize=16))
    else:
        reports = [_check(item) for item in items]
    reports.sort(key=lambda report: graph_id_key(report.graph_id))
    summary = SweepSummary(mode, reports, list(errors))
    violations = summary.violations()
    if violations:
        logger.error(f"sweep {mode.value}: {len(violations)} violation(s)")
    logger.info(f"sweep {mode.value} finished: {summary.graphs} graphs, {len(violations)} violations")
    return summary


def exhaustive_sweep(
    mode,
    n_max: int = None,
    n_min: int = 1,
    isolate_free: bool = False,
    path=None,
    count: int = None,
    n_range: Tuple[int, int] = (7, 12),
    densities: Sequence[float] = None,
    seed: int = None,
    workers: int = None,
    timeout: float = None,
) -> SweepSummary:
    """
    Build the corpus for mode and sweep it

    all-labeled: every labelled graph with n_min <= n <= n_max
    random:      count seeded G(n, p) graphs, n drawn from n_range
    graph6:      one graph per line of the file at path
    atlas:       connected non-isomorphic graphs up to n_max vertices

    Raises:
        CapExceededError: all-labeled above the configured maximum order
    """
    mode = SweepMode(mode)
    errors: List[str] = []
    if mode is SweepMode.ALL_LABELED:
        limit = get_config().harness.all_labeled_max
        if n_max is None or n_max > limit:
            raise CapExceededError(f"all-labeled sweeps are capped at n={limit}, got {n_max}")
        corpus: Corpus = []
        for n in range(max(1, n_min), n_max + 1):
            corpus.extend(all_labeled_corpus(n, isolate_free=isolate_free))
    elif mode is SweepMode.RANDOM:
        corpus = random_corpus(count, n_range, densities, seed)
    elif mode is SweepMode.GRAPH6:
        if path is None:
            raise ValueError("graph6 sweeps need a corpus file")
        load = graph6_corpus(path)
        corpus, errors = load.graphs, load.errors
    else:
        corpus = atlas_corpus(n_max or 4, connected_only=True)
    return run_sweep(corpus, mode, workers=workers, timeout=timeout, errors=errors)
