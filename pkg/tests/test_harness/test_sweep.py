"""
Tests for corpora, theorem sweeps, the Vizing-like scan and the fixture suite
"""

import json
import pytest
import sys
from pathlib import Path

import pandas as pd

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from harness.corpus import all_labeled_corpus, atlas_corpus, random_corpus
from harness.fixtures import FixtureSuiteReport, run_fixture_suite
from harness.sweep import SUMMARY_COLUMNS, SweepMode, exhaustive_sweep, graph_id_key
from harness.vizing import vizing_like_scan
from invariants.search import CapExceededError


class TestCorpora:
    """Test cases for corpus builders"""

    def test_all_labeled(self):
        assert len(all_labeled_corpus(3)) == 8
        assert len(all_labeled_corpus(3, isolate_free=True)) == 4
        assert all_labeled_corpus(2)[0][0] == "L2-000000"

    def test_random_is_reproducible(self):
        first = random_corpus(count=5, n_range=(4, 6), densities=[0.5], seed=9)
        second = random_corpus(count=5, n_range=(4, 6), densities=[0.5], seed=9)
        assert first == second
        assert all(4 <= graph.n <= 6 for _, graph in first)
        assert first[0][0].startswith("R9-0000-")

    def test_atlas(self):
        corpus = atlas_corpus(4)
        assert len(corpus) == 10
        with pytest.raises(ValueError):
            atlas_corpus(8)


class TestSweeps:
    """Test cases for exhaustive_sweep"""

    def test_all_labeled_order_four(self):
        summary = exhaustive_sweep("all-labeled", n_max=4, n_min=4, workers=1)
        assert summary.mode is SweepMode.ALL_LABELED
        assert summary.graphs == 64
        assert summary.violations() == []
        assert summary.inexact() == []
        table = summary.table()
        assert list(table.columns) == SUMMARY_COLUMNS
        floor = table[table["bound"] == "floor"].iloc[0]
        assert floor["applicable"] == 64
        assert floor["violated"] == 0

    def test_all_labeled_cap(self):
        with pytest.raises(CapExceededError):
            exhaustive_sweep("all-labeled", n_max=7)
        with pytest.raises(CapExceededError):
            exhaustive_sweep("all-labeled")

    def test_graph6_needs_path(self):
        with pytest.raises(ValueError):
            exhaustive_sweep("graph6")

    def test_graph6_file(self, tmp_path):
        corpus = tmp_path / "small.g6"
        corpus.write_text("A_\nBw\nC~~\nC~\n")
        summary = exhaustive_sweep(SweepMode.GRAPH6, path=corpus, workers=1)
        assert summary.graphs == 3
        assert len(summary.errors) == 1
        assert summary.to_dict()["errors"] == summary.errors

    def test_graph6_ids_in_line_order(self, tmp_path):
        """Test that corpus line 10 is reported after line 2"""
        corpus = tmp_path / "edges.g6"
        corpus.write_text("A_\n" * 11)
        summary = exhaustive_sweep(SweepMode.GRAPH6, path=corpus, workers=1)
        assert [report.graph_id for report in summary.reports] == [f"edges.g6:{i}" for i in range(1, 12)]
        assert graph_id_key("edges.g6:2") < graph_id_key("edges.g6:10")
        assert graph_id_key("L4-000002") < graph_id_key("L4-000010")

    def test_random_workers_agree(self):
        serial = exhaustive_sweep("random", count=6, n_range=(4, 7), seed=3, workers=1)
        parallel = exhaustive_sweep("random", count=6, n_range=(4, 7), seed=3, workers=2)
        assert serial.to_dict() == parallel.to_dict()
        assert serial.violations() == []

    def test_csv_export(self, tmp_path):
        summary = exhaustive_sweep("atlas", n_max=3, workers=1)
        path = summary.to_csv(tmp_path / "out" / "summary.csv")
        frame = pd.read_csv(path)
        assert list(frame.columns) == SUMMARY_COLUMNS
        assert frame["violated"].sum() == 0

    @pytest.mark.slow
    def test_all_labeled_up_to_five(self):
        summary = exhaustive_sweep("all-labeled", n_max=5, workers=2)
        assert summary.graphs == 1 + 2 + 8 + 64 + 1024
        assert summary.violations() == []

    @pytest.mark.slow
    def test_isolate_free_order_six(self):
        summary = exhaustive_sweep("all-labeled", n_max=6, n_min=6, isolate_free=True, workers=4)
        assert summary.violations() == []


class TestVizingScan:
    """Test cases for the Vizing-like scan"""

    def test_atlas_pairs(self, tmp_path):
        report = vizing_like_scan(atlas_corpus(4))
        assert report.pairs == 55
        assert report.evaluated == 55
        assert report.holds
        assert report.min_ratio >= 1
        path = report.dump_counterexamples(tmp_path / "vizing.json")
        assert json.loads(path.read_text()) == []

    def test_product_cap_skips_pairs(self):
        corpus = atlas_corpus(4)
        report = vizing_like_scan(corpus, product_cap=4)
        assert report.evaluated < report.pairs
        assert len(report.skipped) == report.pairs - report.evaluated


class TestFixtureSuite:
    """The reference fixtures all reproduce"""

    def test_suite_passes(self):
        report = run_fixture_suite()
        assert report.failures() == []
        assert report.passed
        payload = report.to_dict()
        assert payload["passed"] is True

    def test_expect_records_failures(self):
        report = FixtureSuiteReport()
        report.expect("one", 1, 1)
        report.expect("two", 2, 3)
        assert not report.passed
        assert [result.name for result in report.failures()] == ["two"]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
