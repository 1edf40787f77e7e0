"""
Tests for single-graph and Cartesian product bound checks
"""

import pytest
import sys
from pathlib import Path

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from graphs.families import complete, empty, path, star
from graphs.graph import GraphInputError
from harness import bounds
from harness.bounds import check_all_bounds
from harness.fixtures import paw, triple_tight_graph
from harness.products import check_cartesian_bounds
from harness.reports import BoundCheck, BoundStatus, Relation
from superdom.certificate import SolveResult


class TestBoundCheck:
    """Test cases for BoundCheck status logic"""

    def test_inequalities(self):
        assert BoundCheck("b", "t", lhs=2, rhs=3).status is BoundStatus.HOLDS
        assert BoundCheck("b", "t", lhs=2, rhs=3).slack == 1
        assert BoundCheck("b", "t", lhs=3, rhs=3).status is BoundStatus.TIGHT
        assert BoundCheck("b", "t", lhs=4, rhs=3).status is BoundStatus.VIOLATED

    def test_equality_is_never_tight(self):
        check = BoundCheck("b", "t", Relation.EQ, lhs=3, rhs=3)
        assert check.status is BoundStatus.HOLDS
        assert not check.tight

    def test_predicates(self):
        assert BoundCheck("p", "t", Relation.PREDICATE, outcome=False).status is BoundStatus.VIOLATED
        assert BoundCheck("p", "t", Relation.PREDICATE, outcome=True).slack is None

    def test_unevaluated(self):
        assert BoundCheck("b", "t", lhs=3).status is BoundStatus.SKIPPED
        assert BoundCheck("b", "t", applicable=False).status is BoundStatus.NOT_APPLICABLE
        assert BoundCheck("b", "t", applicable=False).holds


class TestSingleGraphBounds:
    """Test cases for check_all_bounds"""

    def test_triple_tight(self):
        report = check_all_bounds(triple_tight_graph(), "triple-tight")
        assert report.gamma_sp == 5
        assert report.holds
        tight = {check.name for check in report.tight()}
        assert {"order-minus-domination", "two-packing", "max-degree"} <= tight

    def test_path_values(self):
        report = check_all_bounds(path(4))
        assert report.check("floor").tight
        half = report.check("half-domination")
        assert half.applicable and half.lhs == half.rhs == 2
        assert report.check("bipartite-gamma-beta").applicable
        assert report.extra["gamma"] == 2
        assert report.extra["certificate"]["D"] == [1, 2]

    def test_not_applicable_hypotheses(self):
        report = check_all_bounds(complete(4))
        assert report.check("bipartite-cover").status is BoundStatus.NOT_APPLICABLE
        report = check_all_bounds(empty(3))
        assert report.check("order-minus-domination").status is BoundStatus.NOT_APPLICABLE
        assert report.check("line-packing").status is BoundStatus.NOT_APPLICABLE
        assert report.holds

    def test_every_check_holds_on_small_graphs(self):
        for graph in (star(4), path(7), paw(), complete(5)):
            report = check_all_bounds(graph)
            assert report.violations() == []
            assert report.check("twin-classes").outcome
            assert report.check("witness: line packing").outcome

    def test_report_dict(self):
        payload = check_all_bounds(path(3), "P3").to_dict()
        assert payload["graph_id"] == "P3"
        assert payload["gamma_sp"] == 2
        assert payload["violations"] == 0
        assert all("status" in check for check in payload["checks"])

    def test_unknown_check_name(self):
        with pytest.raises(KeyError):
            check_all_bounds(path(3)).check("nonexistent")

    def test_timeout_skips_checks(self, monkeypatch):
        inexact = SolveResult(None, None, False, (2, 3), notes=["timeout"])
        monkeypatch.setattr(bounds, "gamma_sp_bnb", lambda graph, timeout=None: inexact)
        report = check_all_bounds(path(4))
        assert not report.exact
        assert report.checks == []
        assert "timed out" in report.notes[0]


class TestProductBounds:
    """Test cases for check_cartesian_bounds"""

    def test_star_box_star(self):
        report = check_cartesian_bounds(star(2), star(2), "P3", "P3")
        assert report.graph_id == "P3xP3"
        assert report.gamma_sp == 5
        assert report.exact
        assert report.holds
        assert report.extra["gamma_sp_G"] == report.extra["gamma_sp_H"] == 2
        assert report.check("witness: order bound").outcome
        assert report.check("witness: main upper").outcome

    def test_main_upper_tight(self):
        report = check_cartesian_bounds(complete(4), complete(3))
        assert report.gamma_sp == 8
        assert report.check("main-upper (H)").tight
        assert report.extra["lambda"] == {"G": 0, "H": 0}

    def test_universal_degree_one(self):
        report = check_cartesian_bounds(paw(), complete(4))
        assert report.gamma_sp == 11
        assert report.check("universal-degree-one (G)").tight
        other_side = report.check("universal-degree-one (H)")
        assert other_side.rhs == 12
        assert other_side.status is BoundStatus.HOLDS

    def test_parity_checks(self):
        report = check_cartesian_bounds(path(3), complete(2))
        assert report.check("parity (G)").outcome
        assert report.check("parity (H)").status is BoundStatus.NOT_APPLICABLE

    def test_bounds_only_above_cap(self):
        report = check_cartesian_bounds(path(5), path(5), product_cap=20)
        assert report.gamma_sp is None
        assert not report.exact
        assert "bounds only" in report.notes[0]
        lower, upper = report.extra["interval"]
        assert lower == 13
        assert upper <= 15
        assert report.holds

    def test_factor_too_small(self):
        with pytest.raises(GraphInputError):
            check_cartesian_bounds(complete(1), path(3))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
