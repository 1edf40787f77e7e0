"""
Tests for the invariant bundle and identity cross-checks
"""

import pytest
import sys
from pathlib import Path

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from config import reset_config
from graphs.families import complete, complete_bipartite, cycle, empty, path, star
from graphs.graph import VertexSet
from harness.fixtures import paw
from invariants.bundle import (
    INVARIANT_NAMES, InvariantBundle, InvariantEntry, InvariantMethod, compute_invariants
)
from invariants.crosschecks import identity_crosschecks
from invariants.search import CapExceededError


@pytest.fixture
def small_secure_cap(monkeypatch):
    monkeypatch.setenv("SUPERDOM_SECURE_CAP", "4")
    reset_config()
    yield
    reset_config()


@pytest.fixture
def small_enumeration_cap(monkeypatch):
    monkeypatch.setenv("SUPERDOM_ENUMERATION_CAP", "4")
    reset_config()
    yield
    reset_config()


class TestInvariantBundle:
    """Test cases for compute_invariants"""

    def test_path_values(self):
        bundle = compute_invariants(path(6))
        assert bundle.value("gamma") == 2
        assert bundle.value("alpha_prime") == 3
        assert bundle.value("alpha") == 3
        assert bundle.value("beta") == 3
        assert bundle.value("rho") == 2
        assert bundle.value("gamma_sp") == 3
        assert bundle.validate() == []

    def test_all_names_in_order(self):
        payload = compute_invariants(cycle(5)).to_dict()
        assert list(payload["invariants"]) == list(INVARIANT_NAMES)
        assert payload["n"] == 5 and payload["m"] == 5
        matching = payload["invariants"]["alpha_prime"]
        assert matching["method"] == "exact"
        assert all(len(edge) == 2 for edge in matching["certificate"])

    def test_subset_of_names(self):
        bundle = compute_invariants(star(3), ["gamma", "gamma_sp"])
        assert set(bundle.entries) == {"gamma", "gamma_sp"}
        assert bundle.value("gamma_sp") == 3
        assert bundle.value("alpha") is None

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            compute_invariants(path(3), ["gamma", "omega"])

    def test_secure_skipped_above_cap(self, small_secure_cap):
        bundle = compute_invariants(path(5))
        assert "gamma_s" in bundle.skipped
        assert "gamma_s" not in bundle.entries
        with pytest.raises(CapExceededError):
            compute_invariants(path(5), ["gamma_s"])

    def test_structural_entries(self):
        """Test t, Delta, I and lambda with their certificates"""
        bundle = compute_invariants(paw(), ["t", "Delta", "I", "lambda", "gamma_sp"])
        assert bundle.value("t") == 3
        assert bundle.entries["t"].certificate.to_list() == [0, 2, 3]
        assert bundle.value("Delta") == 3
        assert bundle.entries["Delta"].certificate.to_list() == [3]
        assert bundle.value("I") == 1
        assert bundle.entries["I"].certificate.to_list() == [2]
        assert bundle.value("lambda") == 1
        payload = bundle.to_dict()["invariants"]["lambda"]
        assert payload["witness"] == {"lambda": 1, "S": [0, 2, 3], "Sstar": [0], "X": [2]}
        assert bundle.validate() == []

    def test_single_structural_name(self):
        """Test that each structural name can be asked for alone"""
        assert compute_invariants(star(3), ("t",)).value("t") == 2
        assert compute_invariants(star(3), ("I",)).value("I") == 3
        assert compute_invariants(star(3), ("lambda",)).value("lambda") == 0

    def test_lambda_skipped_above_cap(self, small_enumeration_cap):
        """Test that λ is skipped above the enumeration cap unless asked for"""
        bundle = compute_invariants(path(5))
        assert "lambda" in bundle.skipped
        with pytest.raises(CapExceededError):
            compute_invariants(path(5), ["lambda"])

    def test_validate_catches_bad_structural_certificates(self):
        """Test that wrong t and Delta entries are reported"""
        bundle = InvariantBundle(paw())
        bundle.entries["t"] = InvariantEntry("t", 3, VertexSet.of(4, [0, 1, 2]))
        bundle.entries["Delta"] = InvariantEntry("Delta", 2, VertexSet.of(4, [3]))
        problems = bundle.validate()
        assert any(p.startswith("t:") for p in problems)
        assert any(p.startswith("Delta: value") for p in problems)

    def test_validate_relations(self):
        """Test the γ ≤ γ_s, ρ ≤ γ and degree-bound checks"""
        bundle = InvariantBundle(path(4))
        bundle.entries["gamma"] = InvariantEntry("gamma", 1, None)
        bundle.entries["gamma_s"] = InvariantEntry("gamma_s", 0, None)
        bundle.entries["rho"] = InvariantEntry("rho", 2, None)
        bundle.entries["Delta"] = InvariantEntry("Delta", 2, None)
        problems = bundle.validate()
        assert "gamma=1 > gamma_s=0" in problems
        assert "rho=2 > gamma=1" in problems
        assert any(p.startswith("degree bound") for p in problems)

    def test_validate_catches_bad_certificate(self):
        g = path(4)
        bundle = InvariantBundle(g)
        bundle.entries["gamma"] = InvariantEntry("gamma", 1, VertexSet.of(4, [0]))
        problems = bundle.validate()
        assert any("predicate" in p for p in problems)
        assert not any("chain" in p for p in problems)

    def test_validate_skips_bounds_entries(self):
        bundle = InvariantBundle(path(4))
        bundle.entries["gamma_sp"] = InvariantEntry("gamma_sp", None, None, InvariantMethod.BOUNDS, (2, 3))
        assert bundle.validate() == []

    def test_graph_with_isolates_skips_chain(self):
        bundle = compute_invariants(empty(3))
        assert bundle.value("gamma_sp") == 3
        assert bundle.validate() == []


class TestIdentityCrosschecks:
    """Test cases for Gallai, König-Egerváry and Meir-Moon"""

    def test_tree(self):
        report = identity_crosschecks(star(4))
        assert report.holds
        names = [check.name for check in report.checks]
        assert names == ["gallai: alpha + beta = n", "konig-egervary: alpha' = beta", "meir-moon: gamma = rho"]
        assert all(check.applicable for check in report.checks)

    def test_odd_cycle(self):
        report = identity_crosschecks(cycle(5))
        assert report.holds
        konig = report.checks[1]
        assert not konig.applicable
        assert not report.checks[2].applicable

    def test_bipartite_non_tree(self):
        report = identity_crosschecks(complete_bipartite(3, 3))
        assert report.checks[1].applicable
        assert report.checks[1].lhs == report.checks[1].rhs == 3

    def test_large_graph_uses_clique_solver(self):
        report = identity_crosschecks(complete(14))
        assert report.checks[0].lhs == 14
        assert report.to_dict()["holds"] is True


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
