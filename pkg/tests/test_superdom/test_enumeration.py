"""
Tests for S(G), P(S), λ(G) and the universal-vertex checks
"""

import pytest
import sys
from pathlib import Path

import numpy as np

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from graphs.families import complete, path, star
from graphs.graph import VertexSet, build_graph
from harness.fixtures import butterfly_with_pendants, paw
from invariants.search import CapExceededError
from superdom.enumeration import (
    NotAGammaSpSetError, enumerate_min_superdom_sets, enumerate_pstar, private_neighbor_graph
)
from superdom.lambda_number import LambdaWitness, lambda_bruteforce, lambda_number
from superdom.universal import universal_vertex_checks


def random_graph(rng, n, p):
    coins = rng.random((n, n))
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v] < p])


class TestMinimumSets:
    """Test cases for S(G)"""

    def test_path_family(self):
        """Test S(P4) in increasing bitmask order"""
        family = enumerate_min_superdom_sets(path(4))
        assert [s.to_list() for s in family] == [[1, 2], [0, 3]]

    def test_star_family(self):
        """Test that every γ_sp-set of the star has four vertices"""
        family = enumerate_min_superdom_sets(star(4))
        assert len(family) == 5
        assert all(len(s) == 4 for s in family)

    def test_cap(self):
        """Test the enumeration cap, default and explicit"""
        with pytest.raises(CapExceededError):
            enumerate_min_superdom_sets(path(13))
        with pytest.raises(CapExceededError):
            enumerate_min_superdom_sets(path(6), cap=5)


class TestWitnessSets:
    """Test cases for P(S)"""

    def test_paw(self):
        """Test the private neighbour lists and P(S) of the paw"""
        g = paw()
        s = g.vertex_set([0, 2, 3])
        assert private_neighbor_graph(g, s) == {1: [0, 3]}
        assert [p.to_list() for p in enumerate_pstar(g, s)] == [[0], [3]]

    def test_butterfly(self):
        """Test the single witness set of the butterfly with pendants"""
        g = butterfly_with_pendants()
        s = g.vertex_set([0, 2, 4, 5, 6])
        assert [p.to_list() for p in enumerate_pstar(g, s)] == [[0, 2]]

    def test_path(self):
        """Test P(S) for both γ_sp-sets of P4"""
        g = path(4)
        assert [p.to_list() for p in enumerate_pstar(g, g.vertex_set([1, 2]))] == [[1, 2]]
        assert [p.to_list() for p in enumerate_pstar(g, g.vertex_set([0, 3]))] == [[0, 3]]

    def test_star_centre_outside(self):
        """Test one witness set per leaf when the centre is outside"""
        g = star(3)
        pstar = enumerate_pstar(g, g.vertex_set([1, 2, 3]))
        assert [p.to_list() for p in pstar] == [[1], [2], [3]]

    def test_witness_sets_are_valid(self):
        """Test that each S* lies in S and matches S̄ in size"""
        g = complete(4)
        for s in enumerate_min_superdom_sets(g):
            for sstar in enumerate_pstar(g, s):
                assert len(sstar) == len(s.complement())
                assert sstar.issubset(s)

    def test_rejects_non_minimum(self):
        """Test that a super dominating set above γ_sp is rejected"""
        g = paw()
        with pytest.raises(NotAGammaSpSetError):
            enumerate_pstar(g, g.vertices)

    def test_rejects_non_super_dominating(self):
        """Test that a set that is not super dominating is rejected"""
        g = paw()
        with pytest.raises(NotAGammaSpSetError):
            enumerate_pstar(g, g.vertex_set([0, 1]))

    def test_rejects_wrong_universe(self):
        """Test that a set over another universe is rejected"""
        with pytest.raises(NotAGammaSpSetError):
            enumerate_pstar(paw(), VertexSet.of(5, [0, 2, 3]))

    def test_known_gamma_sp_skips_solve(self):
        """Test that a given γ_sp is used for the size check"""
        g = path(4)
        with pytest.raises(NotAGammaSpSetError):
            enumerate_pstar(g, g.vertex_set([1, 2]), gamma_sp=3)


class TestLambda:
    """Test cases for λ(G)"""

    def test_paw(self):
        """Test λ and its witness on the paw"""
        result = lambda_number(paw())
        assert result.value == 1
        assert result.witness.to_dict() == {"lambda": 1, "S": [0, 2, 3], "Sstar": [0], "X": [2]}
        assert result.witness.revalidate(paw())

    def test_butterfly(self):
        """Test λ = 2 on the butterfly with pendants"""
        g = butterfly_with_pendants()
        result = lambda_number(g)
        assert result.value == 2
        assert result.witness.revalidate(g)

    def test_zero_values(self):
        """Test graphs whose λ is zero"""
        assert lambda_number(star(3)).value == 0
        assert lambda_number(complete(4)).value == 0
        assert lambda_number(path(4)).value == 0

    def test_revalidate_rejects_blocked_member(self):
        """Test that X with a neighbour in S̄ ∪ S* fails revalidation"""
        g = paw()
        witness = LambdaWitness(g.vertex_set([0, 2, 3]), g.vertex_set([0]), g.vertex_set([2, 3]))
        assert not witness.revalidate(g)

    def test_against_literal_definition(self):
        """Test λ against the subset-by-subset definition"""
        rng = np.random.default_rng(17)
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(2, 8)), float(rng.choice([0.3, 0.5, 0.7])))
            result = lambda_number(g)
            assert result.value == lambda_bruteforce(g)
            assert result.witness.revalidate(g)


class TestUniversalVertex:
    """Test cases for the universal-vertex statements"""

    def test_no_universal_vertex(self):
        """Test that graphs without a universal vertex are not applicable"""
        report = universal_vertex_checks(path(4))
        assert not report.applicable
        assert report.holds
        assert report.reason == "no universal vertex"

    def test_star(self):
        """Test the order-minus-one instances of the star"""
        report = universal_vertex_checks(star(4))
        assert report.applicable
        assert report.universal == [0]
        assert report.gamma_sp == 4
        assert report.order_minus_one_instances == 8
        assert report.order_minus_one_holds
        assert not report.avoiding_hypothesis
        assert report.degree_one_holds is None
        assert report.holds

    def test_paw(self):
        """Test the degree-one statement on the paw"""
        report = universal_vertex_checks(paw())
        assert report.universal == [3]
        assert report.avoiding_hypothesis
        assert report.lambda_value == 1
        assert report.degree_one == 1
        assert report.degree_one_holds
        assert report.to_dict()["avoiding_pair"] == {"S": [0, 2, 3], "Sstar": [0]}

    def test_butterfly(self):
        """Test the butterfly with pendants, which has no order-minus-one instance"""
        report = universal_vertex_checks(butterfly_with_pendants())
        assert report.gamma_sp == 5
        assert report.order_minus_one_instances == 0
        assert report.avoiding_hypothesis
        assert report.lambda_value == 2
        assert report.degree_one == 2
        assert report.holds


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
