"""
Tests for companion invariants and their brute-force oracles
"""

import pytest
import sys
from pathlib import Path

import numpy as np

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from graphs.families import complete, complete_bipartite, cycle, empty, path, star
from graphs.graph import build_graph
from invariants.domination import (
    domination_number, is_dominating, is_open_irredundant, is_secure_dominating,
    open_irredundant_dominating_set, secure_domination_number
)
from invariants.independence import independence_number, is_independent, is_vertex_cover, vertex_cover_number
from invariants.matching import is_matching, matching_number
from invariants.oracles import (
    bf_domination_number, bf_independence_number, bf_matching_number,
    bf_secure_domination_number, bf_smallest_maximum_matching, bf_two_packing_number, bf_vertex_cover_number
)
from invariants.packing import is_two_packing, two_packing_number
from invariants.search import CapExceededError, subsets_of_size


def random_graph(rng, n, p):
    coins = rng.random((n, n))
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v] < p])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


class TestSubsets:
    """Test cases for the subset enumerator"""

    def test_increasing_order(self):
        masks = list(subsets_of_size(4, 2))
        assert masks == sorted(masks)
        assert masks == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]

    def test_edges(self):
        assert list(subsets_of_size(3, 0)) == [0]
        assert list(subsets_of_size(3, 4)) == []


class TestDomination:
    """Test cases for domination, secure domination and irredundance"""

    def test_known_values(self):
        assert domination_number(path(7)).value == 3
        assert domination_number(star(4)).certificate.to_list() == [0]
        assert domination_number(empty(3)).value == 3
        assert domination_number(cycle(6)).value == 2

    def test_canonical_certificate(self):
        result = domination_number(path(7))
        assert result.certificate.to_list() == [0, 2, 5]
        assert is_dominating(path(7), result.certificate)

    def test_secure_star(self):
        result = secure_domination_number(star(4))
        assert result.value == 4
        assert is_secure_dominating(star(4), result.certificate)

    def test_secure_cap(self):
        with pytest.raises(CapExceededError):
            secure_domination_number(path(8), cap=5)

    def test_open_irredundant(self):
        g = path(4)
        s = open_irredundant_dominating_set(g)
        assert s is not None
        assert len(s) == domination_number(g).value
        assert is_open_irredundant(g, s)

    def test_against_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(1, 9)), 0.4)
            assert domination_number(g).value == bf_domination_number(g)[0]
            assert secure_domination_number(g).value == bf_secure_domination_number(g)[0]


class TestMatching:
    """Test cases for the blossom matching"""

    def test_known_values(self):
        assert matching_number(cycle(5)).value == 2
        assert matching_number(complete(4)).value == 2
        assert matching_number(petersen()).value == 5
        assert matching_number(empty(3)).value == 0

    def test_certificate(self):
        result = matching_number(cycle(7))
        assert is_matching(cycle(7), result.edges)
        assert all(u < v for u, v in result.edges)
        assert not is_matching(path(3), [(0, 1), (1, 2)])
        assert not is_matching(path(3), [(0, 2)])

    def test_certificate_is_smallest(self):
        """Test that the matching is the lexicographically smallest maximum one"""
        assert matching_number(cycle(6)).edges == ((0, 1), (2, 3), (4, 5))
        assert matching_number(path(4)).edges == ((0, 1), (2, 3))
        assert matching_number(star(3)).edges == ((0, 1),)
        assert matching_number(empty(2)).edges == ()

    def test_certificate_matches_oracle(self):
        """Test the canonical matching against the exhaustive smallest matching"""
        rng = np.random.default_rng(13)
        for _ in range(60):
            g = random_graph(rng, int(rng.integers(1, 9)), float(rng.choice([0.3, 0.5, 0.8])))
            result = matching_number(g)
            assert list(result.edges) == bf_smallest_maximum_matching(g)
            assert result.value == bf_matching_number(g)[0]

    @pytest.mark.slow
    def test_against_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 13))
            g = random_graph(rng, n, float(rng.choice([0.2, 0.4, 0.7])))
            assert matching_number(g).value == bf_matching_number(g)[0]


class TestIndependenceAndPacking:
    """Test cases for α, β and ρ"""

    def test_known_values(self):
        assert independence_number(cycle(5)).value == 2
        assert vertex_cover_number(cycle(5)).value == 3
        assert independence_number(complete_bipartite(2, 3)).value == 3
        assert two_packing_number(cycle(6)).value == 2
        assert two_packing_number(path(7)).value == 3
        assert two_packing_number(complete(4)).value == 1

    def test_certificates(self):
        g = petersen()
        alpha = independence_number(g)
        beta = vertex_cover_number(g)
        assert alpha.value == 4
        assert is_independent(g, alpha.certificate)
        assert is_vertex_cover(g, beta.certificate)
        assert is_two_packing(path(7), two_packing_number(path(7)).certificate)

    def test_smallest_mask_certificates(self):
        assert independence_number(path(4)).certificate.to_list() == [0, 2]
        assert vertex_cover_number(path(4)).certificate.to_list() == [0, 2]

    def test_against_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(1, 10)), 0.35)
            assert independence_number(g).value == bf_independence_number(g)[0]
            assert vertex_cover_number(g).value == bf_vertex_cover_number(g)[0]
            assert two_packing_number(g).value == bf_two_packing_number(g)[0]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
