"""
Randomized property tests for graph constructors, twins, invariant relations
and the super domination checker
"""

import pytest
import sys
from pathlib import Path

import numpy as np

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from graphs.graph import VertexSet, build_graph
from graphs.operations import cartesian_product, corona_product, disjoint_union, join, line_graph
from graphs.structure import has_isolated_vertices, max_degree
from graphs.twins import TwinKind, twin_partition
from invariants.domination import domination_number, secure_domination_number
from invariants.packing import two_packing_number
from superdom.certificate import is_super_dominating


def random_graph(rng, n, p):
    coins = rng.random((n, n))
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v] < p])


def random_graphs(seed, count, n_min, n_max):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        yield random_graph(rng, n, float(rng.choice([0.2, 0.4, 0.6, 0.8])))


def assert_simple(graph):
    for u in range(graph.n):
        assert not graph.has_edge(u, u)
        for v in range(graph.n):
            assert graph.has_edge(u, v) == graph.has_edge(v, u)
    assert sum(graph.degree(v) for v in range(graph.n)) == 2 * graph.edge_count


class TestConstructors:
    """Test cases for symmetry and size of constructor outputs"""

    def test_cartesian_product(self):
        """Test G□H is simple with n·m_H + n_H·m_G edges"""
        pairs = list(random_graphs(21, 40, 1, 5))
        for g, h in zip(pairs[::2], pairs[1::2]):
            product = cartesian_product(g, h)
            assert_simple(product)
            assert product.n == g.n * h.n
            assert product.edge_count == g.n * h.edge_count + h.n * g.edge_count

    def test_corona_product(self):
        """Test G⊙H order n_G + n_G·n_H and size m_G + n_G·m_H + n_G·n_H"""
        pairs = list(random_graphs(22, 40, 1, 5))
        for g, h in zip(pairs[::2], pairs[1::2]):
            corona = corona_product(g, h)
            assert_simple(corona)
            assert corona.n == g.n + g.n * h.n
            assert corona.edge_count == g.edge_count + g.n * h.edge_count + g.n * h.n

    def test_join_and_union(self):
        """Test join and disjoint union sizes"""
        pairs = list(random_graphs(23, 40, 1, 5))
        for g, h in zip(pairs[::2], pairs[1::2]):
            union = disjoint_union(g, h)
            joined = join(g, h)
            assert_simple(union)
            assert_simple(joined)
            assert union.n == joined.n == g.n + h.n
            assert union.edge_count == g.edge_count + h.edge_count
            assert joined.edge_count == g.edge_count + h.edge_count + g.n * h.n

    def test_line_graph_degrees(self):
        """Test deg_L(uv) = deg u + deg v - 2"""
        for g in random_graphs(24, 40, 2, 8):
            if g.edge_count == 0:
                continue
            line = line_graph(g)
            assert_simple(line.graph)
            assert line.graph.n == g.edge_count
            for index, (u, v) in enumerate(line.edges):
                assert line.graph.degree(index) == g.degree(u) + g.degree(v) - 2


class TestTwinClasses:
    """Test cases for the twin partition on random graphs"""

    def test_classes_are_twins_and_maximal(self):
        """Test members share N or N[] and different classes never do"""
        for g in random_graphs(25, 60, 1, 8):
            partition = twin_partition(g)
            for twin_class in partition.classes:
                members = list(twin_class.members)
                if twin_class.kind is TwinKind.FALSE_TWIN:
                    assert len({g.adj[v] for v in members}) == 1
                elif twin_class.kind is TwinKind.TRUE_TWIN:
                    assert len({g.closed_mask(v) for v in members}) == 1
                else:
                    assert len(members) == 1
            owner = partition.class_of()
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    twins = g.adj[u] == g.adj[v] or g.closed_mask(u) == g.closed_mask(v)
                    assert twins == (owner[u] == owner[v])


class TestInvariantRelations:
    """Test cases for relations between companion invariants"""

    def test_domination_below_secure_domination(self):
        """Test γ ≤ γ_s"""
        for g in random_graphs(26, 40, 1, 8):
            assert domination_number(g).value <= secure_domination_number(g).value

    def test_packing_below_domination(self):
        """Test ρ ≤ γ"""
        for g in random_graphs(27, 40, 1, 9):
            assert two_packing_number(g).value <= domination_number(g).value

    def test_degree_lower_bound(self):
        """Test γ(Δ+1) ≥ n on graphs without isolated vertices"""
        checked = 0
        for g in random_graphs(28, 60, 2, 9):
            if has_isolated_vertices(g):
                continue
            checked += 1
            assert domination_number(g).value * (max_degree(g) + 1) >= g.n
        assert checked > 0


class TestCheckerMonotonicity:
    """Removing a vertex from a failing D never makes it super dominating"""

    def test_removal_keeps_failure(self):
        """Test that D - {x} fails whenever D fails"""
        rng = np.random.default_rng(29)
        failures = 0
        for _ in range(150):
            n = int(rng.integers(2, 9))
            g = random_graph(rng, n, float(rng.choice([0.3, 0.5, 0.7])))
            d = VertexSet(n, int(rng.integers(0, 1 << n)))
            if is_super_dominating(g, d) is not None:
                continue
            failures += 1
            for x in d:
                smaller = VertexSet(n, d.bits & ~(1 << x))
                assert is_super_dominating(g, smaller) is None
        assert failures > 0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
