"""
Tests for the Cartesian parity bounds and the half-order rule
"""

import pytest
import sys
from pathlib import Path

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from formulas.cartesian import Interval, cartesian_parity_bounds, half_order_rule
from formulas.formulas import NotApplicableError
from graphs.families import FamilyKind, complete, cycle, path, star
from graphs.operations import cartesian_product
from superdom.bnb import gamma_sp_bnb


class TestParityBounds:
    """Intervals for P_n □ H and C_n □ H"""

    def test_even_path_is_exact(self):
        interval = cartesian_parity_bounds(FamilyKind.PATH, 4, complete(2))
        assert interval == Interval(4, 4)
        assert interval.exact

    def test_odd_path(self):
        assert cartesian_parity_bounds("path", 3, complete(2)) == Interval(3, 4)
        assert cartesian_parity_bounds("path", 5, complete(3)) == Interval(8, 9)

    def test_cycle_residues(self):
        assert cartesian_parity_bounds("cycle", 4, path(2)) == Interval(4, 4)
        assert cartesian_parity_bounds("cycle", 6, complete(2)) == Interval(6, 8)
        assert cartesian_parity_bounds("cycle", 5, complete(2)) == Interval(5, 6)
        assert cartesian_parity_bounds("cycle", 7, complete(2)) == Interval(7, 8)

    @pytest.mark.parametrize("kind,n,h", [
        ("path", 3, complete(2)),
        ("path", 5, complete(2)),
        ("cycle", 5, complete(2)),
        ("cycle", 6, complete(2)),
        ("path", 3, star(2)),
        ("cycle", 3, complete(3)),
    ])
    def test_contains_exact_value(self, kind, n, h):
        g = path(n) if kind == "path" else cycle(n)
        value = gamma_sp_bnb(cartesian_product(g, h), timeout=0).gamma_sp
        assert cartesian_parity_bounds(kind, n, h).contains(value)

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError):
            cartesian_parity_bounds("star", 4, complete(2))
        with pytest.raises(NotApplicableError):
            cartesian_parity_bounds("path", 2, complete(2))
        with pytest.raises(NotApplicableError):
            cartesian_parity_bounds("cycle", 5, complete(1))

    def test_to_dict(self):
        assert Interval(3, 4).to_dict() == {"lower": 3, "upper": 4, "exact": False}


class TestHalfOrderRule:
    """γ_sp = nn′/2 when a factor has γ_sp equal to half its order"""

    def test_applies(self):
        assert half_order_rule(path(4), complete(3)) == 6
        assert half_order_rule(complete(3), cycle(4)) == 6

    def test_given_values_skip_solving(self):
        assert half_order_rule(path(4), cycle(5), gamma_g=2) == 10

    def test_does_not_apply(self):
        assert half_order_rule(cycle(5), complete(3)) is None
        assert half_order_rule(complete(1), path(4)) is None

    def test_matches_solver(self):
        g, h = cycle(4), path(3)
        assert half_order_rule(g, h) == gamma_sp_bnb(cartesian_product(g, h), timeout=0).gamma_sp


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
