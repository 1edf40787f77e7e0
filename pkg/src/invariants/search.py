"""
Shared search helpers for the exact optimisers

Certificates are canonical: among all optimal vertex sets the one with the
smallest bitmask (compared as an integer) is returned.
"""

from typing import Callable, Iterator, NamedTuple, Optional

from graphs.graph import VertexSet


class CapExceededError(ValueError):
    """An exhaustive operation was asked to run above its configured cap"""


class Optimum(NamedTuple):
    """Optimal value with its canonical certificate"""
    value: int
    certificate: VertexSet


def check_cap(n: int, cap: int, operation: str):
    if n > cap:
        raise CapExceededError(f"{operation} is capped at n={cap}, graph has n={n}")


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    """k-subsets of 0..n-1 as bitmasks in increasing numeric order (Gosper's hack)"""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def canonical_optimum(
    n: int,
    value: int,
    solve: Callable[[int, int], Optional[int]],
    prefer_high: bool = False,
) -> int:
    """
    Fix vertices from n-1 down to 0 so that the optimum stays reachable

    Args:
        n: number of vertices
        value: optimum value of the unconstrained problem
        solve: solve(forced, forbidden) -> optimum under the constraints, or
               None when no feasible solution exists
        prefer_high: return the largest optimal bitmask instead of the smallest

    Returns:
        Bitmask of the chosen optimal set
    """
    forced = forbidden = 0
    for v in range(n - 1, -1, -1):
        bit = 1 << v
        if prefer_high:
            if solve(forced | bit, forbidden) == value:
                forced |= bit
            else:
                forbidden |= bit
        else:
            if solve(forced, forbidden | bit) == value:
                forbidden |= bit
            else:
                forced |= bit
    return forced
