from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .intervals import INF, IntervalQ


def gap_sample(lo, hi) -> Fraction:
    if lo == -INF and hi == INF:
        return Fraction(0)
    if lo == -INF:
        return hi - 1
    if hi == INF:
        return lo + 1
    return (lo + hi) / 2


def support_components(critical: Iterable[Fraction], f: Callable) -> list[IntervalQ]:
    """Maximal open intervals moved by ``f``.

    ``critical`` must contain every point where ``f(x) - x`` can change between
    zero and nonzero, so that on each gap between consecutive critical points
    the map is either the identity or moves every point.
    """
    crit = sorted(set(critical))
    bounds = [-INF, *crit, INF]
    comps = []
    start = None
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i], bounds[i + 1]
        x = gap_sample(lo, hi)
        if f(x) != x:
            if start is None:
                start = lo
        elif start is not None:
            comps.append(IntervalQ(start, lo))
            start = None
        if hi != INF and f(hi) == hi and start is not None:
            comps.append(IntervalQ(start, hi))
            start = None
    if start is not None:
        comps.append(IntervalQ(start, INF))
    return comps


def witness_moved(points: Iterable[Fraction], f: Callable):
    """Smallest-denominator point of ``points`` moved by ``f`` (ties: smallest value)."""
    moved = [x for x in set(points) if f(x) != x]
    if not moved:
        return None
    return min(moved, key=lambda x: (x.denominator, abs(x), x))
