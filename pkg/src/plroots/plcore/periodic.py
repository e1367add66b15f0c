"""PL homeomorphisms commuting with a rational translation."""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._support import support_components, witness_moved
from .intervals import INF, ClassMismatchError, IntervalQ, Q
from .etpl import ETPL


@dataclass(frozen=True)
class PeriodicPL:
    """f(x + period) = f(x) + period, with breakpoints recorded on [0, period).

    ``offset`` is only meaningful when there are no breakpoints, in which case
    the map is the translation by ``offset``.
    """

    period: Fraction
    breakpoints: tuple = ()
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        p = Q(self.period)
        if p <= 0:
            raise ValueError("period must be positive")
        object.__setattr__(self, "period", p)
        bp = tuple((Q(x), Q(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", bp)
        for x, _ in bp:
            if not 0 <= x < p:
                raise ValueError(f"breakpoint abscissa {x} outside [0, {p})")
        for a, b in zip(bp, bp[1:]):
            if not (a[0] < b[0] and a[1] < b[1]):
                raise ValueError("breakpoints not strictly increasing")
        if bp:
            if not bp[-1][1] < bp[0][1] + p:
                raise ValueError("breakpoint ordinates violate wraparound monotonicity")
            object.__setattr__(self, "offset", bp[0][1] - bp[0][0])
        else:
            object.__setattr__(self, "offset", Q(self.offset))

    @classmethod
    def translation(cls, period, c) -> "PeriodicPL":
        return cls(period, (), c)

    @classmethod
    def from_samples(cls, period, points) -> "PeriodicPL":
        """Build from (x, f(x)) pairs with arbitrary x; abscissas are reduced mod the period."""
        p = Q(period)
        red = {}
        for x, y in points:
            x, y = Q(x), Q(y)
            k = math.floor(x / p)
            red[x - k * p] = y - k * p
        return cls(p, tuple(sorted(red.items()))).canonical()

    @cached_property
    def _xs(self) -> tuple:
        return tuple(x for x, _ in self.breakpoints)

    def __call__(self, x):
        if isinstance(x, float):
            return x
        bp, p = self.breakpoints, self.period
        if not bp:
            return x + self.offset
        k = math.floor(x / p)
        r = x - k * p
        i = bisect_right(self._xs, r)
        if i == 0:
            (x0, y0), (x1, y1) = (bp[-1][0] - p, bp[-1][1] - p), bp[0]
        elif i == len(bp):
            (x0, y0), (x1, y1) = bp[-1], (bp[0][0] + p, bp[0][1] + p)
        else:
            (x0, y0), (x1, y1) = bp[i - 1], bp[i]
        return y0 + (y1 - y0) * (r - x0) / (x1 - x0) + k * p

    def _check_period(self, other: "PeriodicPL"):
        if self.period != other.period:
            raise ClassMismatchError(f"period mismatch: {self.period} vs {other.period}")

    def inverse(self) -> "PeriodicPL":
        if not self.breakpoints:
            return PeriodicPL.translation(self.period, -self.offset)
        return PeriodicPL.from_samples(self.period, [(y, x) for x, y in self.breakpoints])

    def then(self, other: "PeriodicPL") -> "PeriodicPL":
        """Apply ``self`` first, then ``other``."""
        self._check_period(other)
        p = self.period
        inv = self.inverse()
        xs = set(self._xs)
        for x in other._xs:
            z = inv(x)
            xs.add(z - math.floor(z / p) * p)
        if not xs:
            return PeriodicPL.translation(p, self.offset + other.offset)
        return PeriodicPL.from_samples(p, [(x, other(self(x))) for x in xs])

    def power(self, n: int) -> "PeriodicPL":
        base = self if n >= 0 else self.inverse()
        result, n = None, abs(n)
        while n:
            if n & 1:
                result = base if result is None else result.then(base)
            n >>= 1
            if n:
                base = base.then(base)
        return PeriodicPL.translation(self.period, 0) if result is None else result

    def canonical(self) -> "PeriodicPL":
        p = self.period
        pts = list(self.breakpoints)
        changed = True
        while changed and pts:
            changed = False
            n = len(pts)
            for i in range(n):
                prev = pts[i - 1] if i > 0 else (pts[-1][0] - p, pts[-1][1] - p)
                nxt = pts[i + 1] if i + 1 < n else (pts[0][0] + p, pts[0][1] + p)
                cur = pts[i]
                if (cur[1] - prev[1]) * (nxt[0] - cur[0]) == (nxt[1] - cur[1]) * (cur[0] - prev[0]):
                    del pts[i]
                    changed = True
                    break
        if not pts:
            return PeriodicPL.translation(p, self.offset)
        return PeriodicPL(p, tuple(pts))

    @property
    def is_identity(self) -> bool:
        c = self.canonical()
        return not c.breakpoints and c.offset == 0

    @property
    def is_translation(self) -> bool:
        return not self.canonical().breakpoints

    def to_etpl(self) -> ETPL:
        c = self.canonical()
        if c.breakpoints:
            raise ClassMismatchError("only a translation is both periodic and eventually translational")
        return ETPL.translation(c.offset)

    @classmethod
    def from_etpl(cls, f: ETPL, period) -> "PeriodicPL":
        c = f.canonical()
        if c.breakpoints:
            raise ClassMismatchError("an ETPL map with breakpoints is not periodic")
        return cls.translation(period, c.left_offset)

    def kinks_in(self, lo, hi) -> list:
        if lo == -INF or hi == INF:
            raise ValueError("a periodic map has infinitely many kinks on an unbounded window")
        p = self.period
        out = []
        for x in self._xs:
            k = math.ceil((lo - x) / p)
            while x + k * p < hi:
                if x + k * p > lo:
                    out.append(x + k * p)
                k += 1
        return sorted(out)

    def support(self) -> list[IntervalQ]:
        """Support components meeting [0, period], as intervals of the line.

        The whole support is the union of the integer-period translates of these.
        """
        p = self.period
        if not self.breakpoints:
            return [] if self.offset == 0 else [IntervalQ.line()]
        crit = set()
        window = self.kinks_in(-p, 2 * p) + [Fraction(0), p]
        ws = sorted(set(window))
        for a, b in zip(ws, ws[1:]):
            da, db = self(a) - a, self(b) - b
            if (da < 0 < db) or (db < 0 < da):
                crit.add(a + da * (b - a) / (da - db))
        crit |= set(ws)
        comps = support_components(crit, self)
        moved_everywhere = all(self(x) != x for x in crit)
        if moved_everywhere:
            return [IntervalQ.line()]
        return [c for c in comps if c.lo < p and c.hi > 0 and c.lo != -INF and c.hi != INF]

    def witness(self):
        c = self.canonical()
        if not c.breakpoints:
            return None if c.offset == 0 else Fraction(0)
        return witness_moved(c._xs, c)

    def __repr__(self) -> str:
        if not self.breakpoints:
            return f"PeriodicPL(period {self.period}, translation {self.offset})"
        pts = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PeriodicPL(period {self.period})[{pts}]"
