"""Piecewise-linear homeomorphisms of the line that are translations near +/-infinity."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._support import support_components, witness_moved
from .intervals import INF, Affine, IntervalQ, Q

ONE = Fraction(1)


def _slope(p, q) -> Fraction:
    return (q[1] - p[1]) / (q[0] - p[0])


def _eval_sorted(f: "ETPL", xs) -> list:
    """f at each point of the increasing sequence xs, by one sweep over the breakpoints."""
    bp = f.breakpoints
    out = []
    i = 0
    for x in xs:
        if not bp or x <= bp[0][0]:
            out.append(x + f.left_offset)
            continue
        if x >= bp[-1][0]:
            out.append(x + f.right_offset)
            continue
        while bp[i + 1][0] <= x:
            i += 1
        (x0, y0), (x1, y1) = bp[i], bp[i + 1]
        out.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0) if x != x0 else y0)
    return out


@dataclass(frozen=True)
class ETPL:
    """Breakpoint list plus the translation amounts on the two unbounded ends.

    Between breakpoints the map interpolates affinely; left of the first
    breakpoint it is ``x + left_offset`` and right of the last ``x + right_offset``.
    """

    breakpoints: tuple = ()
    left_offset: Fraction = Fraction(0)
    right_offset: Fraction = Fraction(0)

    def __post_init__(self):
        bp = tuple((Q(x), Q(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", bp)
        lo, ro = Q(self.left_offset), Q(self.right_offset)
        if bp:
            lo, ro = bp[0][1] - bp[0][0], bp[-1][1] - bp[-1][0]
            if Q(self.left_offset) not in (0, lo) or Q(self.right_offset) not in (0, ro):
                raise ValueError("offsets disagree with the end breakpoints")
            for p, q in zip(bp, bp[1:]):
                if not (p[0] < q[0] and p[1] < q[1]):
                    raise ValueError(f"breakpoints not strictly increasing at {p} -> {q}")
        elif lo != ro:
            raise ValueError("a map without breakpoints is a single translation")
        object.__setattr__(self, "left_offset", lo)
        object.__setattr__(self, "right_offset", ro)

    # constructors

    @classmethod
    def identity(cls) -> "ETPL":
        return cls()

    @classmethod
    def translation(cls, c) -> "ETPL":
        c = Q(c)
        return cls((), c, c)

    @classmethod
    def from_points(cls, points) -> "ETPL":
        """Canonical map through ``points``; offsets are read off the end points."""
        return cls(tuple(points)).canonical()

    @classmethod
    def bump(cls, lo, hi, interior=()) -> "ETPL":
        """Map supported in [lo, hi] fixing both ends, through the given interior points."""
        lo, hi = Q(lo), Q(hi)
        return cls.from_points([(lo, lo), *interior, (hi, hi)])

    # evaluation

    @cached_property
    def _xs(self) -> tuple:
        return tuple(x for x, _ in self.breakpoints)

    def __call__(self, x):
        if isinstance(x, float):
            return x
        bp = self.breakpoints
        if not bp or x <= bp[0][0]:
            return x + self.left_offset
        if x >= bp[-1][0]:
            return x + self.right_offset
        i = bisect_right(self._xs, x)
        (x0, y0), (x1, y1) = bp[i - 1], bp[i]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def affine_piece_at(self, x) -> Affine:
        """The affine formula in force just to the right of ``x``."""
        bp = self.breakpoints
        if not bp or x < bp[0][0]:
            return Affine(1, self.left_offset)
        if x >= bp[-1][0]:
            return Affine(1, self.right_offset)
        i = bisect_right(self._xs, x)
        s = _slope(bp[i - 1], bp[i])
        return Affine(s, bp[i - 1][1] - s * bp[i - 1][0])

    # group operations

    @classmethod
    def _trusted(cls, bp: tuple, offset=None) -> "ETPL":
        """Skip validation for breakpoint tuples produced by exact operations on valid maps."""
        f = object.__new__(cls)
        object.__setattr__(f, "breakpoints", bp)
        if bp:
            lo, ro = bp[0][1] - bp[0][0], bp[-1][1] - bp[-1][0]
        else:
            lo = ro = offset
        object.__setattr__(f, "left_offset", lo)
        object.__setattr__(f, "right_offset", ro)
        return f

    def inverse(self) -> "ETPL":
        cached = self.__dict__.get("_inv")
        if cached is None:
            if self.breakpoints:
                cached = ETPL._trusted(tuple((y, x) for x, y in self.breakpoints))
            else:
                cached = ETPL._trusted((), -self.left_offset)
            self.__dict__["_inv"] = cached
            cached.__dict__["_inv"] = self
        return cached

    def then(self, other: "ETPL") -> "ETPL":
        """Apply ``self`` first, then ``other``."""
        if not other.breakpoints:
            c = other.left_offset
            if not self.breakpoints:
                return ETPL._trusted((), self.left_offset + c)
            return ETPL._trusted(tuple((x, y + c) for x, y in self.breakpoints)).canonical()
        if not self.breakpoints:
            c = self.left_offset
            return ETPL._trusted(tuple((x - c, y) for x, y in other.breakpoints)).canonical()
        pulled = _eval_sorted(self.inverse(), other._xs)
        xs = sorted(set(self._xs).union(pulled))
        pts = zip(xs, _eval_sorted(other, _eval_sorted(self, xs)))
        return ETPL._trusted(tuple(pts)).canonical()

    def power(self, n: int) -> "ETPL":
        base = self if n >= 0 else self.inverse()
        result, n = None, abs(n)
        while n:
            if n & 1:
                result = base if result is None else result.then(base)
            n >>= 1
            if n:
                base = base.then(base)
        return ETPL.identity() if result is None else result

    def canonical(self) -> "ETPL":
        if self.__dict__.get("_canon"):
            return self
        bp = self.breakpoints
        if not bp:
            self.__dict__["_canon"] = True
            return self
        slopes = [_slope(p, q) for p, q in zip(bp, bp[1:])]
        slopes.append(ONE)
        kept = []
        s_in = ONE
        for p, s_out in zip(bp, slopes):
            # points dropped so far were collinear, so the incoming slope is the previous gap's
            if s_in != s_out:
                kept.append(p)
            s_in = s_out
        if len(kept) == len(bp):
            out = self
        elif not kept:
            out = ETPL._trusted((), self.left_offset)
        else:
            out = ETPL._trusted(tuple(kept))
        out.__dict__["_canon"] = True
        return out

    @property
    def is_identity(self) -> bool:
        c = self.canonical()
        return not c.breakpoints and c.left_offset == 0

    @property
    def is_translation(self) -> bool:
        return not self.canonical().breakpoints

    # structure

    def kinks_in(self, lo=-INF, hi=INF) -> list:
        return [x for x in self._xs if lo < x < hi]

    def critical_points(self) -> list:
        """Breakpoints together with every isolated fixed point between them."""
        crit = list(self._xs)
        bp = self.breakpoints
        for (x0, y0), (x1, y1) in zip(bp, bp[1:]):
            d0, d1 = y0 - x0, y1 - x1
            if (d0 < 0 < d1) or (d1 < 0 < d0):
                crit.append(x0 + d0 * (x1 - x0) / (d0 - d1))
        return crit

    def support(self) -> list[IntervalQ]:
        return support_components(self.critical_points(), self)

    def witness(self):
        c = self.canonical()
        if not c.breakpoints:
            return None if c.left_offset == 0 else Fraction(0)
        return witness_moved(c._xs, c)

    def restrict(self, J: IntervalQ) -> "ETPL":
        """The map equal to ``self`` on ``J`` and the identity elsewhere.

        Finite ends of ``J`` must be fixed points, otherwise the result would
        not be a homeomorphism.
        """
        for end in (J.lo, J.hi):
            if end not in (INF, -INF) and self(end) != end:
                raise ValueError(f"cannot restrict to {J}: endpoint {end} is moved")
        if J.lo == -INF and J.hi == INF:
            return self
        pts = [p for p in self.breakpoints if J.lo < p[0] < J.hi]
        if J.lo != -INF:
            pts.insert(0, (J.lo, J.lo))
        if J.hi != INF:
            pts.append((J.hi, J.hi))
        return ETPL(tuple(pts)).canonical()

    def conjugate_by_affine(self, A: Affine) -> "ETPL":
        """The map A^-1 o self o A (apply A, then self, then A^-1)."""
        if A.slope <= 0:
            raise ValueError("affine conjugation needs a positive slope")
        Ai = A.inverse()
        if not self.breakpoints:
            return ETPL.translation(self.left_offset / A.slope)
        return ETPL(tuple((Ai(x), Ai(y)) for x, y in self.breakpoints)).canonical()

    def reflect(self) -> "ETPL":
        """Conjugate by x -> -x."""
        if not self.breakpoints:
            return ETPL.translation(-self.left_offset)
        return ETPL(tuple((-x, -y) for x, y in reversed(self.breakpoints)))

    def __repr__(self) -> str:
        if not self.breakpoints:
            return f"ETPL(translation {self.left_offset})"
        pts = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"ETPL[{pts}]"
