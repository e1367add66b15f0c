"""Rational scalars, intervals with optional infinite ends, and affine maps."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INF = math.inf

Rat = Fraction
Extended = Union[Fraction, float]  # float only ever holds +/-inf


class ClassMismatchError(ValueError):
    """Raised when two maps cannot be combined within a closed class."""


class IncomparableError(ValueError):
    pass


def Q(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are rejected on purpose: every coordinate must be exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}: {x!r}")


def Qx(x) -> Extended:
    """Like Q but also accepts +/-inf (as float or the strings "inf"/"-inf")."""
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, str) and x.strip() in ("inf", "+inf", "-inf"):
        return -INF if x.strip().startswith("-") else INF
    return Q(x)


def fmt(x) -> str:
    if isinstance(x, float):
        if x == INF:
            return "inf"
        if x == -INF:
            return "-inf"
        raise TypeError(f"non-exact value {x!r}")
    return str(Q(x))


@dataclass(frozen=True)
class IntervalQ:
    lo: Extended
    hi: Extended
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Qx(self.lo))
        object.__setattr__(self, "hi", Qx(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval: lo={self.lo} hi={self.hi}")
        if (self.lo_closed and self.lo == -INF) or (self.hi_closed and self.hi == INF):
            raise ValueError("infinite ends cannot be closed")

    @classmethod
    def open(cls, lo, hi) -> "IntervalQ":
        return cls(lo, hi)

    @classmethod
    def closed(cls, lo, hi) -> "IntervalQ":
        return cls(lo, hi, True, True)

    @classmethod
    def line(cls) -> "IntervalQ":
        return cls(-INF, INF)

    @property
    def bounded(self) -> bool:
        return self.lo != -INF and self.hi != INF

    @property
    def length(self) -> Fraction:
        if not self.bounded:
            raise ValueError("unbounded interval has no length")
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        if not self.bounded:
            raise ValueError("unbounded interval has no midpoint")
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        x = Q(x)
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    def closure(self) -> "IntervalQ":
        return IntervalQ(self.lo, self.hi, self.lo != -INF, self.hi != INF)

    def interior(self) -> "IntervalQ":
        return IntervalQ(self.lo, self.hi)

    def contains_interval(self, other: "IntervalQ") -> bool:
        """Whether ``other`` (as a point set) lies inside ``self``."""
        if other.lo < self.lo or other.hi > self.hi:
            return False
        if other.lo == self.lo and other.lo_closed and not self.lo_closed:
            return False
        if other.hi == self.hi and other.hi_closed and not self.hi_closed:
            return False
        return True

    def overlaps(self, other: "IntervalQ") -> bool:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            return True
        if lo == hi and lo != INF and lo != -INF:
            return lo in self and lo in other
        return False

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{fmt(self.lo)}, {fmt(self.hi)}{right}"


@dataclass(frozen=True)
class Affine:
    """x -> slope * x + shift with rational coefficients."""

    slope: Fraction
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "slope", Q(self.slope))
        object.__setattr__(self, "shift", Q(self.shift))
        if self.slope == 0:
            raise ValueError("affine map must be invertible")

    @classmethod
    def mapping(cls, src: IntervalQ, dst: IntervalQ) -> "Affine":
        """The increasing affine map sending ``src`` onto ``dst``."""
        slope = dst.length / src.length
        return cls(slope, dst.lo - slope * src.lo)

    def __call__(self, x: Extended) -> Extended:
        if isinstance(x, float):
            return x if self.slope > 0 else -x
        return self.slope * x + self.shift

    def inverse(self) -> "Affine":
        return Affine(1 / self.slope, -self.shift / self.slope)

    def image(self, J: IntervalQ) -> IntervalQ:
        if self.slope < 0:
            raise ValueError("orientation-reversing affine map")
        return IntervalQ(self(J.lo), self(J.hi), J.lo_closed, J.hi_closed)
