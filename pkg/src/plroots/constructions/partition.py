"""The sixteen equal half-open intervals tiling [1, 2)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..plcore import IntervalQ, Q


@dataclass(frozen=True)
class SixteenPartition:
    lo: Fraction = Fraction(1)
    hi: Fraction = Fraction(2)
    count: int = 16

    @property
    def width(self) -> Fraction:
        return (Q(self.hi) - Q(self.lo)) / self.count

    def J(self, i: int) -> IntervalQ:
        if not 1 <= i <= self.count:
            raise IndexError(f"no interval J_{i}")
        a = Q(self.lo) + (i - 1) * self.width
        return IntervalQ(a, a + self.width, True, False)

    def closed(self, i: int) -> IntervalQ:
        return self.J(i).closure()

    def union(self, X) -> list[IntervalQ]:
        """J_X as a list of maximal half-open intervals."""
        idx = sorted(set(X))
        out = []
        for i in idx:
            J = self.J(i)
            if out and out[-1].hi == J.lo:
                out[-1] = IntervalQ(out[-1].lo, J.hi, True, False)
            else:
                out.append(J)
        return out

    @property
    def intervals(self) -> tuple:
        return tuple(self.J(i) for i in range(1, self.count + 1))


PARTITION = SixteenPartition()


def J(i: int) -> IntervalQ:
    return PARTITION.J(i)


def Jc(i: int) -> IntervalQ:
    return PARTITION.closed(i)
