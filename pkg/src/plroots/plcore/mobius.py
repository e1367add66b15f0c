"""Piecewise projective (Moebius) homeomorphisms with rational coefficients.

A single class closed under composition that contains both the PL maps and
the rational compactifications of PL maps into bounded intervals, so that
words mixing the two still have a canonical form and decidable equality.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._support import gap_sample, support_components, witness_moved
from .etpl import ETPL
from .intervals import INF, Affine, ClassMismatchError, IntervalQ, Q

# a Moebius map (a x + b) / (c x + d) is stored as a 4-tuple of coprime ints
IDENT = (1, 0, 0, 1)


def _int_normalize(ints) -> tuple:
    g = math.gcd(*ints)
    c, d = ints[2], ints[3]
    if c < 0 or (c == 0 and d < 0):
        g = -g
    return tuple(v // g for v in ints)


def mob_normalize(m) -> tuple:
    """Scale to coprime integers with the first nonzero of (c, d) positive."""
    if all(type(v) is int for v in m):
        return _int_normalize(m)
    vals = [Q(v) for v in m]
    den = math.lcm(*(v.denominator for v in vals))
    return _int_normalize([int(v * den) for v in vals])


def mob_mul(m, n) -> tuple:
    """Matrix product m . n, i.e. apply n first, then m."""
    a, b, c, d = m
    e, f, g, h = n
    return _int_normalize((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))


def mob_inv(m) -> tuple:
    a, b, c, d = m
    return _int_normalize((d, -b, -c, a))


def mob_apply(m, x):
    a, b, c, d = m
    if type(x) is int:
        p, q = x, 1
    else:
        p, q = x.numerator, x.denominator
    return Fraction(a * p + b * q, c * p + d * q)


def mob_affine(A: Affine) -> tuple:
    return mob_normalize((A.slope, A.shift, 0, 1))


def mob_fixed_points(m) -> list:
    """Rational fixed points; raises if the fixed points are irrational."""
    a, b, c, d = m
    if c == 0:
        if a == d:
            return []  # translation (or identity, handled by callers)
        return [Fraction(b, d - a)]
    A, B, C = c, d - a, -b
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"irrational fixed points for Moebius map {m}")
    r = Fraction(rn, rd)
    return sorted({(-B - r) / (2 * A), (-B + r) / (2 * A)})


def mob_fixed_points_in(m, lo, hi) -> list:
    """Fixed points strictly inside (lo, hi); irrational ones there raise."""
    try:
        return [x for x in mob_fixed_points(m) if lo < x < hi]
    except ValueError:
        pass
    a, b, c, d = m
    q = lambda x: c * x * x + (d - a) * x - b  # zero exactly at fixed points
    vertex = Fraction(-(d - a), 2 * c)
    inside = (q(lo) * q(hi) < 0) or (lo < vertex < hi and q(vertex) * q(lo) < 0)
    if inside:
        raise ValueError(f"irrational fixed points inside ({lo}, {hi}) for Moebius map {m}")
    return []


def rho_matrix(J: IntervalQ, nonneg: bool) -> tuple:
    """The compactification R -> interior(J) on x >= 0 (or x < 0) as a Moebius map.

    Base map x -> x / (1 + |x|) onto (-1, 1), followed by the affine map onto J.
    """
    l, r = J.lo, J.hi
    if nonneg:
        return mob_normalize((2 * r, l + r, 2, 2))
    return mob_normalize((-2 * l, l + r, -2, 2))


def rho(J: IntervalQ, x) -> Fraction:
    if x == INF:
        return J.hi
    if x == -INF:
        return J.lo
    return mob_apply(rho_matrix(J, x >= 0), x)


def rho_inv(J: IntervalQ, y) -> Fraction:
    if y == J.hi:
        return INF
    if y == J.lo:
        return -INF
    mid = (J.lo + J.hi) / 2
    return mob_apply(mob_inv(rho_matrix(J, y >= mid)), y)


@dataclass(frozen=True)
class PiecewiseMobius:
    kinks: tuple = ()
    maps: tuple = (IDENT,)

    def __post_init__(self):
        ks = tuple(Q(k) for k in self.kinks)
        ms = tuple(mob_normalize(m) for m in self.maps)
        object.__setattr__(self, "kinks", ks)
        object.__setattr__(self, "maps", ms)
        if len(ms) != len(ks) + 1:
            raise ValueError("need exactly one Moebius piece per gap between kinks")
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise ValueError("kinks must be strictly increasing")
        for m in (ms[0], ms[-1]):
            if m[2] != 0 or m[0] != m[3]:
                raise ValueError("end pieces must be translations")

    @classmethod
    def identity(cls) -> "PiecewiseMobius":
        return cls()

    @classmethod
    def from_etpl(cls, f: ETPL) -> "PiecewiseMobius":
        xs = [x for x, _ in f.breakpoints]
        maps = [mob_affine(f.affine_piece_at(gap_sample(lo, hi)))
                for lo, hi in zip([-INF, *xs], [*xs, INF])]
        return cls(tuple(xs), tuple(maps)).canonical()

    @cached_property
    def _piece_bounds(self) -> list:
        return list(zip([-INF, *self.kinks], [*self.kinks, INF]))

    def piece_at(self, x) -> tuple:
        """Moebius piece in force on the gap containing x (right-continuous at kinks)."""
        return self.maps[bisect_right(self.kinks, x)]

    def __call__(self, x):
        if isinstance(x, float):
            return x
        return mob_apply(self.piece_at(x), x)

    @classmethod
    def _trusted(cls, kinks: tuple, maps: tuple) -> "PiecewiseMobius":
        """Skip validation for data produced by exact operations on valid maps."""
        f = object.__new__(cls)
        object.__setattr__(f, "kinks", kinks)
        object.__setattr__(f, "maps", maps)
        return f

    def _apply_sorted(self, xs) -> list:
        ks, out, i = self.kinks, [], 0
        for x in xs:
            while i < len(ks) and ks[i] <= x:
                i += 1
            out.append(mob_apply(self.maps[i], x))
        return out

    def inverse(self) -> "PiecewiseMobius":
        cached = self.__dict__.get("_inv")
        if cached is None:
            ks = tuple(mob_apply(m, k) for k, m in zip(self.kinks, self.maps[1:]))
            cached = PiecewiseMobius._trusted(ks, tuple(mob_inv(m) for m in self.maps))
            self.__dict__["_inv"] = cached
            cached.__dict__["_inv"] = self
        return cached

    def then(self, other: "PiecewiseMobius") -> "PiecewiseMobius":
        """Apply ``self`` first, then ``other``.

        The gaps of the merged kink list lie inside one piece of ``self`` and
        are carried into one piece of ``other``; which pieces is read off by
        counting kinks, so no point is evaluated.
        """
        inv = self.inverse()
        sk = self.kinks
        pulled = inv._apply_sorted(other.kinks)
        pts = sorted(set(sk).union(pulled))
        maps = []
        i = j = 0
        for lo in (-INF, *pts):
            while i < len(sk) and sk[i] <= lo:
                i += 1
            while j < len(pulled) and pulled[j] <= lo:
                j += 1
            maps.append(mob_mul(other.maps[j], self.maps[i]))
        return PiecewiseMobius._trusted(tuple(pts), tuple(maps)).canonical()

    def power(self, n: int) -> "PiecewiseMobius":
        base = self if n >= 0 else self.inverse()
        result, n = None, abs(n)
        while n:
            if n & 1:
                result = base if result is None else result.then(base)
            n >>= 1
            if n:
                base = base.then(base)
        return PiecewiseMobius.identity() if result is None else result

    def canonical(self) -> "PiecewiseMobius":
        if self.__dict__.get("_canon"):
            return self
        ks, ms = [], [self.maps[0]]
        for k, m in zip(self.kinks, self.maps[1:]):
            if m == ms[-1]:
                continue
            ks.append(k)
            ms.append(m)
        out = self if len(ks) == len(self.kinks) else PiecewiseMobius._trusted(tuple(ks), tuple(ms))
        out.__dict__["_canon"] = True
        return out

    @property
    def is_identity(self) -> bool:
        c = self.canonical()
        return not c.kinks and c.maps[0] == IDENT

    @property
    def is_pl(self) -> bool:
        return all(m[2] == 0 for m in self.maps)

    def to_etpl(self) -> ETPL:
        c = self.canonical()
        if not c.is_pl:
            raise ClassMismatchError("map has non-affine pieces")
        if not c.kinks:
            a, b, _, d = c.maps[0]
            return ETPL.translation(Fraction(b, d))
        return ETPL(tuple((k, c(k)) for k in c.kinks)).canonical()

    def kinks_in(self, lo=-INF, hi=INF) -> list:
        return [k for k in self.kinks if lo < k < hi]

    def critical_points(self) -> list:
        crit = list(self.kinks)
        for (lo, hi), m in zip(self._piece_bounds, self.maps):
            if m == IDENT:
                continue
            crit.extend(mob_fixed_points_in(m, lo, hi))
        return crit

    def support(self) -> list[IntervalQ]:
        return support_components(self.critical_points(), self)

    def witness(self):
        c = self.canonical()
        if not c.kinks:
            return None if c.maps[0] == IDENT else Fraction(0)
        pts = list(c.kinks) + [gap_sample(lo, hi) for lo, hi in c._piece_bounds]
        return witness_moved(pts, c)

    def restrict(self, J: IntervalQ) -> "PiecewiseMobius":
        for end in (J.lo, J.hi):
            if end not in (INF, -INF) and self(end) != end:
                raise ValueError(f"cannot restrict to {J}: endpoint {end} is moved")
        ms = []
        pts = sorted({k for k in self.kinks if J.lo < k < J.hi} | {e for e in (J.lo, J.hi) if e not in (INF, -INF)})
        for lo, hi in zip([-INF, *pts], [*pts, INF]):
            x = gap_sample(lo, hi)
            ms.append(self.piece_at(x) if J.lo <= lo and hi <= J.hi else IDENT)
        return PiecewiseMobius(tuple(pts), tuple(ms)).canonical()

    def conjugate_by_affine(self, A: Affine) -> "PiecewiseMobius":
        if A.slope <= 0:
            raise ValueError("affine conjugation needs a positive slope")
        a, ai = mob_affine(A), mob_affine(A.inverse())
        return PiecewiseMobius(tuple(A.inverse()(k) for k in self.kinks),
                               tuple(mob_mul(ai, mob_mul(m, a)) for m in self.maps))

    def __repr__(self) -> str:
        return f"PiecewiseMobius(kinks={[str(k) for k in self.kinks]}, {len(self.maps)} pieces)"


@dataclass(frozen=True)
class CompactifiedMap:
    """rho_J o inner o rho_J^-1 on the interior of ``target``, identity elsewhere."""

    target: IntervalQ
    inner: ETPL

    def __post_init__(self):
        if not self.target.bounded:
            raise ValueError("compactification needs a bounded target interval")
        object.__setattr__(self, "target", self.target.interior())

    @classmethod
    def identity(cls, target: IntervalQ) -> "CompactifiedMap":
        return cls(target, ETPL.identity())

    def __call__(self, y):
        J = self.target
        if isinstance(y, float) or not (J.lo < y < J.hi):
            return y
        return rho(J, self.inner(rho_inv(J, y)))

    def _check_target(self, other: "CompactifiedMap"):
        if self.target != other.target:
            raise ClassMismatchError(f"target mismatch: {self.target} vs {other.target}")

    def inverse(self) -> "CompactifiedMap":
        return CompactifiedMap(self.target, self.inner.inverse())

    def then(self, other: "CompactifiedMap") -> "CompactifiedMap":
        self._check_target(other)
        return CompactifiedMap(self.target, self.inner.then(other.inner))

    def power(self, n: int) -> "CompactifiedMap":
        return CompactifiedMap(self.target, self.inner.power(n))

    def canonical(self) -> "CompactifiedMap":
        return CompactifiedMap(self.target, self.inner.canonical())

    @property
    def is_identity(self) -> bool:
        return self.inner.is_identity

    def kinks_in(self, lo=-INF, hi=INF) -> list:
        J = self.target
        if self.is_identity:
            return []
        pts = {J.lo, J.hi, J.midpoint, rho(J, self.inner.inverse()(Fraction(0)))}
        pts |= {rho(J, x) for x in self.inner.kinks_in()}
        return sorted(p for p in pts if lo < p < hi)

    def to_mobius(self) -> PiecewiseMobius:
        J = self.target
        if self.is_identity:
            return PiecewiseMobius.identity()
        pts = self.kinks_in()
        maps = []
        for lo, hi in zip([-INF, *pts], [*pts, INF]):
            y = gap_sample(lo, hi)
            if not (J.lo < y < J.hi):
                maps.append(IDENT)
                continue
            x = rho_inv(J, y)
            z = self.inner(x)
            m = mob_inv(rho_matrix(J, y >= J.midpoint))
            m = mob_mul(mob_affine(self.inner.affine_piece_at(x)), m)
            maps.append(mob_mul(rho_matrix(J, z >= 0), m))
        return PiecewiseMobius(tuple(pts), tuple(maps)).canonical()

    def support(self) -> list[IntervalQ]:
        return [IntervalQ(rho(self.target, c.lo), rho(self.target, c.hi)) for c in self.inner.support()]

    def witness(self):
        return self.to_mobius().witness()

    def conjugate_by_affine(self, A: Affine) -> "CompactifiedMap":
        if A.slope <= 0:
            raise ValueError("affine conjugation needs a positive slope")
        return CompactifiedMap(A.inverse().image(self.target), self.inner)

    def __repr__(self) -> str:
        return f"CompactifiedMap(target={self.target}, inner={self.inner!r})"
