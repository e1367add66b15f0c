"""n-th roots of PL homeomorphisms built on a fundamental domain.

On a support component (a, b) where the base map pushes points right, any
choice of PL bijections h_0, ..., h_{n-2} between consecutive division
segments of [x0, base(x0)] extends uniquely to a root g with g^n = base: the
last segment is forced, and the rest of (a, b) is reached by conjugating with
powers of the base.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .etpl import ETPL
from .intervals import INF, IntervalQ, Q
from .periodic import PeriodicPL

MAX_ORBIT_STEPS = 10**6


class OrbitError(RuntimeError):
    pass


def _segment_map(points) -> ETPL:
    """An interval bijection given by breakpoints, extended by translations."""
    return ETPL(tuple((Q(x), Q(y)) for x, y in points))


def _segment_points(f: ETPL, lo, hi) -> tuple:
    pts = [lo, *f.kinks_in(lo, hi), hi]
    return tuple((x, f(x)) for x in pts)


def single_component(base: ETPL) -> IntervalQ:
    comps = base.support()
    if len(comps) != 1:
        raise ValueError(f"base must have exactly one support component, found {len(comps)}")
    return comps[0]


@dataclass(frozen=True)
class RootPL:
    base: ETPL
    degree: int
    anchor: Fraction
    divisions: tuple
    pieces: tuple
    inverted: bool = False
    max_steps: int = MAX_ORBIT_STEPS

    def __post_init__(self):
        object.__setattr__(self, "anchor", Q(self.anchor))
        object.__setattr__(self, "divisions", tuple(Q(s) for s in self.divisions))
        object.__setattr__(self, "pieces", tuple(tuple((Q(x), Q(y)) for x, y in p) for p in self.pieces))
        n, base = self.degree, self.base
        if n < 2:
            raise ValueError("root degree must be at least 2")
        comp = single_component(base)
        x0 = self.anchor
        if x0 not in comp:
            raise ValueError(f"anchor {x0} outside the support component {comp}")
        if base(x0) < x0:
            raise ValueError("base(x) < x on the support; invert the base first")
        s = self.divisions
        if len(s) != n + 1 or s[0] != x0 or s[-1] != base(x0):
            raise ValueError("invalid divisions: need x0 = s_0 < ... < s_n = base(x0)")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise ValueError("invalid divisions: not strictly increasing")
        if len(self.pieces) != n - 1:
            raise ValueError(f"degree {n} needs {n - 1} pieces, got {len(self.pieces)}")
        s_ext = (*s, base(s[1]))
        for m, p in enumerate(self.pieces):
            if p[0] != (s_ext[m], s_ext[m + 1]) or p[-1] != (s_ext[m + 1], s_ext[m + 2]):
                raise ValueError(f"piece {m} must map [s_{m}, s_{m + 1}] onto [s_{m + 1}, s_{m + 2}]")
            _segment_map(p)  # monotonicity check

    @cached_property
    def component(self) -> IntervalQ:
        return single_component(self.base)

    @cached_property
    def segments(self) -> tuple:
        """One ETPL per division segment, valid on that segment."""
        segs = [_segment_map(p) for p in self.pieces]
        H = ETPL.identity()
        for h in segs:
            H = H.then(h)
        segs.append(H.inverse().then(self.base))
        return tuple(segs)

    @cached_property
    def _binv(self) -> ETPL:
        return self.base.inverse()

    def _locate(self, x):
        """Return (z, k) with z = base^-k(x) in [s_0, s_n)."""
        s0, sn = self.divisions[0], self.divisions[-1]
        z, k, steps = x, 0, 0
        while z < s0:
            z, k = self.base(z), k - 1
            steps += 1
            if steps > self.max_steps:
                raise OrbitError("endpoint of orbit-equivariant map")
        while z >= sn:
            z, k = self._binv(z), k + 1
            steps += 1
            if steps > self.max_steps:
                raise OrbitError("endpoint of orbit-equivariant map")
        return z, k

    def _forward(self, x):
        if x not in self.component:
            return x
        z, k = self._locate(x)
        m = bisect_right(self.divisions, z) - 1
        y = self.segments[m](z)
        step = self.base if k > 0 else self._binv
        for _ in range(abs(k)):
            y = step(y)
        return y

    def __call__(self, x):
        if isinstance(x, float):
            return x
        if not self.inverted:
            return self._forward(x)
        y = self._binv(x)
        for _ in range(self.degree - 1):
            y = self._forward(y)
        return y

    def inverse(self) -> "RootPL":
        return RootPL(self.base, self.degree, self.anchor, self.divisions, self.pieces,
                      not self.inverted, self.max_steps)

    def power(self, m: int):
        """g^m for m a multiple or a divisor of the degree (up to sign)."""
        n = self.degree
        e = -m if self.inverted else m
        if e % n == 0:
            return self.base.power(e // n)
        if e < 0 and n % -e == 0:
            return self.power(-m).inverse()
        if e > 0 and n % e == 0:
            s = self.divisions
            new_div = s[::e]
            pieces = []
            for j in range(n // e - 1):
                comp = ETPL.identity()
                for h in self.segments[j * e:(j + 1) * e]:
                    comp = comp.then(h)
                pieces.append(_segment_points(comp, s[j * e], s[(j + 1) * e]))
            return RootPL(self.base, n // e, self.anchor, new_div, tuple(pieces), False, self.max_steps)
        raise ValueError(f"power {m} is neither a multiple nor a divisor of the degree {n}")

    def shifted_segment(self, j: int) -> ETPL:
        """Map valid on [s_j, s_{j+1}] for any j >= 0, using base-equivariance."""
        n = self.degree
        q, r = divmod(j, n)
        return self.base.power(-q).then(self.segments[r]).then(self.base.power(q))

    def fundamental_domain_check(self):
        """Exact check that g^n = base on [s_0, s_n); returns a witness point or None."""
        n, s = self.degree, self.divisions
        for m in range(n):
            comp = ETPL.identity()
            for j in range(m, m + n):
                comp = comp.then(self.shifted_segment(j))
            lo, hi = s[m], s[m + 1]
            pts = sorted({lo, hi, *comp.kinks_in(lo, hi), *self.base.kinks_in(lo, hi)})
            checks = set(pts) | {(a + b) / 2 for a, b in zip(pts, pts[1:])}
            for x in sorted(checks):
                if comp(x) != self.base(x):
                    return x
        return None

    def local_pieces(self, lo, hi) -> list:
        """Partition [lo, hi] (inside the support) into intervals carrying one ETPL each."""
        if self.inverted:
            raise ValueError("local structure is only tracked for the forward root")
        comp = self.component
        if not (comp.lo < lo and hi < comp.hi):
            raise ValueError("window must lie strictly inside the support component")
        _, k = self._locate(lo)
        out = []
        s = self.divisions
        while True:
            bk = self.base.power(k)
            bki = self.base.power(-k)
            if bk(s[0]) >= hi:
                break
            for m in range(self.degree):
                u, v = bk(s[m]), bk(s[m + 1])
                if v <= lo or u >= hi:
                    continue
                out.append((max(u, lo), min(v, hi), bki.then(self.segments[m]).then(bk)))
            k += 1
        return out

    def kinks_in(self, lo, hi) -> list:
        comp = self.component
        if not (comp.lo < lo and hi < comp.hi):
            if comp.lo >= hi or comp.hi <= lo:
                return []
            raise ValueError("kinks accumulate at the ends of the support")
        if self.inverted:
            raise ValueError("kinks of an inverted root are not tracked")
        pts = set()
        for u, v, f in self.local_pieces(lo, hi):
            pts.update({u, v, *f.kinks_in(u, v)})
        return sorted(p for p in pts if lo < p < hi)

    def support(self) -> list[IntervalQ]:
        return [self.component]

    def fundamental_domain(self) -> IntervalQ:
        return IntervalQ(self.divisions[0], self.divisions[-1], True, False)

    def to_periodic(self) -> PeriodicPL:
        """For a base that is a translation, the root is a periodic PL map."""
        base = self.base.canonical()
        if base.breakpoints:
            raise ValueError("only roots of translations are periodic")
        c = base.left_offset
        s = self.divisions
        pts = set(s[:-1])
        for m, seg in enumerate(self.segments):
            pts.update(seg.kinks_in(s[m], s[m + 1]))
        g = PeriodicPL.from_samples(c, [(x, self._forward(x)) for x in pts])
        return g.inverse() if self.inverted else g

    def __repr__(self) -> str:
        inv = "^-1" if self.inverted else ""
        return f"RootPL(degree={self.degree}, anchor={self.anchor}, support={self.component}){inv}"


def nth_root(base: ETPL, n: int, anchor, divisions, pieces) -> RootPL:
    return RootPL(base.canonical(), n, anchor, tuple(divisions), tuple(pieces))


def affine_choice(base: ETPL, n: int, anchor=None) -> RootPL:
    """The root whose free pieces are affine, with equally spaced divisions."""
    comp = single_component(base)
    if anchor is None:
        if comp.bounded:
            anchor = comp.midpoint
        elif comp.lo != -INF:
            anchor = comp.lo + 1
        elif comp.hi != INF:
            anchor = comp.hi - 1
        else:
            anchor = Fraction(0)
    anchor = Q(anchor)
    end = base(anchor)
    step = (end - anchor) / n
    s = [anchor + m * step for m in range(n + 1)]
    pieces = [((s[m], s[m + 1]), (s[m + 1], s[m + 2])) for m in range(n - 1)]
    return nth_root(base, n, anchor, s, pieces)


@dataclass(frozen=True)
class RootProduct:
    """Component-wise root of a map with several support components."""

    roots: tuple

    def __call__(self, x):
        for r in self.roots:
            if x in r.component:
                return r(x)
        return x

    def power(self, m: int):
        out = ETPL.identity()
        for r in self.roots:
            out = out.then(r.power(m))
        return out

    def support(self) -> list[IntervalQ]:
        return [r.component for r in self.roots]


def nth_root_componentwise(f: ETPL, n: int) -> RootProduct:
    """Affine-choice root on every support component of ``f``.

    Components where f pushes left are handled by rooting the inverse there
    and inverting the result.
    """
    roots = []
    for comp in f.support():
        piece = f.restrict(comp)
        probe = affine_choice_anchor(comp)
        if piece(probe) > probe:
            roots.append(affine_choice(piece, n, probe))
        else:
            roots.append(affine_choice(piece.inverse(), n, probe).inverse())
    return RootProduct(tuple(roots))


def affine_choice_anchor(comp: IntervalQ) -> Fraction:
    if comp.bounded:
        return comp.midpoint
    if comp.lo != -INF:
        return comp.lo + 1
    if comp.hi != INF:
        return comp.hi - 1
    return Fraction(0)
