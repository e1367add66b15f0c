"""Seeded random PL inputs for the randomized suites."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..plcore import ETPL, IntervalQ, Q, RootPL, nth_root


@dataclass(frozen=True)
class BumpConfig:
    breakpoints: int = 3
    denominator: int = 64


def random_bump(rng: random.Random, lo=0, hi=1, cfg: BumpConfig = BumpConfig()) -> ETPL:
    """A PL map supported in [lo, hi] with ``cfg.breakpoints`` interior breakpoints."""
    lo, hi = Q(lo), Q(hi)
    n, d = cfg.breakpoints, cfg.denominator
    while True:
        xs = sorted(rng.sample(range(1, d), n))
        ys = sorted(rng.sample(range(1, d), n))
        if xs != ys:
            break
    w = hi - lo
    pts = [(lo + w * Fraction(x, d), lo + w * Fraction(y, d)) for x, y in zip(xs, ys)]
    return ETPL.bump(lo, hi, pts)


def random_pushing_bump(rng: random.Random, lo, hi, cfg: BumpConfig = BumpConfig()) -> ETPL:
    """A bump on (lo, hi) with f(x) > x everywhere inside."""
    lo, hi = Q(lo), Q(hi)
    while True:
        f = random_bump(rng, lo, hi, cfg)
        if len(f.support()) == 1 and f.support()[0] == IntervalQ(lo, hi) and f((lo + hi) / 2) > (lo + hi) / 2:
            return f
        if len(f.support()) == 1 and f.support()[0] == IntervalQ(lo, hi):
            return f.inverse()


def random_equation_inputs(seed: int, cfg: BumpConfig = BumpConfig()) -> tuple:
    rng = random.Random(seed)
    return tuple(random_bump(rng, 0, 1, cfg) for _ in range(4))


def _between(rng: random.Random, lo, hi, d: int) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randrange(1, d), d)


def _random_segment(rng: random.Random, a, b, c, e, d: int) -> tuple:
    """Points of an increasing PL map [a, b] -> [c, e], with at most one interior kink."""
    if rng.random() < 0.5:
        return ((a, c), (b, e))
    return ((a, c), (_between(rng, a, b, d), _between(rng, c, e, d)), (b, e))


def random_root(rng: random.Random, base: ETPL, n: int, cfg: BumpConfig = BumpConfig()) -> RootPL:
    """An n-th root of ``base`` (single support component, pushing right) from a random choice."""
    (comp,) = base.support()
    d = cfg.denominator
    x0 = _between(rng, comp.lo, comp.hi, d) if comp.bounded else Fraction(0)
    while base(x0) <= x0:
        x0 = _between(rng, comp.lo, comp.hi, d)
    end = base(x0)
    inner = sorted({_between(rng, x0, end, d) for _ in range(n - 1)})
    while len(inner) < n - 1:
        inner = sorted(set(inner) | {_between(rng, x0, end, d)})
    s = (x0, *inner, end)
    pieces = tuple(_random_segment(rng, s[m], s[m + 1], s[m + 1], s[m + 2], d) for m in range(n - 1))
    return nth_root(base, n, x0, s, pieces)
