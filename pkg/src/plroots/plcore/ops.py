"""Class-dispatching operations on every map representation.

All composition is left-to-right: ``compose(f, g)`` applies f first.
"""
from __future__ import annotations

from fractions import Fraction

from .etpl import ETPL
from .intervals import INF, Affine, ClassMismatchError, IncomparableError, IntervalQ, Q
from .mobius import CompactifiedMap, PiecewiseMobius
from .periodic import PeriodicPL
from .piecewise import PiecewiseHomeo
from .roots import RootPL, RootProduct

MAP_TYPES = (ETPL, PeriodicPL, CompactifiedMap, PiecewiseMobius, PiecewiseHomeo, RootPL, RootProduct)


def evaluate(f, x):
    return f(Q(x))


def _as_periodic_pair(f, g):
    if isinstance(f, PeriodicPL) and isinstance(g, ETPL):
        return f, PeriodicPL.from_etpl(g, f.period)
    if isinstance(f, ETPL) and isinstance(g, PeriodicPL):
        return PeriodicPL.from_etpl(f, g.period), g
    return None


def compose(f, g):
    """The map x -> g(f(x))."""
    if type(f) is type(g) and isinstance(f, (ETPL, PeriodicPL, CompactifiedMap, PiecewiseMobius, PiecewiseHomeo)):
        return f.then(g)
    pair = _as_periodic_pair(f, g)
    if pair is not None:
        return pair[0].then(pair[1])
    raise ClassMismatchError(f"class-incompatible composition: {type(f).__name__} then {type(g).__name__}")


def inverse(f):
    return f.inverse()


def power(f, n: int):
    return f.power(n)


def identity_like(f):
    if isinstance(f, PeriodicPL):
        return PeriodicPL.translation(f.period, 0)
    if isinstance(f, CompactifiedMap):
        return CompactifiedMap.identity(f.target)
    if isinstance(f, PiecewiseMobius):
        return PiecewiseMobius.identity()
    if isinstance(f, PiecewiseHomeo):
        return PiecewiseHomeo(())
    return ETPL.identity()


def canonicalize(f):
    if isinstance(f, (RootPL, RootProduct)):
        return f
    return f.canonical()


def support(f) -> list[IntervalQ]:
    return f.support()


def is_identity(f) -> bool:
    if isinstance(f, RootPL):
        return False
    return f.is_identity


def to_mobius(f) -> PiecewiseMobius:
    if isinstance(f, PiecewiseMobius):
        return f
    if isinstance(f, ETPL):
        return PiecewiseMobius.from_etpl(f)
    if isinstance(f, (CompactifiedMap, PiecewiseHomeo)):
        return f.to_mobius()
    if isinstance(f, PeriodicPL):
        return PiecewiseMobius.from_etpl(f.to_etpl())
    raise ClassMismatchError(f"{type(f).__name__} has no piecewise Moebius form")


def equals(f, g) -> bool:
    """Exact extensional equality, decided through canonical forms."""
    if type(f) is type(g) and isinstance(f, (ETPL, PeriodicPL, PiecewiseMobius)):
        return f.canonical() == g.canonical()
    if isinstance(f, CompactifiedMap) and isinstance(g, CompactifiedMap) and f.target == g.target:
        return f.inner.canonical() == g.inner.canonical()
    pair = _as_periodic_pair(f, g)
    if pair is not None:
        return pair[0].canonical() == pair[1].canonical()
    if isinstance(f, RootPL) or isinstance(g, RootPL):
        return _root_equals(f, g)
    if isinstance(f, PeriodicPL) or isinstance(g, PeriodicPL):
        try:
            return to_mobius(f) == to_mobius(g)
        except ClassMismatchError:
            raise IncomparableError("incomparable classes") from None
    try:
        return to_mobius(f).canonical() == to_mobius(g).canonical()
    except ClassMismatchError:
        raise IncomparableError(f"incomparable classes: {type(f).__name__} and {type(g).__name__}") from None


def _root_equals(f, g) -> bool:
    if isinstance(f, RootPL) and isinstance(g, RootPL):
        if f.base.canonical() != g.base.canonical():
            return False
        D = IntervalQ.closed(f.divisions[0], f.divisions[-1])
        return agree_on(f if not f.inverted else f.inverse(), g if not f.inverted else g.inverse(), D)
    raise IncomparableError("incomparable classes: a root compares only with another root")


def kinks(f, lo, hi) -> list:
    return f.kinks_in(lo, hi)


def _check_points(f, g, J: IntervalQ) -> list:
    lo, hi = J.lo, J.hi
    pts = sorted({*kinks(f, lo, hi), *kinks(g, lo, hi)})
    bounds = [lo, *pts, hi]
    out = [p for p in (lo, hi) if p not in (INF, -INF)] + pts
    for a, b in zip(bounds, bounds[1:]):
        if a == -INF and b == INF:
            out += [Fraction(-1), Fraction(0), Fraction(1)]
        elif a == -INF:
            out += [b - 1, b - 2]
        elif b == INF:
            out += [a + 1, a + 2]
        else:
            out += [(a + b) / 2, (3 * a + b) / 4]
    return out


def disagreement(f, g, J: IntervalQ):
    """A point of the closure of J where f and g differ, or None.

    Between consecutive kinks of f and g both maps are single Moebius
    transformations, and two of those agreeing at three points are equal, so
    checking the ends plus two interior points of every gap is a proof.
    """
    for x in _check_points(f, g, J):
        if f(x) != g(x):
            return x
    return None


def agree_on(f, g, J: IntervalQ) -> bool:
    return disagreement(f, g, J) is None


def affine_conjugate(f, A: Affine):
    """A^-1 o f o A: apply A, then f, then A^-1."""
    if A.slope <= 0:
        raise ValueError("affine conjugation needs a positive slope")
    if isinstance(f, PeriodicPL):
        p = f.period / A.slope
        Ai = A.inverse()
        if not f.breakpoints:
            return PeriodicPL.translation(p, f.offset / A.slope)
        return PeriodicPL.from_samples(p, [(Ai(x), Ai(y)) for x, y in f.breakpoints])
    return f.conjugate_by_affine(A)


def compactify(f: ETPL, J: IntervalQ) -> CompactifiedMap:
    if not J.bounded:
        raise ValueError("compactify needs a bounded interval")
    return CompactifiedMap(J, f.canonical())


def restrict(f, J: IntervalQ):
    return f.restrict(J)


def witness(f):
    return f.witness()
