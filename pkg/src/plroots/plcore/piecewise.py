"""Region-preserving homeomorphisms assembled from per-region representatives."""
from __future__ import annotations

from dataclasses import dataclass

from .etpl import ETPL
from .intervals import ClassMismatchError, IntervalQ
from .mobius import CompactifiedMap, PiecewiseMobius


def _key(J: IntervalQ):
    return (J.lo, J.hi)


def _rep_then(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if isinstance(a, ETPL) and isinstance(b, ETPL):
        return a.then(b)
    if isinstance(a, CompactifiedMap) and isinstance(b, CompactifiedMap):
        return a.then(b)
    raise ClassMismatchError(f"class-incompatible composition: {type(a).__name__} then {type(b).__name__}")


def _rep_identity(rep) -> bool:
    return rep is None or rep.is_identity


@dataclass(frozen=True)
class PiecewiseHomeo:
    """Identity outside the regions; on each region the map is ``rep``.

    A rep is an ETPL already supported in the closure of its region, a
    CompactifiedMap, or None for the identity.
    """

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(sorted(((J, rep) for J, rep in self.parts), key=lambda p: _key(p[0])))
        object.__setattr__(self, "parts", parts)
        for (J1, _), (J2, _) in zip(parts, parts[1:]):
            if J2.lo < J1.hi:
                raise ValueError(f"regions overlap: {J1} and {J2}")
        for J, rep in parts:
            if rep is None:
                continue
            if not isinstance(rep, (ETPL, CompactifiedMap)):
                raise TypeError(f"unsupported region representative {type(rep).__name__}")
            box = J.closure()
            for c in rep.support():
                if not box.contains_interval(c):
                    raise ValueError(f"representative on {J} moves points of {c} outside its region")

    @classmethod
    def from_mobius(cls, f: PiecewiseMobius, regions) -> "PiecewiseHomeo":
        """Split ``f`` along invariant regions, keeping PL restrictions as ETPL maps.

        Regions where ``f`` is not PL are rejected; compactified parts have to
        be supplied directly.
        """
        parts = []
        for J in regions:
            r = f.restrict(J)
            parts.append((J, None if r.is_identity else r.to_etpl()))
        out = cls(tuple(parts))
        if not out.to_mobius().canonical() == f.canonical():
            raise ValueError("regions do not carry the whole support of the map")
        return out

    def rep_on(self, J: IntervalQ):
        for K, rep in self.parts:
            if _key(K) == _key(J):
                return rep
        raise KeyError(str(J))

    def __call__(self, x):
        for J, rep in self.parts:
            if rep is not None and J.lo <= x <= J.hi:
                return rep(x)
        return x

    def then(self, other: "PiecewiseHomeo") -> "PiecewiseHomeo":
        mine = {_key(J): (J, rep) for J, rep in self.parts}
        theirs = {_key(J): (J, rep) for J, rep in other.parts}
        for J, _ in self.parts:
            for K, _ in other.parts:
                if _key(J) != _key(K) and J.interior().overlaps(K.interior()):
                    raise ClassMismatchError(f"class-incompatible composition: regions {J} and {K} do not pair off")
        out = []
        for k in sorted(set(mine) | set(theirs)):
            J = (mine.get(k) or theirs.get(k))[0]
            a = mine.get(k, (None, None))[1]
            b = theirs.get(k, (None, None))[1]
            out.append((J, _rep_then(a, b)))
        return PiecewiseHomeo(tuple(out))

    def inverse(self) -> "PiecewiseHomeo":
        return PiecewiseHomeo(tuple((J, None if rep is None else rep.inverse()) for J, rep in self.parts))

    def power(self, n: int) -> "PiecewiseHomeo":
        return PiecewiseHomeo(tuple((J, None if rep is None else rep.power(n)) for J, rep in self.parts))

    def canonical(self) -> "PiecewiseHomeo":
        return PiecewiseHomeo(tuple((J, rep.canonical()) for J, rep in self.parts if not _rep_identity(rep)))

    @property
    def is_identity(self) -> bool:
        return all(_rep_identity(rep) for _, rep in self.parts)

    def to_mobius(self) -> PiecewiseMobius:
        out = PiecewiseMobius.identity()
        for _, rep in self.parts:
            if rep is None:
                continue
            m = PiecewiseMobius.from_etpl(rep) if isinstance(rep, ETPL) else rep.to_mobius()
            out = out.then(m)
        return out

    def support(self) -> list[IntervalQ]:
        comps = []
        for _, rep in self.parts:
            if rep is not None:
                comps.extend(rep.support())
        return sorted(comps, key=_key)

    def kinks_in(self, lo, hi) -> list:
        return self.to_mobius().kinks_in(lo, hi)

    def witness(self):
        return self.to_mobius().witness()
