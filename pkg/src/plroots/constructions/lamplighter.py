"""Square roots of the lamplighter group generated by tau and a bump."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..plcore import ETPL, Affine, IntervalQ, affine_conjugate, compose, disagreement, equals, support
from ..words import evaluate_word
from .square_root import Row

HALF = Fraction(1, 2)
TAU = ETPL.translation(1)
T_HALF = ETPL.translation(HALF)
LEFT_HALF = Affine(2)          # conjugating by x -> 2x moves [0,1] onto [0,1/2]
RIGHT_HALF = Affine(2, -1)     # conjugating by x -> 2x - 1 moves [0,1] onto [1/2,1]


@dataclass(frozen=True)
class LamplighterBundle:
    g1: ETPL
    g2: ETPL
    psi: ETPL
    T: ETPL
    rows: tuple

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.rows)


def _agree(name, x, y, K):
    wit = disagreement(x, y, K)
    return Row(name, wit is None, "" if wit is None else f"differ at {wit}")


def tau_conjugate(f, k: int):
    """tau^-k f tau^k, the copy of f moved k units right."""
    return evaluate_word(f"t^{-k} f t^{k}", {"t": TAU, "f": f})


def lamplighter_root(g1: ETPL, g2: ETPL, k_range=range(-5, 6)) -> LamplighterBundle:
    box = IntervalQ.closed(0, 1)
    for g, label in ((g1, "g1"), (g2, "g2")):
        for c in support(g):
            if not box.contains_interval(c):
                raise ValueError(f"{label} moves points outside [0,1]: component {c}")
    a, b = affine_conjugate(g1, LEFT_HALF), affine_conjugate(g2, RIGHT_HALF)
    psi = compose(a, b)
    if psi(HALF) != HALF:
        raise ValueError("psi must fix 1/2")
    rows = [
        Row("psi(1/2) = 1/2", psi(HALF) == HALF),
        Row("T^2 = tau", equals(T_HALF.power(2), TAU)),
        _agree("psi | [0,1/2] = g1 planted on [0,1/2]", psi, a, IntervalQ.closed(0, HALF)),
        _agree("psi | [1/2,1] = g2 planted on [1/2,1]", psi, b, IntervalQ.closed(HALF, 1)),
        _agree("T psi T^-1 | [0,1/2] = g2 planted on [0,1/2]",
               evaluate_word("T p T^-1", {"T": T_HALF, "p": psi}), affine_conjugate(g2, LEFT_HALF),
               IntervalQ.closed(0, HALF)),
        _agree("T^-1 psi T | [1/2,1] = g1 planted on [1/2,1]",
               evaluate_word("T^-1 p T", {"T": T_HALF, "p": psi}), affine_conjugate(g1, RIGHT_HALF),
               IntervalQ.closed(HALF, 1)),
    ]
    sq = psi.power(2)
    conj = {k: tau_conjugate(sq, k) for k in k_range}
    overlap, noncomm = [], []
    ks = sorted(conj)
    for i, k in enumerate(ks):
        for j in ks[i + 1:]:
            if any(A.overlaps(B) for A in support(conj[k]) for B in support(conj[j])):
                overlap.append((k, j))
            c = evaluate_word("[x, y]", {"x": conj[k], "y": conj[j]})
            if not c.is_identity:
                noncomm.append((k, j))
    rows.append(Row(f"supports of tau^-k psi^2 tau^k pairwise disjoint, k in [{ks[0]},{ks[-1]}]", not overlap,
                    f"overlapping pairs {overlap}" if overlap else ""))
    rows.append(Row("tau^-k psi^2 tau^k pairwise commute (exact commutators)", not noncomm,
                    f"non-commuting pairs {noncomm}" if noncomm else ""))
    return LamplighterBundle(g1, g2, psi, T_HALF, tuple(rows))
