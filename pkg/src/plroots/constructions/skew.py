"""Square roots of the translation tau whose quotients carry a skew copy of a group."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..plcore import (
    ETPL,
    Affine,
    IntervalQ,
    PeriodicPL,
    affine_conjugate,
    compose,
    disagreement,
    equals,
    inverse,
    nth_root,
    support,
)
from ..words import evaluate_word
from .square_root import Row

HALF = Fraction(1, 2)
TAU = PeriodicPL.translation(1, 1)
SQUEEZE = Affine(2)            # conjugating by x -> 2x moves [0,1] onto [0,1/2]
SHIFT_HALF = Affine(1, -HALF)  # conjugating by x -> x - 1/2 moves [0,1/2] onto [1/2,1]


@dataclass(frozen=True)
class SkewRootBundle:
    inputs: tuple
    scaled: tuple   # the inputs moved into [0, 1/2]
    T: tuple        # T_1 .. T_{n+1}
    S: tuple
    rows: tuple

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.rows)


def _check_input(h, label):
    box = IntervalQ.closed(0, 1)
    if not isinstance(h, ETPL):
        raise TypeError(f"{label} must be an ETPL map")
    for c in support(h):
        if not box.contains_interval(c):
            raise ValueError(f"{label} moves points outside [0,1]: component {c}")


def half_translate_root(ht: ETPL) -> PeriodicPL:
    """The square root of tau equal to (ht, then x + 1/2) on [0, 1/2]."""
    pts = [(x, ht(x) + HALF) for x in (0, *ht.kinks_in(0, HALF), HALF)]
    root = nth_root(ETPL.translation(1), 2, 0, [0, HALF, 1], [tuple(pts)])
    return root.to_periodic()


def _agree(name, x, y, K):
    wit = disagreement(x, y, K)
    return Row(name, wit is None, "" if wit is None else f"differ at {wit}")


def skew_root_of_translation(*hs) -> SkewRootBundle:
    for i, h in enumerate(hs, 1):
        _check_input(h, f"h{i}")
    scaled = tuple(affine_conjugate(h, SQUEEZE) for h in hs)
    T = tuple(half_translate_root(ht) for ht in scaled) + (PeriodicPL.translation(1, HALF),)
    last_inv = inverse(T[-1])
    S = tuple(compose(last_inv, Ti) for Ti in T[:-1])
    rows = []
    for i, Ti in enumerate(T, 1):
        rows.append(Row(f"T{i}^2 = tau", equals(Ti.power(2), TAU)))
    left, right = IntervalQ.closed(0, HALF), IntervalQ.closed(HALF, 1)
    for i, (Si, ht) in enumerate(zip(S, scaled), 1):
        rows.append(_agree(f"S{i} | [0,1/2] = scaled h{i}^-1", Si, ht.inverse(), left))
        rows.append(_agree(f"S{i} | [1/2,1] = scaled h{i} moved to [1/2,1]", Si,
                           affine_conjugate(ht, SHIFT_HALF), right))
    return SkewRootBundle(tuple(hs), scaled, T, S, tuple(rows))


def skew_word_rows(bundle: SkewRootBundle, word) -> list:
    """A word in the S_i acts on [0,1/2] as the word in the h_i^-1 and on [1/2,1] as the word in the h_i."""
    names = [f"x{i}" for i in range(1, len(bundle.S) + 1)]
    on_S = evaluate_word(word, dict(zip(names, bundle.S)))
    on_inv = evaluate_word(word, {n: h.inverse() for n, h in zip(names, bundle.scaled)})
    on_h = evaluate_word(word, {n: affine_conjugate(h, SHIFT_HALF) for n, h in zip(names, bundle.scaled)})
    return [
        _agree(f"{word} on [0,1/2]", on_S, on_inv, IntervalQ.closed(0, HALF)),
        _agree(f"{word} on [1/2,1]", on_S, on_h, IntervalQ.closed(HALF, 1)),
    ]
