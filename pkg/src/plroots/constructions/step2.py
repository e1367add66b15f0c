"""The pair (f, g) with chained supports (0, 2) and (1, 3)."""
from __future__ import annotations

from fractions import Fraction

from ..plcore import ETPL, IntervalQ, agree_on, support
from ..words import evaluate_word
from .partition import PARTITION, Jc

SHIFT = ETPL.translation(PARTITION.width * 4)

DEFAULT_F = ((0, 0), (1, Fraction(5, 4)), (Fraction(27, 16), Fraction(31, 16)), (2, 2))
DEFAULT_G = ((1, 1), (Fraction(17, 16), Fraction(21, 16)), (Fraction(7, 4), 2), (3, 3))

# the two support components the word "g f^-1" must have
GF_COMPONENTS = (IntervalQ(0, Fraction(17, 16)), IntervalQ(Fraction(27, 16), 3))


class Step2Error(ValueError):
    def __init__(self, failures):
        self.failures = failures
        names = ", ".join(name for name, _ in failures)
        super().__init__(f"Step 2 verification failed: {names}; " + "; ".join(d for _, d in failures))


def _pushes_right_on(f, J: IntervalQ) -> bool:
    comps = support(f)
    return comps == [J] and f(J.midpoint) > J.midpoint


def step2_checks(f, g) -> list:
    """Rows (condition, ok, detail) for the four Step 2 conditions."""
    rows = []
    ok = _pushes_right_on(f, IntervalQ(0, 2)) and _pushes_right_on(g, IntervalQ(1, 3))
    rows.append(("Step 2 (1)", ok, f"supp f = {[str(c) for c in support(f)]}, supp g = {[str(c) for c in support(g)]}"))
    bad = [i for i in range(1, 12) if not agree_on(f, SHIFT, Jc(i))]
    rows.append(("Step 2 (2)", not bad, "f = x + 1/4 on J_1..J_11" + (f"; fails on J_{bad}" if bad else "")))
    bad = [i for i in range(2, 13) if not agree_on(g, SHIFT, Jc(i))]
    rows.append(("Step 2 (3)", not bad, "g = x + 1/4 on J_2..J_12" + (f"; fails on J_{bad}" if bad else "")))
    gf = evaluate_word("g f^-1", {"f": f, "g": g})
    comps = support(gf)
    ok = tuple(comps) == GF_COMPONENTS
    if ok:
        a, b = comps
        ok = gf(a.midpoint) < a.midpoint and gf(b.midpoint) > b.midpoint
    rows.append(("Step 2 (4)", ok, f"supp(g f^-1) = {[str(c) for c in comps]}"))
    return rows


def verify_step2(f, g) -> list:
    rows = step2_checks(f, g)
    failures = [(name, detail) for name, ok, detail in rows if not ok]
    if failures:
        raise Step2Error(failures)
    return rows


def default_step2_pair(f=None, g=None) -> tuple:
    f = ETPL.from_points(DEFAULT_F) if f is None else f
    g = ETPL.from_points(DEFAULT_G) if g is None else g
    verify_step2(f, g)
    return f, g
