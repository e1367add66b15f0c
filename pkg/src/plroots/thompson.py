"""Thompson's group F on intervals: chains, dynamical and nested criteria, P."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .plcore import (
    ETPL,
    Affine,
    IntervalQ,
    Q,
    compose,
    disagreement,
    support,
    to_mobius,
)
from .words import CheckReport, as_word, builtin, check_presentation, evaluate_word


class ChainError(ValueError):
    pass


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class ChainData:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @property
    def J1(self) -> IntervalQ:
        return IntervalQ(self.a, self.c)

    @property
    def J2(self) -> IntervalQ:
        return IntervalQ(self.b, self.d)


def single_support(f, label="map") -> IntervalQ:
    comps = support(f)
    if len(comps) != 1:
        raise ChainError(f"multi-component support: {label} has {len(comps)} support components")
    return comps[0]


def check_two_chain(f, g) -> ChainData:
    """Endpoints a < b < c < d with supp f = (a, c) and supp g = (b, d)."""
    sf, sg = single_support(f, "f"), single_support(g, "g")
    a, c, b, d = sf.lo, sf.hi, sg.lo, sg.hi
    if not (a < b < c < d):
        if c <= b or d <= a:
            raise ChainError(f"disjoint supports {sf} and {sg}")
        raise ChainError(f"supports {sf} and {sg} do not form a chain with f on the left")
    return ChainData(a, b, c, d)


def pushes_right(f, J: IntervalQ) -> bool:
    """On a support component the sign of f(x) - x is constant; test one point."""
    x = J.midpoint if J.bounded else (J.lo + 1 if J.lo != -float("inf") else J.hi - 1)
    return f(x) > x


def dyn_value(f, g):
    ch = check_two_chain(f, g)
    return g(f(ch.b))


def check_dyn_criterion(f, g) -> bool:
    ch = check_two_chain(f, g)
    if not (pushes_right(f, ch.J1) and pushes_right(g, ch.J2)):
        raise OrientationError("dyn criterion needs f(x) >= x and g(x) >= x")
    return g(f(ch.b)) >= ch.c


@dataclass(frozen=True)
class FCertificate:
    f: object
    g: object
    criterion: str
    report: CheckReport | None
    hypotheses: tuple = ()  # (name, ok, detail)
    noncommuting_witness: object = None

    @property
    def failures(self) -> list:
        out = [(n, d) for n, ok, d in self.hypotheses if not ok]
        if self.report is not None:
            if not self.report.passed:
                out.append(("relators", f"moves {self.report.witness}"))
            if self.report.commuting:
                out.append(("non-commutation", "the pair commutes"))
        return out

    @property
    def valid(self) -> bool:
        return self.report is not None and not self.failures

    def __str__(self) -> str:
        rows = [f"{'pass' if ok else 'FAIL'}  {n}: {d}" for n, ok, d in self.hypotheses]
        if self.report is not None:
            rows.append(f"{'pass' if self.report.passed else 'FAIL'}  F relators")
            rows.append(f"{'FAIL' if self.report.commuting else 'pass'}  non-commutation")
        return f"[{self.criterion}] {'valid' if self.valid else 'invalid'}\n" + "\n".join(rows)


def harmonize(f, g) -> tuple:
    """Bring two maps into one class so that words in them can be evaluated."""
    if type(f) is type(g):
        return f, g
    return to_mobius(f), to_mobius(g)


def relator_certificate(f, g, criterion="relations-only", hypotheses=()) -> FCertificate:
    """F relators in the a, b presentation with a = f, b = g."""
    rep = check_presentation(builtin("F_ab"), dict(zip("ab", harmonize(f, g))))
    return FCertificate(f, g, criterion, rep, tuple(hypotheses), rep.commutation_witness)


def dyn_certificate(f, g) -> FCertificate:
    hyps = []
    try:
        ch = check_two_chain(f, g)
        hyps.append(("two-chain", True, f"supports {ch.J1}, {ch.J2}"))
        val = g(f(ch.b))
        hyps.append(("orientation", pushes_right(f, ch.J1) and pushes_right(g, ch.J2), "f(x) >= x, g(x) >= x"))
        hyps.append(("g(f(b)) >= c", val >= ch.c, f"g(f({ch.b})) = {val}, c = {ch.c}"))
    except ChainError as e:
        hyps.append(("two-chain", False, str(e)))
        return FCertificate(f, g, "dyn", None, tuple(hyps))
    # under the dynamical criterion the natural marking is A = f, B = g
    rep = check_presentation(builtin("F_AB"), dict(zip("AB", harmonize(f, g))))
    return FCertificate(f, g, "dyn", rep, tuple(hyps), rep.commutation_witness)


def _contained(f, J: IntervalQ) -> bool:
    box = J.closure()
    return all(box.contains_interval(c) for c in support(f))


def _moves_everywhere(f, J: IntervalQ, sign: int) -> tuple:
    """Whether sign * (f(x) - x) > 0 on all of the open interval J."""
    comps = support(f)
    inside = [c for c in comps if c.lo <= J.lo and J.hi <= c.hi]
    if not inside:
        return False, f"{J} is not inside a single support component"
    x = J.midpoint
    ok = sign * (f(x) - x) > 0
    return ok, f"f({x}) = {f(x)}"


def check_nested_left(f, g, a, b1, b2) -> FCertificate:
    a, b1, b2 = Q(a), Q(b1), Q(b2)
    if not b1 < b2:
        raise ValueError("need b1 < b2")
    hyps = [
        ("support of g in [a, b1]", _contained(g, IntervalQ.closed(a, b1)), f"supp g = {[str(c) for c in support(g)]}"),
        ("support of f in [a, b2]", _contained(f, IntervalQ.closed(a, b2)), f"supp f = {[str(c) for c in support(f)]}"),
    ]
    ok, detail = _moves_everywhere(f, IntervalQ(a, b2), -1)
    hyps.append(("f decreasing on (a, b2)", ok, detail))
    fb1 = f(b1)
    wit = disagreement(f, g, IntervalQ.closed(a, fb1)) if a < fb1 else None
    hyps.append(("agreement on [a, f(b1)]", wit is None, f"f(b1) = {fb1}" + ("" if wit is None else f", differ at {wit}")))
    return relator_certificate(f, g, "nestedL", hyps)


def check_nested_right(f, g, a1, a2, b) -> FCertificate:
    a1, a2, b = Q(a1), Q(a2), Q(b)
    if not a1 < a2:
        raise ValueError("need a1 < a2")
    hyps = [
        ("support of f in [a1, b]", _contained(f, IntervalQ.closed(a1, b)), f"supp f = {[str(c) for c in support(f)]}"),
        ("support of g in [a2, b]", _contained(g, IntervalQ.closed(a2, b)), f"supp g = {[str(c) for c in support(g)]}"),
    ]
    ok, detail = _moves_everywhere(f, IntervalQ(a1, b), 1)
    hyps.append(("f increasing on (a1, b)", ok, detail))
    fa2 = f(a2)
    wit = disagreement(f, g, IntervalQ.closed(fa2, b)) if fa2 < b else None
    hyps.append(("agreement on [f(a2), b]", wit is None, f"f(a2) = {fa2}" + ("" if wit is None else f", differ at {wit}")))
    return relator_certificate(f, g, "nestedR", hyps)


# classic generators

CLASSIC_X0 = ((0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1))
CLASSIC_X1 = ((0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 4), Fraction(5, 8)),
              (Fraction(7, 8), Fraction(3, 4)), (1, 1))


@lru_cache(maxsize=None)
def classic_orientation() -> str:
    """Which of (x0, x1) or (x0^-1, x1^-1) satisfies the a, b relators; decided by evaluation."""
    x0, x1 = ETPL.from_points(CLASSIC_X0), ETPL.from_points(CLASSIC_X1)
    for label, pair in (("direct", (x0, x1)), ("inverse", (x0.inverse(), x1.inverse()))):
        rep = check_presentation(builtin("F_ab"), {"a": pair[0], "b": pair[1]})
        if rep.passed and not rep.commuting:
            return label
    raise RuntimeError("neither orientation of the classic pair satisfies the F relators")


def standard_F_generators(J: IntervalQ = IntervalQ(0, 1)) -> tuple:
    """A marked copy (a, b) of F supported in the bounded interval J."""
    if not J.bounded:
        raise ValueError("need a bounded interval")
    x0, x1 = ETPL.from_points(CLASSIC_X0), ETPL.from_points(CLASSIC_X1)
    if classic_orientation() == "inverse":
        x0, x1 = x0.inverse(), x1.inverse()
    A = Affine.mapping(J, IntervalQ(0, 1))  # conjugating by A moves (0,1) onto J
    a, b = x0.conjugate_by_affine(A), x1.conjugate_by_affine(A)
    rep = check_presentation(builtin("F_ab"), {"a": a, "b": b})
    if not rep.passed or rep.commuting:
        raise RuntimeError("transported generators fail the F relators")
    return a, b


def P_realization(J_left: IntervalQ = IntervalQ(0, 1), J_right: IntervalQ = IntervalQ(2, 3)) -> dict:
    """s -> (p1 on the left)(q2 on the right), t -> (p2 on the left)(q1 on the right).

    (p1, p2) and (q1, q2) are both the standard marked pair (a, b), so the
    images of s and t swap which generator is used on the right.
    """
    if J_left.closure().overlaps(J_right.closure()):
        raise ValueError("intervals must have disjoint closures")
    p1, p2 = standard_F_generators(J_left)
    q1, q2 = standard_F_generators(J_right)
    return {"s": compose(p1, q2), "t": compose(p2, q1)}


@lru_cache(maxsize=1)
def _default_P():
    return P_realization()


def in_P_kernel(w) -> bool:
    img = evaluate_word(as_word(w), _default_P())
    return img.is_identity
