"""A marked square root of F containing a given two-generated group.

Inputs h1, h2 live on J_6; the generators are lambda1 = h1^-1 h3^-1 f and
lambda2 = g, with h3 the copy of h2 pushed to J_10 by f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..plcore import (
    ETPL,
    Affine,
    CompactifiedMap,
    IntervalQ,
    PiecewiseMobius,
    affine_conjugate,
    disagreement,
    restrict,
    support,
    to_mobius,
)
from ..thompson import P_realization, check_nested_left, check_nested_right, dyn_certificate
from ..words import evaluate_word
from .partition import J, Jc
from .step2 import default_step2_pair

# f and g agree with x + 1/4 from J_6 to J_10
PUSH = Affine(1, Fraction(-1, 4))  # conjugating by x -> x - 1/4 moves J_6 onto J_10

# regions of the line the subgroup <l2 l1^-1, l1^-1 l2> preserves
LEFT = IntervalQ.closed(0, J(5).hi)               # [0,1] u J_1..J_5
RIGHT = IntervalQ.closed(J(12).lo, 3)             # J_12..J_16 u [2,3]
P2_REGION = IntervalQ.closed(0, J(1).hi)          # [0,1] u J_1
Q2_REGION = IntervalQ.closed(J(14).lo, 3)         # J_14..J_16 u [2,3]

J1_SUP = J(1).hi
J14_INF = J(14).lo


class SupportLeakError(ValueError):
    pass


@dataclass(frozen=True)
class Row:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        return f"{'pass' if self.ok else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def table(rows) -> str:
    return "\n".join(str(r) for r in rows)


def _region_components(f, regions) -> dict:
    out = {str(R): [] for R in regions}
    for c in support(f):
        for R in regions:
            if R.contains_interval(c):
                out[str(R)].append(c)
                break
        else:
            out.setdefault("elsewhere", []).append(c)
    return out


def _check_inside_J6(h, label):
    box = J(6).interior()
    for c in support(h):
        if not box.contains_interval(c):
            raise SupportLeakError(f"{label} moves points outside the interior of J_6: component {c}")


@dataclass(frozen=True)
class SquareRootBundle:
    f: ETPL
    g: ETPL
    h1: object
    h2: object
    h3: object
    lam1: object
    lam2: object
    l2l1inv: object   # the word lambda2 lambda1^-1
    l1invl2: object   # the word lambda1^-1 lambda2
    p1: object
    p2: object
    q1: object
    q2: object
    certificates: dict = field(default_factory=dict)

    @property
    def assignment(self) -> dict:
        return {"f": self.f, "g": self.g, "h1": self.h1, "h2": self.h2, "h3": self.h3,
                "l1": self.lam1, "l2": self.lam2}

    @property
    def valid(self) -> bool:
        return all(r.ok for rows in self.certificates.values() for r in rows)


def _common_class(maps):
    """All ETPL stays ETPL; anything else moves to piecewise Moebius maps."""
    if all(isinstance(m, ETPL) for m in maps):
        return list(maps)
    return [to_mobius(m) for m in maps]


def _as_pl(m):
    if isinstance(m, PiecewiseMobius) and m.canonical().is_pl:
        return m.to_etpl()
    return m


def build_square_root_of_F(h1=None, h2=None, f=None, g=None) -> SquareRootBundle:
    f, g = default_step2_pair(f, g)
    h1 = ETPL.identity() if h1 is None else h1
    h2 = ETPL.identity() if h2 is None else h2
    for h, label in ((h1, "h1"), (h2, "h2")):
        if isinstance(h, CompactifiedMap) and h.target != J(6).interior():
            raise SupportLeakError(f"{label} must be compactified into J_6, not {h.target}")
        _check_inside_J6(h, label)
    h3 = affine_conjugate(h2, PUSH)

    mob = {k: v for k, v in zip(("f", "g", "h1", "h2", "h3"), _common_class([f, g, h1, h2, h3]))}
    cross = []
    for word in ("f^-1 h2 f", "g^-1 h2 g"):
        conj = evaluate_word(word, mob)
        wit = disagreement(conj, mob["h3"], IntervalQ.line())
        cross.append(Row(f"h3 = {word}", wit is None, "" if wit is None else f"differ at {wit}"))
    if not all(r.ok for r in cross):
        raise ValueError("conjugation cross-check failed: " + table(cross))

    lam1 = evaluate_word("h1^-1 h3^-1 f", mob)
    lam2 = mob["g"]
    pair = {"a": lam1, "b": lam2}
    l2l1inv = evaluate_word("b a^-1", pair)
    l1invl2 = evaluate_word("a^-1 b", pair)
    p1 = _as_pl(restrict(l1invl2, LEFT))
    p2 = _as_pl(restrict(l2l1inv, P2_REGION))
    q1 = _as_pl(restrict(l2l1inv, RIGHT))
    q2 = _as_pl(restrict(l1invl2, Q2_REGION))
    bundle = SquareRootBundle(f, g, h1, h2, h3, lam1, lam2, l2l1inv, l1invl2, p1, p2, q1, q2, {})

    sq1 = evaluate_word("a^2", pair)
    sq2 = evaluate_word("b^2", pair)
    cert = dyn_certificate(sq1, sq2)
    dyn_rows = [Row(n, ok, d) for n, ok, d in cert.hypotheses]
    dyn_rows.append(Row("F relators for (lambda1^2, lambda2^2)", cert.report is not None and cert.report.passed))
    dyn_rows.append(Row("lambda1^2, lambda2^2 do not commute", cert.report is not None and not cert.report.commuting,
                        f"witness {cert.noncommuting_witness}"))
    bundle.certificates["conjugation"] = cross
    bundle.certificates["dyn"] = dyn_rows
    bundle.certificates["mainsub"] = certify_mainsub(bundle)
    return bundle


def dyn_value(bundle: SquareRootBundle):
    pair = {"a": bundle.lam1, "b": bundle.lam2}
    sq1, sq2 = evaluate_word("a^2", pair), evaluate_word("b^2", pair)
    return sq2(sq1(Fraction(1)))


def support_table(bundle: SquareRootBundle) -> dict:
    regions = [LEFT, Jc(6), Jc(10), RIGHT]
    return {
        "lambda2 lambda1^-1": _region_components(bundle.l2l1inv, regions),
        "lambda1^-1 lambda2": _region_components(bundle.l1invl2, regions),
    }


def certify_mainsub(bundle: SquareRootBundle) -> list:
    b = bundle
    mob = {k: v for k, v in zip(("f", "g", "h1", "h3"), _common_class([b.f, b.g, b.h1, b.h3]))}
    ident = ETPL.identity()
    f_inv = b.f.inverse()
    rows = []

    def agree(name, x, y, K):
        wit = disagreement(x, y, K)
        rows.append(Row(name, wit is None, "" if wit is None else f"differ at {wit}"))

    agree("lambda2 lambda1^-1 | J6 = h1", b.l2l1inv, mob["h1"], Jc(6))
    agree("lambda2 lambda1^-1 | J10 = h3", b.l2l1inv, mob["h3"], Jc(10))
    agree("lambda1^-1 lambda2 | J10 = f^-1 h1 f", b.l1invl2, evaluate_word("f^-1 h1 f", mob), Jc(10))
    agree("lambda1^-1 lambda2 | J6 = id", b.l1invl2, ident, Jc(6))
    v = b.p1(J1_SUP)
    rows.append(Row("p1(sup J1) < 1", v < 1, f"p1({J1_SUP}) = {v}"))
    w1 = disagreement(b.p1, f_inv, IntervalQ.closed(0, 1))
    w2 = disagreement(b.p2, f_inv, IntervalQ.closed(0, 1))
    rows.append(Row("p1 = p2 = f^-1 on [0,1]", w1 is None and w2 is None,
                    "" if w1 is None and w2 is None else f"differ at {w1 if w1 is not None else w2}"))
    v = b.q1(J14_INF)
    rows.append(Row("q1(inf J14) > 2", v > 2, f"q1({J14_INF}) = {v}"))
    w1 = disagreement(b.q1, b.g, IntervalQ.closed(2, 3))
    w2 = disagreement(b.q2, b.g, IntervalQ.closed(2, 3))
    rows.append(Row("q1 = q2 = g on [2,3]", w1 is None and w2 is None,
                    "" if w1 is None and w2 is None else f"differ at {w1 if w1 is not None else w2}"))
    cl = check_nested_left(b.p1, b.p2, 0, J1_SUP, LEFT.hi)
    rows.append(Row("nestedL certificate for (p1, p2)", cl.valid, "; ".join(f"{n}: {d}" for n, d in cl.failures)))
    cr = check_nested_right(b.q1, b.q2, RIGHT.lo, J14_INF, 3)
    rows.append(Row("nestedR certificate for (q1, q2)", cr.valid, "; ".join(f"{n}: {d}" for n, d in cr.failures)))
    return rows


def squeezed_P_inputs(left=(Fraction(169, 128), Fraction(171, 128)),
                      right=(Fraction(173, 128), Fraction(175, 128))) -> tuple:
    """(h1, h2): the P realization of (s, t) squeezed into two disjoint subintervals of J_6."""
    imgs = P_realization(IntervalQ(*left), IntervalQ(*right))
    return imgs["s"], imgs["t"]
