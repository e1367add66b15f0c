"""Planting the equation solution into the square root of F.

Two independent computations of k1 = l1^-1 l2 and k2 = w(k1, l2 l1^-1): a
global one in the piecewise Moebius class, and a regional one that works on
each invariant region with the class that lives there (PL on the two outer
regions, compactified maps on J_6 and J_10). The certificate compares them.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..plcore import (
    ETPL,
    CompactifiedMap,
    PiecewiseMobius,
    IntervalQ,
    PiecewiseHomeo,
    affine_conjugate,
    compactify,
    disagreement,
    equals,
    restrict,
    support,
    to_mobius,
)
from ..thompson import in_P_kernel
from ..words import abelianize, builtin, evaluate_word
from .equation import TAU, EquationBundle, kappa_y
from .partition import J, Jc
from .square_root import LEFT, PUSH, RIGHT, Row, SquareRootBundle, build_square_root_of_F


@dataclass(frozen=True)
class UncountableBundle:
    equation: EquationBundle
    root: SquareRootBundle
    k1: object
    k2: object
    k1_regional: object
    k2_regional: object
    rows: tuple

    @property
    def lam1(self):
        return self.root.lam1

    @property
    def lam2(self):
        return self.root.lam2

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.rows)


def _agree_row(name, x, y, K):
    wit = disagreement(x, y, K)
    return Row(name, wit is None, "" if wit is None else f"differ at {wit}")


def _regional(word_text, bundle: SquareRootBundle, gens) -> PiecewiseHomeo:
    """Evaluate a word in k1 = l1^-1 l2, k2' = l2 l1^-1 region by region.

    J_6 and J_10 carry compactified maps; the outer regions carry PL maps,
    except that the right region also holds a copy of h2 on J_14, in which
    case it is handled as a piecewise Moebius map.
    """
    parts = []
    for R in (LEFT, RIGHT):
        local = {name: restrict(m, R) for name, m in gens.items()}
        if all(v.is_pl for v in local.values()):
            local = {name: v.to_etpl() for name, v in local.items()}
        img = evaluate_word(word_text, local)
        if not img.is_identity:
            parts.append((R, img))
    for R in (Jc(6), Jc(10)):
        local = {name: _compact_piece(m, R, bundle) for name, m in gens.items()}
        img = evaluate_word(word_text, local)
        if not img.is_identity:
            parts.append((R, img))
    return parts


def _compact_piece(m, R, bundle):
    """The compactified map that ``m`` restricts to on J_6 or J_10."""
    if R == Jc(6):
        cands = [bundle.h1, bundle.h1.inverse(), CompactifiedMap.identity(J(6))]
    else:
        h1c = affine_conjugate(bundle.h1, PUSH)
        cands = [bundle.h3, h1c, CompactifiedMap.identity(Jc(10))]
    for c in cands:
        if disagreement(m, c, R) is None:
            return c
    raise ValueError(f"restriction to {R} is not one of the expected compactified maps")


def _assemble(parts):
    """PiecewiseHomeo when every part is ETPL or compactified, else the piecewise Moebius sum."""
    if all(not isinstance(rep, PiecewiseMobius) for _, rep in parts):
        return PiecewiseHomeo(tuple(parts))
    out = PiecewiseMobius.identity()
    for _, rep in parts:
        out = out.then(to_mobius(rep))
    return out


def uncountable_pipeline(mu, nu, chi, xi) -> UncountableBundle:
    eq = kappa_y(mu, nu, chi, xi)
    h1 = compactify(TAU, J(6))
    h2 = compactify(eq.y, J(6))
    root = build_square_root_of_F(h1, h2)
    gens = {"s": root.l1invl2, "t": root.l2l1inv}
    w = builtin("w")
    k1 = gens["s"]
    k2 = evaluate_word(w, gens)
    k1_parts = _regional("s", root, gens)
    k2_parts = _regional(str(w), root, gens)
    k1r = _assemble(k1_parts)
    k2r = _assemble(k2_parts)

    tau10, kappa10 = compactify(TAU, J(10)), compactify(eq.kappa, J(10))
    rows = [
        _agree_row("k1 | J10 = compactified tau", k1, tau10, Jc(10)),
        _agree_row("k2 | J10 = compactified kappa", k2, kappa10, Jc(10)),
        Row("k2 trivial outside J10", all(Jc(10).contains_interval(c) for c in support(k2)),
            f"supp k2 = {[str(c) for c in support(k2)]}"),
        _agree_row("k1 | J6 = id", k1, ETPL.identity(), Jc(6)),
        Row("w lies in the kernel of F_2 -> P (outer regions)", in_P_kernel(w)),
        Row("w has zero exponent sums (J6 acts through an abelian quotient)", abelianize(w, ("s", "t")) == (0, 0)),
    ]
    fg = evaluate_word("f^-1 g", {"f": root.f, "g": root.g})
    for R, label in ((LEFT, "[0, sup J5]"), (IntervalQ.closed(RIGHT.lo, J(14).lo), "[inf J12, inf J14]"),
                     (IntervalQ.closed(J(14).hi, 3), "[sup J14, 3]")):
        rows.append(_agree_row(f"k1 on {label} = f^-1 g", k1, fg, R))
    # on J14, f^-1 lands in J10 where h3 acts, so a copy of h2 appears there
    mob = {"f": to_mobius(root.f), "g": to_mobius(root.g), "h3": to_mobius(root.h3)}
    rows.append(_agree_row("k1 on J14 = f^-1 h3 g", k1, evaluate_word("f^-1 h3 g", mob), Jc(14)))
    k2_by_region = {str(R): rep for R, rep in k2_parts}
    for R, label in ((LEFT, "left P region"), (Jc(6), "J6"), (RIGHT, "right P region")):
        rows.append(Row(f"regional k2 on {label} is the identity", str(R) not in k2_by_region))
    rep10 = k2_by_region.get(str(Jc(10)), CompactifiedMap.identity(J(10)))
    rows.append(Row("regional k2 on J10 has inner map kappa", equals(rep10, kappa10)))
    rows.append(Row("regional and global k1 agree", equals(k1r, k1)))
    rows.append(Row("regional and global k2 agree", equals(k2r, k2)))
    return UncountableBundle(eq, root, k1, k2, k1r, k2r, tuple(rows))
