"""Solving w(tau, y) = kappa for a commutator word w in the kernel of F_2 -> P."""
from __future__ import annotations

from dataclasses import dataclass

from ..plcore import ETPL, IntervalQ, disagreement, support
from ..words import builtin, evaluate_word, free_reduce, parse_word
from .square_root import Row

TAU = ETPL.translation(1)


def shift(h, k: int):
    """tau^-k h tau^k: the copy of h moved k units to the right."""
    return evaluate_word(f"T^{-k} h T^{k}", {"T": TAU, "h": h})


# (map, offset, word over m, n): on [offset, offset + 1] the map acts by the word
ALPHA_ROWS = ((2, "m"), (3, "n m^-1"), (4, "n^-1"))
INNER_ROWS = ((0, "m^-2"), (1, "n^-2 m^3"), (2, "n^2 m^-1 n"), (3, "n^-1"))


@dataclass(frozen=True)
class EquationBundle:
    mu: ETPL
    nu: ETPL
    chi: ETPL
    xi: ETPL
    psi: ETPL
    phi: ETPL
    kappa: ETPL
    y: ETPL
    alpha: ETPL
    inner: ETPL   # [tau y^-1, y^-1 tau^-1 y]
    beta: ETPL    # inner, conjugated by tau
    rows: tuple = ()

    @property
    def tau(self) -> ETPL:
        return TAU

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.rows)


def _agree_row(name, x, y, K=IntervalQ.line()):
    wit = disagreement(x, y, K)
    return Row(name, wit is None, "" if wit is None else f"differ at {wit}")


def _check_unit_support(h, label):
    box = IntervalQ.closed(0, 1)
    for c in support(h):
        if not box.contains_interval(c):
            raise ValueError(f"{label} must be supported in [0,1], found component {c}")


def kappa_y(mu, nu, chi, xi) -> EquationBundle:
    for h, label in ((mu, "mu"), (nu, "nu"), (chi, "chi"), (xi, "xi")):
        _check_unit_support(h, label)
    psi = evaluate_word("[m, n^-1]", {"m": mu, "n": nu})
    phi = evaluate_word("[m, n^-1]", {"m": chi, "n": xi})
    kappa = evaluate_word("a b", {"a": shift(psi, 2), "b": shift(phi, 102)})
    y = evaluate_word("a b c d", {"a": shift(mu, 1), "b": shift(nu, 2), "c": shift(chi, 101), "d": shift(xi, 102)})
    st = {"s": TAU, "t": y}
    alpha = evaluate_word(builtin("w1"), st)
    inner = evaluate_word("[s t^-1, t^-1 s^-1 t]", st)
    beta = evaluate_word(builtin("w2"), st)

    rows = []
    rows.append(_agree_row("w(tau, y) = kappa", evaluate_word(builtin("w"), st), kappa))
    rows.append(_agree_row("[alpha, beta] = kappa", evaluate_word("[a, b]", {"a": alpha, "b": beta}), kappa))
    rows.append(_agree_row("[tau y^-1, tau^-2 y tau^2] = [tau, tau^-2 y tau^2]",
                           alpha, evaluate_word("[s, s^-2 t s^2]", st)))
    rows.append(_agree_row("[tau y^-1, y^-1 tau^-1 y] = [tau, y^-2][tau^-1, y^-1]",
                           inner, evaluate_word("[s, t^-2][s^-1, t^-1]", st)))
    lhs = free_reduce(parse_word("[s t^-1, t^-1 s^-1 t]"))
    rhs = free_reduce(parse_word("[s, t^-2][s^-1, t^-1]"))
    rows.append(Row("free-word identity for the inner commutator", lhs == rhs, f"{lhs}"))
    rows.extend(component_rows(alpha, inner, mu, nu, chi, xi))
    return EquationBundle(mu, nu, chi, xi, psi, phi, kappa, y, alpha, inner, beta, tuple(rows))


def component_rows(alpha, inner, mu, nu, chi, xi) -> list:
    """The 14 interval-by-interval actions of alpha and of the inner commutator."""
    rows = []
    for label, M, spec in (("alpha", alpha, ALPHA_ROWS), ("inner", inner, INNER_ROWS)):
        for base, names in ((0, {"m": mu, "n": nu}), (100, {"m": chi, "n": xi})):
            sym = {"m": "mu", "n": "nu"} if base == 0 else {"m": "chi", "n": "xi"}
            for k, word in spec:
                at = base + k
                target = shift(evaluate_word(word, names), at)
                text = " ".join(sym[tok[0]] + tok[1:] for tok in word.split())
                rows.append(_agree_row(f"{label} acts by {text} on [{at},{at + 1}]",
                                       M, target, IntervalQ.closed(at, at + 1)))
    return rows


def kappa_support_ok(b: EquationBundle) -> bool:
    allowed = (IntervalQ.closed(2, 3), IntervalQ.closed(102, 103))
    return all(any(A.contains_interval(c) for A in allowed) for c in support(b.kappa))
