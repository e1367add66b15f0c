"""Normal forms in the Hall-Neumann group Gamma and its central quotients N_X.

Gamma is generated by t and s_0 with s_i = t^-i s_0 t^i, all commutators
[s_i, s_j] central and depending only on j - i. Every element is written
uniquely as

    t^m . prod_i s_i^(e_i) (ascending i) . prod_{k>0} u_k^(c_k),   u_k = [s_0, s_k]

with [x, y] = x y x^-1 y^-1. Moving s_j^b left past s_i^a (i > j) uses
s_i^a s_j^b = [s_i, s_j]^(ab) s_j^b s_i^a and [s_i, s_j] = u_(i-j)^-1.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass

from .words import as_word


def _clean(d) -> tuple:
    return tuple(sorted((k, v) for k, v in d.items() if v))


@dataclass(frozen=True)
class HNContext:
    """Quotient selector: u_k is killed for k in X.

    X is a finite set, or the complement of a finite set when ``cofinite``.
    """

    X: frozenset = frozenset()
    cofinite: bool = False

    def __post_init__(self):
        X = frozenset(int(k) for k in self.X)
        if any(k <= 0 for k in X):
            raise ValueError("X must consist of positive integers")
        object.__setattr__(self, "X", X)

    def kills(self, k: int) -> bool:
        return (k not in self.X) if self.cofinite else (k in self.X)

    def __str__(self) -> str:
        if not self.X and not self.cofinite:
            return "Gamma"
        inner = ",".join(map(str, sorted(self.X)))
        return f"N_(Z>0 minus {{{inner}}})" if self.cofinite else f"N_{{{inner}}}"


GAMMA = HNContext()


@dataclass(frozen=True)
class HNElement:
    m: int = 0
    e: tuple = ()   # sorted (i, e_i), nonzero
    c: tuple = ()   # sorted (k, c_k), k > 0, nonzero

    def __post_init__(self):
        e = dict(self.e) if not isinstance(self.e, dict) else self.e
        c = dict(self.c) if not isinstance(self.c, dict) else self.c
        if any(k <= 0 for k, v in c.items() if v):
            raise ValueError("central coordinates are indexed by positive integers")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "e", _clean(e))
        object.__setattr__(self, "c", _clean(c))

    @property
    def is_identity(self) -> bool:
        return self.m == 0 and not self.e and not self.c

    @property
    def is_central(self) -> bool:
        return self.m == 0 and not self.e

    def __mul__(self, other: "HNElement") -> "HNElement":
        return hn_multiply(self, other)

    def inverse(self) -> "HNElement":
        return hn_inverse(self)

    def __pow__(self, n: int) -> "HNElement":
        base = self if n >= 0 else self.inverse()
        out, n = HNElement(), abs(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        return hn_print(self)


def t_gen(n: int = 1) -> HNElement:
    return HNElement(n)


def s_gen(i: int, n: int = 1) -> HNElement:
    return HNElement(0, ((i, n),))


def u_gen(k: int, n: int = 1) -> HNElement:
    """u_k = [s_0, s_k]; negative k gives u_|k|^-1."""
    if k == 0:
        return HNElement()
    return HNElement(0, (), ((abs(k), n if k > 0 else -n),))


def project(x: HNElement, ctx: HNContext = GAMMA) -> HNElement:
    return HNElement(x.m, x.e, tuple((k, v) for k, v in x.c if not ctx.kills(k)))


def hn_multiply(x: HNElement, y: HNElement, ctx: HNContext = GAMMA) -> HNElement:
    shift = y.m
    left = [(i + shift, a) for i, a in x.e]  # t^-m' s_i t^m' = s_(i+m')
    e = defaultdict(int)
    c = defaultdict(int)
    for i, a in left:
        e[i] += a
    for j, b in y.e:
        e[j] += b
    for k, v in x.c:
        c[k] += v
    for k, v in y.c:
        c[k] += v
    for i, a in left:
        for j, b in y.e:
            if i > j:
                c[i - j] -= a * b
    return project(HNElement(x.m + y.m, dict(e), dict(c)), ctx)


def hn_inverse(x: HNElement, ctx: HNContext = GAMMA) -> HNElement:
    out = HNElement(0, (), tuple((k, -v) for k, v in x.c))
    for i, a in reversed(x.e):
        out = hn_multiply(out, s_gen(i, -a), ctx)
    return hn_multiply(out, t_gen(-x.m), ctx)


def hn_commutator(x: HNElement, y: HNElement, ctx: HNContext = GAMMA) -> HNElement:
    out = hn_multiply(x, y, ctx)
    out = hn_multiply(out, hn_inverse(x, ctx), ctx)
    return hn_multiply(out, hn_inverse(y, ctx), ctx)


_S_INDEXED = re.compile(r"^s(\d+)$")


def _letter(name: str) -> HNElement:
    if name == "t":
        return t_gen()
    if name == "s":
        return s_gen(0)
    m = _S_INDEXED.match(name)
    if m:
        return s_gen(int(m.group(1)))
    raise KeyError(f"unknown generator {name!r}; use t, s or s<k>")


def hn_reduce_word(w, ctx: HNContext = GAMMA) -> HNElement:
    """Image of a word in t and s (= s_0) under F_2 -> Gamma / N_X."""
    out = HNElement()
    for name, n in as_word(w).letters:
        g = _letter(name)
        out = hn_multiply(out, g ** n, ctx)
    return out


def hn_skew_image(x: HNElement, ctx: HNContext = GAMMA) -> HNElement:
    """Image under t -> t^-1, s_0 -> s_0^-1 (so s_i -> s_-i^-1)."""
    out = t_gen(-x.m)
    for i, a in x.e:
        out = hn_multiply(out, s_gen(-i, -a), ctx)
    for k, v in x.c:
        img = hn_commutator(s_gen(0, -1), s_gen(-k, -1), ctx)
        out = hn_multiply(out, img ** v, ctx)
    return project(out, ctx)


def abelianization(x: HNElement) -> tuple:
    return (x.m, sum(a for _, a in x.e))


def relator_instances(bound: int = 8):
    """Elements that must be trivial: [[s_i,s_j],s_k] and [s_i,s_j][s_(i+k),s_(j+k)]^-1."""
    r = range(-bound, bound + 1)
    for i in r:
        for j in r:
            for k in r:
                yield (i, j, k, "nested"), hn_commutator(hn_commutator(s_gen(i), s_gen(j)), s_gen(k))
                yield (i, j, k, "shift"), hn_multiply(hn_commutator(s_gen(i), s_gen(j)),
                                                      hn_inverse(hn_commutator(s_gen(i + k), s_gen(j + k))))


# text form

def hn_print(x: HNElement) -> str:
    parts = []
    if x.m:
        parts.append(f"t^{x.m}")
    parts += [f"s_{i}^{a}" for i, a in x.e]
    parts += [f"u_{k}^{v}" for k, v in x.c]
    return " · ".join(parts) if parts else "1"


_HN_TOKEN = re.compile(r"^(t|s_(-?\d+)|u_(\d+))\^(-?\d+)$")


def hn_parse(text: str) -> HNElement:
    text = text.strip()
    if text == "1":
        return HNElement()
    out = HNElement()
    for tok in text.split("·"):
        tok = tok.strip()
        m = _HN_TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse normal-form factor {tok!r}")
        n = int(m.group(4))
        if m.group(1) == "t":
            g = t_gen(n)
        elif m.group(2) is not None:
            g = s_gen(int(m.group(2)), n)
        else:
            g = u_gen(int(m.group(3)), n)
        out = out * g
    return out
