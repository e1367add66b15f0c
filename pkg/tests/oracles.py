"""Independent oracles used to cross-check the library."""
from __future__ import annotations

from fractions import Fraction

# -- Hall-Neumann: Heisenberg group over Q extended by a rational rotation --
#
# Elements are (A, v, z): A a 2x2 rational rotation, v in Q^2, z in Q, with
#   (A, v, z)(B, w, y) = (AB, v + A w, z + y + omega(v, A w) / 2).
# Commutators of (I, v, 0) and (I, w, 0) land in the centre as omega(v, w).

R = ((Fraction(3, 5), Fraction(-4, 5)), (Fraction(4, 5), Fraction(3, 5)))  # infinite order
I2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def _mm(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _mv(A, v):
    return tuple(sum(A[i][k] * v[k] for k in range(2)) for i in range(2))


def _omega(v, w):
    return v[0] * w[1] - v[1] * w[0]


def _inv_rot(A):
    return ((A[0][0], A[1][0]), (A[0][1], A[1][1]))


class Heis:
    def __init__(self, A=I2, v=(Fraction(0), Fraction(0)), z=Fraction(0)):
        self.A, self.v, self.z = A, tuple(v), Fraction(z)

    def __mul__(self, o):
        Aw = _mv(self.A, o.v)
        return Heis(_mm(self.A, o.A), (self.v[0] + Aw[0], self.v[1] + Aw[1]),
                    self.z + o.z + _omega(self.v, Aw) / 2)

    def inv(self):
        Ai = _inv_rot(self.A)
        return Heis(Ai, tuple(-c for c in _mv(Ai, self.v)), -self.z)

    def __pow__(self, n):
        out, base = Heis(), (self if n >= 0 else self.inv())
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, o):
        return (self.A, self.v, self.z) == (o.A, o.v, o.z)

    def __repr__(self):
        return f"Heis({self.v}, {self.z})"


T = Heis(R)
S0 = Heis(I2, (Fraction(1), Fraction(0)))


def heis_s(i):
    return T ** (-i) * S0 * T ** i


def heis_comm(x, y):
    return x * y * x.inv() * y.inv()


def heis_u(k):
    return heis_comm(S0, heis_s(k))


def heis_word(letters):
    """Literal image of a word in t and s (= s_0)."""
    out = Heis()
    for g, e in letters:
        out = out * ((T if g == "t" else S0) ** e)
    return out


def heis_normal_form(x):
    """Image of t^m prod s_i^e_i prod u_k^c_k, built from the literal definitions."""
    out = T ** x.m
    for i, a in x.e:
        out = out * heis_s(i) ** a
    for k, c in x.c:
        out = out * heis_u(k) ** c
    return out


# -- Hall-Neumann: letter-level collector ----------------------------------
#
# A word is a list of letters ("t", e), ("s", i, e) with e = +-1, or ("u", k, e).
# Rewriting uses only group identities plus the defining relations:
#   s_i t = t s_(i+1),  s_i t^-1 = t^-1 s_(i-1)   (t^-1 s_i t = s_(i+1))
#   x y = [x, y] y x,   [s_i^a, s_j^b] = [s_i, s_j]^(ab)  (central commutators)
#   [s_i, s_j] = [s_0, s_(j-i)] = u_(j-i), and u_-k = u_k^-1.

def collect(word):
    """Return (m, e dict, c dict) for a word over t, s_i, given as letter tuples."""
    letters = list(word)
    m = 0
    c = {}
    # move every t to the far left, shifting the s letters it passes
    t_total = 0
    rest = []
    for let in reversed(letters):
        if let[0] == "t":
            t_total += let[1]
        elif let[0] == "s":
            rest.append(("s", let[1] + t_total, let[2]))
        else:
            rest.append(let)
    rest.reverse()
    m = t_total
    # pull central letters out
    s_letters = []
    for let in rest:
        if let[0] == "u":
            c[let[1]] = c.get(let[1], 0) + let[2]
        else:
            s_letters.append(let)
    # bubble sort the s letters by index, emitting commutators
    changed = True
    while changed:
        changed = False
        for p in range(len(s_letters) - 1):
            (_, i, a), (_, j, b) = s_letters[p], s_letters[p + 1]
            if i > j:
                # s_i^a s_j^b = [s_i, s_j]^(ab) s_j^b s_i^a and [s_i, s_j] = u_(j-i)
                k = j - i
                kk, sign = (k, 1) if k > 0 else (-k, -1)
                c[kk] = c.get(kk, 0) + sign * a * b
                s_letters[p], s_letters[p + 1] = s_letters[p + 1], s_letters[p]
                changed = True
    e = {}
    for _, i, a in s_letters:
        e[i] = e.get(i, 0) + a
    return m, {i: v for i, v in e.items() if v}, {k: v for k, v in c.items() if v}


def letters_of(word_letters):
    """Expand (name, exponent) letters over t, s into unit letters for collect()."""
    out = []
    for g, e in word_letters:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            out.append(("t", step) if g == "t" else ("s", 0, step))
    return out


# -- PL maps: brute-force evaluation of words -------------------------------

def eval_word_pointwise(letters, assignment, x):
    """Apply the letters of a word one at a time to the point x."""
    for g, e in letters:
        f = assignment[g]
        if e > 0:
            for _ in range(e):
                x = f(x)
        else:
            finv = f.inverse()
            for _ in range(-e):
                x = finv(x)
    return x


def pl_eval(points, left_offset, right_offset, x):
    """Interpolate a breakpoint list directly (no library code)."""
    if not points or x <= points[0][0]:
        return x + left_offset
    if x >= points[-1][0]:
        return x + right_offset
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("unreachable")
