"""Free-group words over named generators, presentations and relator checking.

Syntax accepted by ``parse_word``::

    word   := factor*                  juxtaposition (optional '*' or '.')
    factor := atom ('^' int)?          int may be written -1, (-1) or {-1}
    atom   := name | '1' | '(' word ')' | '[' word ',' word ']'

``[u,v]`` expands to ``u v u^-1 v^-1``. Words are read left to right, and on
evaluation the leftmost letter acts first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .plcore import ETPL, compose, identity_like, power, to_mobius


class WordSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class UnboundGeneratorError(KeyError):
    pass


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((str(g), int(e)) for g, e in self.letters if e))

    @classmethod
    def gen(cls, name: str, e: int = 1) -> "Word":
        return cls(((name, e),))

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(Word(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return free_reduce(Word(base.letters * abs(n)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)


def free_reduce(w: Word) -> Word:
    out: list = []
    for g, e in w.letters:
        if out and out[-1][0] == g:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((g, e))
    return Word(tuple(out))


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def substitute(w: Word, images: dict) -> Word:
    """Replace every generator by a word (generators not in ``images`` stay)."""
    out = Word()
    for g, e in w.letters:
        img = images.get(g, Word.gen(g))
        if isinstance(img, str):
            img = parse_word(img)
        out = out * img ** e
    return out


def abelianize(w: Word, alphabet) -> tuple:
    sums = dict.fromkeys(alphabet, 0)
    for g, e in w.letters:
        if g not in sums:
            raise UnboundGeneratorError(g)
        sums[g] += e
    return tuple(sums[g] for g in alphabet)


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<sym>[\^\[\]\(\),\{\}*.]))")


def _tokenize(text: str) -> list:
    toks, pos = [], 0
    text = text.replace("⁻¹", "^-1")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unknown token {text[pos:].strip()[:1]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise WordSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def word(self) -> Word:
        out = Word()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "*.":
                self.take()
                continue
            if kind == "name" or (kind == "int" and val == "1") or (kind == "sym" and val in "(["):
                out = out * self.factor()
            else:
                return out

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        if kind == "sym" and val in "({":
            close = ")" if val == "(" else "}"
            self.take()
            n = self.exponent()
            self.take(close)
            return n
        if kind != "int":
            raise WordSyntaxError("expected an integer exponent", pos)
        self.take()
        return int(val)

    def factor(self) -> Word:
        kind, val, pos = self.take()
        if kind == "name":
            base = Word.gen(val)
        elif kind == "int":
            base = Word()
        elif val == "(":
            base = self.word()
            self.take(")")
        else:
            u = self.word()
            self.take(",")
            v = self.word()
            self.take("]")
            base = commutator(u, v)
        if self.peek()[1] == "^":
            self.take()
            base = base ** self.exponent()
        return base


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.word()
    kind, val, pos = p.peek()
    if kind != "end":
        raise WordSyntaxError(f"unexpected {val!r}", pos)
    return w


def as_word(w) -> Word:
    return parse_word(w) if isinstance(w, str) else w


# evaluation

def evaluate_word(w, assignment: dict, identity=None):
    """The map obtained by applying the letters of ``w`` left to right."""
    w = as_word(w)
    cache = {}
    result = None
    for g, e in w.letters:
        if g not in assignment:
            raise UnboundGeneratorError(f"unbound generator {g!r}")
        if (g, e) not in cache:
            cache[g, e] = power(assignment[g], e)
        m = cache[g, e]
        result = m if result is None else compose(result, m)
    if result is None:
        if identity is not None:
            return identity
        first = next(iter(assignment.values()), None)
        return ETPL.identity() if first is None else identity_like(first)
    return result


def as_mobius(assignment: dict) -> dict:
    """Move every map into the piecewise Moebius class, so mixed words compose."""
    return {k: to_mobius(v) for k, v in assignment.items()}


# presentations

@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(free_reduce(as_word(r)) for r in self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for r in self.relators:
            extra = r.generators - set(self.generators)
            if extra:
                raise ValueError(f"relator {r} uses undeclared generators {sorted(extra)}")

    @property
    def trivial_generators(self) -> tuple:
        """Generators that some relator kills outright (the presentation is then not reduced)."""
        return tuple(g for g in self.generators
                     if any(r.letters in (((g, 1),), ((g, -1),)) for r in self.relators))

    @property
    def is_reduced(self) -> bool:
        return not self.trivial_generators and all(self.relators)

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


@dataclass(frozen=True)
class RelatorResult:
    relator: Word
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class CheckReport:
    results: tuple
    commuting: bool
    commutation_witness: object = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def witness(self):
        for r in self.results:
            if not r.passed:
                return r.witness
        return None

    @property
    def verdict(self) -> str:
        if not self.passed:
            return "fail"
        return "abelian quotient" if self.commuting else "faithful"

    def __str__(self) -> str:
        lines = [f"{'pass' if r.passed else 'FAIL'}  {r.relator}" + ("" if r.passed else f"  moves {r.witness}")
                 for r in self.results]
        lines.append(f"generators commute: {self.commuting}")
        return "\n".join(lines)


def _moved_point(f):
    return f.witness()


def check_presentation(P: Presentation, assignment: dict) -> CheckReport:
    results = []
    for r in P.relators:
        img = evaluate_word(r, assignment)
        wit = _moved_point(img)
        results.append(RelatorResult(r, wit is None, wit))
    commuting, cw = True, None
    for a, b in combinations(P.generators, 2):
        img = evaluate_word(commutator(Word.gen(a), Word.gen(b)), assignment)
        wit = _moved_point(img)
        if wit is not None:
            commuting, cw = False, wit
            break
    return CheckReport(tuple(results), commuting, cw)


# built-in words and presentations

_BUILTIN_TEXT = {
    "w1": "[s t^-1, s^-2 t s^2]",
    # conjugating the inner commutator by s (rather than by t) is what makes
    # the two inner commutators overlap only where the outer commutator needs
    "w2": "s [s t^-1, t^-1 s^-1 t] s^-1",
    "w2_t_conjugate": "t [s t^-1, t^-1 s^-1 t] t^-1",
}


def _f_ab() -> Presentation:
    return Presentation(("a", "b"), (parse_word("[a b^-1, a^-1 b a]"), parse_word("[a b^-1, a^-2 b a^2]")), "F_ab")


def _f_AB() -> Presentation:
    rels = tuple(parse_word(f"[A, (A B)^-{k} B (A B)^{k}]") for k in (1, 2))
    return Presentation(("A", "B"), rels, "F_AB")


def builtin(name: str):
    if name in _BUILTIN_TEXT:
        return parse_word(_BUILTIN_TEXT[name])
    if name == "w":
        return commutator(builtin("w1"), builtin("w2"))
    if name == "w_t_conjugate":
        return commutator(builtin("w1"), builtin("w2_t_conjugate"))
    if name == "F_ab":
        return _f_ab()
    if name == "F_AB":
        return _f_AB()
    if name == "tietze_AB_to_ab":
        return {"A": parse_word("a b^-1"), "B": parse_word("b")}
    if name == "tietze_ab_to_AB":
        return {"a": parse_word("A B"), "b": parse_word("B")}
    raise KeyError(f"unknown builtin {name!r}")


BUILTIN_NAMES = ("w", "w1", "w2", "F_AB", "F_ab", "tietze_AB_to_ab")


def _fresh(base: str, taken: set) -> str:
    name, k = base, 1
    while name in taken:
        k += 1
        name = f"{base}{k}"
    taken.add(name)
    return name


def formal_square_root(P: Presentation, root_names=None) -> Presentation:
    """Adjoin a square root y_i of every generator x_i via relators x_i y_i^-2."""
    taken = set(P.generators)
    if root_names is None:
        root_names = [_fresh("y" + g[1:] if g.startswith("x") else g + "_root", taken) for g in P.generators]
    roots = tuple(root_names)
    rels = P.relators + tuple(Word(((x, 1), (y, -2))) for x, y in zip(P.generators, roots))
    return Presentation(roots + P.generators, rels, f"sqrt({P.name})" if P.name else "")
