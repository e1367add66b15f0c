from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plroots.plcore import ETPL, equals
from plroots.thompson import standard_F_generators
from plroots.words import (Presentation, UnboundGeneratorError, Word, WordSyntaxError, abelianize, builtin,
                           check_presentation, commutator, evaluate_word, formal_square_root, free_reduce,
                           parse_word, substitute)
from strategies import words

F = Fraction


def test_parse_examples():
    assert parse_word("a a^-1") == Word()
    assert str(parse_word("[a,b]")) == "a b a^-1 b^-1"
    w1 = parse_word("[s t^-1, s^-2 t s^2]")
    assert w1 == free_reduce(w1)
    assert str(w1) == "s t^-1 s^-2 t s^2 t s^-3 t^-1 s^2"
    assert len(w1) == 14
    assert parse_word("a^(-1)") == parse_word("a^{-1}") == parse_word("a⁻¹") == parse_word("a^-1")
    assert parse_word("1") == Word()
    assert parse_word("a*b.c") == parse_word("a b c")


@pytest.mark.parametrize("bad", ["a^", "(a b", "[a b]", "a $", "a^x", "a)"])
def test_syntax_errors(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)


def test_free_reduce():
    assert free_reduce(Word((("a", 1), ("b", 1), ("b", -1), ("a", 1)))) == Word.gen("a", 2)


def test_free_word_identity_for_inner_commutator():
    lhs = parse_word("[T y^-1, y^-1 T^-1 y]")
    rhs = parse_word("[T, y^-2] [T^-1, y^-1]")
    assert lhs == rhs


def test_builtin_w_is_nontrivial():
    w = builtin("w")
    assert w and w == free_reduce(w)
    assert abelianize(w, "st") == (0, 0)


def test_abelianize():
    assert abelianize(parse_word("[a,b]"), "ab") == (0, 0)
    assert abelianize(parse_word("a^2 b^-1"), "ab") == (2, -1)
    with pytest.raises(UnboundGeneratorError):
        abelianize(parse_word("c"), "ab")


def test_evaluate_empty_and_unbound():
    f = ETPL.translation(1)
    assert evaluate_word("", {"f": f}).is_identity
    with pytest.raises(UnboundGeneratorError):
        evaluate_word("x", {"f": f})


def test_check_presentation_examples():
    a, b = standard_F_generators()
    P = builtin("F_ab")
    rep = check_presentation(P, {"a": a, "b": b})
    assert rep.passed and not rep.commuting and rep.verdict == "faithful"
    one = ETPL.identity()
    rep = check_presentation(P, {"a": one, "b": one})
    assert rep.passed and rep.verdict == "abelian quotient"
    r1 = ETPL.bump(0, 1, [(F(1, 3), F(1, 2))])
    r2 = ETPL.bump(F(1, 2), 2, [(F(2, 3), F(3, 2))])
    rep = check_presentation(P, {"a": r1, "b": r2})
    assert not rep.passed and rep.witness is not None


def test_builtin_relators():
    P = builtin("F_ab")
    assert [str(r) for r in P.relators] == [str(parse_word("[a b^-1, a^-1 b a]")),
                                             str(parse_word("[a b^-1, a^-2 b a^2]"))]


def test_tietze_rewrite_is_trivial_on_classic_generators():
    a, b = standard_F_generators()
    for r in builtin("F_AB").relators:
        img = substitute(r, builtin("tietze_AB_to_ab"))
        assert evaluate_word(img, {"a": a, "b": b}).is_identity


def test_formal_square_root_examples():
    P = formal_square_root(Presentation(("x",), ()))
    assert P.generators == ("y", "x")
    assert [str(r) for r in P.relators] == ["x y^-2"]
    Q2 = formal_square_root(Presentation(("x1", "x2"), ("[x1, x2]",)))
    assert len(Q2.generators) == 4 and len(Q2.relators) == 3
    twice = formal_square_root(Q2)
    assert len(twice.generators) == 8 and len(twice.relators) == 1 + 3 * 2


def test_formal_square_root_relators_are_not_commutators():
    P = formal_square_root(Presentation(("x",), ()))
    assert abelianize(P.relators[0], P.generators) == (-2, 1)


def test_presentation_rejects_undeclared():
    with pytest.raises(ValueError):
        Presentation(("a",), ("a b",))


@given(words("ab"))
def test_print_parse_round_trip(w):
    assert parse_word(str(w)) == w


@given(words("ab"), words("ab"))
def test_inverse_cancels(u, v):
    assert u * u.inverse() == Word()
    assert (u * v).inverse() == v.inverse() * u.inverse()


@given(words("ab"), words("ab"))
def test_commutators_die_in_abelianization(u, v):
    assert abelianize(commutator(u, v), "ab") == (0, 0)


@given(words("ab"), st.integers(1, 6))
def test_evaluation_is_a_homomorphism(u, k):
    a, b = standard_F_generators()
    asg = {"a": a, "b": b}
    lhs = evaluate_word(u ** k, asg)
    rhs = evaluate_word(u, asg).power(k)
    assert equals(lhs, rhs)
