import pytest
from hypothesis import given
from hypothesis import strategies as st

from plroots.hallneumann import (GAMMA, HNContext, HNElement, abelianization, hn_commutator, hn_inverse,
                                 hn_multiply, hn_parse, hn_print, hn_reduce_word, hn_skew_image, project,
                                 relator_instances, s_gen, t_gen, u_gen)
from oracles import collect, heis_normal_form, heis_word, letters_of
from strategies import words

small = st.integers(-3, 3)
elements = st.builds(
    HNElement,
    small,
    st.dictionaries(st.integers(-4, 4), small, max_size=3),
    st.dictionaries(st.integers(1, 5), small, max_size=2),
)
contexts = st.one_of(
    st.just(GAMMA),
    st.builds(HNContext, st.frozensets(st.integers(1, 6), max_size=3), st.booleans()),
)


def test_identity_and_generators():
    one = HNElement()
    v = s_gen(2, 3) * t_gen()
    assert one * v == v
    assert str(one) == "1"


def test_commutator_sign():
    s0, s1 = s_gen(0), s_gen(1)
    assert s1 * s0 == s0 * s1 * u_gen(1, -1)
    assert hn_commutator(s0, s1) == u_gen(1)
    assert hn_commutator(s1, s0) == u_gen(-1)


def test_t_conjugation_shifts():
    assert t_gen(-1) * s_gen(0) * t_gen() == s_gen(1)


def test_reduce_word_examples():
    assert hn_reduce_word("[[s, t^-1 s t], s]").is_identity
    assert hn_reduce_word("[s, t^-1 s t] (t^-1 [s, t^-1 s t] t)^-1").is_identity
    assert hn_reduce_word("[s, t^-1 s t]", HNContext({1})).is_identity
    assert hn_reduce_word("[s, t^-1 s t]") == u_gen(1)
    assert hn_reduce_word("t s t^-1 s") == s_gen(-1) * s_gen(0)


def test_skew_images():
    assert hn_skew_image(t_gen()) == t_gen(-1)
    assert hn_skew_image(s_gen(0)) == s_gen(0, -1)
    assert hn_skew_image(u_gen(1)) == u_gen(1, -1)
    ctx = HNContext({2, 3})
    x = HNElement(0, (), ((1, 2), (4, -1)))
    img = hn_skew_image(x, ctx)
    assert img.is_central


def test_relator_schema():
    bad = [key for key, x in relator_instances(8) if not x.is_identity]
    assert not bad


def test_context_validation_and_names():
    with pytest.raises(ValueError):
        HNContext({0})
    assert str(GAMMA) == "Gamma"
    assert HNContext({3}, cofinite=True).kills(5)
    assert not HNContext({3}, cofinite=True).kills(3)


def test_parse_errors():
    with pytest.raises(ValueError):
        hn_parse("t^1 · q^2")
    with pytest.raises(KeyError):
        hn_reduce_word("x")


@given(elements, elements, elements, contexts)
def test_associative(x, y, z, ctx):
    x, y, z = project(x, ctx), project(y, ctx), project(z, ctx)
    assert hn_multiply(hn_multiply(x, y, ctx), z, ctx) == hn_multiply(x, hn_multiply(y, z, ctx), ctx)


@given(elements, contexts)
def test_inverses(x, ctx):
    x = project(x, ctx)
    assert hn_multiply(x, hn_inverse(x, ctx), ctx).is_identity
    assert hn_multiply(hn_inverse(x, ctx), x, ctx).is_identity


@given(elements, st.dictionaries(st.integers(1, 5), small, max_size=2))
def test_central_elements_commute(x, c):
    z = HNElement(0, (), c)
    assert x * z == z * x


@given(elements)
def test_t_conjugation_is_shift(x):
    conj = t_gen(-1) * x * t_gen()
    assert conj.m == x.m
    assert conj.e == tuple((i + 1, a) for i, a in x.e)
    assert conj.c == x.c


@given(words("st", max_len=10), contexts)
def test_quotient_consistency(w, ctx):
    assert hn_reduce_word(w, ctx) == project(hn_reduce_word(w), ctx)


@given(words("st", max_len=10))
def test_abelianization_is_exponent_sums(w):
    x = hn_reduce_word(w)
    m = sum(e for g, e in w.letters if g == "t")
    s = sum(e for g, e in w.letters if g == "s")
    assert abelianization(x) == (m, s)


@given(words("st", max_len=12))
def test_heisenberg_oracle_agrees(w):
    assert heis_normal_form(hn_reduce_word(w)) == heis_word(w.letters)


@given(words("st", max_len=12))
def test_collector_oracle_agrees(w):
    m, e, c = collect(letters_of(w.letters))
    assert hn_reduce_word(w) == HNElement(m, e, c)


@given(elements)
def test_print_parse_round_trip(x):
    assert hn_parse(hn_print(x)) == x


@given(elements, elements)
def test_skew_is_an_involutive_automorphism(x, y):
    assert hn_skew_image(hn_skew_image(x)) == x
    assert hn_skew_image(x * y) == hn_skew_image(x) * hn_skew_image(y)


@given(st.dictionaries(st.integers(1, 6), small, max_size=3), st.frozensets(st.integers(1, 6), max_size=3))
def test_N_X_stable_under_skew(c, X):
    ctx = HNContext(X)
    z = project(HNElement(0, (), c), ctx)
    img = hn_skew_image(z, ctx)
    assert img.is_central
    assert img == project(img, ctx)
    assert all(not ctx.kills(k) for k, _ in img.c)
