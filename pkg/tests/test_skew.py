import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plroots.constructions import random_bump, skew_root_of_translation, skew_word_rows
from plroots.plcore import ETPL, PeriodicPL, equals
from strategies import words

F = Fraction


def test_identity_input():
    b = skew_root_of_translation(ETPL.identity())
    assert equals(b.T[0], PeriodicPL.translation(1, F(1, 2)))
    assert b.S[0].is_identity
    assert b.verdict


def test_one_breakpoint_input():
    h = ETPL.bump(0, 1, [(F(1, 2), F(3, 4))])
    b = skew_root_of_translation(h)
    assert equals(b.T[0].power(2), PeriodicPL.translation(1, 1))
    assert b.verdict


def test_distinct_inputs_differ():
    b1 = skew_root_of_translation(ETPL.bump(0, 1, [(F(1, 2), F(3, 4))]))
    b2 = skew_root_of_translation(ETPL.bump(0, 1, [(F(1, 2), F(5, 8))]))
    assert b1.S[0](F(1, 4)) != b2.S[0](F(1, 4))


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        skew_root_of_translation(ETPL.bump(0, 2, [(1, F(3, 2))]))
    with pytest.raises(TypeError):
        skew_root_of_translation(PeriodicPL.translation(1, 0))


@settings(max_examples=20)
@given(st.integers(0, 10**6), words(("x1", "x2", "x3"), max_len=5))
def test_skew_products(seed, w):
    rng = random.Random(seed)
    b = skew_root_of_translation(*(random_bump(rng) for _ in range(3)))
    assert b.verdict
    assert all(r.ok for r in skew_word_rows(b, w))
