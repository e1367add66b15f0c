import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plroots.constructions import lamplighter_root, random_bump
from plroots.constructions.lamplighter import tau_conjugate
from plroots.plcore import ETPL, support

F = Fraction


def test_identity_inputs():
    one = ETPL.identity()
    b = lamplighter_root(one, one)
    assert b.psi.is_identity and b.verdict


def test_psi_fixes_half():
    b = lamplighter_root(ETPL.bump(0, 1, [(F(1, 3), F(2, 3))]), ETPL.bump(0, 1, [(F(1, 2), F(1, 4))]))
    assert b.psi(F(1, 2)) == F(1, 2)
    assert b.verdict


def test_rejects_wide_input():
    with pytest.raises(ValueError):
        lamplighter_root(ETPL.bump(0, 2, [(1, F(3, 2))]), ETPL.identity())


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_conjugates_of_psi_squared_have_disjoint_supports(seed):
    rng = random.Random(seed)
    b = lamplighter_root(random_bump(rng), random_bump(rng), range(-2, 3))
    assert b.verdict
    sq = b.psi.power(2)
    for c in support(tau_conjugate(sq, 1)):
        assert 1 <= c.lo and c.hi <= 2
