from fractions import Fraction

import pytest

from plroots.constructions import J, random_equation_inputs, uncountable_pipeline
from plroots.plcore import ETPL, support

F = Fraction


def test_trivial_inputs():
    one = ETPL.identity()
    b = uncountable_pipeline(one, one, one, one)
    assert b.k2.is_identity
    assert b.verdict


@pytest.mark.parametrize("seed", [1, 2])
def test_random_inputs(seed):
    b = uncountable_pipeline(*random_equation_inputs(seed))
    assert b.verdict, "\n".join(str(r) for r in b.rows if not r.ok)
    assert not b.k2.is_identity
    box = J(10).interior()
    assert all(box.contains_interval(c) for c in support(b.k2))


def test_distinct_inputs_give_distinct_k2():
    b1 = uncountable_pipeline(*random_equation_inputs(1))
    b2 = uncountable_pipeline(*random_equation_inputs(2))
    x = next(F(k, 1024) + J(10).lo for k in range(1, 64) if b1.k2(F(k, 1024) + J(10).lo) != b2.k2(F(k, 1024) + J(10).lo))
    assert b1.k2(x) != b2.k2(x)
