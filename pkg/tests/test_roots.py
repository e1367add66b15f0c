import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plroots.constructions import random_pushing_bump
from plroots.constructions.inputs import random_root
from plroots.plcore import (ETPL, IntervalQ, OrbitError, PeriodicPL, RootPL, affine_choice, disagreement, equals,
                            nth_root, nth_root_componentwise, power)

F = Fraction


def base_0_3():
    # support (0,3), base(1/4) = 1/2
    return ETPL.from_points([(0, 0), (F(1, 4), F(1, 2)), (3, 3)])


def test_square_root_example():
    b = base_0_3()
    r = nth_root(b, 2, F(1, 4), (F(1, 4), F(3, 8), F(1, 2)), (((F(1, 4), F(3, 8)), (F(3, 8), F(1, 2))),))
    assert r(F(1, 4)) == F(3, 8)
    assert r(F(3, 8)) == F(1, 2)
    assert r(r(F(1, 4))) == b(F(1, 4))
    assert power(r, 2) == b
    assert r.fundamental_domain_check() is None


def test_periodic_root_of_translation():
    tau = ETPL.translation(1)
    r = affine_choice(tau, 2, F(0))
    assert equals(r.to_periodic(), PeriodicPL.translation(1, F(1, 2)))


def test_distinct_choices_differ():
    b = base_0_3()
    s = (F(1, 4), F(3, 8), F(1, 2))
    r1 = nth_root(b, 2, F(1, 4), s, (((F(1, 4), F(3, 8)), (F(5, 16), F(7, 16)), (F(3, 8), F(1, 2))),))
    r2 = nth_root(b, 2, F(1, 4), s, (((F(1, 4), F(3, 8)), (F(5, 16), F(13, 32)), (F(3, 8), F(1, 2))),))
    assert not equals(r1, r2)
    wit = disagreement(r1, r2, IntervalQ.closed(s[0], s[-1]))
    assert wit is not None and F(1, 4) < wit < F(1, 2)


def test_validation_errors():
    b = base_0_3()
    with pytest.raises(ValueError, match="divisions"):
        nth_root(b, 2, F(1, 4), (F(1, 4), F(1, 2), F(1, 2)), (((F(1, 4), F(1, 2)), (F(1, 2), F(1, 2))),))
    two = ETPL.from_points([(0, 0), (F(1, 4), F(1, 2)), (1, 1), (2, 2), (F(9, 4), F(5, 2)), (3, 3)])
    with pytest.raises(ValueError):
        affine_choice(two, 2)
    with pytest.raises(ValueError, match="invert"):
        affine_choice(b.inverse(), 2, F(1, 4))


def test_orbit_cap_at_support_endpoint():
    r = affine_choice(base_0_3(), 2, F(1, 4))
    tiny = RootPL(r.base, r.degree, r.anchor, r.divisions, r.pieces, max_steps=5)
    with pytest.raises(OrbitError, match="endpoint of orbit-equivariant map"):
        tiny(F(1, 10**9))
    assert r(F(0)) == 0 and r(F(3)) == 3 and r(F(-1)) == -1


def test_inverse_root():
    r = affine_choice(base_0_3(), 3, F(1, 4))
    x = F(7, 5)
    assert r.inverse()(r(x)) == x


def test_power_divisor():
    r = affine_choice(base_0_3(), 4, F(1, 4))
    sq = r.power(2)
    x = F(2, 3)
    assert sq(x) == r(r(x))
    assert equals(sq.power(2), base_0_3())


def test_componentwise_root_handles_left_pushing_components():
    f = ETPL.from_points([(0, 0), (F(1, 2), F(3, 4)), (1, 1), (2, 2), (F(5, 2), F(9, 4)), (3, 3)])
    r = nth_root_componentwise(f, 2)
    for x in (F(1, 3), F(5, 2), F(21, 8)):
        assert r(r(x)) == f(x)
    assert equals(r.power(2), f)


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 4]))
def test_random_roots_square_to_base(seed, n):
    rng = random.Random(seed)
    base = random_pushing_bump(rng, 0, 1)
    r = random_root(rng, base, n)
    assert r.fundamental_domain_check() is None
    for _ in range(20):
        x = F(rng.randrange(1, 1000), 1000)
        y = x
        for _ in range(n):
            y = r(y)
        assert y == base(x)
        # commutes with the base
        assert r(base(x)) == base(r(x))
