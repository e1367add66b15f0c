from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plroots.plcore import ETPL, ClassMismatchError, PeriodicPL, compose, equals
from strategies import periodic_maps, small_q

F = Fraction


def test_translation_equals_etpl_translation():
    assert equals(ETPL.translation(1), PeriodicPL.translation(1, 1))


def test_period_mismatch_is_rejected():
    with pytest.raises(ClassMismatchError):
        compose(PeriodicPL.translation(1, F(1, 2)), PeriodicPL.translation(2, F(1, 2)))


def test_breakpoint_outside_period_rejected():
    with pytest.raises(ValueError):
        PeriodicPL(1, ((F(3, 2), F(3, 2)),))


def test_single_breakpoint_half_root():
    # a period-1 map with one breakpoint per period whose square is x + 1
    g = PeriodicPL.from_samples(1, [(0, F(1, 2)), (F(1, 4), F(7, 8)), (F(1, 2), 1), (F(7, 8), F(5, 4))])
    assert equals(g.power(2), PeriodicPL.translation(1, 1))


@given(periodic_maps(), small_q)
def test_periodicity(f, x):
    assert f(x + 1) == f(x) + 1


@given(periodic_maps(), periodic_maps(), small_q)
def test_then_applies_left_first(f, g, x):
    assert f.then(g)(x) == g(f(x))


@given(periodic_maps(), periodic_maps(), periodic_maps())
def test_associativity(f, g, h):
    assert equals(f.then(g).then(h), f.then(g.then(h)))


@given(periodic_maps())
def test_inverse(f):
    assert f.then(f.inverse()).is_identity


@given(periodic_maps(), st.integers(-3, 3), small_q)
def test_power(f, n, x):
    y = x
    step = f if n >= 0 else f.inverse()
    for _ in range(abs(n)):
        y = step(y)
    assert f.power(n)(x) == y


@given(periodic_maps(), small_q)
def test_etpl_round_trip(f, x):
    e = f.to_etpl() if f.is_translation else None
    if e is not None:
        assert e(x) == f(x)


@given(periodic_maps())
def test_canonical_idempotent(f):
    assert f.canonical().canonical() == f.canonical()
