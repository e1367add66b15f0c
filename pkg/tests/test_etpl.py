from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plroots.plcore import ETPL, Affine, IntervalQ
from strategies import etpl_maps, increasing_points, small_q
from oracles import pl_eval

F = Fraction


def test_identity_evaluates_to_input():
    assert ETPL.identity()(F(7, 3)) == F(7, 3)


def test_inverse_swaps_coordinates():
    f = ETPL(((0, 0), (1, 2), (3, 3)))
    assert f.inverse().breakpoints == ((0, 0), (2, 1), (3, 3))


def test_translations_compose():
    half = ETPL.translation(F(1, 2))
    assert half.then(half) == ETPL.translation(1)


def test_collinear_breakpoints_canonicalize_to_identity():
    assert ETPL(((0, 0), (1, 1), (2, 2))).canonical() == ETPL.identity()


def test_offsets_must_match_end_breakpoints():
    with pytest.raises(ValueError, match="offsets"):
        ETPL(((0, 1), (1, 2)), left_offset=F(1, 2))


def test_non_increasing_breakpoints_rejected():
    with pytest.raises(ValueError, match="strictly increasing"):
        ETPL(((0, 0), (1, 2), (2, 1)))


def test_restrict_needs_fixed_endpoints():
    f = ETPL.from_points([(0, 0), (1, 2), (3, 3)])
    assert f.restrict(IntervalQ.closed(0, 3)) == f
    with pytest.raises(ValueError, match="moved"):
        f.restrict(IntervalQ.closed(0, 2))


def test_support_and_critical_points():
    f = ETPL.from_points([(0, 0), (1, 2), (3, 3)])
    assert [str(c) for c in f.support()] == ["(0, 3)"]
    wave = ETPL.from_points([(0, 0), (1, F(3, 2)), (3, F(5, 2)), (4, 4)])
    assert 2 in wave.critical_points()
    assert [str(c) for c in wave.support()] == ["(0, 2)", "(2, 4)"]


def test_conjugate_by_affine_squeezes_support():
    f = ETPL.bump(0, 1, [(F(1, 2), F(3, 4))])
    g = f.conjugate_by_affine(Affine(2))
    assert [str(c) for c in g.support()] == ["(0, 1/2)"]
    assert g(F(1, 4)) == F(3, 8)


def test_reflect_mirrors():
    f = ETPL.bump(0, 1, [(F(1, 2), F(3, 4))])
    r = f.reflect()
    assert r(F(-1, 2)) == -f(F(1, 2))


@given(increasing_points(), small_q)
def test_evaluation_matches_direct_interpolation(pts, x):
    f = ETPL(tuple(pts))
    assert f(x) == pl_eval(list(f.breakpoints), f.left_offset, f.right_offset, x)


@given(etpl_maps(), etpl_maps(), small_q)
def test_then_applies_left_map_first(f, g, x):
    assert f.then(g)(x) == g(f(x))


@given(etpl_maps(), etpl_maps(), etpl_maps())
def test_associativity(f, g, h):
    assert f.then(g).then(h) == f.then(g.then(h))


@given(etpl_maps())
def test_inverse_cancels(f):
    assert f.then(f.inverse()).is_identity
    assert f.inverse().then(f).is_identity
    assert f.inverse().inverse() == f


@given(etpl_maps(), small_q, small_q)
def test_monotone(f, x, y):
    if x < y:
        assert f(x) < f(y)


@given(etpl_maps())
def test_canonical_idempotent_and_value_preserving(f):
    c = f.canonical()
    assert c.canonical() == c
    for x, _ in f.breakpoints:
        assert c(x) == f(x)


@given(etpl_maps(), st.integers(-3, 3), small_q)
def test_power_is_iterated_composition(f, n, x):
    y = x
    step = f if n >= 0 else f.inverse()
    for _ in range(abs(n)):
        y = step(y)
    assert f.power(n)(x) == y


@given(etpl_maps())
def test_support_of_inverse(f):
    assert f.support() == f.inverse().support()


@given(etpl_maps(), small_q)
def test_points_outside_support_are_fixed(f, x):
    if not any(x in c for c in f.support()):
        assert f(x) == x
    else:
        assert f(x) != x
