from fractions import Fraction

import pytest

from plroots.constructions import (J, SupportLeakError, build_square_root_of_F, certify_mainsub, dyn_value,
                                   squeezed_P_inputs, support_table)
from plroots.constructions.square_root import LEFT, RIGHT
from plroots.plcore import ETPL, agree_on, compactify, equals
from plroots.thompson import check_dyn_criterion

F = Fraction


@pytest.fixture(scope="module")
def trivial():
    return build_square_root_of_F()


@pytest.fixture(scope="module")
def squeezed():
    return build_square_root_of_F(*squeezed_P_inputs())


def test_trivial_inputs_give_f_and_g(trivial):
    assert equals(trivial.lam1, trivial.f)
    assert equals(trivial.lam2, trivial.g)
    assert dyn_value(trivial) == 2
    assert trivial.valid


def test_mainsub_values(trivial):
    assert trivial.p1(J(1).hi) == F(17, 20)
    assert trivial.q1(J(14).lo) == F(41, 20)
    rows = certify_mainsub(trivial)
    assert len(rows) == 10 and all(r.ok for r in rows)


def test_squeezed_P_bundle(squeezed):
    b = squeezed
    assert b.valid, "\n".join(str(r) for rows in b.certificates.values() for r in rows)
    assert agree_on(b.l2l1inv, b.h1, J(6).closure())
    assert agree_on(b.l1invl2, ETPL.identity(), J(6).closure())
    assert dyn_value(b) == 2
    assert check_dyn_criterion(b.lam1.power(2), b.lam2.power(2))


def test_four_regions(squeezed):
    tab = support_table(squeezed)
    for word, regions in tab.items():
        assert "elsewhere" not in regions
        assert all(regions[str(R)] for R in (LEFT, RIGHT)), word
    assert tab["lambda2 lambda1^-1"][str(J(6).closure())]
    assert tab["lambda2 lambda1^-1"][str(J(10).closure())]
    assert tab["lambda1^-1 lambda2"][str(J(10).closure())]


def test_support_leak_is_rejected():
    h = ETPL.bump(1, 2, [(F(3, 2), F(7, 4))])
    with pytest.raises(SupportLeakError):
        build_square_root_of_F(h, None)
    with pytest.raises(SupportLeakError):
        build_square_root_of_F(compactify(ETPL.translation(1), J(7)), None)


def test_compactified_inputs():
    tau = ETPL.translation(1)
    b = build_square_root_of_F(compactify(tau, J(6)), compactify(tau, J(6)))
    assert b.valid
    assert dyn_value(b) == 2
    x = J(6).midpoint
    assert b.l2l1inv(x) == b.h1(x)
