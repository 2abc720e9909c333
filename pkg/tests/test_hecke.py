import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uvmac.exactalg import NonExactDivision, RatFunc, XPoly, xgens
from uvmac.hecke import (
    apply_T,
    check_exchange,
    check_hecke_relations,
    divided_difference,
    random_xpoly,
    symmetrize,
)
from uvmac.mpa import eval_f_family, eval_P

t = RatFunc.gen("t")


def test_T_on_x2():
    x1, x2 = xgens(2)
    assert apply_T(1, x2) == x1.scale(t) + x2.scale(t - 1)
    assert apply_T(1, x1 + x2) == (x1 + x2).scale(t)


def test_divided_difference_exact():
    x1, x2, x3 = xgens(3)
    assert divided_difference(1, x1**2) == x1 + x2
    assert divided_difference(2, x1 * x2**3).total_degree() == 3
    with pytest.raises(IndexError):
        divided_difference(3, x1)


def test_relations_small():
    assert check_hecke_relations(3, 2, trials=20, seed=1).passed


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 4))
def test_quadratic_relation_property(seed, n):
    p = random_xpoly(random.Random(seed), n, 2)
    for i in range(1, n):
        tp = apply_T(i, p)
        assert apply_T(i, tp) == tp.scale(t - 1) + p.scale(t)


def test_exchange_detects_wrong_family():
    fam = eval_f_family((2, 1), 2)
    assert check_exchange(fam).passed
    broken = dict(fam)
    broken[(1, 2)] = broken[(1, 2)].scale(t)
    assert not check_exchange(broken).passed


def test_exchange_requires_whole_orbit():
    fam = eval_f_family((2, 1), 2)
    fam.pop((1, 2))
    with pytest.raises(KeyError):
        check_exchange(fam)


def test_symmetrize_matches_eval_P():
    from uvmac.shapes import omega

    fam = eval_f_family((2, 1, 0), 3)
    assert symmetrize(fam).scale(omega((2, 1, 0))) == eval_P((2, 1), 3)


def test_non_exact_error_is_arithmetic():
    assert issubclass(NonExactDivision, ArithmeticError)
    assert isinstance(XPoly.constant(2, 1), XPoly)
