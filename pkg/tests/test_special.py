import pytest

from uvmac.exactalg import RatFunc, XPoly, mixed_context, xpoly_from_mixed
from uvmac.lattice import partition_function_F, partition_function_P
from uvmac.mpa import eval_P
from uvmac.special import (
    bp_convention_map,
    bp_matrix_product,
    bp_symmetrization,
    check_bp_reduction,
    check_macdonald_reduction,
    hall_littlewood_reference,
    macdonald_reference,
    monomial_symmetric,
    schur,
)

q, t, u, v = (RatFunc.gen(s) for s in "qtuv")


def test_macdonald_two_parts():
    # the classical value (1+q)(1-t)/(1-qt): it tends to 1 at q=t and to 1-t at q=0
    want = monomial_symmetric((2,), 2) + monomial_symmetric((1, 1), 2).scale((1 + q) * (1 - t) / (1 - q * t))
    assert macdonald_reference((2,), 2) == want


def test_macdonald_is_monic_and_triangular():
    P = macdonald_reference((2, 1), 3)
    assert P.coefficient((2, 1, 0)) == 1
    assert P.coefficient((3, 0, 0)).is_zero()


def test_schur_and_hall_littlewood_small():
    assert schur((1, 1), 2) == XPoly(2, {(1, 1): 1})
    assert schur((2,), 2) == XPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert hall_littlewood_reference((2, 1), 2) == XPoly(2, {(2, 1): 1, (1, 2): 1})
    assert hall_littlewood_reference((2,), 2) == XPoly(2, {(2, 0): 1, (1, 1): 1 - t, (0, 2): 1})


def test_oracles_cross_check():
    for lam in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]:
        P = macdonald_reference(lam, 3)
        assert P.substitute_params({"q": 0}) == hall_littlewood_reference(lam, 3)
        assert P.substitute_params({"q": t}) == schur(lam, 3)


def test_bp_small_values():
    assert bp_matrix_product((1,), 1) == XPoly(1, {(1,): 1})
    F = bp_matrix_product((2, 1), 2)
    assert F.coefficient((2, 1)) == 1 + t * u * v
    assert F.coefficient((1, 1)) == -(1 + t) * v
    assert F.coefficient((2, 2)) == -(1 + t) * u
    assert bp_symmetrization((2, 1), 2) == F


def test_five_routes_agree():
    for lam, n in [((2, 1), 2), ((3, 1), 3), ((2, 2, 1), 3), ((3, 3), 2)]:
        assert check_bp_reduction(lam, n).passed
        ref = eval_P(lam, n).substitute_params({"q": 0})
        assert partition_function_P(lam, n) == ref == partition_function_F(lam, n)


def test_macdonald_reduction_check():
    assert check_macdonald_reduction((2, 1), 2).passed
    assert check_macdonald_reduction((2, 2), 3).passed


def test_convention_map_small():
    ctx = mixed_context(1)
    x1, s = ctx.gens()[0], ctx.gens()[5]
    empty = bp_convention_map((), 1)
    assert empty.num == XPoly(1, {(0,): 1})
    assert empty.den == xpoly_from_mixed(1 - s * x1, 1)
    one = bp_convention_map((1,), 1)
    assert one.num == xpoly_from_mixed(x1 - s, 1)
    assert one.den == xpoly_from_mixed((1 - s * x1) ** 2, 1)


def test_preconditions():
    with pytest.raises(ValueError):
        bp_matrix_product((1, 1, 1), 2)
    with pytest.raises(ValueError):
        macdonald_reference((1, 1, 1), 2)


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (2, 2), (3, 1, 1), (2, 1, 1)])
def test_u_v_zero_is_shifted_hall_littlewood(lam):
    n = len(lam)
    shifted = tuple(p + 1 for p in lam)
    xprod = XPoly(n, {(1,) * n: 1})
    F = bp_matrix_product(shifted, n).substitute_params({"u": 0, "v": 0})
    assert F == xprod * hall_littlewood_reference(lam, n)
