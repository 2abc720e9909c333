import pytest

from uvmac.boson import phi
from uvmac.yang_baxter import (
    OpTerm,
    build_L,
    build_R,
    build_Rcheck,
    check_amazing,
    check_column_sums,
    check_commuting,
    check_rll,
    check_unitarity,
    check_zf,
    zf_vector,
)


def test_rank1_L_entries():
    text = build_L(1).render().splitlines()
    assert text == [
        "L[0,0] = 1 - x u k1",
        "L[0,1] = phi1 - u v k1 phi1",
        "L[1,0] = x phi+1",
        "L[1,1] = x - v k1",
    ]


def test_R_structure():
    R = build_R(2)
    assert R.dim == 9
    assert R.label(0, 0) == "1"
    assert R.label(1, 1) == "b+" and R.label(3, 3) == "b-"
    assert R.label(1, 3) == "c+" and R.label(3, 1) == "c-"
    Rc = build_Rcheck(1)
    assert Rc.label(1, 1) == "c-" and Rc.label(2, 2) == "c+"


@pytest.mark.parametrize("r", [1, 2, 3])
def test_R_stochastic_and_unitary(r):
    assert check_column_sums(r).passed
    assert check_unitarity(r).passed


def test_rll_rank1_rank2():
    assert check_rll(1, 4).passed
    assert check_rll(2, 3).passed


def test_rll_detects_perturbed_L():
    # drop the uv correction from L[0,1]
    bad = build_L(1, override={(0, 1): (OpTerm(1, 0, 0, 0, (((1, 1), phi),)),)})
    rep = check_rll(1, 4, bad)
    assert not rep.passed and rep.failures


def test_zf_and_commuting():
    assert check_zf(1, 4).passed
    assert check_zf(2, 3).passed
    assert check_commuting(2, 3).passed


def test_zf_detects_swapped_components():
    A = zf_vector(2)
    assert not check_zf(2, 3, [A[0], A[2], A[1]]).passed


def test_level_relations():
    for r in (1, 2, 3):
        assert check_amazing(r, 3).passed


def test_bad_arguments():
    with pytest.raises(ValueError):
        build_L(0)
    with pytest.raises(ValueError):
        build_R(0)
