import pytest
from hypothesis import given
from hypothesis import strategies as st

from uvmac.exactalg import RatFunc
from uvmac.shapes import (
    conjugate,
    dominates,
    is_partition,
    multiplicities,
    omega,
    orbit,
    orbit_size,
    pad,
    parse_parts,
    partitions_of,
    rank,
)

q, t = RatFunc.gen("q"), RatFunc.gen("t")


def test_parse_parts():
    assert parse_parts("4,3,3,1") == (4, 3, 3, 1)
    for bad in ("", "a,1", "1,-2"):
        with pytest.raises(ValueError):
            parse_parts(bad)


def test_orbit_and_multiplicities():
    assert orbit((2, 1, 0)) == sorted(orbit((2, 1, 0)))
    assert len(orbit((2, 1, 0))) == 6 == orbit_size((2, 1, 0))
    assert len(orbit((1, 1, 0))) == 3
    assert multiplicities((4, 3, 3, 1)) == (1, 0, 2, 1)
    assert rank((4, 3, 3, 1)) == 4 and rank(()) == 0


def test_omega():
    assert omega((2, 1)) == 1 - q * t
    assert omega((1,)) == 1
    assert omega(()) == 1


def test_partitions_of_counts():
    assert [len(list(partitions_of(d, d, None))) for d in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert list(partitions_of(4, 2, 3)) == [(3, 1), (2, 2)]


@given(st.lists(st.integers(0, 5), max_size=5))
def test_conjugate_is_involution(parts):
    lam = tuple(sorted((p for p in parts if p), reverse=True))
    assert is_partition(lam)
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_dominance_and_pad():
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((1, 1, 1), 2)
