from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uvmac import displays
from uvmac.exactalg import RatFunc, XPoly, xpoly_from_mixed
from uvmac.lattice import (
    LatticeConfig,
    Vertex,
    check_color_independence,
    check_vertex_projection,
    colored_weight,
    config_weight,
    enumerate_colored,
    enumerate_uncolored,
    gauge_factor,
    group_by_profile,
    partition_function_F,
    partition_function_P,
    project_bw,
    uncolored_weight,
)
from uvmac.special import bp_matrix_product

q, t, u, v = (RatFunc.gen(s) for s in "qtuv")
x = XPoly.gen(1, 1)
ONE = XPoly.constant(1, 1)


def C(c) -> XPoly:
    return XPoly.constant(1, c)


# -- uncoloured table --------------------------------------------------------------


@pytest.mark.parametrize("m", range(4))
def test_uncolored_table(m):
    assert uncolored_weight(m, 0, m, 0) == ONE - x.scale(u * t**m)
    if m:
        assert uncolored_weight(m, 0, m - 1, 1) == C(1 - u * v * t ** (m - 1))
    assert uncolored_weight(m, 1, m + 1, 0) == x.scale(1 - t ** (m + 1))
    assert uncolored_weight(m, 1, m, 1) == x - C(v * t**m)


def test_uncolored_empty_vertex():
    assert uncolored_weight(0, 0, 0, 0) == ONE - x.scale(u)


def test_invalid_vertices_raise():
    with pytest.raises(ValueError):
        uncolored_weight(1, 1, 1, 0)
    with pytest.raises(ValueError):
        colored_weight(Vertex((1, 0), 2, (1, 0), 0))
    with pytest.raises(ValueError):
        colored_weight(Vertex((0, 0), 3, (0, 1), 0))


# -- coloured table: the six displayed cells, generated from the L-matrix ----------

BOTTOMS = [m for m in product(range(3), repeat=3)]


def _tot(m, i=0):
    return sum(m[i:])  # i = 0: |m|; otherwise |m|_i = sum over l > i


def _bump(m, i, d):
    out = list(m)
    out[i - 1] += d
    return tuple(out)


@pytest.mark.parametrize("m", BOTTOMS)
def test_colored_cells(m):
    r = 3
    assert colored_weight(Vertex(m, 0, m, 0)) == ONE - x.scale(u * t ** _tot(m))
    for i in range(1, r + 1):
        mi = m[i - 1]
        # colour i leaves through the right edge
        if mi:
            got = colored_weight(Vertex(m, 0, _bump(m, i, -1), i))
            assert got == C(1 - u * v * t ** (_tot(m) - 1))
        # colour i enters from the left and goes up
        got = colored_weight(Vertex(m, i, _bump(m, i, 1), 0))
        assert got == x.scale((1 - t ** (mi + 1)) * t ** _tot(m, i))
        # colour i goes straight through
        assert colored_weight(Vertex(m, i, m, i)) == (x - C(v * t**mi)).scale(t ** _tot(m, i))
        for j in range(i + 1, r + 1):
            mj = m[j - 1]
            # j enters, i exits (i < j)
            if mi:
                top = _bump(_bump(m, i, -1), j, 1)
                got = colored_weight(Vertex(m, j, top, i))
                assert got == x.scale((1 - t ** (mj + 1)) * t ** _tot(m, j))
            # i enters, j exits
            if mj:
                top = _bump(_bump(m, i, 1), j, -1)
                got = colored_weight(Vertex(m, i, top, j))
                assert got == C(v * (1 - t ** (mi + 1)) * t ** (_tot(m, i) - 1))


def test_vertex_projection():
    assert check_vertex_projection(2, 3).passed
    assert check_vertex_projection(3, 2).passed


# -- enumeration and partition functions ----------------------------------------------


def test_single_box():
    configs = list(enumerate_uncolored((1,), 1))
    assert len(configs) == 1
    # raw weight carries the path-normalisation factor (1 - t)
    assert xpoly_from_mixed(configs[0][1], 1) == x.scale(1 - t)
    assert partition_function_F((1,), 1) == x
    assert partition_function_P((1,), 1) == x


def test_empty_partition():
    configs = list(enumerate_colored((), 2))
    assert len(configs) == 1
    assert partition_function_P((), 2) == XPoly.constant(2, 1)


def test_gauge_factor():
    assert gauge_factor((3, 3, 1)) == (1 - t) * (1 - t) * (1 - t**2)


def test_config_weight_recomputes():
    for cfg, w in enumerate_colored((2, 1), 2):
        assert config_weight(cfg) == xpoly_from_mixed(w, 2)


def test_F_matches_matrix_product():
    for lam, n in [((2, 1), 2), ((3, 2), 3), ((2, 2, 2), 3), ((3,), 1)]:
        assert partition_function_F(lam, n) == bp_matrix_product(lam, n)


def test_projection_and_counts():
    groups = group_by_profile((2, 1), 2)
    unc = {c for c, _ in enumerate_uncolored((2, 1), 2)}
    assert set(groups) == unc
    for prof, members in groups.items():
        assert all(project_bw(c) == prof for c, _ in members)
        assert isinstance(prof, LatticeConfig)


@pytest.mark.parametrize("lam,n", [((1,), 1), ((2, 1), 2), ((3, 1, 1), 3), ((3, 2, 1), 3), ((2, 2), 3)])
def test_color_independence(lam, n):
    assert check_color_independence(lam, n).passed


def test_too_many_parts():
    with pytest.raises(ValueError):
        list(enumerate_uncolored((1, 1, 1), 2))


# -- the (4,3,3,1), n = 4 showcase -------------------------------------------------


@pytest.fixture(scope="module")
def showcase():
    lam, n = (4, 3, 3, 1), 4
    target = displays.showcase_profile_weight()
    hits = [c for c, w in enumerate_uncolored(lam, n) if xpoly_from_mixed(w, n) == target]
    return hits, group_by_profile(lam, n)


def test_showcase_profile_is_unique(showcase):
    hits, _ = showcase
    assert len(hits) == 1
    rows = hits[0].horizontal
    # every row is entered from the left; row 1 is crossed through columns 1-3
    # (three x - v t^m factors) and its path turns up in column 4
    assert [row[0] for row in rows] == [1, 1, 1, 1]
    assert rows[0] == (1, 1, 1, 1, 0)
    assert hits[0].vertical[-1] == ((1,), (0,), (2,), (1,))


def test_showcase_displayed_weight_needs_hidden_factor(showcase):
    hits, _ = showcase
    shown = displays.showcase_profile_weight_as_displayed()
    assert shown != displays.showcase_profile_weight()
    assert config_weight(hits[0]) == displays.showcase_profile_weight()


def test_showcase_six_colored(showcase):
    hits, groups = showcase
    members = groups[hits[0]]
    assert len(members) == 6
    got = sorted(xpoly_from_mixed(w, 4).render() for _, w in members)
    want = sorted(w.render() for w in displays.showcase_colored_weights())
    assert got == want


@st.composite
def lattice_cases(draw):
    n = draw(st.integers(1, 3))
    parts = sorted(draw(st.lists(st.integers(1, 3), max_size=n)), reverse=True)
    return tuple(parts), n


@settings(max_examples=20, deadline=None)
@given(lattice_cases())
def test_lattice_matches_matrix_product_property(case):
    from uvmac.mpa import eval_P

    lam, n = case
    assert partition_function_P(lam, n) == eval_P(lam, n).substitute_params({"q": 0})
    assert check_color_independence(lam, n).passed
