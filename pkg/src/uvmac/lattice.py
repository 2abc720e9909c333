"""Vertex models on the n x lambda_1 grid: enumeration, weights, partition functions.

Geometry: row a carries x_a, with row 1 on top and row n at the bottom (x_n acts
first on the vacuum).  Column j is copy j of the L-matrix.  A vertex in row a,
column j has weight <top| L_{left,right}(x_a) |bottom>, where left/right are
horizontal states (0 = empty, otherwise the path colour) and bottom/top are
vertical occupation vectors, one entry per colour.

The uncoloured model is the rank-1 L-matrix, the coloured one the rank-r matrix.
Weights are generated from the L-matrix in the path normalisation
(phi|m> = |m-1>, phi^+|m> = (1 - t^{m+1})|m+1>), which is the one the vertex
tables are written in.  That normalisation multiplies every partition function
by prod_i (t;t)_{m_i(lambda)} relative to the Fock-normalised matrix product,
and ``partition_function_F/P`` divide that factor back out.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .boson import concrete_step
from .exactalg import ONE, RatFunc, XPoly, mixed_context, xpoly_from_mixed
from .report import CheckReport
from .shapes import multiplicities, rank, strip
from .yang_baxter import build_L

PATH = "path"


@dataclass(frozen=True)
class Vertex:
    bottom: tuple  # occupation per colour
    left: int  # 0 or a colour
    top: tuple
    right: int

    def conserves(self) -> bool:
        r = len(self.bottom)
        if len(self.top) != r or not (0 <= self.left <= r and 0 <= self.right <= r):
            return False
        for c in range(1, r + 1):
            if self.bottom[c - 1] + (self.left == c) != self.top[c - 1] + (self.right == c):
                return False
        return all(m >= 0 for m in self.bottom + self.top)


@dataclass(frozen=True)
class LatticeConfig:
    """vertical[h][j]: edge in column j between row levels h and h+1 (h=0 bottom);
    horizontal[a][j]: edge left of column j in row a (j=0 left boundary)."""

    n: int
    ncols: int
    rank: int
    vertical: tuple
    horizontal: tuple

    def vertex(self, a: int, j: int) -> Vertex:
        """Vertex of row a (1-based, top row 1) and column j (1-based)."""
        h = self.n - a
        return Vertex(self.vertical[h][j - 1], self.horizontal[a - 1][j - 1], self.vertical[h + 1][j - 1], self.horizontal[a - 1][j])


def _step_poly(ctx, t, factor):
    return sum((c * t**te for c, te, *_ in factor), ctx.constant(0))


@lru_cache(maxsize=None)
def _vertex_table(r: int, n: int, a: int, bottom: tuple, left: int, right: int) -> tuple:
    """((top, weight in the mixed ring), ...) for one vertex in row a."""
    ctx = mixed_context(n)
    g = ctx.gens()
    x, t, u, v = g[a - 1], g[n + 1], g[n + 2], g[n + 3]
    L = build_L(r)
    out: dict = {}
    for term in L.entry(left, right):
        occ = list(bottom)
        coef = term.coeff * x**term.xpow * u**term.upow * v**term.vpow
        ok = True
        for (fam, _), gen in reversed(term.word):
            res = concrete_step(gen, occ[fam - 1], PATH)
            if res is None:
                ok = False
                break
            factor, occ[fam - 1] = res
            coef = coef * _step_poly(ctx, t, factor)
        if ok:
            key = tuple(occ)
            out[key] = out[key] + coef if key in out else coef
    return tuple((k, w) for k, w in sorted(out.items()) if not w.is_zero())


def _weight(vx: Vertex, a: int, n: int):
    if not vx.conserves():
        raise ValueError(f"invalid vertex {vx}")
    for top, w in _vertex_table(len(vx.bottom), n, a, vx.bottom, vx.left, vx.right):
        if top == vx.top:
            return w
    return mixed_context(n).constant(0)


def colored_weight(vx: Vertex, a: int = 1, n: int = 1) -> XPoly:
    """Weight of a vertex in row a (variable x_a) as an XPoly in n variables."""
    return xpoly_from_mixed(_weight(vx, a, n), n)


def uncolored_weight(bottom: int, left: int, top: int, right: int, a: int = 1, n: int = 1) -> XPoly:
    return colored_weight(Vertex((bottom,), left, (top,), right), a, n)


# -- enumeration ----------------------------------------------------------------------


def _tops(lam: tuple, colored: bool) -> tuple:
    r = rank(lam)
    m = multiplicities(lam)
    if colored:
        return tuple(tuple(m[j] if c == j else 0 for c in range(r)) for j in range(r))
    return tuple((m[j],) for j in range(r))


def _check_pre(lam: tuple, n: int) -> tuple:
    lam = strip(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > n:
        raise ValueError(f"sum of multiplicities {len(lam)} exceeds n={n}")
    return lam


def enumerate_configs(lam: tuple, n: int, colored: bool):
    """Yield (LatticeConfig, weight in the mixed ring), rows filled bottom to top."""
    lam = _check_pre(lam, n)
    r = rank(lam)
    ncols = r
    if r == 0:
        yield LatticeConfig(n, 0, 0, ((),) * (n + 1), ((0,),) * n), mixed_context(n).constant(1)
        return
    L_rank = r if colored else 1
    tops = _tops(lam, colored)
    zero = (0,) * L_rank
    ctx = mixed_context(n)

    def row_fill(a: int, below: tuple, remaining: int):
        """Fill row a given the vertical states below it; yields (above, horizontals, weight)."""
        out = []

        def rec(j: int, left: int, above: list, hor: list, w):
            if j == ncols:
                if left == 0:  # right boundary empty
                    out.append((tuple(above), tuple(hor), w))
                return
            for right in range(L_rank + 1):
                for top, vw in _vertex_table(L_rank, n, a, below[j], left, right):
                    # prune: colour counts can change by at most one per remaining row
                    if any(abs(tc - gc) > remaining for tc, gc in zip(top, tops[j])):
                        continue
                    above.append(top)
                    hor.append(right)
                    rec(j + 1, right, above, hor, w * vw)
                    above.pop()
                    hor.pop()

        for left in range(L_rank + 1):
            rec(0, left, [], [left], ctx.constant(1))
        return out

    def rows(level: int, below: tuple, verts: list, hors: list, w):
        a = n - level  # row index being filled
        if a == 0:
            if below == tops:
                yield LatticeConfig(n, ncols, L_rank, tuple(verts), tuple(reversed(hors))), w
            return
        for above, hor, rw in row_fill(a, below, a - 1):
            verts.append(above)
            hors.append(hor)
            yield from rows(level + 1, above, verts, hors, w * rw)
            verts.pop()
            hors.pop()

    yield from rows(0, (zero,) * ncols, [(zero,) * ncols], [], ctx.constant(1))


def enumerate_uncolored(lam: tuple, n: int):
    return enumerate_configs(lam, n, colored=False)


def enumerate_colored(lam: tuple, n: int):
    return enumerate_configs(lam, n, colored=True)


def gauge_factor(lam: tuple) -> RatFunc:
    """prod_i (t;t)_{m_i(lambda)}: path-normalised sums over Fock-normalised values."""
    t = RatFunc.gen("t")
    out = ONE
    for m in multiplicities(strip(lam)):
        for j in range(1, m + 1):
            out = out * (1 - t**j)
    return out


def _total(configs, n: int) -> XPoly:
    acc = mixed_context(n).constant(0)
    for _, w in configs:
        acc += w
    return xpoly_from_mixed(acc, n)


def lattice_sum(lam: tuple, n: int, colored: bool) -> XPoly:
    """Raw sum of Boltzmann weights (path normalisation)."""
    return _total(enumerate_configs(lam, n, colored), n)


def partition_function_F(lam: tuple, n: int) -> XPoly:
    return lattice_sum(lam, n, False).scale(1 / gauge_factor(lam))


def partition_function_P(lam: tuple, n: int) -> XPoly:
    return lattice_sum(lam, n, True).scale(1 / gauge_factor(lam))


def project_bw(c: LatticeConfig) -> LatticeConfig:
    """Forget colours: vertical vectors summed, horizontal colours mapped to 0/1."""
    vert = tuple(tuple((sum(s),) for s in level) for level in c.vertical)
    hor = tuple(tuple(1 if h else 0 for h in row) for row in c.horizontal)
    return LatticeConfig(c.n, c.ncols, 1 if c.ncols else 0, vert, hor)


def group_by_profile(lam: tuple, n: int) -> dict:
    """{uncoloured profile: [(coloured config, weight), ...]} in enumeration order."""
    groups: dict = defaultdict(list)
    for cfg, w in enumerate_colored(lam, n):
        groups[project_bw(cfg)].append((cfg, w))
    return dict(groups)


def check_color_independence(lam: tuple, n: int) -> CheckReport:
    """W_P = sum of coloured weights over configurations projecting onto P, for every P."""
    rep = CheckReport(f"colour independence lambda={strip(lam)} n={n}")
    groups = group_by_profile(lam, n)
    ctx = mixed_context(n)
    seen = set()
    for cfg, w in enumerate_uncolored(lam, n):
        seen.add(cfg)
        members = groups.get(cfg, [])
        total = ctx.constant(0)
        for _, cw in members:
            total += cw
        rep.record(total == w, f"profile {cfg.vertical} with {len(members)} coloured configurations")
    extra = [p for p in groups if p not in seen]
    rep.record(not extra, f"{len(extra)} coloured profiles with no uncoloured configuration")
    return rep


def check_vertex_projection(r: int, M_max: int, n: int = 1) -> CheckReport:
    """Per vertex: summing coloured weights over bottom colourings and left colours,
    at a fixed coloured top and right edge, gives the uncoloured weight."""
    from itertools import product

    rep = CheckReport(f"vertex projection r={r} M<={M_max}")
    ctx = mixed_context(n)
    for M in range(M_max + 2):
        tops = [m for m in product(range(M + 1), repeat=r) if sum(m) == M]
        for top in tops:
            for right in range(r + 1):
                for occupied in (0, 1):
                    bottom_total = M + (right > 0) - occupied
                    if bottom_total < 0 or bottom_total > M_max:
                        continue
                    total = ctx.constant(0)
                    lefts = range(1, r + 1) if occupied else (0,)
                    for left in lefts:
                        for bottom in product(range(bottom_total + 1), repeat=r):
                            if sum(bottom) != bottom_total:
                                continue
                            vx = Vertex(bottom, left, top, right)
                            if vx.conserves():
                                total += _weight(vx, 1, n)
                    want = _weight(Vertex((bottom_total,), occupied, (M,), int(right > 0)), 1, n)
                    rep.record(total == want, f"top={top} right={right} left occupied={occupied}")
    return rep


def render_config(c: LatticeConfig) -> dict:
    """JSON-ready description, rows listed top to bottom."""
    rows = []
    for a in range(1, c.n + 1):
        rows.append(
            {
                "row": a,
                "left": c.horizontal[a - 1][0],
                "vertices": [
                    {"bottom": list(vx.bottom), "left": vx.left, "top": list(vx.top), "right": vx.right}
                    for vx in (c.vertex(a, j) for j in range(1, c.ncols + 1))
                ],
            }
        )
    return {"rows": rows}


def config_weight(c: LatticeConfig) -> XPoly:
    """Product of vertex weights, recomputed from the configuration."""
    ctx = mixed_context(c.n)
    w = ctx.constant(1)
    for a in range(1, c.n + 1):
        for j in range(1, c.ncols + 1):
            w *= _weight(c.vertex(a, j), a, c.n)
    return xpoly_from_mixed(w, c.n)


def row_weights(c: LatticeConfig) -> list:
    """Per-row weight products (top row first), handy for comparing against tables."""
    out = []
    for a in range(1, c.n + 1):
        ctx = mixed_context(c.n)
        w = ctx.constant(1)
        for j in range(1, c.ncols + 1):
            w *= _weight(c.vertex(a, j), a, c.n)
        out.append(xpoly_from_mixed(w, c.n))
    return out

