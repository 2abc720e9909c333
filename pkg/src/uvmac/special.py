"""Reference implementations used as independent oracles.

* Macdonald P_lambda(x; q, t) by Gram-Schmidt on monomial symmetric functions
  with the (q, t) power-sum scalar product.
* Schur functions by the bialternant formula.
* Hall-Littlewood P_lambda(x; t) by symmetrisation.
* The rank-1 family F_lambda(x; t; u, v) by its transfer-matrix definition and
  by the symmetric-group sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

import flint

from .exactalg import (
    ONE,
    ZERO,
    NonExactDivision,
    RatFunc,
    XPoly,
    mixed_context,
    xpoly_from_mixed,
    xpoly_to_mixed,
)
from .report import CheckReport
from .shapes import multiplicities, orbit, pad, partitions_of, rank, strip
from .boson import concrete_step
from .yang_baxter import build_L

def monomial_symmetric(lam: tuple, n: int) -> XPoly:
    lam = strip(lam)
    if len(lam) > n:
        return XPoly(n)
    return XPoly(n, {mu: ONE for mu in orbit(pad(lam, n))})


def _mixed_gens(n: int):
    ctx = mixed_context(n)
    g = ctx.gens()
    return ctx, g[:n], dict(zip(("q", "t", "u", "v", "s"), g[n:]))


def _sign(perm: tuple) -> int:
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def _vandermonde(ctx, xs):
    out = ctx.constant(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out *= xs[i] - xs[j]
    return out


def _exact(a, b):
    try:
        return a / b
    except Exception as exc:  # flint raises DomainError on inexact division
        raise NonExactDivision(str(exc)) from exc


# -- Macdonald ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _power_to_monomial(d: int) -> tuple:
    """Integer matrix L with p_rho = sum_mu L[rho][mu] m_mu, partitions of d in reverse-lex order."""
    parts = partitions_of(d)
    ctx = flint.fmpz_mpoly_ctx.get(tuple(f"y{i}" for i in range(d)), "deglex")
    ys = ctx.gens()
    rows = []
    for rho in parts:
        p = ctx.constant(1)
        for r_ in rho:
            p *= sum((y**r_ for y in ys), ctx.constant(0))
        coeffs = p.to_dict()
        rows.append([int(coeffs.get(pad(mu, d), 0)) for mu in parts])
    return tuple(parts), tuple(tuple(r) for r in rows)


def _z(rho: tuple) -> int:
    return prod(r for r in rho) * prod(factorial(m) for m in multiplicities(rho) if m) if rho else 1


def _pp_norm(rho: tuple) -> RatFunc:
    q, t = RatFunc.gen("q"), RatFunc.gen("t")
    out = RatFunc.coerce(_z(rho))
    for r_ in rho:
        out = out * (1 - q**r_) / (1 - t**r_)
    return out


@lru_cache(maxsize=None)
def _macdonald_basis(d: int) -> dict:
    """{lam: {mu: coefficient of m_mu}} for every partition of d."""
    parts, Lrows = _power_to_monomial(d)
    k = len(parts)
    Linv = flint.fmpq_mat([list(r) for r in Lrows]).inv()  # m_mu = sum_rho Linv[mu][rho] p_rho
    norms = [_pp_norm(rho) for rho in parts]

    def coerce_q(x) -> RatFunc:
        return RatFunc(int(x.p), int(x.q)) if int(x.q) != 1 else RatFunc.coerce(int(x.p))

    Minv = [[coerce_q(Linv[i, j]) for j in range(k)] for i in range(k)]

    def inner(a: dict, b: dict) -> RatFunc:
        # express both in the power-sum basis, then pair diagonally
        pa = [sum((c * Minv[i][r] for i, c in a.items() if Minv[i][r]), ZERO) for r in range(k)]
        pb = [sum((c * Minv[i][r] for i, c in b.items() if Minv[i][r]), ZERO) for r in range(k)]
        return sum((pa[r] * pb[r] * norms[r] for r in range(k) if pa[r] and pb[r]), ZERO)

    basis: dict = {}
    done: list = []  # (vector, squared norm)
    for idx in reversed(range(k)):  # smallest in reverse-lex first; refines dominance
        vec = {idx: ONE}
        for prev, nrm in done:
            c = inner({idx: ONE}, prev) / nrm
            if c:
                for i, val in prev.items():
                    vec[i] = vec.get(i, ZERO) - c * val
        vec = {i: c for i, c in vec.items() if c}
        done.append((vec, inner(vec, vec)))
        basis[parts[idx]] = {parts[i]: c for i, c in vec.items()}
    return basis


def macdonald_reference(lam: tuple, n: int) -> XPoly:
    lam = strip(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if not lam:
        return XPoly.constant(n, 1)
    out = XPoly(n)
    for mu, c in _macdonald_basis(sum(lam))[lam].items():
        out = out + monomial_symmetric(mu, n).scale(c)
    return out


def schur(lam: tuple, n: int) -> XPoly:
    lam = pad(strip(lam), n)
    ctx, xs, _ = _mixed_gens(n)
    num = ctx.constant(0)
    for perm in permutations(range(n)):
        term = ctx.constant(_sign(perm))
        for i in range(n):
            term *= xs[perm[i]] ** (lam[i] + n - 1 - i)
        num += term
    return xpoly_from_mixed(_exact(num, _vandermonde(ctx, xs)), n)


def v_factor(lam: tuple, n: int) -> RatFunc:
    """v_lambda(t) with m_0 = number of zero parts among n."""
    t = RatFunc.gen("t")
    lam = pad(strip(lam), n)
    out = ONE
    for m in [lam.count(0)] + list(multiplicities(lam)):
        for j in range(1, m + 1):
            out = out * (1 - t**j) / (1 - t)
    return out


def hall_littlewood_reference(lam: tuple, n: int) -> XPoly:
    lam = pad(strip(lam), n)
    ctx, xs, p = _mixed_gens(n)
    t = p["t"]
    base = ctx.constant(1)
    for i in range(n):
        for j in range(i + 1, n):
            base *= xs[i] - t * xs[j]
        base *= xs[i] ** lam[i]
    num = ctx.constant(0)
    for perm in permutations(range(n)):
        num += _sign(perm) * base.compose(*[xs[perm[i]] for i in range(n)], *p.values())
    poly = xpoly_from_mixed(_exact(num, _vandermonde(ctx, xs)), n)
    return poly.scale(1 / v_factor(lam, n))


# -- rank-1 family F_lambda ----------------------------------------------------------


def _check_bp_pre(lam: tuple, n: int) -> tuple:
    lam = strip(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > n:
        raise ValueError(f"sum of multiplicities {len(lam)} exceeds n={n}")
    return lam


def rank1_monodromy(r: int) -> tuple:
    """First column (T00, T10) of L^(1)...L^(r) for the rank-1 L-matrix."""
    Ls = [build_L(1, j) for j in range(1, r + 1)]
    col = [Ls[-1].entry(0, 0), Ls[-1].entry(1, 0)]
    for L in reversed(Ls[:-1]):
        col = [
            tuple(s * w for c in range(2) for s in L.entry(a, c) for w in col[c])
            for a in range(2)
        ]
    return tuple(col)


def bp_matrix_product(lam: tuple, n: int) -> XPoly:
    """<lambda| T(x_1) ... T(x_n) |0> with T = T00 + T10 of the rank-1 monodromy."""
    lam = _check_bp_pre(lam, n)
    r = rank(lam)
    if r == 0:
        return XPoly.constant(n, 1)
    ctx, xs, p = _mixed_gens(n)
    cutoff = n + 1
    T00, T10 = rank1_monodromy(r)
    terms: list = list(T00) + list(T10)
    vec = {(0,) * r: ctx.constant(1)}
    for a in reversed(range(n)):
        new: dict = {}
        for state, c in vec.items():
            for term in terms:
                occ = list(state)
                coef = term.coeff * xs[a] ** term.xpow * p["u"] ** term.upow * p["v"] ** term.vpow
                alive = True
                for ((_, copy), g) in reversed(term.word):
                    res = concrete_step(g, occ[copy - 1])
                    if res is None or res[1] > cutoff:
                        alive = False
                        break
                    factor, occ[copy - 1] = res
                    coef *= sum((fc * p["t"] ** te for fc, te, *_ in factor), ctx.constant(0))
                if alive:
                    key = tuple(occ)
                    new[key] = new[key] + c * coef if key in new else c * coef
        vec = new
    target = multiplicities(lam)
    return xpoly_from_mixed(vec.get(tuple(target), ctx.constant(0)), n)


class _Frac:
    """Reduced num/den in a flint polynomial ring (used only for the symmetrisation oracle)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        g = num.gcd(den)
        self.num, self.den = num / g, den / g

    def __add__(self, other: "_Frac") -> "_Frac":
        g = self.den.gcd(other.den)
        a, b = self.den / g, other.den / g
        return _Frac(self.num * b + other.num * a, self.den * b)

    def __mul__(self, other: "_Frac") -> "_Frac":
        return _Frac(self.num * other.num, self.den * other.den)


def bp_symmetrization(lam: tuple, n: int) -> XPoly:
    """The symmetric-group sum for F_lambda, evaluated as reduced fractions."""
    lam = pad(_check_bp_pre(lam, n), n)
    ctx, xs, p = _mixed_gens(n)
    t, u, v = p["t"], p["u"], p["v"]
    one = ctx.constant(1)
    r = rank(lam)
    total = _Frac(ctx.constant(0), one)
    for perm in permutations(range(n)):
        y = [xs[perm[i]] for i in range(n)]
        term = _Frac(one, one)
        for i in range(n):
            for j in range(i + 1, n):
                term = term * _Frac(y[i] - t * y[j], y[i] - y[j])
            term = term * _Frac((y[i] - v) ** lam[i], (1 - y[i] * u) ** lam[i])
            if lam[i] > 0:
                term = term * _Frac(y[i], y[i] - v)
        total = total + term
    pref = one
    for i in range(n):
        pref *= (1 - xs[i] * u) ** r
    total = total * _Frac(pref, one)
    if total.den.total_degree() > 0:
        raise NonExactDivision("symmetric-group sum did not cancel to a polynomial")
    c = int(total.den.coeffs()[0])
    poly = xpoly_from_mixed(total.num, n).scale(RatFunc(1, c))
    return poly.scale(1 / v_factor(lam, n))


@dataclass(frozen=True)
class RationalX:
    num: XPoly
    den: XPoly

    def render(self) -> str:
        return f"numerator:\n{self.num.render()}\ndenominator:\n{self.den.render()}"


def bp_convention_map(lam: tuple, n: int, F: XPoly | None = None) -> RationalX:
    """F_{lambda+1} / prod_i x_i (1 - x_i u)^{lambda_1 + 1} at u = v = s, reduced."""
    lam = pad(strip(lam), n)
    shifted = tuple(p + 1 for p in lam)
    if F is None:
        F = bp_matrix_product(shifted, n)
    s = RatFunc.gen("s")
    Fs = F.substitute_params({"u": s, "v": s})
    ctx, xs, p = _mixed_gens(n)
    num, pden = xpoly_to_mixed(Fs)
    if not pden.is_one():
        raise ValueError("expected polynomial coefficients")
    xprod = prod(xs, start=ctx.constant(1))
    try:
        num = num / xprod
    except Exception as exc:
        raise NonExactDivision("numerator not divisible by x_1...x_n") from exc
    den = ctx.constant(1)
    for x in xs:
        den *= (1 - x * p["s"]) ** (rank(lam) + 1)
    g = num.gcd(den)
    num, den = num / g, den / g
    if int(den.coeffs()[-1]) < 0:  # keep the constant term of the denominator positive
        num, den = -num, -den
    return RationalX(xpoly_from_mixed(num, n), xpoly_from_mixed(den, n))


# -- reduction checks -----------------------------------------------------------------


def check_macdonald_reduction(lam: tuple, n: int) -> CheckReport:
    from .mpa import eval_P

    rep = CheckReport(f"Macdonald reduction lambda={strip(lam)} n={n}")
    got = eval_P(lam, n).substitute_params({"u": 0, "v": 0})
    want = macdonald_reference(lam, n)
    rep.record(got == want, f"difference: {(got - want).render()}")
    return rep


def check_bp_reduction(lam: tuple, n: int) -> CheckReport:
    from .lattice import partition_function_F, partition_function_P
    from .mpa import eval_P

    rep = CheckReport(f"rank-1 reduction lambda={strip(lam)} n={n}")
    routes = {
        "eval_P at q=0": eval_P(lam, n).substitute_params({"q": 0}),
        "matrix product": bp_matrix_product(lam, n),
        "symmetrisation": bp_symmetrization(lam, n),
        "coloured lattice": partition_function_P(lam, n),
        "uncoloured lattice": partition_function_F(lam, n),
    }
    base_name, base = next(iter(routes.items()))
    for name, val in routes.items():
        if name != base_name:
            rep.record(val == base, f"{name} differs from {base_name}: {(val - base).render()}")
    return rep
