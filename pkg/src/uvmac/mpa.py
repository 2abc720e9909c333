"""Matrix-product evaluation of f_mu and P_lambda.

The product A_{mu_1}(x_1) ... A_{mu_n}(x_n) S is applied right to left, one site
at a time, as a dynamic programme over per-family states:

* traced families (i > j) carry an offset d from a symbolic occupation m, with
  z_f standing for t^m; the twist contributes q^{(i-j) m}, closed at the end by
  z_f^a -> 1/(1 - t^a q^{i-j});
* diagonal families (i = j) carry a concrete occupation, read off by <m_i(mu)|;
* vacuum families (i < j) carry a concrete occupation between <0| and |0>, or
  are removed altogether when ``simplify`` is on.

Each word changes every family by at most one unit per site, which gives a cheap
reachability prune.  Coefficients live in one flint ring over x, t, t^-1, u, v
and the z_f, and only the final state is converted to RatFunc.
"""

from __future__ import annotations

from functools import lru_cache

import flint

from .boson import K, PHI, PHID, concrete_step, symbolic_step
from .exactalg import PARAMS, RatFunc, XPoly
from .report import CheckReport
from .shapes import multiplicities, omega, orbit, pad, rank
from .yang_baxter import build_monodromy, extract_zf

TRACED, DIAGONAL, VACUUM = "traced", "diagonal", "vacuum"


def role(family: int, copy: int) -> str:
    if family > copy:
        return TRACED
    return DIAGONAL if family == copy else VACUUM


class Layout:
    """Families that survive in the evaluation, their roles and ring generators."""

    def __init__(self, r: int, n: int, simplify: bool):
        self.r, self.n, self.simplify = r, n, simplify
        labels = [(i, j) for j in range(1, r + 1) for i in range(1, r + 1)]
        if simplify:
            labels = [lab for lab in labels if role(*lab) != VACUUM]
        self.labels = tuple(labels)
        self.pos = {lab: p for p, lab in enumerate(labels)}
        self.roles = tuple(role(*lab) for lab in labels)
        self.traced = tuple(p for p, ro in enumerate(self.roles) if ro == TRACED)
        names = tuple(f"x{a}" for a in range(1, n + 1)) + ("t", "ti", "u", "v")
        names += tuple(f"z{p}" for p in self.traced)
        self.ctx = flint.fmpz_mpoly_ctx.get(names, "deglex")
        g = self.ctx.gens()
        self.x = g[:n]
        self.t, self.ti, self.u, self.v = g[n : n + 4]
        self.z = dict(zip(self.traced, g[n + 4 :]))
        self.one = self.ctx.constant(1)

    def twist(self, p: int) -> int:
        i, j = self.labels[p]
        return i - j

    def tpow(self, e: int):
        return self.t**e if e >= 0 else self.ti ** (-e)


@lru_cache(maxsize=None)
def _zf_terms(r: int, simplify: bool) -> tuple:
    """A_a terms per a; with simplify, drop words touching i<j bosons and set their k to 1."""
    A = extract_zf(build_monodromy(r), r)
    out = []
    for comp in A:
        kept = []
        for term in comp:
            word = term.word
            if simplify:
                if any(role(*lab) == VACUUM and g.kind != K for lab, g in word):
                    continue
                word = tuple((lab, g) for lab, g in word if role(*lab) != VACUUM)
            kept.append((term.coeff, term.xpow, term.upow, term.vpow, word))
        out.append(tuple(kept))
    return tuple(out)


_CODES = {PHI: 0, PHID: 1, K: 2}


class _Stepper:
    """Applies compiled words to DP states, memoising per-generator factors."""

    def __init__(self, lay: Layout):
        self.lay = lay
        self.cache: dict = {}

    def compile(self, word) -> tuple:
        """Word as ((position, generator), ...) in application order."""
        return tuple((self.lay.pos[lab], g) for lab, g in reversed(word))

    def factor(self, p: int, g, s: int):
        lay = self.lay
        if lay.roles[p] == TRACED:
            fac, s2 = symbolic_step(g, s)
        else:
            res = concrete_step(g, s)
            if res is None:
                return None
            fac, s2 = res
        poly = lay.ctx.constant(0)
        for c, te, _qe, ze, _we in fac:
            mono = c * lay.tpow(te)
            if ze:
                mono = mono * lay.z[p] ** ze
            poly += mono
        return poly, s2

    def apply(self, cword, state: tuple):
        coef = None
        st = list(state)
        cache = self.cache
        for p, g in cword:
            key = (p, _CODES[g.kind], st[p])
            try:
                res = cache[key]
            except KeyError:
                res = cache[key] = self.factor(p, g, st[p])
            if res is None:
                return None
            f, st[p] = res
            coef = f if coef is None else coef * f
        return coef, tuple(st)


def _site_groups(lay: Layout, step: _Stepper, terms, xa) -> list:
    """Merge terms sharing a word: [(compiled word, coefficient polynomial)]."""
    groups: dict = {}
    for coeff, xpow, upow, vpow, word in terms:
        mono = coeff * xa**xpow * lay.u**upow * lay.v**vpow
        if word in groups:
            groups[word] += mono
        else:
            groups[word] = mono
    return [(step.compile(w), c) for w, c in groups.items() if not c.is_zero()]


def _run(lay: Layout, site_terms: list, targets: tuple | None) -> dict:
    """Dynamic programme over sites n..1; site_terms[a] lists (coeff, xpow, upow, vpow, word)."""
    step = _Stepper(lay)
    states = {(0,) * len(lay.labels): lay.one}
    checks = [(p, tg) for p, tg in enumerate(targets or ()) if tg is not None]
    for a in range(lay.n - 1, -1, -1):
        remaining = a  # sites still to process after this one
        new: dict = {}
        groups = _site_groups(lay, step, site_terms[a], lay.x[a])
        for state, c in states.items():
            for cword, mono in groups:
                res = step.apply(cword, state)
                if res is None:
                    continue
                f, st = res
                if any(abs(st[p] - tg) > remaining for p, tg in checks):
                    continue
                val = c * (mono if f is None else f * mono)
                if st in new:
                    new[st] += val
                else:
                    new[st] = val
        states = {s: c for s, c in new.items() if not c.is_zero()}
    return states


def _close(lay: Layout, poly) -> XPoly:
    """Sum the symbolic traces and convert to an XPoly with RatFunc coefficients."""
    n = lay.n
    zoff = n + 4
    tr = lay.traced
    twists = [lay.twist(p) for p in tr]
    # group by x exponent, then by z exponents
    grouped: dict = {}
    for m, c in zip(poly.monoms(), poly.coeffs()):
        zexp = tuple(map(int, m[zoff:]))
        xe = tuple(map(int, m[:n]))
        key = (int(m[n] - m[n + 1]), int(m[n + 2]), int(m[n + 3]))  # (t - ti, u, v)
        d = grouped.setdefault(xe, {}).setdefault(zexp, {})
        d[key] = d.get(key, 0) + int(c)
    terms = {}
    for xe, byz in grouped.items():
        # least common multiple of the binomial products, tracked as multiplicities
        need: dict = {}
        for zexp in byz:
            cnt: dict = {}
            for a_, c_ in zip(zexp, twists):
                cnt[(a_, c_)] = cnt.get((a_, c_), 0) + 1
            for b, k_ in cnt.items():
                need[b] = max(need.get(b, 0), k_)
        emin = min(min(key[0] for key in d) for d in byz.values())
        shift = -emin if emin < 0 else 0
        num = PARAMS.constant(0)
        for zexp, d in byz.items():
            cnt = dict(need)
            for a_, c_ in zip(zexp, twists):
                cnt[(a_, c_)] -= 1
            part = PARAMS.from_dict({(0, te + shift, ue, ve, 0): cf for (te, ue, ve), cf in d.items() if cf})
            for (a_, c_), k_ in cnt.items():
                if k_:
                    part = part * _binom(a_, c_) ** k_
            num += part
        if num.is_zero():
            continue
        den = PARAMS.constant(1)
        for (a_, c_), k_ in need.items():
            den = den * _binom(a_, c_) ** k_
        if shift:
            den = den * PARAMS.gens()[1] ** shift
        terms[xe] = RatFunc(num, den)
    return XPoly(n, terms)


@lru_cache(maxsize=None)
def _binom(a: int, c: int):
    """1 - t^a q^c as a parameter polynomial."""
    return PARAMS.from_dict({(0, 0, 0, 0, 0): 1, (c, a, 0, 0, 0): -1})


def _layout_and_targets(r: int, n: int, simplify: bool, mults: tuple, theta: bool):
    lay = Layout(r, n, simplify)
    targets = []
    for p, ro in enumerate(lay.roles):
        if ro == DIAGONAL:
            i = lay.labels[p][0]
            targets.append(None if theta else mults[i - 1])
        else:
            targets.append(0)
    return lay, tuple(targets)


def _finish(lay: Layout, states: dict, targets: tuple, mults: tuple, theta: bool) -> XPoly:
    acc = None
    for st, c in states.items():
        ok = all(
            (tg is None) or sv == tg for sv, tg in zip(st, targets)
        )
        if not ok:
            continue
        acc = c if acc is None else acc + c
    if acc is None:
        return XPoly(lay.n)
    return _close(lay, acc)


def eval_f(mu: tuple, n: int | None = None, simplify: bool = True, bra: str = "fixed") -> XPoly:
    """f_mu(x_1..x_n; q, t; u, v) by the matrix product.

    ``bra="theta"`` sums the diagonal bra over every occupation instead of
    <m_i(mu)|; the two must agree.
    """
    mu = tuple(mu)
    if n is None:
        n = len(mu)
    if len(mu) != n:
        raise ValueError(f"composition {mu} has length {len(mu)}, expected n={n}")
    if any(p < 0 for p in mu):
        raise ValueError("composition parts must be non-negative")
    if bra not in ("fixed", "theta"):
        raise ValueError(f"unknown bra mode {bra!r}")
    r = rank(mu)
    if r == 0:
        return XPoly.constant(n, 1)
    mults = multiplicities(mu)
    theta = bra == "theta"
    lay, targets = _layout_and_targets(r, n, simplify, mults, theta)
    A = _zf_terms(r, simplify)
    states = _run(lay, [A[p] for p in mu], targets)
    return _finish(lay, states, targets, mults, theta)


def _orbit_f(args) -> XPoly:
    mu, n, simplify = args
    return eval_f(mu, n, simplify)


def eval_f_family(lam: tuple, n: int, simplify: bool = True, jobs: int | None = None) -> dict:
    from .parallel import pmap

    lam = pad(tuple(lam), n)
    members = orbit(tuple(sorted(lam, reverse=True)))
    values = pmap(_orbit_f, [(mu, n, simplify) for mu in members], jobs)
    return dict(zip(members, values))


def eval_P(lam: tuple, n: int, route: str = "orbit", simplify: bool = True, jobs: int | None = None) -> XPoly:
    """P_lambda = Omega_lambda * (orbit sum of f_mu, or the A(x) = sum_j A_j(x) product)."""
    lam = pad(tuple(lam), n)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    r = rank(lam)
    if r == 0:
        return XPoly.constant(n, 1)
    if route == "orbit":
        fam = eval_f_family(lam, n, simplify, jobs)
        total = XPoly(n)
        for mu in sorted(fam):
            total = total + fam[mu]
    elif route == "product":
        mults = multiplicities(lam)
        lay, targets = _layout_and_targets(r, n, simplify, mults, False)
        A = _zf_terms(r, simplify)
        every = tuple(term for comp in A for term in comp)
        states = _run(lay, [every] * n, targets)
        total = _finish(lay, states, targets, mults, False)
    else:
        raise ValueError(f"unknown route {route!r}")
    return total.scale(omega(lam))


def check_symmetry(p: XPoly) -> CheckReport:
    rep = CheckReport("symmetry")
    for i in range(1, p.nvars):
        rep.record(p.swap_x(i, i + 1) == p, f"not invariant under x{i} <-> x{i + 1}")
    return rep
