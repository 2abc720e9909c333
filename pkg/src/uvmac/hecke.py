"""Polynomial representation of the type A Hecke algebra and exchange checks.

``T_i = t - (t x_i - x_{i+1}) / (x_i - x_{i+1}) (1 - sigma_i)`` acting on XPoly.
The divided difference is an exact polynomial division; a nonzero remainder
raises NonExactDivision.
"""

from __future__ import annotations

import random
from typing import Mapping

from .exactalg import NonExactDivision, RatFunc, XPoly
from .report import CheckReport
from .shapes import orbit, sort_to_partition


def divided_difference(i: int, p: XPoly) -> XPoly:
    """(p - sigma_i p) / (x_i - x_{i+1}) by synthetic division in x_i."""
    n = p.nvars
    if not 1 <= i < n:
        raise IndexError(f"T_{i} undefined for {n} variables")
    num = p - p.swap_x(i, i + 1)
    if num.is_zero():
        return num
    a, b = i - 1, i
    # rows[k]: coefficient of x_i^k, with x_i removed from the key
    rows: dict = {}
    for e, c in num.terms.items():
        k = e[a]
        rest = e[:a] + (0,) + e[a + 1 :]
        rows.setdefault(k, {})[rest] = c
    top = max(rows)
    quotient: dict = {}
    carry: dict = {}  # b_k, the previous quotient row
    for k in range(top, 0, -1):
        row = dict(rows.get(k, {}))
        for rest, c in carry.items():
            shifted = rest[:b] + (rest[b] + 1,) + rest[b + 1 :]
            row[shifted] = row[shifted] + c if shifted in row else c
        row = {r: c for r, c in row.items() if not c.is_zero()}
        for rest, c in row.items():
            quotient[rest[:a] + (k - 1,) + rest[a + 1 :]] = c
        carry = row
    remainder = dict(rows.get(0, {}))
    for rest, c in carry.items():
        shifted = rest[:b] + (rest[b] + 1,) + rest[b + 1 :]
        remainder[shifted] = remainder[shifted] + c if shifted in remainder else c
    if any(not c.is_zero() for c in remainder.values()):
        raise NonExactDivision(f"divided difference of {p!r} by x{i} - x{i + 1} is not exact")
    return XPoly(n, quotient)


def apply_T(i: int, p: XPoly) -> XPoly:
    t = RatFunc.gen("t")
    dd = divided_difference(i, p)
    if dd.is_zero():
        return p.scale(t)
    lin = XPoly.gen(p.nvars, i).scale(t) - XPoly.gen(p.nvars, i + 1)
    return p.scale(t) - lin * dd


def random_xpoly(rng: random.Random, n: int, degree: int, coeff_range: int = 3, density: float = 0.6) -> XPoly:
    """Random polynomial with small integer coefficients, total degree <= degree."""
    terms = {}

    def exps(k, left):
        if k == n - 1:
            for d in range(left + 1):
                yield (d,)
            return
        for d in range(left + 1):
            for rest in exps(k + 1, left - d):
                yield (d,) + rest

    for e in exps(0, degree):
        if rng.random() < density:
            c = rng.randint(-coeff_range, coeff_range)
            if c:
                terms[e] = c
    if not terms:
        terms[(0,) * n] = 1
    return XPoly(n, terms)


def check_hecke_relations(n: int, degree: int, trials: int, seed: int = 0) -> CheckReport:
    """Quadratic, braid and far-commutation relations on random polynomials."""
    rep = CheckReport(f"hecke relations n={n} degree<={degree}")
    t = RatFunc.gen("t")
    rng = random.Random(seed)
    for trial in range(trials):
        p = random_xpoly(rng, n, degree)
        for i in range(1, n):
            tp = apply_T(i, p)
            quad = apply_T(i, tp) - tp.scale(t - 1) - p.scale(t)
            rep.record(quad.is_zero(), f"quadratic T_{i}, trial {trial}: {p!r}")
        for i in range(1, n - 1):
            lhs = apply_T(i, apply_T(i + 1, apply_T(i, p)))
            rhs = apply_T(i + 1, apply_T(i, apply_T(i + 1, p)))
            rep.record(lhs == rhs, f"braid T_{i}T_{i + 1}T_{i}, trial {trial}: {p!r}")
        for i in range(1, n):
            for j in range(i + 2, n):
                rep.record(
                    apply_T(i, apply_T(j, p)) == apply_T(j, apply_T(i, p)),
                    f"commutation T_{i}T_{j}, trial {trial}: {p!r}",
                )
    return rep


def _require_orbit(family: Mapping[tuple, XPoly]) -> list:
    if not family:
        raise ValueError("empty family")
    lam = sort_to_partition(next(iter(family)))
    members = orbit(lam)
    missing = [mu for mu in members if mu not in family]
    if missing:
        raise KeyError(f"family is missing orbit members {missing}")
    return members


def check_exchange(family: Mapping[tuple, XPoly]) -> CheckReport:
    """T_i f_mu = f_{sigma_i mu} when mu_i > mu_{i+1}; T_i f_mu = t f_mu when equal."""
    members = _require_orbit(family)
    lam = sort_to_partition(members[0])
    rep = CheckReport(f"exchange relations lambda={lam}")
    t = RatFunc.gen("t")
    for mu in members:
        f = family[mu]
        for i in range(1, len(mu)):
            a, b = mu[i - 1], mu[i]
            if a > b:
                swapped = mu[: i - 1] + (b, a) + mu[i + 1 :]
                rep.record(apply_T(i, f) == family[swapped], f"mu={mu}, i={i}")
            elif a == b:
                rep.record(apply_T(i, f) == f.scale(t), f"mu={mu}, i={i}")
    return rep


def symmetrize(family: Mapping[tuple, XPoly]) -> XPoly:
    members = _require_orbit(family)
    out = XPoly(family[members[0]].nvars)
    for mu in members:
        out = out + family[mu]
    return out
