"""t-bosons: truncated Fock matrices and a symbolic single-occupation calculus.

Fock representation: phi|m> = (1 - t^m)|m-1>, phi^+|m> = |m+1>, k|m> = t^m|m>.
The twist k^{c alpha} with t^alpha = q is the diagonal weight q^{c m}; the
exponent alpha itself never appears.

Two gauges are supported.  ``"fock"`` is the representation above.  ``"path"``
moves the (1 - t^{m+1}) factor from phi onto phi^+ (phi|m> = |m-1>,
phi^+|m> = (1 - t^{m+1})|m+1>); it is the normalisation in which the vertex
weights of the lattice models are tabulated.  Both satisfy the t-boson
relations; they differ by the rescaling |m> -> |m>/(t;t)_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactalg import ONE, ZERO, RatFunc
from .report import CheckReport

PHI, PHID, K, KPOW = "phi", "phid", "k", "kpow"
GAUGES = ("fock", "path")


@dataclass(frozen=True)
class BosonGen:
    kind: str
    a: int = 1  # t-exponent weight of k_power
    b: int = 0  # q-exponent weight of k_power

    def __post_init__(self):
        if self.kind not in (PHI, PHID, K, KPOW):
            raise ValueError(f"unknown boson generator {self.kind!r}")

    def __str__(self):
        if self.kind == KPOW:
            return f"k^({self.a},{self.b})"
        return {PHI: "phi", PHID: "phi+", K: "k"}[self.kind]


phi = BosonGen(PHI)
phid = BosonGen(PHID)
k = BosonGen(K)


def k_power(a: int, b: int) -> BosonGen:
    """Diagonal t^{a m} q^{b m}; k = k_power(1, 0), twist k^{c alpha} = k_power(0, c)."""
    if (a, b) == (1, 0):
        return k
    return BosonGen(KPOW, a, b)


@dataclass(frozen=True)
class BosonWord:
    """Product of generators in operator order (rightmost acts first)."""

    gens: tuple
    prefactor: RatFunc = field(default=ONE)

    def count(self, kind: str) -> int:
        return sum(1 for g in self.gens if g.kind == kind)

    def __str__(self):
        return " ".join(str(g) for g in self.gens) or "1"


# -- elementary rules ------------------------------------------------------------
# A factor is a list of (coeff, t_exp, q_exp, z_exp, w_exp) monomials.


def concrete_step(g: BosonGen, m: int, gauge: str = "fock") -> Optional[tuple]:
    """Act with g on |m>; returns (factor, m') or None when the result is zero."""
    if g.kind == PHI:
        if m == 0:
            return None
        if gauge == "path":
            return [(1, 0, 0, 0, 0)], m - 1
        return [(1, 0, 0, 0, 0), (-1, m, 0, 0, 0)], m - 1
    if g.kind == PHID:
        if gauge == "path":
            return [(1, 0, 0, 0, 0), (-1, m + 1, 0, 0, 0)], m + 1
        return [(1, 0, 0, 0, 0)], m + 1
    if g.kind == K:
        return [(1, m, 0, 0, 0)], m
    return [(1, g.a * m, g.b * m, 0, 0)], m


def symbolic_step(g: BosonGen, d: int) -> tuple:
    """Act with g on |m + d> for symbolic m, with z = t^m and w = q^m."""
    if g.kind == PHI:
        return [(1, 0, 0, 0, 0), (-1, d, 0, 1, 0)], d - 1
    if g.kind == PHID:
        return [(1, 0, 0, 0, 0)], d + 1
    if g.kind == K:
        return [(1, d, 0, 1, 0)], d
    return [(1, g.a * d, g.b * d, g.a, g.b)], d


# -- truncated matrices (independent explicit construction) -------------------------


def truncated_matrix(g: BosonGen, N: int, gauge: str = "fock") -> list:
    """(N+1)x(N+1) matrix M[out][in] of g on |0>..|N>; phi^+|N> is dropped."""
    if N < 1:
        raise ValueError("cutoff must be >= 1")
    if gauge not in GAUGES:
        raise ValueError(f"unknown gauge {gauge!r}")
    q, t = RatFunc.gen("q"), RatFunc.gen("t")
    M = [[ZERO] * (N + 1) for _ in range(N + 1)]
    for m in range(N + 1):
        if g.kind == PHI and m >= 1:
            M[m - 1][m] = ONE if gauge == "path" else 1 - t**m
        elif g.kind == PHID and m < N:
            M[m + 1][m] = 1 - t ** (m + 1) if gauge == "path" else ONE
        elif g.kind == K:
            M[m][m] = t**m
        elif g.kind == KPOW:
            M[m][m] = t ** (g.a * m) * q ** (g.b * m)
    return M


def matmul(A: list, B: list) -> list:
    n, kk, m = len(A), len(B), len(B[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = ZERO
            for l in range(kk):
                if A[i][l] and B[l][j]:
                    acc = acc + A[i][l] * B[l][j]
            out[i][j] = acc
    return out


def check_tboson_relations(N: int, gauge: str = "fock") -> CheckReport:
    """phi k = t k phi, t phi^+ k = k phi^+, phi phi^+ - t phi^+ phi = 1 - t on |0>..|N-1>."""
    if N < 2:
        raise ValueError("cutoff must be >= 2")
    t = RatFunc.gen("t")
    P, D, Kd = (truncated_matrix(g, N, gauge) for g in (phi, phid, k))
    rep = CheckReport(f"t-boson relations N={N} gauge={gauge}")
    PK, KP = matmul(P, Kd), matmul(Kd, P)
    DK, KD = matmul(D, Kd), matmul(Kd, D)
    PD, DP = matmul(P, D), matmul(D, P)
    for col in range(N):
        for row in range(N + 1):
            rep.record(PK[row][col] == t * KP[row][col], f"phi k = t k phi at <{row}|.|{col}>")
            rep.record(t * DK[row][col] == KD[row][col], f"t phi+ k = k phi+ at <{row}|.|{col}>")
            want = (1 - t) if row == col else ZERO
            rep.record(PD[row][col] - t * DP[row][col] == want, f"phi phi+ - t phi+ phi at <{row}|.|{col}>")
    return rep


def braket(word: BosonWord, bra: int, ket: int, N: int, gauge: str = "fock") -> RatFunc:
    """<bra| word |ket> by truncated-matrix application."""
    need = ket + word.count(PHID)
    if N < need or bra > N or ket > N:
        raise ValueError(f"cutoff {N} too small: need at least {max(need, bra, ket)}")
    vec = [ZERO] * (N + 1)
    vec[ket] = ONE
    for g in reversed(word.gens):
        M = truncated_matrix(g, N, gauge)
        vec = [sum((M[i][j] * vec[j] for j in range(N + 1) if vec[j]), ZERO) for i in range(N + 1)]
    return word.prefactor * vec[bra]


# -- symbolic trace cells ------------------------------------------------------------


@dataclass(frozen=True)
class TraceCell:
    """State of a traced family: offset d from the symbolic occupation m and a
    coefficient sum_{a,b} c_{ab} z^a w^b stored as {(a, b): c}."""

    offset: int = 0
    coeff: tuple = (((0, 0), ONE),)

    def terms(self) -> dict:
        return dict(self.coeff)


def trace_apply(cell: TraceCell, g: BosonGen) -> TraceCell:
    q, t = RatFunc.gen("q"), RatFunc.gen("t")
    factor, d = symbolic_step(g, cell.offset)
    out: dict = {}
    for (a, b), c in cell.coeff:
        for fc, te, qe, ze, we in factor:
            key = (a + ze, b + we)
            val = c * (fc * t**te * q**qe)
            out[key] = out[key] + val if key in out else val
    return TraceCell(d, tuple(sorted((kv for kv in out.items() if not _is_zero(kv[1])), key=lambda kv: kv[0])))


def trace_word(word: BosonWord) -> TraceCell:
    cell = TraceCell()
    for g in reversed(word.gens):
        cell = trace_apply(cell, g)
    if word.prefactor != ONE:
        cell = TraceCell(cell.offset, tuple((key, c * word.prefactor) for key, c in cell.coeff))
    return cell


class DivergentTrace(ArithmeticError):
    """A diagonal contribution without any q-weight: the twist is missing."""


def _is_zero(c) -> bool:
    return c.is_zero()


def trace_close(cell: TraceCell):
    """sum_m over the cell: z^a w^b -> 1/(1 - t^a q^b); zero unless offset is 0."""
    if cell.offset != 0:
        return ZERO
    q, t = RatFunc.gen("q"), RatFunc.gen("t")
    total = ZERO
    for (a, b), c in cell.coeff:
        if _is_zero(c):
            continue
        if (a, b) == (0, 0):
            raise DivergentTrace("trace of a term with no twist weight diverges")
        term = c * (1 / (1 - t**a * q**b))
        total = term if total is ZERO else total + term
    return total


def truncated_trace(word: BosonWord, M: int) -> RatFunc:
    """sum_{m=0}^{M} <m|word|m>; the twist, if any, must be part of the word."""
    N = M + word.count(PHID) + 1
    total = ZERO
    for m in range(M + 1):
        total = total + braket(word, m, m, N)
    return total
