"""R-matrix, the t-boson L-matrix, monodromy products and their symbolic checks.

Operator entries are sums of ``OpTerm``: an integer times x^a u^b v^c times a
word of boson generators, each generator tagged with a (family, copy) label.
Relation checks apply these words to truncated Fock states with coefficients in
Z[x, y, t, u, v]; the spectral ratio z = x/y only enters through the cleared
R-matrix, whose entries all share the denominator y - t x.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import flint

from .boson import PHI, PHID, BosonGen, concrete_step, k, phi, phid
from .report import CheckReport

CHECK_CTX = flint.fmpz_mpoly_ctx.get(("x", "y", "t", "u", "v"), "deglex")
_X, _Y, _T, _U, _V = CHECK_CTX.gens()
_ONE = CHECK_CTX.constant(1)
_ZERO = CHECK_CTX.constant(0)


# -- operator terms ----------------------------------------------------------------


@dataclass(frozen=True)
class OpTerm:
    coeff: int
    xpow: int
    upow: int
    vpow: int
    word: tuple  # ((label, BosonGen), ...) in operator order

    def __mul__(self, other: "OpTerm") -> "OpTerm":
        return OpTerm(
            self.coeff * other.coeff,
            self.xpow + other.xpow,
            self.upow + other.upow,
            self.vpow + other.vpow,
            self.word + other.word,
        )

    def scaled(self, c: int) -> "OpTerm":
        return OpTerm(self.coeff * c, self.xpow, self.upow, self.vpow, self.word)

    def render(self, show_copy: bool = False) -> str:
        parts = []
        for name, e in (("x", self.xpow), ("u", self.upow), ("v", self.vpow)):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        for (fam, cp), g in self.word:
            tag = f"{fam}" + (f"({cp})" if show_copy else "")
            parts.append({PHI: "phi", PHID: "phi+"}.get(g.kind, "k") + tag)
        body = " ".join(parts)
        c = abs(self.coeff)
        if not body:
            return str(c)
        return body if c == 1 else f"{c} {body}"


def render_entry(terms, show_copy: bool = False) -> str:
    if not terms:
        return "0"
    out = ""
    for i, term in enumerate(terms):
        sign = "-" if term.coeff < 0 else "+"
        piece = term.render(show_copy)
        if i == 0:
            out = ("-" if sign == "-" else "") + piece
        else:
            out += f" {sign} {piece}"
    return out


def _gens(copy: int, items) -> tuple:
    return tuple(((fam, copy), g) for fam, g in items)


@dataclass(frozen=True)
class LMatrix:
    rank: int
    copy: int
    entries: dict  # (a, b) -> tuple[OpTerm, ...]

    def entry(self, a: int, b: int) -> tuple:
        return self.entries.get((a, b), ())

    def render(self) -> str:
        r = self.rank
        return "\n".join(
            f"L[{a},{b}] = {render_entry(self.entry(a, b))}" for a in range(r + 1) for b in range(r + 1)
        )


def build_L(r: int, copy: int = 1, override: dict | None = None) -> LMatrix:
    """The (r+1)x(r+1) t-boson L-matrix acting on families 1..r of the given copy."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    ks = lambda lo: [(l, k) for l in range(lo, r + 1)]  # noqa: E731
    E: dict = {}
    E[(0, 0)] = (OpTerm(1, 0, 0, 0, ()), OpTerm(-1, 1, 1, 0, _gens(copy, ks(1))))
    for j in range(1, r + 1):
        E[(0, j)] = (
            OpTerm(1, 0, 0, 0, _gens(copy, [(j, phi)])),
            OpTerm(-1, 0, 1, 1, _gens(copy, ks(1) + [(j, phi)])),
        )
    for i in range(1, r + 1):
        E[(i, 0)] = (OpTerm(1, 1, 0, 0, _gens(copy, ks(i + 1) + [(i, phid)])),)
        for j in range(1, r + 1):
            if i == j:
                E[(i, i)] = (
                    OpTerm(1, 1, 0, 0, _gens(copy, ks(i + 1))),
                    OpTerm(-1, 0, 0, 1, _gens(copy, [(i, k)] + ks(i + 1))),
                )
            else:
                word = _gens(copy, ks(i + 1) + [(i, phid), (j, phi)])
                E[(i, j)] = (OpTerm(1, 1, 0, 0, word) if i > j else OpTerm(1, 0, 0, 1, word),)
    if override:
        E.update({key: tuple(val) for key, val in override.items()})
    return LMatrix(r, copy, E)


def _combine(terms) -> tuple:
    """Merge terms with identical monomial and word; drop zeros; deterministic order."""
    acc: dict = {}
    for term in terms:
        key = (term.xpow, term.upow, term.vpow, term.word)
        acc[key] = acc.get(key, 0) + term.coeff
    out = [OpTerm(c, *key) for key, c in acc.items() if c]
    out.sort(key=lambda tm: (tm.xpow, tm.upow, tm.vpow, _word_key(tm.word)))
    return tuple(out)


def _word_key(word) -> tuple:
    return tuple((lab, g.kind, g.a, g.b) for lab, g in word)


def build_monodromy(r: int) -> dict:
    """T = L^(1) ... L^(r) as {(a, b): tuple[OpTerm]} with (family, copy) labels."""
    Ls = [build_L(r, j) for j in range(1, r + 1)]
    T = dict(Ls[0].entries)
    for L in Ls[1:]:
        new = {}
        for a in range(r + 1):
            for b in range(r + 1):
                terms = [s * w for c in range(r + 1) for s in T[(a, c)] for w in L.entry(c, b)]
                new[(a, b)] = _combine(terms)
        T = new
    return T


def extract_zf(T: dict, r: int, column: int = 0) -> list:
    """A_i(x) = T_{i, column}(x), i = 0..r."""
    return [T[(i, column)] for i in range(r + 1)]


# -- R-matrix -----------------------------------------------------------------------

R_WEIGHTS = ("1", "b+", "b-", "c+", "c-")


@dataclass(frozen=True)
class RMatrix:
    """Entries are weight labels from R_WEIGHTS (or None for zero)."""

    rank: int
    labels: tuple  # row-major, (r+1)^2 x (r+1)^2

    @property
    def dim(self) -> int:
        return (self.rank + 1) ** 2

    def label(self, row: int, col: int):
        return self.labels[row][col]

    def cleared(self, x, y, t) -> list:
        """Matrix (y - t x) R(x/y): entries polynomial in whatever ring x, y, t live in."""
        vals = {"1": y - t * x, "b+": y - x, "b-": t * (y - x), "c+": (1 - t) * y, "c-": (1 - t) * x}
        return [[vals[lab] if lab else None for lab in row] for row in self.labels]

    def render(self) -> str:
        return "\n".join(" ".join(f"{lab or '0':>3}" for lab in row) for row in self.labels)


def _index(r: int, a: int, b: int) -> int:
    return a * (r + 1) + b


def build_R(r: int) -> RMatrix:
    if r < 1:
        raise ValueError("rank must be >= 1")
    d = (r + 1) ** 2
    M = [[None] * d for _ in range(d)]
    for i in range(r + 1):
        M[_index(r, i, i)][_index(r, i, i)] = "1"
        for j in range(i + 1, r + 1):
            M[_index(r, i, j)][_index(r, i, j)] = "b+"
            M[_index(r, j, i)][_index(r, j, i)] = "b-"
            M[_index(r, i, j)][_index(r, j, i)] = "c+"
            M[_index(r, j, i)][_index(r, i, j)] = "c-"
    return RMatrix(r, tuple(tuple(row) for row in M))


def build_Rcheck(r: int) -> RMatrix:
    """P R: row (a, b) of the result is row (b, a) of R."""
    R = build_R(r)
    rows = [None] * R.dim
    for a in range(r + 1):
        for b in range(r + 1):
            rows[_index(r, a, b)] = R.labels[_index(r, b, a)]
    return RMatrix(r, tuple(rows))


def check_column_sums(r: int) -> CheckReport:
    """Every column of R(z) sums to 1, checked as sum(numerators) = 1 - t z."""
    ctx = flint.fmpz_mpoly_ctx.get(("z", "t"), "deglex")
    z, t = ctx.gens()
    R = build_R(r)
    M = R.cleared(z, ctx.constant(1), t)
    rep = CheckReport(f"R column sums r={r}")
    for col in range(R.dim):
        total = sum((M[row][col] for row in range(R.dim) if M[row][col] is not None), ctx.constant(0))
        rep.record(total == 1 - t * z, f"column {col}")
    return rep


def check_unitarity(r: int) -> CheckReport:
    """Rcheck(z) Rcheck(1/z) = id, as cleared matrices over Z[z, t]."""
    ctx = flint.fmpz_mpoly_ctx.get(("z", "t"), "deglex")
    z, t = ctx.gens()
    one, zero = ctx.constant(1), ctx.constant(0)
    Rc = build_Rcheck(r)
    A = Rc.cleared(z, one, t)  # (1 - t z) Rcheck(z)
    B = Rc.cleared(one, z, t)  # (z - t) Rcheck(1/z)
    rep = CheckReport(f"Rcheck unitarity r={r}")
    d = Rc.dim
    for i in range(d):
        for j in range(d):
            acc = zero
            for l in range(d):
                if A[i][l] is not None and B[l][j] is not None:
                    acc += A[i][l] * B[l][j]
            want = (1 - t * z) * (z - t) if i == j else zero
            rep.record(acc == want, f"entry ({i},{j})")
    return rep


# -- Fock-space application ----------------------------------------------------------


@lru_cache(maxsize=None)
def _step_poly(g: BosonGen, m: int, gauge: str):
    res = concrete_step(g, m, gauge)
    if res is None:
        return None
    factor, m2 = res
    poly = _ZERO
    for c, te, _qe, _ze, _we in factor:
        poly += c * _T**te
    return poly, m2


def term_poly(term: OpTerm, spectral) -> object:
    return term.coeff * spectral**term.xpow * _U**term.upow * _V**term.vpow


class FockOperators:
    """Applies operator sums to vectors {occupation tuple: Z[x,y,t,u,v]} on a truncated space."""

    def __init__(self, labels, cutoff: int, gauge: str = "fock"):
        self.labels = tuple(labels)
        self.pos = {lab: i for i, lab in enumerate(self.labels)}
        self.N = cutoff
        self.gauge = gauge

    def apply_word(self, word, state: tuple):
        coef = _ONE
        occ = list(state)
        for lab, g in reversed(word):
            p = self.pos[lab]
            res = _step_poly(g, occ[p], self.gauge)
            if res is None:
                return None
            f, occ[p] = res
            if occ[p] > self.N:
                return None
            coef = coef * f
        return coef, tuple(occ)

    def apply(self, terms, spectral, vec: dict) -> dict:
        out: dict = {}
        for state, c in vec.items():
            for term in terms:
                res = self.apply_word(term.word, state)
                if res is None:
                    continue
                f, new = res
                val = c * f * term_poly(term, spectral)
                out[new] = out[new] + val if new in out else val
        return {s: c for s, c in out.items() if c != 0}

    def safe_states(self) -> list:
        if self.N < 2:
            raise ValueError("cutoff too small: need N >= 2 for a non-empty truncation-safe subspace")
        return list(product(range(self.N - 1), repeat=len(self.labels)))


def _vec_add(acc: dict, vec: dict, scale=None):
    for s, c in vec.items():
        val = c if scale is None else c * scale
        acc[s] = acc[s] + val if s in acc else val


def _vec_eq(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(s, _ZERO) == b.get(s, _ZERO) for s in keys)


def check_rll(r: int, N: int, L: LMatrix | None = None) -> CheckReport:
    """Rcheck(x/y) [L(x) (x) L(y)] = [L(y) (x) L(x)] Rcheck(x/y) on the safe subspace."""
    L = L or build_L(r)
    ops = FockOperators([(i, L.copy) for i in range(1, r + 1)], N)
    Rc = build_Rcheck(r).cleared(_X, _Y, _T)
    R1 = r + 1
    rep = CheckReport(f"RLL r={r} N={N}")
    pairs = list(product(range(R1), repeat=2))
    for s in ops.safe_states():
        base = {s: _ONE}
        # V[(k1,b),(k2,d)] = L_{k1 b}(x) L_{k2 d}(y)|s>, W[(a,k1),(c,k2)] = L_{a k1}(y) L_{c k2}(x)|s>
        Ly = {(a, b): ops.apply(L.entry(a, b), _Y, base) for a, b in pairs}
        Lx = {(a, b): ops.apply(L.entry(a, b), _X, base) for a, b in pairs}
        V, W = {}, {}
        for (k1, b), (k2, dd) in product(pairs, pairs):
            V[(k1, b, k2, dd)] = ops.apply(L.entry(k1, b), _X, Ly[(k2, dd)])
            W[(k1, b, k2, dd)] = ops.apply(L.entry(k1, b), _Y, Lx[(k2, dd)])
        for (a, c), (b, dd) in product(pairs, pairs):
            I, J = a * R1 + c, b * R1 + dd
            lhs: dict = {}
            rhs: dict = {}
            for k1, k2 in pairs:
                K = k1 * R1 + k2
                if Rc[I][K] is not None:
                    _vec_add(lhs, V[(k1, b, k2, dd)], Rc[I][K])
                if Rc[K][J] is not None:
                    _vec_add(rhs, W[(a, k1, c, k2)], Rc[K][J])
            rep.record(_vec_eq(lhs, rhs), f"entry (({a},{c}),({b},{dd})) on state {s}")
    return rep


def zf_vector(r: int) -> list:
    return extract_zf(build_monodromy(r), r)


def _monodromy_labels(r: int) -> list:
    return [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)]


def check_zf(r: int, N: int, A: list | None = None) -> CheckReport:
    """Rcheck(x/y)[A(x) (x) A(y)] = [A(y) (x) A(x)] on the safe subspace of all r^2 families."""
    A = A if A is not None else zf_vector(r)
    ops = FockOperators(_monodromy_labels(r), N)
    Rc = build_Rcheck(r).cleared(_X, _Y, _T)
    R1 = r + 1
    pairs = list(product(range(R1), repeat=2))
    rep = CheckReport(f"ZF r={r} N={N}")
    for s in ops.safe_states():
        base = {s: _ONE}
        Ay = [ops.apply(A[i], _Y, base) for i in range(R1)]
        Ax = [ops.apply(A[i], _X, base) for i in range(R1)]
        XY = {(a, c): ops.apply(A[a], _X, Ay[c]) for a, c in pairs}
        YX = {(a, c): ops.apply(A[a], _Y, Ax[c]) for a, c in pairs}
        for a, c in pairs:
            I = a * R1 + c
            lhs: dict = {}
            for k1, k2 in pairs:
                K = k1 * R1 + k2
                if Rc[I][K] is not None:
                    _vec_add(lhs, XY[(k1, k2)], Rc[I][K])
            rhs: dict = {}
            _vec_add(rhs, YX[(a, c)], _Y - _T * _X)
            rep.record(_vec_eq(lhs, rhs), f"component ({a},{c}) on state {s}")
    return rep


def check_commuting(r: int, N: int) -> CheckReport:
    """[A(x), A(y)] = 0 for A = sum_j A_j on the safe subspace."""
    A = zf_vector(r)
    total = tuple(tm for comp in A for tm in comp)
    ops = FockOperators(_monodromy_labels(r), N)
    rep = CheckReport(f"[A(x),A(y)]=0 r={r} N={N}")
    for s in ops.safe_states():
        base = {s: _ONE}
        xy = ops.apply(total, _X, ops.apply(total, _Y, base))
        yx = ops.apply(total, _Y, ops.apply(total, _X, base))
        rep.record(_vec_eq(xy, yx), f"state {s}")
    return rep


def _level(r: int, M: int) -> dict:
    if M < 0:
        return {}
    return {m: _ONE for m in product(range(M + 1), repeat=r) if sum(m) == M}


def check_amazing(r: int, M_max: int) -> CheckReport:
    """The four level relations for |M>> = sum_{|m|=M} |m>, in the path normalisation."""
    L = build_L(r)
    ops = FockOperators([(i, 1) for i in range(1, r + 1)], M_max + 1, gauge="path")
    rep = CheckReport(f"level relations r={r} M<={M_max}")
    for M in range(M_max + 1):
        ket = _level(r, M)
        got = ops.apply(L.entry(0, 0), _X, ket)
        rep.record(_vec_eq(got, {s: c * (1 - _X * _U * _T**M) for s, c in ket.items()}), f"L00 at M={M}")
        for j in range(1, r + 1):
            got = ops.apply(L.entry(0, j), _X, ket)
            lower = _level(r, M - 1)
            want = {s: c * (1 - _U * _V * _T ** (M - 1)) for s, c in lower.items()}
            rep.record(_vec_eq(got, want), f"L0{j} at M={M}")
        got: dict = {}
        for i in range(1, r + 1):
            _vec_add(got, ops.apply(L.entry(i, 0), _X, ket))
        want = {s: c * _X * (1 - _T ** (M + 1)) for s, c in _level(r, M + 1).items()}
        rep.record(_vec_eq(got, want), f"sum_i Li0 at M={M}")
        for j in range(1, r + 1):
            got = {}
            for i in range(1, r + 1):
                _vec_add(got, ops.apply(L.entry(i, j), _X, ket))
            want = {s: c * (_X - _V * _T**M) for s, c in ket.items()}
            rep.record(_vec_eq(got, want), f"sum_i Li{j} at M={M}")
    return rep
