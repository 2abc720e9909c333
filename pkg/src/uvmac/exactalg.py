"""Exact arithmetic in Q(q, t, u, v, s) and polynomials in x_1..x_n over it.

Numerators and denominators are integer multivariate polynomials handled by
python-flint; this module owns normalisation, canonical ordering and the
text/JSON renderings that the golden files are written in.

Canonical term order: ascending total degree, ties broken so that q > t > u >
v > s (``q`` sorts before ``t`` within a degree).  The "leading" coefficient of
a denominator is the first term in that order and is kept positive, so
``1 - q t`` is stored as written rather than as ``q t - 1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import flint

PARAM_NAMES = ("q", "t", "u", "v", "s")
PARAMS = flint.fmpz_mpoly_ctx.get(PARAM_NAMES, "deglex")
_NP = len(PARAM_NAMES)
_ONE = PARAMS.constant(1)
_ZERO = PARAMS.constant(0)


class DivisionByZero(ZeroDivisionError):
    pass


class NonExactDivision(ArithmeticError):
    """A division that must be exact left a remainder."""


def canonical_key(exps: tuple) -> tuple:
    return (sum(exps), tuple(-e for e in exps))


def _lowest_coeff(p) -> int:
    best = None
    best_c = 0
    for m, c in zip(p.monoms(), p.coeffs()):
        k = canonical_key(m)
        if best is None or k < best:
            best, best_c = k, c
    return int(best_c)


def _as_param_poly(x):
    if isinstance(x, flint.fmpz_mpoly):
        return x
    return PARAMS.constant(int(x))


def param_gen(name: str):
    return PARAMS.gens()[PARAM_NAMES.index(name)]


class RatFunc:
    """Reduced fraction num/den of integer polynomials in the parameters."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, _reduced=False):
        if isinstance(num, Fraction):
            if not (isinstance(den, int) and den == 1):
                raise TypeError("a Fraction numerator takes no separate denominator")
            num, den = num.numerator, num.denominator
        num = _as_param_poly(num)
        den = _as_param_poly(den)
        self._hash = None
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if _lowest_coeff(den) < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    # construction helpers -------------------------------------------------

    @classmethod
    def gen(cls, name: str) -> "RatFunc":
        return cls(param_gen(name), _ONE, _reduced=True)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return cls(PARAMS.constant(x), _ONE, _reduced=True)
        if isinstance(x, Fraction):
            return cls(PARAMS.constant(x.numerator), PARAMS.constant(x.denominator))
        if isinstance(x, flint.fmpz_mpoly):
            return cls(x, _ONE, _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @classmethod
    def from_terms(cls, num: Mapping[tuple, int], den: Mapping[tuple, int] | None = None) -> "RatFunc":
        n = PARAMS.from_dict({tuple(k) + (0,) * (_NP - len(k)): v for k, v in num.items()}) if num else _ZERO
        d = _ONE if den is None else PARAMS.from_dict({tuple(k) + (0,) * (_NP - len(k)): v for k, v in den.items()})
        return cls(n, d)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            total = self.num + other.num
            return ZERO if total.is_zero() else RatFunc(total, _ONE, _reduced=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)
        a = self.den / g
        b = other.den / g
        return RatFunc(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, _ONE, _reduced=True)
        a_num, a_den, b_num, b_den = self.num, self.den, other.num, other.den
        if not b_den.is_one():
            g = a_num.gcd(b_den)
            if not g.is_one():
                a_num, b_den = a_num / g, b_den / g
        if not a_den.is_one():
            g = b_num.gcd(a_den)
            if not g.is_one():
                b_num, a_den = b_num / g, a_den / g
        num, den = a_num * b_num, a_den * b_den
        if _lowest_coeff(den) < 0:
            num, den = -num, -den
        return RatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("division by zero RatFunc")
        num, den = self.den, self.num
        if _lowest_coeff(den) < 0:
            num, den = -num, -den
        return RatFunc(num, den, _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._hash

    def __reduce__(self):
        return (_ratfunc_from_dicts, (self.num.to_dict(), self.den.to_dict()))

    # specialisation -------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        """Replace parameters by RatFunc values, e.g. ``{"q": 0}``."""
        if not bindings:
            return self
        vals = {k: RatFunc.coerce(v) for k, v in bindings.items()}
        for k in vals:
            if k not in PARAM_NAMES:
                raise KeyError(f"unknown parameter {k!r}")
        den = _eval_poly(self.den, vals)
        if den.is_zero():
            raise DivisionByZero(f"denominator {render_param_poly(self.den)} vanishes under {dict(bindings)}")
        return _eval_poly(self.num, vals) / den

    def degree_in(self, name: str) -> int:
        i = PARAM_NAMES.index(name)
        return max((m[i] for m in self.num.monoms()), default=0)

    # rendering ------------------------------------------------------------

    def render(self) -> str:
        n = render_param_poly(self.num)
        if self.den.is_one():
            return n
        return f"({n})/({render_param_poly(self.den)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatFunc({self.render()})"


def _ratfunc_from_dicts(num, den):
    return RatFunc(PARAMS.from_dict(num) if num else _ZERO, PARAMS.from_dict(den), _reduced=True)


def _poly_key(p) -> tuple:
    return tuple(sorted(zip(p.monoms(), (int(c) for c in p.coeffs()))))


def _eval_poly(p, vals: Mapping[str, RatFunc]) -> RatFunc:
    if all(v.den.is_one() for v in vals.values()):
        gens = list(PARAMS.gens())
        for k, v in vals.items():
            gens[PARAM_NAMES.index(k)] = v.num
        return RatFunc(p.compose(*gens), _ONE, _reduced=True)
    # rational values: substitute polynomially for free names, expand the rest termwise
    idx = [PARAM_NAMES.index(k) for k in vals]
    powers: dict = {}
    total = ZERO
    for m, c in zip(p.monoms(), p.coeffs()):
        free = [0 if i in idx else e for i, e in enumerate(m)]
        term = RatFunc(PARAMS.term(exp_vec=tuple(free), coeff=int(c)), _ONE, _reduced=True)
        for i in idx:
            if m[i]:
                key = (i, m[i])
                if key not in powers:
                    powers[key] = vals[PARAM_NAMES[i]] ** m[i]
                term = term * powers[key]
        total = total + term
    return total


ZERO = RatFunc(_ZERO, _ONE, _reduced=True)
ONE = RatFunc(_ONE, _ONE, _reduced=True)


def render_monomial(names: Iterable[str], exps: Iterable[int]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def render_param_poly(p) -> str:
    if p.is_zero():
        return "0"
    items = sorted(zip(p.monoms(), p.coeffs()), key=lambda mc: canonical_key(mc[0]))
    out = []
    for k, (m, c) in enumerate(items):
        c = int(c)
        mono = render_monomial(PARAM_NAMES, m)
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{mag} {mono}" if mono else str(mag))
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


Scalar = Union[RatFunc, int, Fraction]


class XPoly:
    """Polynomial in x_1..x_n with RatFunc coefficients (variables 1-indexed)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Scalar] | None = None):
        self.nvars = nvars
        self.terms: dict = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = RatFunc.coerce(c)
                if not c.is_zero():
                    self.terms[e] = c

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "XPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def gen(cls, nvars: int, i: int) -> "XPoly":
        if not 1 <= i <= nvars:
            raise IndexError(f"x{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def constant(cls, nvars: int, c: Scalar = 1) -> "XPoly":
        c = RatFunc.coerce(c)
        return cls._raw(nvars, {} if c.is_zero() else {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: tuple, c: Scalar = 1) -> "XPoly":
        return cls(len(exps), {tuple(exps): c})

    # -- basic algebra --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "XPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, XPoly):
            self._check(other)
            return other
        try:
            return XPoly.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return XPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "XPoly":
        c = RatFunc.coerce(c)
        if c.is_zero():
            return XPoly._raw(self.nvars, {})
        if c == ONE:
            return self
        return XPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, XPoly):
            self._check(other)
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out[e] + c1 * c2 if e in out else c1 * c2
            return XPoly._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = XPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        lifted = self._lift(other)
        return NotImplemented if lifted is None else self == lifted

    __hash__ = None

    def __reduce__(self):
        return (XPoly._raw, (self.nvars, dict(self.terms)))

    # -- structure --------------------------------------------------------

    def coefficient(self, exps: tuple) -> RatFunc:
        return self.terms.get(tuple(exps), ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def homogeneous_part(self, degree: int) -> "XPoly":
        return XPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: canonical_key(ec[0]))

    # -- variable operations ------------------------------------------------

    def swap_x(self, i: int, j: int) -> "XPoly":
        self._index(i)
        self._index(j)
        if i == j:
            return self
        a, b = i - 1, j - 1
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return XPoly._raw(self.nvars, out)

    def substitute_x(self, i: int, value: "XPoly") -> "XPoly":
        self._index(i)
        self._check(value)
        a = i - 1
        powers = {0: XPoly.constant(self.nvars, 1)}
        out = XPoly._raw(self.nvars, {})
        for e, c in self.terms.items():
            k = e[a]
            if k not in powers:
                powers[k] = value**k
            rest = list(e)
            rest[a] = 0
            out = out + XPoly._raw(self.nvars, {tuple(rest): c}) * powers[k]
        return out

    def substitute_params(self, bindings: Mapping[str, object]) -> "XPoly":
        out = {}
        for e, c in self.terms.items():
            c2 = c.substitute(bindings)
            if not c2.is_zero():
                out[e] = c2
        return XPoly._raw(self.nvars, out)

    def _index(self, i: int):
        if not 1 <= i <= self.nvars:
            raise IndexError(f"x{i} out of range for {self.nvars} variables")

    # -- rendering --------------------------------------------------------

    def xmonomial(self, e: tuple) -> str:
        return " ".join(f"x{k + 1}^{d}" for k, d in enumerate(e))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{self.xmonomial(e)} : {c.render()}" for e, c in self.sorted_terms())

    def to_json(self) -> list:
        return [
            {"xexp": list(e), "num": render_param_poly(c.num), "den": render_param_poly(c.den)}
            for e, c in self.sorted_terms()
        ]

    def __str__(self):
        return self.render()

    def __repr__(self):
        body = " + ".join(f"({c.render()})*{self.xmonomial(e)}" for e, c in self.sorted_terms()) or "0"
        return f"XPoly[{self.nvars}]({body})"


# --- mixed contexts: x variables and parameters in one flint ring ---------------


@lru_cache(maxsize=None)
def mixed_context(nvars: int, extra: tuple = ()):
    names = tuple(f"x{i}" for i in range(1, nvars + 1)) + PARAM_NAMES + tuple(extra)
    return flint.fmpz_mpoly_ctx.get(names, "deglex")


def xpoly_from_mixed(p, nvars: int, extra: tuple = ()) -> XPoly:
    """Group a mixed-ring polynomial by x exponents into an XPoly."""
    if extra:
        raise ValueError("extra generators must be eliminated before conversion")
    grouped: dict = {}
    for m, c in zip(p.monoms(), p.coeffs()):
        grouped.setdefault(tuple(map(int, m[:nvars])), {})[m[nvars:]] = int(c)
    return XPoly._raw(
        nvars, {e: RatFunc(PARAMS.from_dict(d), _ONE, _reduced=True) for e, d in grouped.items()}
    )


def xpoly_to_mixed(p: XPoly):
    """Return (numerator in the mixed ring, common ParamPoly denominator)."""
    ctx = mixed_context(p.nvars)
    den = _ONE
    for c in p.terms.values():
        if not c.den.is_one():
            den = den * (c.den / den.gcd(c.den))
    out = ctx.constant(0)
    for e, c in p.terms.items():
        scaled = c.num * (den / c.den)
        out += ctx.from_dict({tuple(e) + m: int(k) for m, k in zip(scaled.monoms(), scaled.coeffs())})
    return out, den


def param_to_mixed(p, nvars: int):
    ctx = mixed_context(nvars)
    pad = (0,) * nvars
    return ctx.from_dict({pad + m: int(c) for m, c in zip(p.monoms(), p.coeffs())}) if not p.is_zero() else ctx.constant(0)


def q_t_u_v():
    """The parameters q, t, u, v as RatFunc values."""
    return tuple(RatFunc.gen(n) for n in ("q", "t", "u", "v"))


def xgens(nvars: int):
    return tuple(XPoly.gen(nvars, i) for i in range(1, nvars + 1))


def parse_bindings(spec: str) -> dict:
    """Parse ``"u=0,v=0"`` or ``"u=s,v=s"`` into a bindings map."""
    out = {}
    for part in filter(None, (p.strip() for p in spec.split(","))):
        if "=" not in part:
            raise ValueError(f"malformed binding {part!r}")
        k, val = (s.strip() for s in part.split("=", 1))
        if k not in PARAM_NAMES:
            raise ValueError(f"unknown parameter {k!r}")
        if val in PARAM_NAMES:
            out[k] = RatFunc.gen(val)
        else:
            try:
                out[k] = RatFunc.coerce(Fraction(val))
            except ValueError as exc:
                raise ValueError(f"malformed value in binding {part!r}") from exc
    return out
