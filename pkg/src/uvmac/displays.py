"""Hand-transcribed closed forms used as independent golden values.

Nothing here is computed by the library: every value is typed in from a factored
display and only assembled with field arithmetic, so comparing against it is a
genuine cross-check of the matrix-product and lattice engines.
"""

from __future__ import annotations

from .exactalg import RatFunc, XPoly, mixed_context, xpoly_from_mixed

q, t, u, v = (RatFunc.gen(s) for s in "qtuv")


def _x2(coeffs: dict) -> XPoly:
    return XPoly(2, coeffs)


def f21() -> XPoly:
    d = (1 - q * t) * (1 - q * t**2)
    return _x2(
        {
            (1, 1): -v * (1 - q) / d,
            (2, 1): (1 - q * t**2 - u * v * q * t * (1 - t)) / d,
            (1, 2): u * v / (1 - q * t**2),
            (2, 2): -u / (1 - q * t),
        }
    )


def f12() -> XPoly:
    d = (1 - q * t) * (1 - q * t**2)
    return _x2(
        {
            (1, 1): -v * (1 - q) * t / d,
            (2, 1): u * v * t / (1 - q * t**2),
            (1, 2): (1 - q * t**2 - u * v * (1 - t)) / d,
            (2, 2): -u * t / (1 - q * t),
        }
    )


OMEGA21 = 1 - q * t


def p21_as_displayed() -> XPoly:
    """The symmetric (2,1) polynomial exactly as transcribed, sign included."""
    sym = 1 - u * v * (1 - q) * t / (1 - q * t**2)
    return _x2(
        {
            (2, 1): sym,
            (1, 2): sym,
            (1, 1): -(1 + t) * v * (1 - q) / (1 - q * t**2),
            (2, 2): -(1 + t) * u,
        }
    )


def p21_corrected() -> XPoly:
    """Same, with the sign of the uv term that Omega_21 (f21 + f12) actually gives."""
    p = p21_as_displayed()
    fixed = 1 + u * v * (1 - q) * t / (1 - q * t**2)
    return XPoly(2, {**dict(p.sorted_terms()), (2, 1): fixed, (1, 2): fixed})


# -- the (4,3,3,1), n = 4 lattice showcase ------------------------------------------


def _showcase_gens():
    ctx = mixed_context(4)
    g = ctx.gens()
    return g[:4], g[5], g[6], g[7]


def showcase_rows() -> list:
    """Row-by-row weight of the displayed uncoloured configuration (top row first).

    The display leaves out the empty vertices to the right of a row's last path;
    those contribute (1 - x_a u) each and are restored by ``showcase_profile_weight``.
    """
    (x1, x2, x3, x4), t_, u_, v_ = _showcase_gens()
    return [
        (x1 - v_ * t_) * (x1 - v_) * (x1 - v_ * t_**2) * x1 * (1 - t_),
        x2 * (1 - t_) * (1 - u_ * v_) * x2 * (1 - t_**2),
        (x3 - v_) * x3 * (1 - t_) * (1 - u_ * t_ * x3),
        (x4 - v_) * (x4 - v_) * x4 * (1 - t_),
    ]


def showcase_hidden_factor():
    (x1, x2, x3, x4), _, u_, _ = _showcase_gens()
    return (1 - x2 * u_) * (1 - x3 * u_) * (1 - x4 * u_)


def showcase_profile_weight() -> XPoly:
    w = showcase_hidden_factor()
    for r in showcase_rows():
        w *= r
    return xpoly_from_mixed(w, 4)


def showcase_profile_weight_as_displayed() -> XPoly:
    w = mixed_context(4).constant(1)
    for r in showcase_rows():
        w *= r
    return xpoly_from_mixed(w, 4)


def showcase_colored_weights() -> list:
    """The six coloured weights projecting onto the showcase profile.

    Only rows 1 and 2 differ between them; rows 3 and 4 are those of the profile.
    """
    (x1, x2, x3, x4), t_, u_, v_ = _showcase_gens()
    a = v_ * (1 - t_)
    b = v_ * (1 - t_**2)
    e = x1 - v_
    row1 = [a * e * b * x1 * (1 - t_), a * e * b * x1 * (1 - t_), a * e * e * x1 * (1 - t_)]
    row1 += [e * e * b * x1 * (1 - t_), e * e * b * x1 * (1 - t_), e * e * e * x1 * (1 - t_)]
    head = x2 * (1 - t_) * (1 - u_ * v_) * x2
    tails = [(1 - t_) * t_, 1 - t_, 1 - t_**2]
    rows = showcase_rows()
    rest = rows[2] * rows[3] * showcase_hidden_factor()
    return [xpoly_from_mixed(row1[k] * head * tails[k % 3] * rest, 4) for k in range(6)]
