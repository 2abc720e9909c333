"""Command-line front end.

Exit status: 0 on success or all checks passing, 1 when a check fails, 2 on a
usage error (bad flag, malformed partition, violated precondition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exactalg import XPoly, parse_bindings
from .parallel import JOBS_ENV
from .report import CheckReport
from .shapes import parse_parts, partitions_of


class UsageError(Exception):
    pass


def _parts(text: str) -> tuple:
    try:
        return parse_parts(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bindings(text: str) -> dict:
    try:
        return parse_bindings(text)
    except (ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {val}")
    return val


def _apply_specs(p: XPoly, specs) -> XPoly:
    for b in specs or ():
        p = p.substitute_params(b)
    return p


def _emit_poly(p: XPoly, fmt: str, header: dict) -> None:
    if fmt == "json":
        print(json.dumps({**header, "nvars": p.nvars, "terms": p.to_json()}, indent=1))
    else:
        print(p.render())


def _emit_report(rep: CheckReport) -> int:
    print(rep.render())
    return 0 if rep.passed else 1


# -- evaluation -----------------------------------------------------------------------


def cmd_eval_f(a) -> int:
    from .mpa import eval_f

    n = a.n if a.n is not None else len(a.mu)
    p = eval_f(a.mu, n, simplify=not a.no_simplify)
    p = _apply_specs(p, a.spec)
    _emit_poly(p, a.format, {"kind": "f", "mu": list(a.mu), "n": n})
    return 0


def cmd_eval_P(a) -> int:
    from .mpa import eval_P

    n = a.n if a.n is not None else len(a.lam)
    p = eval_P(a.lam, n, route=a.route, jobs=a.jobs)
    p = _apply_specs(p, a.spec)
    _emit_poly(p, a.format, {"kind": "P", "lambda": list(a.lam), "n": n})
    return 0


def cmd_oracle(a) -> int:
    from . import special

    n = a.n if a.n is not None else len(a.lam)
    if a.which == "macdonald":
        p = special.macdonald_reference(a.lam, n)
    elif a.which == "hall-littlewood":
        p = special.hall_littlewood_reference(a.lam, n)
    elif a.which == "schur":
        p = special.schur(a.lam, n)
    else:
        from .lattice import partition_function_F

        p = {
            "mpa": special.bp_matrix_product,
            "sym": special.bp_symmetrization,
            "lattice": partition_function_F,
        }[a.route](a.lam, n)
    p = _apply_specs(p, a.spec)
    _emit_poly(p, a.format, {"kind": a.which, "lambda": list(a.lam), "n": n})
    return 0


def cmd_lattice(a) -> int:
    from .exactalg import xpoly_from_mixed
    from .lattice import enumerate_configs, gauge_factor, group_by_profile, render_config

    lam, n = a.lam, a.n
    if a.group_by_profile:
        groups = group_by_profile(lam, n)
        if a.format == "json":
            doc = [
                {
                    "profile": render_config(prof),
                    "colored": [
                        {"config": render_config(c), "weight": xpoly_from_mixed(w, n).to_json()} for c, w in members
                    ],
                }
                for prof, members in groups.items()
            ]
            print(json.dumps({"lambda": list(lam), "n": n, "profiles": doc}, indent=1))
        else:
            for k, (prof, members) in enumerate(groups.items(), 1):
                print(f"# profile {k}: {len(members)} coloured configurations")
                for c, w in members:
                    print(f"## weight\n{xpoly_from_mixed(w, n).render()}")
        return 0
    configs = list(enumerate_configs(lam, n, colored=a.colored))
    if a.format == "json":
        doc = [{"config": render_config(c), "weight": xpoly_from_mixed(w, n).to_json()} for c, w in configs]
        out = {
            "lambda": list(lam),
            "n": n,
            "colored": a.colored,
            "normalisation": gauge_factor(lam).render(),
            "configurations": doc,
        }
        print(json.dumps(out, indent=1))
    else:
        for k, (c, w) in enumerate(configs, 1):
            print(f"# configuration {k}")
            for row in render_config(c)["rows"]:
                cells = " ".join(f"{v['bottom']}>{v['top']}:{v['left']}>{v['right']}" for v in row["vertices"])
                print(f"row {row['row']}: {cells}")
            print(f"## weight\n{xpoly_from_mixed(w, n).render()}")
        print(f"# {len(configs)} configurations")
    return 0


# -- checks ---------------------------------------------------------------------------


def _desk_range(lam, n, max_size: int, max_part=None):
    if lam is not None:
        return [(lam, n if n is not None else len(lam))]
    out = []
    for nn in range(1, 4):
        for d in range(max_size + 1):
            out.extend((p, nn) for p in partitions_of(d, nn, max_part))
    return out


def cmd_check(a) -> int:
    which = a.which
    if which == "hecke":
        from .hecke import check_hecke_relations

        return _emit_report(check_hecke_relations(a.n, a.degree, a.trials, a.seed))
    if which in ("rll", "zf"):
        from .yang_baxter import check_rll, check_zf

        cutoff = a.cutoff if a.cutoff is not None else a.rank + 1
        fn = check_rll if which == "rll" else check_zf
        return _emit_report(fn(a.rank, cutoff))
    if which == "amazing":
        from .yang_baxter import check_amazing

        return _emit_report(check_amazing(a.rank, a.mmax))
    if which == "exchange":
        from .hecke import check_exchange
        from .mpa import eval_f_family

        rep = CheckReport("exchange relations")
        for lam, n in _desk_range(a.lam, a.n, 4):
            rep.merge(check_exchange(eval_f_family(lam, n, jobs=a.jobs)))
        return _emit_report(rep)
    if which == "reduction":
        from .special import check_bp_reduction, check_macdonald_reduction

        rep = CheckReport(f"{a.reduction} reduction")
        if a.reduction == "macdonald":
            for lam, n in _desk_range(a.lam, a.n, 4):
                rep.merge(check_macdonald_reduction(lam, n))
        else:
            for lam, n in _desk_range(a.lam, a.n, 9, 3):
                rep.merge(check_bp_reduction(lam, n))
        return _emit_report(rep)
    if which == "colour":
        from .lattice import check_color_independence
        from .suite import showcase_report

        rep = CheckReport("colour independence")
        for lam, n in _desk_range(a.lam, a.n, 9, 3):
            rep.merge(check_color_independence(lam, n))
        if a.lam is None:
            rep.merge(showcase_report())
        return _emit_report(rep)
    if which == "all":
        from .suite import run_all

        ok = True
        for outcome in run_all(a.criteria):
            print(outcome.line(), flush=True)
            if not outcome.passed:
                print(outcome.report.render())
            ok &= outcome.passed
        return 0 if ok else 1
    raise UsageError(f"unknown check {which!r}")


def cmd_golden(a) -> int:
    from . import golden

    if a.bless:
        for name in golden.bless():
            print(f"wrote {name}")
        return 0
    return _emit_report(golden.compare())


# -- parser ---------------------------------------------------------------------------


def _common(p, shape: str) -> None:
    if shape == "mu":
        p.add_argument("--mu", type=_parts, required=True, help="composition, e.g. 2,1")
    elif shape == "lam":
        p.add_argument("--lambda", dest="lam", type=_parts, required=True, help="partition, e.g. 4,3,3,1")
    p.add_argument("--n", type=_positive, help="number of variables (default: length of the shape)")


def _output(p) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--spec", type=_bindings, action="append", help="parameter bindings, e.g. u=0,v=0 (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uvmac", description="Exact evaluation and verification toolkit.")
    ap.add_argument("--jobs", type=_positive, help=f"worker processes (default: ${JOBS_ENV} or all cores)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-f", help="non-symmetric f_mu by the matrix product")
    _common(p, "mu")
    _output(p)
    p.add_argument("--no-simplify", action="store_true", help="keep the vacuum families in the evaluation")
    p.set_defaults(func=cmd_eval_f)

    p = sub.add_parser("eval-P", help="symmetric P_lambda")
    _common(p, "lam")
    _output(p)
    p.add_argument("--route", choices=("orbit", "product"), default="orbit")
    p.set_defaults(func=cmd_eval_P)

    p = sub.add_parser("oracle", help="independent reference polynomials")
    p.add_argument("which", choices=("macdonald", "hall-littlewood", "schur", "bp"))
    _common(p, "lam")
    _output(p)
    p.add_argument("--route", choices=("mpa", "sym", "lattice"), default="mpa", help="route for bp")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lattice", help="vertex-model enumeration")
    lsub = p.add_subparsers(dest="action", required=True)
    e = lsub.add_parser("enumerate")
    e.add_argument("--lambda", dest="lam", type=_parts, required=True)
    e.add_argument("--n", type=_positive, required=True)
    e.add_argument("--colored", action="store_true")
    e.add_argument("--group-by-profile", action="store_true", help="group coloured configurations by projection")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_lattice)

    p = sub.add_parser("check", help="verification suites")
    csub = p.add_subparsers(dest="which", required=True)
    c = csub.add_parser("hecke")
    c.add_argument("--n", type=_positive, default=3)
    c.add_argument("--degree", type=int, default=2)
    c.add_argument("--trials", type=_positive, default=50)
    c.add_argument("--seed", type=int, default=0)
    for name in ("rll", "zf"):
        c = csub.add_parser(name)
        c.add_argument("--rank", type=_positive, default=1)
        c.add_argument("--cutoff", type=_positive, help="Fock cutoff N (default rank + 1)")
    c = csub.add_parser("amazing")
    c.add_argument("--rank", type=_positive, default=3)
    c.add_argument("--mmax", type=int, default=3)
    for name in ("exchange", "colour"):
        c = csub.add_parser(name)
        c.add_argument("--lambda", dest="lam", type=_parts, help="single case (default: desk range)")
        c.add_argument("--n", type=_positive)
    c = csub.add_parser("reduction")
    c.add_argument("--which", dest="reduction", choices=("macdonald", "bp"), default="macdonald")
    c.add_argument("--lambda", dest="lam", type=_parts)
    c.add_argument("--n", type=_positive)
    c = csub.add_parser("all")
    c.add_argument("--scale", choices=("desk",), default="desk")
    c.add_argument("--criteria", type=_parts, help="subset of criterion numbers, e.g. 1,2,9")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("golden", help="compare against or regenerate the stored golden files")
    p.add_argument("--bless", action="store_true", help="overwrite the golden files with current output")
    p.set_defaults(func=cmd_golden)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    if a.jobs is not None:
        os.environ[JOBS_ENV] = str(a.jobs)
    try:
        return a.func(a)
    except (ValueError, UsageError) as exc:
        print(f"uvmac: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
