"""Regression golden files stored next to the package.

Each entry maps a file name to a producer returning its exact text.  ``compare``
reports drift; ``bless`` rewrites the files and is only reachable through the
explicit ``--bless`` CLI flag.
"""

from __future__ import annotations

import json
from pathlib import Path

from .report import CheckReport

GOLDEN_DIR = Path(__file__).parent / "golden"


def _f21() -> str:
    from .mpa import eval_f

    return eval_f((2, 1), 2).render() + "\n"


def _f12() -> str:
    from .mpa import eval_f

    return eval_f((1, 2), 2).render() + "\n"


def _p21() -> str:
    from .mpa import eval_P

    return eval_P((2, 1), 2).render() + "\n"


def _showcase() -> str:
    from .displays import showcase_profile_weight
    from .exactalg import xpoly_from_mixed
    from .lattice import enumerate_uncolored, group_by_profile, render_config

    lam, n = (4, 3, 3, 1), 4
    target = showcase_profile_weight()
    profile = next(c for c, w in enumerate_uncolored(lam, n) if xpoly_from_mixed(w, n) == target)
    members = group_by_profile(lam, n)[profile]
    doc = {
        "lambda": list(lam),
        "n": n,
        "profile": render_config(profile),
        "profile_weight": target.to_json(),
        "colored": [
            {"config": render_config(c), "weight": xpoly_from_mixed(w, n).to_json()} for c, w in members
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _L(r: int):
    def make() -> str:
        from .yang_baxter import build_L

        return build_L(r).render() + "\n"

    return make


def _R(r: int):
    def make() -> str:
        from .yang_baxter import build_R

        return build_R(r).render() + "\n"

    return make


PRODUCERS = {
    "f21.txt": _f21,
    "f12.txt": _f12,
    "P21.txt": _p21,
    "showcase_4331.json": _showcase,
    "L_rank1.txt": _L(1),
    "L_rank2.txt": _L(2),
    "R_rank1.txt": _R(1),
    "R_rank2.txt": _R(2),
}


def compare(directory: Path = GOLDEN_DIR) -> CheckReport:
    rep = CheckReport("golden files")
    for name, make in PRODUCERS.items():
        path = directory / name
        if not path.exists():
            rep.record(False, f"{name} missing (run with --bless)")
            continue
        rep.record(path.read_text() == make(), f"{name} differs from the current output")
    return rep


def bless(directory: Path = GOLDEN_DIR) -> list:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in PRODUCERS.items():
        (directory / name).write_text(make())
        written.append(name)
    return written
