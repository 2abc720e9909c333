"""The thirteen acceptance criteria, shared by ``uvmac check all`` and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .exactalg import RatFunc
from .report import CheckReport
from .shapes import omega, partitions_of


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    limit: float | None  # seconds
    run: Callable[[], CheckReport]


@dataclass
class Outcome:
    criterion: Criterion
    report: CheckReport
    seconds: float

    @property
    def in_time(self) -> bool:
        lim = self.criterion.limit
        return lim is None or self.seconds < lim

    @property
    def passed(self) -> bool:
        return self.report.passed and self.in_time

    def line(self) -> str:
        c = self.criterion
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {c.limit:g}s)" if c.limit is not None else ""
        extra = "" if self.in_time else " [too slow]"
        return f"criterion {c.number:2d} {status}  {c.title}: {self.seconds:.2f}s{limit}{extra}"


def _partitions(max_size: int, n: int, max_part: int | None = None):
    for d in range(max_size + 1):
        yield from partitions_of(d, n, max_part)


def _range(max_size: int, max_n: int = 3, max_part: int | None = None):
    for n in range(1, max_n + 1):
        for lam in _partitions(max_size, n, max_part):
            yield lam, n


def _compare(rep: CheckReport, label: str, got, want) -> None:
    rep.record(got == want, f"{label} mismatch; difference {(got - want).render()}")


# -- criteria -------------------------------------------------------------------------


def c1_f21() -> CheckReport:
    from . import displays
    from .mpa import eval_f

    rep = CheckReport("f_21 against the hand-transcribed display")
    _compare(rep, "f_21", eval_f((2, 1), 2), displays.f21())
    return rep


def c2_f12_p21() -> CheckReport:
    from . import displays
    from .mpa import eval_f, eval_P

    rep = CheckReport("f_12, Omega_21 and P_21 against the displays")
    _compare(rep, "f_12", eval_f((1, 2), 2), displays.f12())
    rep.record(omega((2, 1)) == displays.OMEGA21, "Omega_21 != 1 - q t")
    p = eval_P((2, 1), 2)
    _compare(rep, "P_21 (as transcribed)", p, displays.p21_as_displayed())
    if p == displays.p21_corrected():
        rep.notes.append(
            "P_21 equals the transcribed form with +uv(1-q)t/(1-qt^2) in the x1^2 x2 coefficient; "
            "the transcribed minus sign disagrees with Omega_21 (f_21 + f_12) built from the transcribed f's"
        )
    return rep


def c3_hecke() -> CheckReport:
    from .hecke import check_hecke_relations

    rep = CheckReport("Hecke relations on random polynomials")
    for n, deg in product((2, 3, 4), (1, 2, 3)):
        rep.merge(check_hecke_relations(n, deg, trials=50, seed=7))
    return rep


def c4_exchange(max_size: int = 4, max_n: int = 3) -> CheckReport:
    from .hecke import check_exchange
    from .mpa import eval_f_family

    rep = CheckReport(f"exchange relations |lambda|<={max_size} n<={max_n}")
    for lam, n in _range(max_size, max_n):
        rep.merge(check_exchange(eval_f_family(lam, n)))
    return rep


def c5_rll() -> CheckReport:
    from .yang_baxter import check_rll

    return CheckReport("RLL").merge(check_rll(1, 4)).merge(check_rll(2, 3))


def c6_zf() -> CheckReport:
    from .yang_baxter import check_zf

    return CheckReport("ZF").merge(check_zf(1, 4)).merge(check_zf(2, 3))


def c7_amazing() -> CheckReport:
    from .yang_baxter import check_amazing

    rep = CheckReport("four-relation theorem r<=3 M<=3")
    for r in (1, 2, 3):
        rep.merge(check_amazing(r, 3))
    return rep


def c8_macdonald(max_size: int = 4, max_n: int = 3) -> CheckReport:
    from .special import check_macdonald_reduction

    rep = CheckReport(f"u=v=0 reduction |lambda|<={max_size} n<={max_n}")
    for lam, n in _range(max_size, max_n):
        rep.merge(check_macdonald_reduction(lam, n))
    return rep


def c9_bp(max_part: int = 3, max_n: int = 3) -> CheckReport:
    from .special import check_bp_reduction

    rep = CheckReport(f"q=0 reduction lambda_1<={max_part} n<={max_n}")
    for lam, n in _range(max_part * max_n, max_n, max_part):
        rep.merge(check_bp_reduction(lam, n))
    return rep


def showcase_report() -> CheckReport:
    from . import displays
    from .exactalg import xpoly_from_mixed
    from .lattice import enumerate_uncolored, group_by_profile

    lam, n = (4, 3, 3, 1), 4
    rep = CheckReport("(4,3,3,1) n=4 showcase")
    target = displays.showcase_profile_weight()
    hits = [c for c, w in enumerate_uncolored(lam, n) if xpoly_from_mixed(w, n) == target]
    if not rep.record(len(hits) == 1, f"{len(hits)} uncoloured configurations carry the displayed weight"):
        return rep
    members = group_by_profile(lam, n).get(hits[0], [])
    rep.record(len(members) == 6, f"{len(members)} coloured configurations project onto the profile, expected 6")
    got = sorted(xpoly_from_mixed(w, n).render() for _, w in members)
    want = sorted(w.render() for w in displays.showcase_colored_weights())
    rep.record(got == want, "coloured weights differ from the six displayed ones")
    total = displays.showcase_colored_weights()
    acc = total[0]
    for w in total[1:]:
        acc = acc + w
    rep.record(acc == target, "the six displayed weights do not sum to the profile weight")
    rep.notes.append("profile weight includes (1-x2 u)(1-x3 u)(1-x4 u) from empty end-of-row vertices")
    return rep


def c10_colour(max_part: int = 3, max_n: int = 3) -> CheckReport:
    from .lattice import check_color_independence

    rep = CheckReport(f"colour independence lambda_1<={max_part} n<={max_n}")
    for lam, n in _range(max_part * max_n, max_n, max_part):
        rep.merge(check_color_independence(lam, n))
    return rep.merge(showcase_report())


def c11_oracles(max_size: int = 3, max_n: int = 3) -> CheckReport:
    from .special import hall_littlewood_reference, macdonald_reference, schur

    rep = CheckReport(f"oracle cross-checks |lambda|<={max_size} n<={max_n}")
    for lam, n in _range(max_size, max_n):
        P = macdonald_reference(lam, n)
        _compare(rep, f"q=0 vs Hall-Littlewood {lam} n={n}", P.substitute_params({"q": 0}), hall_littlewood_reference(lam, n))
        _compare(rep, f"q=t vs Schur {lam} n={n}", P.substitute_params({"q": RatFunc.gen("t")}), schur(lam, n))
    return rep


def _compositions(size: int, n: int):
    return (mu for mu in product(range(size + 1), repeat=n) if sum(mu) <= size)


def c12_simplification(max_size: int = 3, max_n: int = 3) -> CheckReport:
    from .mpa import eval_f

    rep = CheckReport(f"vacuum-family simplification |mu|<={max_size} n<={max_n}")
    for n in range(1, max_n + 1):
        for mu in _compositions(max_size, n):
            _compare(rep, f"f_{mu}", eval_f(mu, n, simplify=True), eval_f(mu, n, simplify=False))
    return rep


def c13_symmetry(max_size: int = 4, max_n: int = 3) -> CheckReport:
    from .mpa import check_symmetry, eval_P

    rep = CheckReport(f"symmetry and route agreement |lambda|<={max_size} n<={max_n}")
    for lam, n in _range(max_size, max_n):
        a = eval_P(lam, n, route="orbit")
        b = eval_P(lam, n, route="product")
        rep.merge(check_symmetry(a))
        _compare(rep, f"routes {lam} n={n}", a, b)
    return rep


CRITERIA = (
    Criterion(1, "f_21 display", 1.0, c1_f21),
    Criterion(2, "f_12, Omega_21, P_21 displays", 1.0, c2_f12_p21),
    Criterion(3, "Hecke relations", 10.0, c3_hecke),
    Criterion(4, "exchange relations", 120.0, c4_exchange),
    Criterion(5, "RLL relation", 120.0, c5_rll),
    Criterion(6, "ZF relation", 120.0, c6_zf),
    Criterion(7, "four-relation theorem", 30.0, c7_amazing),
    Criterion(8, "Macdonald reduction", 300.0, c8_macdonald),
    Criterion(9, "q=0 four-way agreement", 300.0, c9_bp),
    Criterion(10, "colour independence", 120.0, c10_colour),
    Criterion(11, "oracle cross-checks", 30.0, c11_oracles),
    Criterion(12, "simplification", 120.0, c12_simplification),
    Criterion(13, "symmetry and routes", None, c13_symmetry),
)


def run(criterion: Criterion) -> Outcome:
    start = time.perf_counter()
    report = criterion.run()
    return Outcome(criterion, report, time.perf_counter() - start)


def run_all(selected=None) -> list:
    wanted = set(selected) if selected else None
    return [run(c) for c in CRITERIA if wanted is None or c.number in wanted]
