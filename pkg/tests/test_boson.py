import pytest

from uvmac.boson import (
    GAUGES,
    BosonWord,
    DivergentTrace,
    braket,
    check_tboson_relations,
    k,
    k_power,
    phi,
    phid,
    trace_close,
    trace_word,
    truncated_trace,
)
from uvmac.exactalg import ZERO, RatFunc

q, t = RatFunc.gen("q"), RatFunc.gen("t")


@pytest.mark.parametrize("gauge", GAUGES)
def test_tboson_relations(gauge):
    assert check_tboson_relations(5, gauge).passed


def test_braket_fock_values():
    assert braket(BosonWord((phi, phid)), 2, 2, 4) == 1 - t**3
    assert braket(BosonWord((phid, phi)), 2, 2, 4) == 1 - t**2
    assert braket(BosonWord((k,)), 3, 3, 4) == t**3
    with pytest.raises(ValueError):
        braket(BosonWord((phid, phid)), 2, 0, 1)


def test_gauges_differ_by_rescaling():
    w = BosonWord((phid, phid))
    fock = braket(w, 2, 0, 3, "fock")
    path = braket(w, 2, 0, 3, "path")
    assert path == fock * (1 - t) * (1 - t**2)


def _q_valuation(r: RatFunc) -> int:
    val = lambda p: min(m[0] for m in p.monoms())  # noqa: E731
    return val(r.num) - val(r.den)


def _low_q_order_agrees(word, M):
    """Truncated and closed traces differ by sum_{m>M}, which is O(q^{M+1})."""
    residual = truncated_trace(word, M) - trace_close(trace_word(word))
    return residual.is_zero() or _q_valuation(residual) > M


@pytest.mark.parametrize(
    "gens",
    [
        (k_power(0, 1),),
        (k, k_power(0, 1)),
        (phi, phid, k_power(0, 1)),
        (phid, phi, k, k_power(0, 2)),
    ],
)
def test_symbolic_trace_matches_truncated_sum(gens):
    assert _low_q_order_agrees(BosonWord(gens), 6)


def test_trace_closed_forms():
    twist = k_power(0, 1)
    assert trace_close(trace_word(BosonWord((k, twist)))) == 1 / (1 - q * t)
    assert trace_close(trace_word(BosonWord((phid, twist)))) == ZERO


def test_untwisted_trace_diverges():
    with pytest.raises(DivergentTrace):
        trace_close(trace_word(BosonWord((phi, phid))))


def test_truncation_error_is_exactly_next_order():
    word = BosonWord((k_power(0, 1),))
    residual = truncated_trace(word, 4) - trace_close(trace_word(word))
    assert _q_valuation(residual) == 5
