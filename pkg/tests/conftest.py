from fractions import Fraction

import pytest
from hypothesis import strategies as st

from discountorder import DiscountSequence, PrizeSequence, WeightSequence

GOLDEN_ALPHA = ("1/2", "12/25", "91/250")
GOLDEN_BETA = ("1", "2/3", "1/2")
GOLDEN_X = ("1", "3/2", "1")
GOLDEN_Y = ("1", "1", "3/2")


@pytest.fixture
def golden():
    return (
        DiscountSequence(GOLDEN_ALPHA),
        DiscountSequence(GOLDEN_BETA),
        PrizeSequence(GOLDEN_X),
        PrizeSequence(GOLDEN_Y),
    )


def grid_fractions(g=6, lo=-6, hi=6):
    return st.integers(lo, hi).map(lambda k: Fraction(k, g))


@st.composite
def prize_pairs(draw, max_T=8, positive=False):
    T = draw(st.integers(1, max_T))
    elems = grid_fractions(lo=0 if positive else -6)
    x = draw(st.lists(elems, min_size=T, max_size=T))
    y = draw(st.lists(elems, min_size=T, max_size=T))
    return PrizeSequence(x), PrizeSequence(y)


@st.composite
def dominating_pairs(draw, max_T=8):
    """Positive equal-total pairs built by moving mass earlier."""
    T = draw(st.integers(1, max_T))
    y = draw(st.lists(st.integers(0, 6), min_size=T, max_size=T))
    x = list(y)
    for _ in range(draw(st.integers(0, 2 * T))):
        k = draw(st.integers(0, T - 1))
        s = draw(st.integers(0, T - 1))
        if k < s and x[s] > 0:
            amt = draw(st.integers(1, x[s]))
            x[s] -= amt
            x[k] += amt
    return PrizeSequence(Fraction(v, 6) for v in x), PrizeSequence(Fraction(v, 6) for v in y)


@st.composite
def discount_sequences(draw, T=None, g=6):
    T = T if T is not None else draw(st.integers(1, 6))
    vals = draw(st.lists(st.integers(1, g), min_size=T, max_size=T))
    return DiscountSequence(Fraction(v, g) for v in sorted(vals, reverse=True))


@st.composite
def weight_sequences(draw, T, g=6):
    vals = draw(st.lists(st.integers(0, g), min_size=T, max_size=T))
    return WeightSequence(Fraction(v, g) for v in sorted(vals, reverse=True))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if rep.when == "call" and "criterion" in props:
                lines.append((props["criterion"], outcome.upper()[:4]))
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"[{status}] {name}")
