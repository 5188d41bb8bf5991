from fractions import Fraction

import pytest
from hypothesis import given

from discountorder import (
    DiscountSequence,
    DeteriorationChain,
    DeteriorationStep,
    PrizeSequence,
    apply_step,
    decompose,
    dominates,
    ratio_trace,
)
from discountorder.core import PreconditionError

from conftest import GOLDEN_ALPHA, GOLDEN_BETA, discount_sequences, dominating_pairs


def P(*vals):
    return PrizeSequence(vals)


def test_apply_step():
    assert apply_step(P(3, 1, 0), DeteriorationStep(1, 3, 2)) == P(1, 1, 2)
    assert apply_step(P(1, 0), DeteriorationStep(1, 2, 1)) == P(0, 1)


def test_apply_step_positivity():
    with pytest.raises(PreconditionError):
        apply_step(P(1, 0), DeteriorationStep(1, 2, 2))
    # signed regime allows it
    assert apply_step(P(1, 0), DeteriorationStep(1, 2, 2), positive=False) == P(-1, 2)


def test_step_validation():
    with pytest.raises(ValueError):
        DeteriorationStep(2, 2, 1)
    with pytest.raises(ValueError):
        DeteriorationStep(1, 2, 0)
    with pytest.raises(IndexError):
        apply_step(P(1, 0), DeteriorationStep(1, 3, 1))


def test_decompose_single_step():
    chain = decompose(P(3, 1, 0), P(1, 1, 2))
    assert chain.steps == (DeteriorationStep(1, 3, 2),)


def test_decompose_identity():
    assert decompose(P(1, 2), P(1, 2)).steps == ()


def test_decompose_two_steps():
    chain = decompose(P(2, 0, 0), P(0, 1, 1))
    assert chain.steps == (DeteriorationStep(1, 2, 1), DeteriorationStep(1, 3, 1))
    assert chain.sequences() == [P(2, 0, 0), P(1, 1, 0), P(0, 1, 1)]


@pytest.mark.parametrize("x, y", [
    ((0, 1), (1, 0)),      # not dominating
    ((2, 0), (1, 0)),      # unequal totals
    ((2, -1), (0, 1)),     # not positive
])
def test_decompose_preconditions(x, y):
    with pytest.raises(PreconditionError):
        decompose(P(*x), P(*y))


@given(dominating_pairs())
def test_chain_soundness(pair):
    x, y = pair
    chain = decompose(x, y)
    zs = chain.sequences()
    assert zs[-1] == y
    assert len(chain) <= sum(a != b for a, b in zip(x, y))
    for i in range(len(zs)):
        assert zs[i].is_positive()
        assert sum(zs[i].values) == sum(x.values)
        for j in range(i + 1, len(zs)):
            assert dominates(zs[i], zs[j]).holds
    assert decompose(x, y) == chain


def test_ratio_trace_degenerate():
    alpha = DiscountSequence([1, "1/2"])
    beta = DiscountSequence([1, "1/3"])
    chain = DeteriorationChain(P(1, 1), ())
    assert ratio_trace(alpha, beta, chain) == [Fraction(4, 3) / Fraction(3, 2)]


@given(dominating_pairs(max_T=6), discount_sequences())
def test_ratio_trace_identical_agents(pair, alpha):
    x, y = pair
    if x.horizon != alpha.horizon or not any(y.values):
        return
    assert set(ratio_trace(alpha, alpha, decompose(x, y))) == {1}


def test_ratio_trace_golden_chain():
    alpha, beta = DiscountSequence(GOLDEN_ALPHA), DiscountSequence(GOLDEN_BETA)
    chain = decompose(P(1, "3/2", 1), P(1, 1, "3/2"))
    assert chain.steps == (DeteriorationStep(2, 3, Fraction(1, 2)),)
    trace = ratio_trace(alpha, beta, chain)
    # frozen from an independent Fraction evaluation: (5/2)/(198/125), (29/12)/(763/500)
    assert trace == [Fraction(625, 396), Fraction(3625, 2289)]
    assert trace[1] > trace[0]  # strict increase exposes the violation


def test_ratio_trace_zero_value():
    with pytest.raises(ZeroDivisionError):
        ratio_trace(DiscountSequence([1]), DiscountSequence([1]), DeteriorationChain(P(0), ()))


def test_ratio_trace_direction_under_patience():
    # beta.z / alpha.z can only fall as mass moves later when alpha is more patient
    from discountorder import is_more_patient
    from discountorder.oracle import TrialConfig, random_dominating_pair, random_patient_pair

    cfg = TrialConfig(seed=19, grid_denominator=6)
    rng = cfg.rng(5)
    checked = 0
    for _ in range(400):
        T = int(rng.integers(2, 7))
        alpha, beta = random_patient_pair(T, cfg, rng)
        assert is_more_patient(alpha, beta).holds
        x, y = random_dominating_pair(T, cfg, rng)
        zs = decompose(x, y).sequences()
        if any(not any(z.values) for z in zs):
            continue
        trace = ratio_trace(alpha, beta, decompose(x, y))
        assert all(a >= b for a, b in zip(trace, trace[1:]))
        checked += len(trace) > 1
    assert checked > 100
