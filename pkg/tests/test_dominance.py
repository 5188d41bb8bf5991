from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from discountorder import (
    HorizonMismatch,
    PrizeSequence,
    WeightSequence,
    abel_sum,
    dominates,
    is_superior,
    pointwise_dominates,
    tighten,
    weighted_sum,
)
from discountorder.core import PreconditionError

from conftest import dominating_pairs, prize_pairs, weight_sequences


def P(*vals):
    return PrizeSequence(vals)


def all_weight_sequences(T, levels=3):
    """Every decreasing sequence with entries in {0, 1/levels, ..., 1}."""
    for combo in combinations_with_replacement(range(levels, -1, -1), T):
        yield WeightSequence(Fraction(k, levels) for k in combo)


@pytest.mark.parametrize("x, y, expected", [
    ((1, 1), (1, 1), True),
    ((2, 0), (1, 1), False),
    ((3, 1, 0), (1, 1, 0), True),
])
def test_pointwise(x, y, expected):
    assert pointwise_dominates(P(*x), P(*y)) is expected


def test_dominates_golden_pair():
    v = dominates(P(1, "3/2", 1), P(1, 1, "3/2"))
    assert v.holds and v.failure_index is None and v.witness_weights is None


def test_dominates_delayed_unit_prize():
    v = dominates(P(0, 1), P(1, 0))
    assert not v.holds
    assert v.failure_index == 1
    assert v.witness_weights == WeightSequence([1, 0])


def test_dominates_derived():
    assert dominates(P(3, 1, 0), P(1, 1, 2)).holds


def test_horizon_mismatch():
    with pytest.raises(HorizonMismatch):
        dominates(P(1), P(1, 2))


@pytest.mark.parametrize("x, y, holds", [((2, 0), (1, 1), True), ((0, 2), (1, 1), False), ((5, -1, 2), (5, -1, 2), True)])
def test_is_superior(x, y, holds):
    v = is_superior(P(*x), P(*y))
    assert v.holds is holds
    if not holds:
        w = v.witness_weights
        assert w == WeightSequence([1, 0])
        assert weighted_sum(w, P(*x)) == 0 < 1 == weighted_sum(w, P(*y))


def test_failure_index_is_least():
    # partial sums of x - y: -1, 0, -2
    v = dominates(P(0, 2, -1), P(1, 0, 1))
    assert v.failure_index == 1


@given(prize_pairs(max_T=4))
@settings(max_examples=150)
def test_dominance_matches_exhaustive_weight_grid(pair):
    """Brute force over every grid weight sequence, independent of partial sums."""
    x, y = pair
    brute = all(weighted_sum(w, x) >= weighted_sum(w, y) for w in all_weight_sequences(x.horizon))
    assert dominates(x, y).holds == brute


@given(prize_pairs())
def test_verdict_invariants(pair):
    x, y = pair
    v = dominates(x, y)
    if v.holds:
        return
    p = v.failure_index
    assert sum(x.values[:p]) < sum(y.values[:p])
    assert all(sum(x.values[:q]) >= sum(y.values[:q]) for q in range(1, p))
    assert v.witness_weights == WeightSequence.step(x.horizon, p)
    assert weighted_sum(v.witness_weights, x) < weighted_sum(v.witness_weights, y)


@given(prize_pairs())
def test_pointwise_implies_dominance(pair):
    x, y = pair
    if pointwise_dominates(x, y):
        assert dominates(x, y).holds


@pytest.mark.parametrize("a, b, expected", [
    ((1, 1), (1, 1), 2),
    ((1, 2, 3), (3, 2, 1), 10),
    (("2/3",), ("-9/4",), Fraction(-3, 2)),
])
def test_abel_sum(a, b, expected):
    assert abel_sum(P(*a), P(*b)) == expected


@given(prize_pairs())
def test_abel_sum_equals_inner_product(pair):
    a, b = pair
    assert abel_sum(a, b) == sum(u * v for u, v in zip(a, b))


@pytest.mark.parametrize("x, y, expected", [
    ((2, 1), (1, 1), (1, 1)),
    ((2, 0), (1, 1), (2, 0)),
    ((1, 2, 3), (1, 2, 3), (1, 2, 3)),
])
def test_tighten_examples(x, y, expected):
    assert tighten(P(*x), P(*y)) == P(*expected)


def test_tighten_precondition():
    with pytest.raises(PreconditionError):
        tighten(P(0, 1), P(1, 0))


@st.composite
def surplus_pairs(draw):
    """Dominating pairs where x may carry a surplus total over y."""
    x, y = draw(dominating_pairs())
    bump = draw(st.lists(st.integers(0, 3), min_size=x.horizon, max_size=x.horizon))
    return x + PrizeSequence(Fraction(v, 6) for v in bump), y


@given(surplus_pairs(), st.data())
def test_tighten_postconditions_and_sandwich(pair, data):
    x, y = pair
    assert dominates(x, y).holds
    xt = tighten(x, y)
    assert pointwise_dominates(x, xt)
    assert sum(xt.values) == sum(y.values)
    assert dominates(xt, y).holds
    w = data.draw(weight_sequences(x.horizon))
    assert weighted_sum(w, x) >= weighted_sum(w, xt) >= weighted_sum(w, y)
