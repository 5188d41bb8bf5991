"""Pointwise dominance, partial-sum dominance and superiority of prize streams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Optional

from .core import (
    PreconditionError,
    PrizeSequence,
    WeightSequence,
    check_horizons,
    format_rational,
)


@dataclass(frozen=True)
class DominanceVerdict:
    holds: bool
    failure_index: Optional[int] = None
    witness_weights: Optional[WeightSequence] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "failure_index": self.failure_index,
            "witness_weights": None if self.witness_weights is None else self.witness_weights.to_json(),
        }


def partial_sums(x: PrizeSequence) -> list[Fraction]:
    return list(accumulate(x.values))


def pointwise_dominates(x: PrizeSequence, y: PrizeSequence) -> bool:
    check_horizons(x, y)
    return all(a >= b for a, b in zip(x, y))


def dominates(x: PrizeSequence, y: PrizeSequence) -> DominanceVerdict:
    """Check that every partial sum of ``x`` weakly exceeds that of ``y``.

    On failure the verdict names the least violating period ``p`` (1-based)
    and the step weights ``(1, ..., 1, 0, ..., 0)`` with ``p`` ones, under
    which ``x`` is strictly worse than ``y``.
    """
    T = check_horizons(x, y)
    for p, (sx, sy) in enumerate(zip(partial_sums(x), partial_sums(y)), 1):
        if sx < sy:
            return DominanceVerdict(False, p, WeightSequence.step(T, p))
    return DominanceVerdict(True)


def is_superior(x: PrizeSequence, y: PrizeSequence) -> DominanceVerdict:
    """Superiority over every nonnegative decreasing weight sequence.

    This coincides with :func:`dominates`: ``x`` is weakly preferred to ``y``
    by every impatient agent iff each partial sum of ``x`` is at least the
    matching partial sum of ``y``.  The failure witness is a step sequence,
    itself a legal weight sequence.
    """
    return dominates(x, y)


def abel_sum(a: PrizeSequence, b: PrizeSequence) -> Fraction:
    """Summation by parts: sum_{t<T} A_t (b_t - b_{t+1}) + A_T b_T."""
    T = check_horizons(a, b)
    A = partial_sums(a)
    total = sum((A[t] * (b[t] - b[t + 1]) for t in range(T - 1)), Fraction(0))
    return total + A[T - 1] * b[T - 1]


def tighten(x: PrizeSequence, y: PrizeSequence) -> PrizeSequence:
    """Shave ``x`` down to a sequence with the same total as ``y``.

    With c_k the running excess of ``x`` over ``y`` and
    s_t = min_{t <= k <= T} c_k (s_0 = 0), the result is x_t - (s_t - s_{t-1}).
    It sits pointwise below ``x`` and still dominates ``y``.
    """
    T = check_horizons(x, y)
    verdict = dominates(x, y)
    if not verdict.holds:
        raise PreconditionError(
            f"x does not dominate y (partial sums fail at period {verdict.failure_index})"
        )
    excess = [sx - sy for sx, sy in zip(partial_sums(x), partial_sums(y))]
    suffix_min = excess[:]
    for t in range(T - 2, -1, -1):
        suffix_min[t] = min(excess[t], suffix_min[t + 1])
    prev = Fraction(0)
    out = []
    for t in range(T):
        out.append(x[t] - (suffix_min[t] - prev))
        prev = suffix_min[t]
    return PrizeSequence(out)


def describe(verdict: DominanceVerdict) -> str:
    if verdict.holds:
        return "dominates"
    w = ",".join(format_rational(v) for v in verdict.witness_weights)
    return f"fails at p={verdict.failure_index}, witness weights ({w})"
