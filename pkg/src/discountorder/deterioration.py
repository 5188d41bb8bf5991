"""Binary deteriorations and greedy deterioration chains.

A binary deterioration moves an amount ``eta > 0`` from an earlier period
``t1`` to a later period ``t2``.  Any equal-total pair with ``x`` dominating
``y`` is connected by a finite chain of them; :func:`decompose` builds that
chain greedily and the result can be replayed with :meth:`DeteriorationChain.sequences`.

Indices in this module are 1-based, matching the period labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PreconditionError,
    PrizeSequence,
    RationalLike,
    _Sequence,
    check_horizons,
    format_rational,
    parse_rational,
    weighted_sum,
)
from .dominance import dominates


@dataclass(frozen=True)
class DeteriorationStep:
    t1: int
    t2: int
    eta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eta", parse_rational(self.eta))
        if not (1 <= self.t1 < self.t2):
            raise ValueError(f"need 1 <= t1 < t2, got t1={self.t1}, t2={self.t2}")
        if self.eta <= 0:
            raise ValueError("deterioration amount must be strictly positive")

    def to_json(self) -> dict:
        return {"t1": self.t1, "t2": self.t2, "eta": format_rational(self.eta)}


def apply_step(x: PrizeSequence, step: DeteriorationStep, positive: bool = True) -> PrizeSequence:
    """Move ``step.eta`` from period ``t1`` to period ``t2``.

    With ``positive=True`` (the default) the amount may not exceed ``x[t1]``,
    so a positive stream stays positive.
    """
    T = x.horizon
    if step.t2 > T:
        raise IndexError(f"period {step.t2} outside horizon {T}")
    if positive and step.eta > x[step.t1 - 1]:
        raise PreconditionError(
            f"moving {format_rational(step.eta)} from period {step.t1} "
            f"would make it negative ({format_rational(x[step.t1 - 1])} available)"
        )
    vals = list(x.values)
    vals[step.t1 - 1] -= step.eta
    vals[step.t2 - 1] += step.eta
    return PrizeSequence(vals)


@dataclass(frozen=True)
class DeteriorationChain:
    start: PrizeSequence
    steps: tuple[DeteriorationStep, ...]

    def sequences(self) -> list[PrizeSequence]:
        """The start followed by the sequence after each step."""
        out = [self.start]
        for step in self.steps:
            out.append(apply_step(out[-1], step))
        return out

    @property
    def end(self) -> PrizeSequence:
        return self.sequences()[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "sequences": [z.to_json() for z in self.sequences()],
        }


def decompose(x: PrizeSequence, y: PrizeSequence) -> DeteriorationChain:
    """Greedy chain of binary deteriorations from ``x`` to ``y``.

    Each step takes t1 as the first period where the current sequence
    differs from ``y`` and t1' as the first period where it falls short of
    ``y``, and moves the smaller of the two gaps.
    """
    check_horizons(x, y)
    if not x.is_positive() or not y.is_positive():
        raise PreconditionError("both sequences must be positive (entries >= 0)")
    if sum(x.values) != sum(y.values):
        raise PreconditionError("sequences must have equal totals")
    verdict = dominates(x, y)
    if not verdict.holds:
        raise PreconditionError(f"x does not dominate y (fails at period {verdict.failure_index})")

    steps = []
    z = list(x.values)
    target = y.values
    while True:
        diff = [i for i, (a, b) in enumerate(zip(z, target)) if a != b]
        if not diff:
            break
        t1 = diff[0]
        t1p = next(i for i in diff if z[i] < target[i])
        # dominance plus equal totals force z[t1] > y[t1] and t1 < t1'
        assert z[t1] > target[t1] and t1p > t1
        eta = min(z[t1] - target[t1], target[t1p] - z[t1p])
        z[t1] -= eta
        z[t1p] += eta
        steps.append(DeteriorationStep(t1 + 1, t1p + 1, eta))
    return DeteriorationChain(x, tuple(steps))


def ratio_trace(alpha: _Sequence, beta: _Sequence, chain: DeteriorationChain) -> list[Fraction]:
    """``beta.z / alpha.z`` for every sequence ``z`` along the chain.

    When alpha is more patient than beta this list is weakly decreasing; a
    strict increase between consecutive entries exhibits a violation.
    """
    check_horizons(alpha, beta, chain.start)
    out = []
    for i, z in enumerate(chain.sequences()):
        num, den = weighted_sum(beta, z), weighted_sum(alpha, z)
        if num == 0 or den == 0:
            raise ZeroDivisionError(f"discounted value vanishes at chain position {i}")
        out.append(num / den)
    return out


def chain_from_steps(start: PrizeSequence, steps: list[tuple[int, int, RationalLike]]) -> DeteriorationChain:
    return DeteriorationChain(start, tuple(DeteriorationStep(a, b, e) for a, b, e in steps))
