"""Comparative serenity and patience of two discounters.

Alice discounts with ``alpha`` and Bob with ``beta``.  Alice is *more
patient* than Bob when, for every positive equal-total pair ``x`` dominating
``y``, her value ratio ``alpha.x / alpha.y`` is at most Bob's.  The finite
characterization used here is the division-free gap test

    alpha_1 * (beta_t - beta_{t+1}) >= beta_1 * (alpha_t - alpha_{t+1})

for every t < T.  Failures come with a re-verified counterexample pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    INFINITE,
    DiscountSequence,
    Exponential,
    Explicit,
    PreconditionError,
    PrizeSequence,
    QuasiHyperbolic,
    _Sequence,
    check_horizons,
    format_rational,
    parse_rational,
    ParameterError,
    realize,
    weighted_sum,
)
from .dominance import dominates


def _json_value(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(u) for u in v]
    if isinstance(v, dict):
        return {k: _json_value(u) for k, u in v.items()}
    return v


@dataclass(frozen=True)
class PatienceVerdict:
    holds: bool
    failing_index: Optional[int] = None
    witness: Optional[tuple[PrizeSequence, PrizeSequence]] = None
    diagnostics: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "failing_index": self.failing_index,
            "witness": None
            if self.witness is None
            else {"x": self.witness[0].to_json(), "y": self.witness[1].to_json()},
            "diagnostics": _json_value(self.diagnostics),
        }


# -- serenity ------------------------------------------------------------------


def serenity_gains(alpha: _Sequence, beta: _Sequence, x: PrizeSequence, y: PrizeSequence):
    """Unnormalized gains (alpha.x - alpha.y, beta.x - beta.y)."""
    return (
        weighted_sum(alpha, x) - weighted_sum(alpha, y),
        weighted_sum(beta, x) - weighted_sum(beta, y),
    )


def is_more_serene(alpha: DiscountSequence, beta: DiscountSequence) -> PatienceVerdict:
    """Holds iff ``beta - alpha`` is weakly decreasing and nonnegative.

    A monotonicity failure at ``k`` is witnessed by a unit prize at ``k``
    against a unit prize at ``k + 1``; a sign failure at ``k`` by the zero
    stream against ``-1`` at ``k``.  The second witness is dominated but does
    not keep totals equal, so the characterization is the one for the
    serenity comparison over all dominating pairs.
    """
    T = check_horizons(alpha, beta)
    d = [b - a for a, b in zip(alpha, beta)]
    for k in range(1, T):
        if d[k - 1] < d[k]:
            x, y = PrizeSequence.unit(T, k), PrizeSequence.unit(T, k + 1)
            return _serenity_failure(alpha, beta, k, x, y, "difference increases")
    for k in range(1, T + 1):
        if d[k - 1] < 0:
            x, y = PrizeSequence([0] * T), PrizeSequence.unit(T, k, -1)
            return _serenity_failure(alpha, beta, k, x, y, "difference negative")
    return PatienceVerdict(True)


def _serenity_failure(alpha, beta, k, x, y, reason) -> PatienceVerdict:
    ga, gb = serenity_gains(alpha, beta, x, y)
    assert ga > gb
    return PatienceVerdict(
        False, k, (x, y), {"reason": reason, "alpha_gain": ga, "beta_gain": gb}
    )


# -- patience: definition ----------------------------------------------------


def _check_patience_premises(alpha, beta, x, y) -> None:
    check_horizons(alpha, beta, x, y)
    if not x.is_positive():
        raise PreconditionError("x must be positive (entries >= 0)")
    if not y.is_positive():
        raise PreconditionError("y must be positive (entries >= 0)")
    if sum(x.values) != sum(y.values):
        raise PreconditionError("x and y must have equal totals")
    verdict = dominates(x, y)
    if not verdict.holds:
        raise PreconditionError(f"x does not dominate y (fails at period {verdict.failure_index})")
    if weighted_sum(alpha, y) == 0:
        raise PreconditionError("alpha.y is zero")
    if weighted_sum(beta, y) == 0:
        raise PreconditionError("beta.y is zero")


def patience_ratios(alpha, beta, x: PrizeSequence, y: PrizeSequence) -> tuple[Fraction, Fraction]:
    """``(alpha.x / alpha.y, beta.x / beta.y)`` after checking the premises."""
    _check_patience_premises(alpha, beta, x, y)
    return (
        weighted_sum(alpha, x) / weighted_sum(alpha, y),
        weighted_sum(beta, x) / weighted_sum(beta, y),
    )


def patience_gap(alpha, beta, x: PrizeSequence, y: PrizeSequence) -> Fraction:
    """``alpha.x/alpha.y - beta.x/beta.y``; positive means a violation."""
    ra, rb = patience_ratios(alpha, beta, x, y)
    return ra - rb


def definitional_patience_holds(alpha, beta, x: PrizeSequence, y: PrizeSequence,
                                normalized: bool = False) -> bool:
    """Evaluate the patience inequality on one instance.

    ``normalized=True`` compares ``beta.y/alpha.y <= beta.x/alpha.x``
    instead; the two forms are equivalent on the premises.
    """
    if normalized:
        _check_patience_premises(alpha, beta, x, y)
        return (weighted_sum(beta, y) / weighted_sum(alpha, y)
                <= weighted_sum(beta, x) / weighted_sum(alpha, x))
    ra, rb = patience_ratios(alpha, beta, x, y)
    return ra <= rb


# -- patience: characterization ------------------------------------------------


def _gap_condition(alpha, beta, t: int) -> tuple[Fraction, Fraction]:
    """(alpha_1 * beta-gap, beta_1 * alpha-gap) at 1-based t."""
    return (
        alpha[0] * (beta[t - 1] - beta[t]),
        beta[0] * (alpha[t - 1] - alpha[t]),
    )


def gap_failures(alpha, beta) -> list[int]:
    """All t < T at which the gap condition fails."""
    T = check_horizons(alpha, beta)
    out = []
    for t in range(1, T):
        lhs, rhs = _gap_condition(alpha, beta, t)
        if lhs < rhs:
            out.append(t)
    return out


def is_more_patient(alpha: DiscountSequence, beta: DiscountSequence) -> PatienceVerdict:
    """Decide whether Alice (``alpha``) is more patient than Bob (``beta``).

    With T = 1 there is no gap to compare and the relation holds vacuously.
    """
    failures = gap_failures(alpha, beta)
    if not failures:
        return PatienceVerdict(True)
    k = failures[0]
    x, y = patience_counterexample(alpha, beta)
    ra, rb = patience_ratios(alpha, beta, x, y)
    lhs, rhs = _gap_condition(alpha, beta, k)
    return PatienceVerdict(
        False,
        k,
        (x, y),
        {
            "alpha_ratio": ra,
            "beta_ratio": rb,
            "gap": ra - rb,
            "alpha1_times_beta_gap": lhs,
            "beta1_times_alpha_gap": rhs,
        },
    )


def first_equal_patience_check(alpha, beta) -> bool:
    """Gap test for discounters with alpha_1 == beta_1: beta's gaps dominate alpha's."""
    T = check_horizons(alpha, beta)
    if alpha[0] != beta[0]:
        raise PreconditionError("requires alpha_1 == beta_1")
    return all(beta[t] - beta[t + 1] >= alpha[t] - alpha[t + 1] for t in range(T - 1))


def two_period_check(alpha, beta) -> bool:
    if alpha.horizon != 2 or beta.horizon != 2:
        raise PreconditionError("two_period_check needs T = 2")
    return alpha[0] * beta[1] <= alpha[1] * beta[0]


def monotone_ratio_check(alpha, beta) -> bool:
    """alpha_t / beta_t weakly increasing in t (cross-multiplied)."""
    T = check_horizons(alpha, beta)
    return all(alpha[t] * beta[t + 1] <= alpha[t + 1] * beta[t] for t in range(T - 1))


@dataclass(frozen=True)
class GapRatioReport:
    adjacent_inf: Optional[Fraction]  # None stands for +infinity
    adjacent_argmin: Optional[int]
    ratio_sup: Fraction
    ratio_argmax: int
    threshold: Fraction
    per_index: tuple[dict, ...]

    @property
    def condition_holds(self) -> bool:
        return all(row["holds"] for row in self.per_index)

    def to_json(self) -> dict:
        return _json_value({
            "adjacent_inf": "+inf" if self.adjacent_inf is None else self.adjacent_inf,
            "adjacent_argmin": self.adjacent_argmin,
            "ratio_sup": self.ratio_sup,
            "ratio_argmax": self.ratio_argmax,
            "threshold": self.threshold,
            "per_index": list(self.per_index),
        })


def gap_ratio(alpha, beta, k: int, s: int) -> Optional[Fraction]:
    """(beta_k - beta_s) / (alpha_k - alpha_s), or None (+inf) when alpha is flat."""
    da = alpha[k - 1] - alpha[s - 1]
    if da == 0:
        return None
    return (beta[k - 1] - beta[s - 1]) / da


def _min_ratio(values):
    finite = [v for v in values if v is not None]
    return min(finite) if finite else None


def gap_ratio_report(alpha, beta) -> GapRatioReport:
    T = check_horizons(alpha, beta)
    if T < 2:
        raise PreconditionError("gap ratios need T >= 2")
    rows = []
    for t in range(1, T):
        lhs, rhs = _gap_condition(alpha, beta, t)
        rows.append({
            "t": t,
            "beta_gap": beta[t - 1] - beta[t],
            "alpha_gap": alpha[t - 1] - alpha[t],
            "ratio": gap_ratio(alpha, beta, t, t + 1),
            "lhs": lhs,
            "rhs": rhs,
            "holds": lhs >= rhs,
        })
    ratios = [r["ratio"] for r in rows]
    inf = _min_ratio(ratios)
    argmin = None if inf is None else 1 + ratios.index(inf)
    level = [beta[t] / alpha[t] for t in range(T - 1)]
    sup = max(level)
    return GapRatioReport(inf, argmin, sup, 1 + level.index(sup), beta[0] / alpha[0], tuple(rows))


def pairwise_gap_inf(alpha, beta) -> Optional[Fraction]:
    """Infimum of gap ratios over every pair k < s <= T (None is +inf)."""
    T = check_horizons(alpha, beta)
    return _min_ratio(gap_ratio(alpha, beta, k, s) for k in range(1, T) for s in range(k + 1, T + 1))


def patience_counterexample(alpha: DiscountSequence, beta: DiscountSequence):
    """A positive equal-total pair on which Alice loses more than Bob.

    If ``alpha_t / beta_t`` drops between t and t+1 the pair is a unit prize
    at t against one at t+1.  Otherwise, at the least failing gap index k,
    the pair is ``1`` at period 1 plus ``eta`` at k, against ``1`` at
    period 1 plus ``eta`` at k+1, with eta half of the largest admissible
    amount (or 1 when any amount works).  The pair is re-verified before it
    is returned.
    """
    T = check_horizons(alpha, beta)
    failures = gap_failures(alpha, beta)
    if not failures:
        raise PreconditionError("alpha is more patient than beta; no counterexample exists")

    swap = next((t for t in range(1, T) if alpha[t - 1] * beta[t] > alpha[t] * beta[t - 1]), None)
    if swap is not None:
        x, y = PrizeSequence.unit(T, swap), PrizeSequence.unit(T, swap + 1)
    else:
        k = failures[0]
        slack = beta[0] * (alpha[k - 1] - alpha[k]) - alpha[0] * (beta[k - 1] - beta[k])
        curvature = alpha[k] * beta[k - 1] - alpha[k - 1] * beta[k]
        eta = Fraction(1) if curvature == 0 else slack / curvature / 2
        xs = [Fraction(0)] * T
        ys = [Fraction(0)] * T
        xs[0] += 1
        ys[0] += 1
        xs[k - 1] += eta
        ys[k] += eta
        x, y = PrizeSequence(xs), PrizeSequence(ys)

    if definitional_patience_holds(alpha, beta, x, y):
        raise RuntimeError("constructed counterexample failed verification")
    return x, y


# -- parametric families ---------------------------------------------------------


def _exp_conditions_hold(a: Fraction, b: Fraction, T: int) -> bool:
    return all(b ** (t - 1) * (1 - b) >= a ** (t - 1) * (1 - a) for t in range(1, T))


def exponential_patience_threshold(b, T: int, iterations: int = 32) -> Fraction:
    """A factor ``a_bar`` such that Exponential(a) beats Exponential(b) for all a in [a_bar, 1).

    Every gap a**(t-1) * (1 - a) with t <= T-1 decreases in ``a`` once
    a >= (T-2)/(T-1), so it is enough to start there and bisect towards 1
    with exact rationals.  The value is sound but not necessarily minimal.
    """
    b = parse_rational(b)
    if not 0 < b < 1:
        raise ParameterError("b must lie in (0, 1)")
    if T == INFINITE or not isinstance(T, int) or T < 2:
        raise ParameterError("T must be a finite integer >= 2")
    lo = max(Fraction(T - 2, T - 1), b)
    if _exp_conditions_hold(lo, b, T):
        return lo
    hi = None
    j = 1
    while hi is None:
        cand = 1 - (1 - lo) / 2 ** j
        if _exp_conditions_hold(cand, b, T):
            hi = cand
        else:
            lo = cand
        j += 1
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if _exp_conditions_hold(mid, b, T):
            hi = mid
        else:
            lo = mid
    return hi


def exponential_infinite_collapse(a, b) -> Optional[int]:
    """Least t at which infinite-horizon exponential patience of ``a`` over ``b`` breaks.

    None when ``a == b``.
    """
    a, b = parse_rational(a), parse_rational(b)
    if not (0 < a < 1 and 0 < b < 1):
        raise ParameterError("factors must lie in (0, 1)")
    if a == b:
        return None
    if a < b:
        return 1
    t = 1
    while (b / a) ** (t - 1) * (1 - b) >= 1 - a:
        t += 1
    return t


def _qh_first_failure(A: QuasiHyperbolic, B: QuasiHyperbolic) -> Optional[int]:
    # with unit first weights the test at t is: B's gap >= A's gap
    def gap(f, t):
        return f.weight(t) - f.weight(t + 1)

    if (A.b, A.d) == (B.b, B.d):
        return None
    t = 1
    while True:
        if gap(B, t) < gap(A, t):
            return t
        # for t >= 2 the ratio of gaps moves geometrically with d_B / d_A;
        # if it does not shrink, t = 2 was the binding period
        if t >= 2 and B.d >= A.d:
            raise AssertionError("unreachable: distinct parameters always fail by t = 2")
        t += 1


def infinite_family_patience(A, B) -> PatienceVerdict:
    """Patience of parametric discounters over an infinite horizon.

    Exponential pairs follow the collapse result: only equal factors are
    comparable.  Quasi-hyperbolic pairs are decided period by period in
    closed form (a derived result: holds only for identical parameters).
    A failing verdict carries a finitely supported witness taken from the
    truncation just past the failing period.
    """
    if isinstance(A, Explicit) or isinstance(B, Explicit):
        raise PreconditionError("explicit sequences have no infinite-horizon form")
    if isinstance(A, Exponential) and isinstance(B, Exponential):
        t = exponential_infinite_collapse(A.a, B.a)
    elif isinstance(A, QuasiHyperbolic) and isinstance(B, QuasiHyperbolic):
        t = _qh_first_failure(A, B)
    else:
        raise PreconditionError("mixed exponential / quasi-hyperbolic pairs are not supported")
    if t is None:
        return PatienceVerdict(True, diagnostics={"horizon": INFINITE})
    T = t + 1
    alpha, beta = realize(A, T), realize(B, T)
    x, y = patience_counterexample(alpha, beta)
    ra, rb = patience_ratios(alpha, beta, x, y)
    return PatienceVerdict(
        False, t, (x, y),
        {"horizon": INFINITE, "t_dagger": t, "witness_horizon": T,
         "alpha_ratio": ra, "beta_ratio": rb, "gap": ra - rb},
    )
