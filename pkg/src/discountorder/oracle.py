"""Brute-force oracles and seeded random instance generators.

The oracles only use definitions: they sample weight sequences or prize
pairs and evaluate the defining inequality exactly.  Instances live on the
grid ``k / grid_denominator`` and are evaluated as scaled integers (ratio
comparisons are invariant under a common positive rescaling), so numpy can
do the bulk arithmetic without rounding.  Values that could overflow int64
fall back to Python integers in object arrays.

Randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence(seed, spawn_key=...)``; one stream per purpose, so identical
configurations reproduce identical instance streams.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional

import numpy as np

from .core import DiscountSequence, PrizeSequence, WeightSequence, check_horizons
from .dominance import dominates, partial_sums
from .patience import is_more_patient

_INT64_SAFE = 2**62

# stream tags for SeedSequence spawn keys
_WEIGHTS, _PAIRS, _DETERIORATIONS, _SIGNED, _SIGNED_EQ, _SAMPLES = range(6)


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 0
    trials: int = 200
    horizon_max: int = 6
    grid_denominator: int = 6
    # oracle draws per outer case when a suite nests oracles inside trials
    instances: int = 200

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name in ("trials", "horizon_max", "grid_denominator", "instances"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def rng(self, *stream: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=stream)))

    def to_json(self) -> dict:
        return {"prng": "PCG64", **asdict(self)}


# -- exact integer helpers -----------------------------------------------------


def _lcm_denominator(values) -> int:
    return math.lcm(*(Fraction(v).denominator for v in values))


def _scaled_ints(values) -> list[int]:
    m = _lcm_denominator(values)
    return [int(v * m) for v in values]


def _dot(M: np.ndarray, v: list[int]) -> np.ndarray:
    bound = (int(np.abs(M).max()) if M.size else 0) * sum(abs(c) for c in v)
    if M.dtype != object and bound < _INT64_SAFE:
        return M @ np.asarray(v, dtype=np.int64)
    return M.astype(object) @ np.asarray(v, dtype=object)


def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0:
        return a
    bound = int(np.abs(a).max()) * int(np.abs(b).max())
    if a.dtype != object and b.dtype != object and bound < _INT64_SAFE:
        return a * b
    return a.astype(object) * b.astype(object)


def _rows_to_ints(pairs) -> tuple[np.ndarray, np.ndarray]:
    """Rescale each (x, y) Fraction pair to integers by its own denominator."""
    X, Y = [], []
    for x, y in pairs:
        m = _lcm_denominator(list(x) + list(y))
        X.append([int(v * m) for v in x])
        Y.append([int(v * m) for v in y])
    X = np.array(X, dtype=object)
    Y = np.array(Y, dtype=object)
    if X.size and max(int(np.abs(X).max()), int(np.abs(Y).max())) < 2**31:
        return X.astype(np.int64), Y.astype(np.int64)
    return X, Y


def _grid_seq(ints, g: int, cls):
    return cls(Fraction(int(v), g) for v in ints)


# -- generators ------------------------------------------------------------------


def _weight_rows(rng: np.random.Generator, n: int, T: int, g: int) -> np.ndarray:
    W = -np.sort(-rng.integers(0, g + 1, size=(n, T)), axis=1)
    # zero tails and ties with positive probability
    cut = rng.integers(1, T + 1, size=n)
    tail = rng.random(n) < 0.25
    W[tail[:, None] & (np.arange(T)[None, :] >= cut[:, None])] = 0
    tie = rng.random(n) < 0.15
    W[tie] = W[tie, :1]
    return W


def random_weight_sequence(T: int, config: TrialConfig, rng: Optional[np.random.Generator] = None) -> WeightSequence:
    """Nonnegative, weakly decreasing weights on the grid ``k / grid_denominator``."""
    rng = rng if rng is not None else config.rng(_WEIGHTS, T)
    g = config.grid_denominator
    return _grid_seq(_weight_rows(rng, 1, T, g)[0], g, WeightSequence)


def random_discount_sequence(T: int, config: TrialConfig, rng: Optional[np.random.Generator] = None) -> DiscountSequence:
    rng = rng if rng is not None else config.rng(_SAMPLES, T)
    g = config.grid_denominator
    vals = -np.sort(-rng.integers(1, g + 1, size=T))
    return _grid_seq(vals, g, DiscountSequence)


def _dominating_rows(rng: np.random.Generator, n: int, T: int, g: int, steps: Optional[int] = None):
    """Positive equal-total pairs with X dominating Y, built by inverse deteriorations."""
    Y = rng.integers(0, g + 1, size=(n, T))
    X = Y.copy()
    rows = np.arange(n)
    for _ in range(T if steps is None else steps):
        a = rng.integers(0, T, size=n)
        b = rng.integers(0, T, size=n)
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        amount = rng.integers(0, X[rows, hi] + 1) * (lo < hi)
        X[rows, hi] -= amount
        X[rows, lo] += amount
    return X, Y


def random_dominating_pair(T: int, config: TrialConfig, rng: Optional[np.random.Generator] = None):
    """Positive pair ``(x, y)`` with equal totals and ``x`` dominating ``y``.

    ``y`` is drawn from the grid and mass is moved from later to earlier
    periods; each such move is a binary deterioration read backwards.
    """
    rng = rng if rng is not None else config.rng(_PAIRS, T)
    g = config.grid_denominator
    steps = int(rng.integers(0, T + 1))
    X, Y = _dominating_rows(rng, 1, T, g, steps)
    return _grid_seq(X[0], g, PrizeSequence), _grid_seq(Y[0], g, PrizeSequence)


def random_signed_pair(T: int, config: TrialConfig, rng: np.random.Generator, equal_sums: bool = False):
    """Signed pair with ``x`` dominating ``y``; totals equal when ``equal_sums``."""
    X, Y = _signed_rows(rng, 1, T, config.grid_denominator, equal_sums)
    g = config.grid_denominator
    return _grid_seq(X[0], g, PrizeSequence), _grid_seq(Y[0], g, PrizeSequence)


def _signed_rows(rng, n, T, g, equal_sums):
    Y = rng.integers(-g, g + 1, size=(n, T))
    P = rng.integers(0, g + 1, size=(n, T))
    P[rng.random((n, T)) < 0.3] = 0
    if equal_sums:
        P[:, -1] = 0
    D = np.diff(P, axis=1, prepend=0)
    return Y + D, Y


def random_patient_pair(T: int, config: TrialConfig, rng: np.random.Generator):
    """``(alpha, beta)`` with alpha more patient than beta, built from the gap test."""
    alpha = random_discount_sequence(T, config, rng)
    return alpha, random_less_patient(alpha, config, rng)


def random_less_patient(alpha: DiscountSequence, config: TrialConfig, rng: np.random.Generator) -> DiscountSequence:
    """A discount sequence over which ``alpha`` is more patient."""
    g = config.grid_denominator
    T = alpha.horizon
    b1 = Fraction(int(rng.integers(1, g + 1)), g)
    scale = b1 / alpha[0]
    # leftover mass at the last period, part of which becomes extra gap
    slack = scale * alpha[T - 1] * Fraction(int(rng.integers(0, g)), g)
    shares = rng.integers(0, 3, size=max(T - 1, 1))
    total = int(shares.sum())
    vals = [b1]
    for t in range(T - 1):
        extra = slack * Fraction(int(shares[t]), total) if total else Fraction(0)
        vals.append(vals[-1] - scale * (alpha[t] - alpha[t + 1]) - extra)
    return DiscountSequence(vals)


def random_serene_pair(T: int, config: TrialConfig, rng: np.random.Generator):
    """``(alpha, beta)`` with ``beta - alpha`` nonnegative and weakly decreasing."""
    g = config.grid_denominator
    alpha = random_discount_sequence(T, config, rng)
    d = _weight_rows(rng, 1, T, g)[0]
    return alpha, DiscountSequence(a + Fraction(int(v), g * g) for a, v in zip(alpha, d))


def enumerate_discount_grid(T: int, g: int) -> list[DiscountSequence]:
    """Every weakly decreasing sequence with entries in {1/g, ..., g/g}."""
    return [
        DiscountSequence(Fraction(k, g) for k in combo)
        for combo in combinations_with_replacement(range(g, 0, -1), T)
    ]


# -- superiority oracle --------------------------------------------------------------


@lru_cache(maxsize=64)
def _weight_bank(T: int, config: TrialConfig) -> np.ndarray:
    random_rows = _weight_rows(config.rng(_WEIGHTS, T), config.trials, T, config.grid_denominator)
    steps = np.tril(np.ones((T, T), dtype=np.int64))  # row p-1 = p ones then zeros
    return np.vstack([steps, random_rows])


def find_superiority_violation(x: PrizeSequence, y: PrizeSequence, config: TrialConfig) -> Optional[WeightSequence]:
    """First sampled weight sequence under which ``x`` is strictly worse than ``y``."""
    T = check_horizons(x, y)
    m = _lcm_denominator(list(x) + list(y))
    diff = [int((a - b) * m) for a, b in zip(x, y)]
    W = _weight_bank(T, config)
    bad = np.flatnonzero(_dot(W, diff) < 0)
    if bad.size == 0:
        return None
    return WeightSequence(int(v) for v in W[bad[0]])


def superiority_oracle(x: PrizeSequence, y: PrizeSequence, config: TrialConfig) -> bool:
    """No sampled weight sequence (including all step sequences) prefers ``y``."""
    return find_superiority_violation(x, y, config) is None


# -- serenity oracle -----------------------------------------------------------------


@lru_cache(maxsize=64)
def _serenity_bank(T: int, config: TrialConfig, equal_sums: bool) -> np.ndarray:
    g = config.grid_denominator
    X, Y = _signed_rows(config.rng(_SIGNED_EQ if equal_sums else _SIGNED, T), config.trials, T, g, equal_sums)
    eye = np.eye(T, dtype=np.int64)
    structured = [eye[k] - eye[k + 1] for k in range(T - 1)]
    if not equal_sums:
        structured += [eye[k] for k in range(T)]  # zero stream against -1 at k
    return np.vstack(structured + [X - Y]) if structured else X - Y


def find_serenity_violation(alpha, beta, config: TrialConfig, equal_sums: bool = False) -> Optional[PrizeSequence]:
    """First sampled difference ``x - y`` on which Alice gains more than Bob.

    Pairs are signed with ``x`` dominating ``y``.  With ``equal_sums`` only
    equal-total pairs are drawn.
    """
    T = check_horizons(alpha, beta)
    d = _scaled_ints([b - a for a, b in zip(alpha, beta)])
    D = _serenity_bank(T, config, equal_sums)
    bad = np.flatnonzero(_dot(D, d) < 0)
    if bad.size == 0:
        return None
    return PrizeSequence(int(v) for v in D[bad[0]])


def serenity_oracle(alpha, beta, config: TrialConfig, equal_sums: bool = False) -> bool:
    return find_serenity_violation(alpha, beta, config, equal_sums) is None


# -- patience oracle -----------------------------------------------------------------


def _structured_patience_pairs(T: int, g: int):
    etas = sorted({Fraction(j, g) for j in range(1, 2 * g + 1)} | {Fraction(1, 2**j) for j in range(1, 41)})
    pairs = []
    for t in range(1, T):
        pairs.append((PrizeSequence.unit(T, t), PrizeSequence.unit(T, t + 1)))
    for k in range(1, T):
        for eta in etas:
            x = [Fraction(0)] * T
            y = [Fraction(0)] * T
            x[0] += 1
            y[0] += 1
            x[k - 1] += eta
            y[k] += eta
            pairs.append((x, y))
    return pairs


def _deterioration_rows(rng, budget: int, T: int, g: int):
    X, Y = [], []
    while len(X) < budget:
        base = rng.integers(0, g + 1, size=T)
        if not base.any():
            continue
        for k in range(T):
            for s in range(k + 1, T):
                for eta in range(1, int(base[k]) + 1):
                    z = base.copy()
                    z[k] -= eta
                    z[s] += eta
                    X.append(base)
                    Y.append(z)
    return np.array(X, dtype=np.int64).reshape(-1, T), np.array(Y, dtype=np.int64).reshape(-1, T)


def _nonzero_dominating_rows(rng, n: int, T: int, g: int):
    # all-zero y has no defined ratio, so redraw until n usable pairs remain
    Xs, Ys, have = [], [], 0
    while have < n:
        X, Y = _dominating_rows(rng, n, T, g)
        keep = Y.any(axis=1)
        Xs.append(X[keep])
        Ys.append(Y[keep])
        have += int(keep.sum())
    return np.vstack(Xs)[:n], np.vstack(Ys)[:n]


@dataclass(frozen=True)
class _PatienceBank:
    X: np.ndarray
    Y: np.ndarray
    family: np.ndarray  # 0 = random pairs, 1 = single deteriorations, 2 = structured


@lru_cache(maxsize=64)
def _patience_bank(T: int, config: TrialConfig) -> _PatienceBank:
    g = config.grid_denominator
    Xa, Ya = _nonzero_dominating_rows(config.rng(_PAIRS, T), config.trials, T, g)
    Xb, Yb = (np.zeros((0, T), np.int64),) * 2
    if T > 1:
        Xb, Yb = _deterioration_rows(config.rng(_DETERIORATIONS, T), config.trials, T, g)
    Xc, Yc = _rows_to_ints(_structured_patience_pairs(T, g)) if T > 1 else ((np.zeros((0, T), np.int64),) * 2)
    parts = [(Xa, Ya), (Xb, Yb), (Xc, Yc)]
    obj = any(p.dtype == object for pair in parts for p in pair)
    cast = (lambda a: a.astype(object)) if obj else (lambda a: a)
    X = np.vstack([cast(p[0]) for p in parts])
    Y = np.vstack([cast(p[1]) for p in parts])
    family = np.concatenate([np.full(len(p[0]), i) for i, p in enumerate(parts)])
    keep = np.array([bool(row.any()) for row in Y]) if Y.dtype == object else Y.any(axis=1)
    return _PatienceBank(X[keep], Y[keep], family[keep])


def patience_instance_count(T: int, config: TrialConfig) -> dict:
    bank = _patience_bank(T, config)
    return {name: int((bank.family == i).sum()) for i, name in enumerate(("random", "deterioration", "structured"))}


def find_patience_violation(alpha, beta, config: TrialConfig):
    """First sampled ``(x, y, family)`` with ``alpha.x/alpha.y > beta.x/beta.y``.

    Instance families, in evaluation order: random positive dominating pairs
    (``config.trials`` of them), every single binary deterioration of random
    grid-valued positive streams (at least ``config.trials``), and the
    structured unit-swap and three-period families over a grid of amounts
    plus the dyadic amounts 2**-1 ... 2**-40.
    """
    T = check_horizons(alpha, beta)
    bank = _patience_bank(T, config)
    a, b = _scaled_ints(alpha), _scaled_ints(beta)
    ax, ay = _dot(bank.X, a), _dot(bank.Y, a)
    bx, by = _dot(bank.X, b), _dot(bank.Y, b)
    bad = np.flatnonzero(_mul(ax, by) > _mul(bx, ay))
    if bad.size == 0:
        return None
    i = bad[0]
    x = PrizeSequence(int(v) for v in bank.X[i])
    y = PrizeSequence(int(v) for v in bank.Y[i])
    return x, y, ("random", "deterioration", "structured")[int(bank.family[i])]


def patience_oracle(alpha, beta, config: TrialConfig) -> bool:
    return find_patience_violation(alpha, beta, config) is None


# -- relation properties -----------------------------------------------------------


def _relation_matrix(seqs) -> np.ndarray:
    n = len(seqs)
    P = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            P[i, j] = is_more_patient(seqs[i], seqs[j]).holds
    return P


def _grid_relation_report(T: int, g: int) -> dict:
    seqs = enumerate_discount_grid(T, g)
    P = _relation_matrix(seqs)
    n = len(seqs)
    Pi = P.astype(np.int64)
    chained = Pi @ Pi  # number of middle agents linking i -> j
    transitive_premises = int(chained.sum())
    trans_bad = np.argwhere((chained > 0) & ~P)
    first = np.array([s[0] for s in seqs], dtype=object)
    same_first = first[:, None] == first[None, :]
    off_diag = ~np.eye(n, dtype=bool)
    anti_bad = np.argwhere(P & P.T & same_first & off_diag)
    refl_bad = np.flatnonzero(~np.diag(P))
    violation = None
    if trans_bad.size:
        i, k = trans_bad[0]
        j = int(np.flatnonzero(P[i] & P[:, k])[0])
        violation = {"kind": "transitivity", "agents": [seqs[int(i)].to_json(), seqs[j].to_json(), seqs[int(k)].to_json()]}
    elif anti_bad.size:
        i, j = anti_bad[0]
        violation = {"kind": "antisymmetry", "agents": [seqs[int(i)].to_json(), seqs[int(j)].to_json()]}
    elif refl_bad.size:
        violation = {"kind": "reflexivity", "agents": [seqs[int(refl_bad[0])].to_json()]}
    return {
        "T": T,
        "grid": g,
        "agents": n,
        "triples": n**3,
        "transitivity_premises": transitive_premises,
        "transitivity_violations": int(len(trans_bad)),
        "antisymmetry_pairs_checked": int((same_first & off_diag).sum()),
        "antisymmetry_violations": int(len(anti_bad)),
        "reflexivity_violations": int(len(refl_bad)),
        "first_violation": violation,
    }


def relation_property_suite(config: TrialConfig, grids=((2, 4), (3, 3))) -> dict:
    """Reflexivity, transitivity and antisymmetry (equal first weights) of patience.

    Exhaustive over each ``(T, grid)`` in ``grids``, then ``config.trials``
    sampled triples built as patience chains at horizons up to
    ``config.horizon_max``.
    """
    exhaustive = [_grid_relation_report(T, g) for T, g in grids]
    rng = config.rng(_SAMPLES, 7)
    trans_bad = anti_bad = 0
    first_violation = None
    for _ in range(config.trials):
        T = int(rng.integers(2, config.horizon_max + 1)) if config.horizon_max >= 2 else 1
        alpha = random_discount_sequence(T, config, rng)
        beta = random_less_patient(alpha, config, rng)
        gamma = random_less_patient(beta, config, rng)
        if not (is_more_patient(alpha, beta).holds and is_more_patient(beta, gamma).holds):
            raise AssertionError("patience chain generator produced a non-chain")
        if not is_more_patient(alpha, gamma).holds:
            trans_bad += 1
            first_violation = first_violation or {
                "kind": "transitivity", "agents": [alpha.to_json(), beta.to_json(), gamma.to_json()]}
        # antisymmetry probe: rescale so first weights agree
        beta_eq = DiscountSequence(v * alpha[0] / beta[0] for v in beta)
        if beta_eq != alpha and is_more_patient(alpha, beta_eq).holds and is_more_patient(beta_eq, alpha).holds:
            anti_bad += 1
            first_violation = first_violation or {
                "kind": "antisymmetry", "agents": [alpha.to_json(), beta_eq.to_json()]}
    total_bad = sum(r["transitivity_violations"] + r["antisymmetry_violations"] + r["reflexivity_violations"]
                    for r in exhaustive) + trans_bad + anti_bad
    return {
        "passed": total_bad == 0,
        "exhaustive": exhaustive,
        "sampled": {"chains": config.trials, "transitivity_violations": trans_bad,
                    "antisymmetry_violations": anti_bad, "first_violation": first_violation},
    }


# -- suites ---------------------------------------------------------------------------


def _horizon(rng, config: TrialConfig) -> int:
    return int(rng.integers(1, config.horizon_max + 1))


def _inner(config: TrialConfig) -> TrialConfig:
    return replace(config, trials=config.instances)


def dominance_suite(config: TrialConfig) -> dict:
    """Superiority oracle vs partial-sum dominance, plus the lemma checks."""
    from .deterioration import decompose
    from .dominance import abel_sum, pointwise_dominates, tighten
    from .core import weighted_sum

    rng = config.rng(_SAMPLES, 1)
    inner = _inner(config)
    counts = dict(pairs=0, dominating=0, disagreements=0, witness_failures=0,
                  abel_failures=0, tighten_failures=0, chain_failures=0, pointwise_failures=0)
    first = None

    def fail(key, **info):
        nonlocal first
        counts[key] += 1
        if first is None:
            first = {"check": key, **{k: v.to_json() if hasattr(v, "to_json") else v for k, v in info.items()}}

    for i in range(config.trials):
        T = _horizon(rng, config)
        g = config.grid_denominator
        if i % 3 == 0:
            x, y = random_dominating_pair(T, config, rng)
        elif i % 3 == 1:
            x, y = random_signed_pair(T, config, rng)
        else:
            x, y = (_grid_seq(rng.integers(-g, g + 1, size=T), g, PrizeSequence) for _ in range(2))
        counts["pairs"] += 1
        verdict = dominates(x, y)
        if superiority_oracle(x, y, inner) != verdict.holds:
            fail("disagreements", x=x, y=y)
        if not verdict.holds:
            w = verdict.witness_weights
            if not weighted_sum(w, x) < weighted_sum(w, y):
                fail("witness_failures", x=x, y=y)
        if pointwise_dominates(x, y) and not verdict.holds:
            fail("pointwise_failures", x=x, y=y)
        if abel_sum(x, y) != sum(a * b for a, b in zip(x, y)):
            fail("abel_failures", x=x, y=y)
        if verdict.holds:
            counts["dominating"] += 1
            xt = tighten(x, y)
            ok = (pointwise_dominates(x, xt) and sum(xt.values) == sum(y.values)
                  and all(a >= b for a, b in zip(partial_sums(xt), partial_sums(y))))
            beta = random_weight_sequence(T, config, rng)
            ok = ok and weighted_sum(beta, x) >= weighted_sum(beta, xt) >= weighted_sum(beta, y)
            if not ok:
                fail("tighten_failures", x=x, y=y)
            if x.is_positive() and y.is_positive() and sum(x.values) == sum(y.values):
                chain = decompose(x, y)
                zs = chain.sequences()
                ok = zs[-1] == y and all(dominates(zs[j], zs[j + 1]).holds for j in range(len(zs) - 1))
                ok = ok and len(chain) <= sum(1 for a, b in zip(x, y) if a != b)
                if not ok:
                    fail("chain_failures", x=x, y=y)
    bad = sum(v for k, v in counts.items() if k not in ("pairs", "dominating"))
    return {"passed": bad == 0, "counts": counts, "first_violation": first}


def serenity_suite(config: TrialConfig) -> dict:
    from .patience import is_more_serene

    rng = config.rng(_SAMPLES, 2)
    inner = _inner(config)
    counts = dict(pairs=0, serene=0, disagreements=0, witness_failures=0)
    first = None
    for i in range(config.trials):
        T = _horizon(rng, config)
        if i % 2 == 0:
            alpha, beta = random_serene_pair(T, config, rng)
        else:
            alpha, beta = random_discount_sequence(T, config, rng), random_discount_sequence(T, config, rng)
        counts["pairs"] += 1
        verdict = is_more_serene(alpha, beta)
        counts["serene"] += verdict.holds
        if serenity_oracle(alpha, beta, inner) != verdict.holds:
            counts["disagreements"] += 1
            first = first or {"alpha": alpha.to_json(), "beta": beta.to_json()}
        if not verdict.holds:
            x, y = verdict.witness
            ga = sum(a * (u - v) for a, u, v in zip(alpha, x, y))
            gb = sum(b * (u - v) for b, u, v in zip(beta, x, y))
            if not (dominates(x, y).holds and ga > gb):
                counts["witness_failures"] += 1
                first = first or {"alpha": alpha.to_json(), "beta": beta.to_json(), "witness": True}
    bad = counts["disagreements"] + counts["witness_failures"]
    return {"passed": bad == 0, "counts": counts, "first_violation": first}


def patience_suite(config: TrialConfig) -> dict:
    from .patience import (
        definitional_patience_holds,
        monotone_ratio_check,
        patience_counterexample,
        two_period_check,
    )

    rng = config.rng(_SAMPLES, 3)
    inner = _inner(config)
    counts = dict(pairs=0, patient=0, disagreements=0, witness_failures=0,
                  monotone_failures=0, two_period_failures=0)
    first = None
    for i in range(config.trials):
        T = _horizon(rng, config)
        if i % 2 == 0:
            alpha, beta = random_patient_pair(T, config, rng)
        else:
            alpha, beta = random_discount_sequence(T, config, rng), random_discount_sequence(T, config, rng)
        counts["pairs"] += 1
        verdict = is_more_patient(alpha, beta)
        counts["patient"] += verdict.holds
        if patience_oracle(alpha, beta, inner) != verdict.holds:
            counts["disagreements"] += 1
            first = first or {"alpha": alpha.to_json(), "beta": beta.to_json()}
        if not verdict.holds:
            x, y = patience_counterexample(alpha, beta)
            if definitional_patience_holds(alpha, beta, x, y):
                counts["witness_failures"] += 1
        elif not monotone_ratio_check(alpha, beta):
            counts["monotone_failures"] += 1
        if T == 2 and two_period_check(alpha, beta) != verdict.holds:
            counts["two_period_failures"] += 1
    bad = sum(v for k, v in counts.items() if k not in ("pairs", "patient"))
    return {"passed": bad == 0, "counts": counts, "first_violation": first}


SUITES = {
    "dominance": dominance_suite,
    "serenity": serenity_suite,
    "patience": patience_suite,
    "relation": relation_property_suite,
}


def run_suites(name: str, config: TrialConfig) -> dict:
    """Run one suite or ``"all"``; the report is deterministic for a given config."""
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    suites = {n: SUITES[n](config) for n in names}
    return {"config": config.to_json(), "passed": all(s["passed"] for s in suites.values()), "suites": suites}
