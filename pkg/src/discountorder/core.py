"""Exact scalars, prize/discount/weight sequences and parametric discounters.

Every verdict in this package is computed on :class:`fractions.Fraction`
values.  Floats are rejected at the boundary so that no weak inequality can
be flipped by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

INFINITE = "inf"


class SequenceError(ValueError):
    """A sequence violates the invariants of its type."""


class HorizonMismatch(SequenceError):
    pass


class ParameterError(ValueError):
    """A discount-family parameter is outside its legal range."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"``, ``"n"``, an int or a Fraction into a Fraction.

    Floats and bools are refused: neither carries an exact rational.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def approx(r: Fraction, digits: int = 6) -> str:
    """Human-readable decimal, marked as approximate."""
    return f"≈{float(r):.{digits}g}"


@dataclass(frozen=True)
class _Sequence:
    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[RationalLike]):
        vals = tuple(parse_rational(v) for v in values)
        if not vals:
            raise SequenceError("horizon must be a positive integer")
        object.__setattr__(self, "values", vals)
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def horizon(self) -> int:
        return len(self.values)

    T = horizon

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self) -> str:
        body = ", ".join(format_rational(v) for v in self.values)
        return f"{type(self).__name__}(({body}))"

    def to_json(self) -> dict:
        return {"T": self.horizon, "values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json(cls, obj: dict):
        if not isinstance(obj, dict) or "values" not in obj:
            raise SequenceError("sequence object needs a 'values' array")
        seq = cls(obj["values"])
        if "T" in obj and obj["T"] != seq.horizon:
            raise HorizonMismatch(f"declared T={obj['T']} but {seq.horizon} values given")
        return seq


class PrizeSequence(_Sequence):
    """A finite stream of per-period prizes (utils); entries may be signed."""

    def is_positive(self) -> bool:
        return all(v >= 0 for v in self.values)

    def __add__(self, other: PrizeSequence) -> PrizeSequence:
        check_horizons(self, other)
        return PrizeSequence(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other: PrizeSequence) -> PrizeSequence:
        check_horizons(self, other)
        return PrizeSequence(a - b for a, b in zip(self.values, other.values))

    @classmethod
    def unit(cls, T: int, t: int, amount: RationalLike = 1) -> PrizeSequence:
        """Sequence with ``amount`` at 1-based period ``t`` and zeros elsewhere."""
        vals = [Fraction(0)] * T
        vals[t - 1] = parse_rational(amount)
        return cls(vals)


def _check_decreasing(values: Sequence[Fraction], name: str) -> None:
    for t in range(len(values) - 1):
        if values[t] < values[t + 1]:
            raise SequenceError(
                f"{name} must be weakly decreasing; period {t + 1} < period {t + 2}"
            )


class WeightSequence(_Sequence):
    """Nonnegative, weakly decreasing weights; zeros allowed."""

    def _validate(self) -> None:
        for t, v in enumerate(self.values, 1):
            if v < 0:
                raise SequenceError(f"weight at period {t} is negative")
        _check_decreasing(self.values, "weight sequence")

    @classmethod
    def step(cls, T: int, p: int) -> WeightSequence:
        """``p`` ones followed by ``T - p`` zeros."""
        return cls([1] * p + [0] * (T - p))


class DiscountSequence(_Sequence):
    """Strictly positive, weakly decreasing discount weights."""

    def _validate(self) -> None:
        for t, v in enumerate(self.values, 1):
            if v <= 0:
                raise SequenceError(f"discount weight at period {t} is not strictly positive")
        _check_decreasing(self.values, "discount sequence")


AnyWeights = Union[WeightSequence, DiscountSequence]


def check_horizons(*seqs: _Sequence) -> int:
    T = seqs[0].horizon
    for s in seqs[1:]:
        if s.horizon != T:
            raise HorizonMismatch(f"horizon mismatch: {T} vs {s.horizon}")
    return T


def weighted_sum(w: _Sequence, x: PrizeSequence) -> Fraction:
    """Exact value of sum_t w_t x_t."""
    check_horizons(w, x)
    return sum((a * b for a, b in zip(w.values, x.values)), Fraction(0))


# -- discount families -------------------------------------------------------


@dataclass(frozen=True)
class Exponential:
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", parse_rational(self.a))
        if not 0 < self.a < 1:
            raise ParameterError(f"exponential factor must lie in (0, 1), got {format_rational(self.a)}")

    def weight(self, t: int) -> Fraction:
        return self.a ** (t - 1)

    def to_json(self) -> dict:
        return {"family": "exponential", "a": format_rational(self.a)}


@dataclass(frozen=True)
class QuasiHyperbolic:
    """Weights 1, b*d, b*d**2, ... with present bias ``b`` in (0, 1]."""

    b: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", parse_rational(self.b))
        object.__setattr__(self, "d", parse_rational(self.d))
        if not 0 < self.b <= 1:
            raise ParameterError(f"present bias must lie in (0, 1], got {format_rational(self.b)}")
        if not 0 < self.d < 1:
            raise ParameterError(f"delta must lie in (0, 1), got {format_rational(self.d)}")

    def weight(self, t: int) -> Fraction:
        return Fraction(1) if t == 1 else self.b * self.d ** (t - 1)

    def to_json(self) -> dict:
        return {"family": "quasi_hyperbolic", "b": format_rational(self.b), "d": format_rational(self.d)}


@dataclass(frozen=True)
class Explicit:
    sequence: DiscountSequence

    @property
    def horizon(self) -> int:
        return self.sequence.horizon

    def to_json(self) -> dict:
        return {"family": "explicit", **self.sequence.to_json()}


DiscountFamily = Union[Exponential, QuasiHyperbolic, Explicit]


def realize(family: DiscountFamily, T: int) -> DiscountSequence:
    """Finite realization of a discount family at horizon ``T``."""
    if T == INFINITE:
        raise PreconditionError("cannot realize an infinite horizon; analyse the family instead")
    if not isinstance(T, int) or isinstance(T, bool) or T < 1:
        raise PreconditionError(f"horizon must be a positive integer, got {T!r}")
    if isinstance(family, Explicit):
        if family.horizon != T:
            raise HorizonMismatch(f"explicit sequence has T={family.horizon}, requested {T}")
        return family.sequence
    return DiscountSequence(family.weight(t) for t in range(1, T + 1))


def family_from_json(obj: dict) -> DiscountFamily:
    kind = obj.get("family") if isinstance(obj, dict) else None
    if kind == "exponential":
        return Exponential(obj["a"])
    if kind == "quasi_hyperbolic":
        return QuasiHyperbolic(obj["b"], obj["d"])
    if kind == "explicit":
        return Explicit(DiscountSequence.from_json(obj))
    raise ValueError(f"unknown discount family: {kind!r}")
