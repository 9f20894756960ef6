"""Exact scalars, weights and the barycentric-algebra primitives.

Every scalar in the package is a :class:`fractions.Fraction`.  Weights live in
the closed unit interval, operators of the weighted-mean operations in the
open one.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence, TypeVar, Union

from .errors import InvalidWeightError, PolyCoordsError

RationalLike = Union[int, str, Fraction]

T = TypeVar("T")

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, ``Fraction``s and ``"p/q"`` strings to an exact ``Fraction``.

    Floats are refused: they would smuggle binary rounding into the
    predicates.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise PolyCoordsError(f"not an exact rational string: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise PolyCoordsError(f"not an exact rational string: {value!r}") from exc
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Canonical lowest-terms text: ``"5/8"``, ``"1"``, ``"0"``, ``"-3/2"``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def weight(value: RationalLike) -> Fraction:
    """Return ``value`` as a weight in the closed interval [0, 1]."""
    w = as_rational(value)
    if not ZERO <= w <= ONE:
        raise InvalidWeightError(f"weight {w} is outside [0, 1]")
    return w


def open_weight(value: RationalLike) -> Fraction:
    """Return ``value`` as an operator in the open interval (0, 1)."""
    w = as_rational(value)
    if not ZERO < w < ONE:
        raise InvalidWeightError(f"operator {w} is outside (0, 1)")
    return w


def complement(p: RationalLike) -> Fraction:
    return ONE - open_weight(p)


def dual_product(p: RationalLike, q: RationalLike) -> Fraction:
    """``p + q - p*q``, which equals the complement of ``p' * q'``."""
    p, q = open_weight(p), open_weight(q)
    return p + q - p * q


def weighted_mean(x: T, y: T, p: RationalLike) -> T:
    """The weighted mean ``x(1-p) + yp``.

    Works on scalars and on coordinate tuples; named tuples come back as the
    same type.
    """
    p = open_weight(p)
    q = ONE - p
    if isinstance(x, numbers.Rational):
        return as_rational(x) * q + as_rational(y) * p  # type: ignore[return-value]
    if len(x) != len(y):  # type: ignore[arg-type]
        raise PolyCoordsError("weighted_mean operands differ in dimension")
    coords = [a * q + b * p for a, b in zip(x, y)]  # type: ignore[call-overload]
    if hasattr(x, "_make"):
        return x._make(coords)  # type: ignore[attr-defined]
    return tuple(coords)  # type: ignore[return-value]


@dataclass(frozen=True)
class Distribution:
    """A finitely supported probability distribution over labels."""

    support: tuple[tuple[Hashable, Fraction], ...]

    def __post_init__(self) -> None:
        labels = [label for label, _ in self.support]
        if len(set(labels)) != len(labels):
            raise PolyCoordsError("distribution has duplicate labels")
        for _, w in self.support:
            weight(w)
        if sum((w for _, w in self.support), ZERO) != ONE:
            raise InvalidWeightError("distribution weights do not sum to 1")

    def __getitem__(self, label: Hashable) -> Fraction:
        for key, w in self.support:
            if key == label:
                return w
        return ZERO

    def __len__(self) -> int:
        return len(self.support)

    def labels(self) -> list[Hashable]:
        return [label for label, _ in self.support]

    def as_dict(self) -> dict[Hashable, Fraction]:
        return dict(self.support)

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[Hashable, RationalLike]], keep_zeros: bool = False
    ) -> "Distribution":
        support = tuple((label, weight(w)) for label, w in pairs)
        if not keep_zeros:
            support = tuple((label, w) for label, w in support if w != ZERO)
        return cls(support)


def distribution_from_operators(
    labels: Sequence[Hashable],
    operators: Sequence[RationalLike],
    keep_zeros: bool = False,
) -> Distribution:
    """Expand the nested mean ``x0 x1 q1 x2 q2 ... xr qr`` into its weights.

    The weight of ``x_k`` is ``q_k * q'_{k+1} * ... * q'_r`` with ``q_0 = 1``.
    """
    if len(labels) == 0:
        raise PolyCoordsError("need at least one label")
    if len(set(labels)) != len(labels):
        raise PolyCoordsError("labels must be distinct")
    if len(operators) != len(labels) - 1:
        raise PolyCoordsError(
            f"{len(labels)} labels need {len(labels) - 1} operators, got {len(operators)}"
        )
    qs = [ONE] + [open_weight(q) for q in operators]
    weights = [ZERO] * len(qs)
    tail = ONE
    for k in range(len(qs) - 1, -1, -1):
        weights[k] = qs[k] * tail
        tail *= ONE - qs[k]
    return Distribution.from_pairs(zip(labels, weights), keep_zeros=keep_zeros)
