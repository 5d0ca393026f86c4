"""Exact truncated power series in q and the containment generating functions.

Coefficients are Python integers, so arithmetic is exact at every size; a
series only remembers terms up to its degree bound and mixing two series
truncates to the smaller bound.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import BudgetExceededError
from .partitions import (
    ENUMERATION_WEIGHT_CAP,
    Partition,
    count_containing,
)
from .staircases import enumerate_augmented

#: Default truncation degree used by the command-line front end.
DEFAULT_DEGREE_BOUND = 24


class TruncatedSeries:
    """Integer power series truncated past a fixed degree bound."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = (), bound: Optional[int] = None):
        vals = list(coeffs)
        for c in vals:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        if bound is None:
            if not vals:
                raise ValueError("need coefficients or an explicit degree bound")
            bound = len(vals) - 1
        if bound < 0:
            raise ValueError("degree bound must be nonnegative")
        vals = vals[: bound + 1]
        vals.extend([0] * (bound + 1 - len(vals)))
        self._coeffs = tuple(vals)

    @classmethod
    def zero(cls, bound: int) -> "TruncatedSeries":
        return cls([0], bound=bound)

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls([1], bound=bound)

    @classmethod
    def monomial(cls, degree: int, bound: int) -> "TruncatedSeries":
        """The series q^degree (zero if the degree exceeds the bound)."""
        coeffs = [0] * (bound + 1)
        if 0 <= degree <= bound:
            coeffs[degree] = 1
        return cls(coeffs)

    @property
    def bound(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.bound:
            raise IndexError(f"coefficient {n} outside truncation bound {self.bound}")
        return self._coeffs[n]

    def shifted(self, degree: int) -> "TruncatedSeries":
        """Multiply by q^degree, keeping the same bound."""
        if degree < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries(
            [0] * degree + list(self._coeffs), bound=self.bound
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        return TruncatedSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(bound + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        return TruncatedSeries(
            [self._coeffs[i] - other._coeffs[i] for i in range(bound + 1)]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        out = [0] * (bound + 1)
        for i, a in enumerate(self._coeffs[: bound + 1]):
            if not a:
                continue
            for j in range(bound - i + 1):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = [
            f"{c}*q^{n}" if n else str(c)
            for n, c in enumerate(self._coeffs)
            if c
        ]
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body}; bound={self.bound})"

    def to_decimal_strings(self) -> list:
        """Wire form: coefficients as decimal strings, index = degree."""
        return [str(c) for c in self._coeffs]


def euler_inverse(max_part: int, bound: int) -> TruncatedSeries:
    """1/((1-q)(1-q^2)...(1-q^max_part)), truncated.

    The coefficient of q^n counts the partitions of n with parts at most
    max_part.
    """
    if max_part < 1:
        raise ValueError("need at least one factor")
    coeffs = [0] * (bound + 1)
    coeffs[0] = 1
    for i in range(1, max_part + 1):
        for n in range(i, bound + 1):
            coeffs[n] += coeffs[n - i]
    return TruncatedSeries(coeffs)


def q_gf(beta: Partition, bound: int) -> TruncatedSeries:
    """Series of the family built from beta by appending parts of size <= its width.

    Equals q^{|beta|} * euler_inverse(width of beta).  Rejects the empty
    partition, whose extension family would have no addable part sizes.
    """
    if not beta:
        raise ValueError("extension family needs a nonempty base partition")
    return euler_inverse(beta.width, bound).shifted(beta.weight)


def f_mu_k_enumerated(
    mu: Partition,
    k: int,
    bound: int,
    *,
    max_weight: int = ENUMERATION_WEIGHT_CAP,
) -> TruncatedSeries:
    """Width-offset containment series computed by exhaustive enumeration.

    Coefficient n is the number of weight-n partitions containing mu whose
    width is mu.width + k.  This is the oracle route the closed form is
    checked against.
    """
    if not mu:
        raise ValueError("a nonempty pattern partition is required")
    if k < 0:
        raise ValueError("width offset must be nonnegative")
    if bound > max_weight:
        raise BudgetExceededError(
            f"enumeration limited to weight {max_weight}, got bound {bound}"
        )
    return TruncatedSeries([count_containing(mu, n, k) for n in range(bound + 1)])


def f_mu_k_closed(
    mu: Partition, k: int, bound: int, h: Optional[int] = None
) -> TruncatedSeries:
    """Width-offset containment series from the signed sum over augmented structures.

    The numerator collects (-1)^{width of the hook partition} q^{weight} over
    all augmented structures for mu at height context h; dividing by
    (1-q)...(1-q^{k + width of mu}) gives the series.  The result does not
    depend on h as long as h covers the height of mu, and must agree with
    `f_mu_k_enumerated` coefficient for coefficient.
    """
    if not mu:
        raise ValueError("a nonempty pattern partition is required")
    if k < 1:
        raise ValueError(
            "the closed form needs a positive width offset; "
            "width-0 extensions are counted by q_gf"
        )
    if h is None:
        h = max(mu.height, 1)
    if h < mu.height:
        raise ValueError("height context must cover the pattern height")
    numer = [0] * (bound + 1)
    for s in enumerate_augmented(mu, h, k, max_weight=bound):
        numer[s.weight] += s.sign
    return TruncatedSeries(numer) * euler_inverse(k + mu.width, bound)


def wilf_series(mu: Partition, bound: int) -> TruncatedSeries:
    """Series counting, by weight, all partitions that contain mu.

    Assembled per width offset: the offset-0 layer is q_gf(mu) (equal widths
    force every row of the pattern to appear verbatim), and each positive
    offset contributes its closed-form series.  Offsets above bound - |mu|
    cannot contribute below the truncation bound.
    """
    if not mu:
        raise ValueError("a nonempty pattern partition is required")
    total = q_gf(mu, bound)
    for k in range(1, bound - mu.weight + 1):
        total = total + f_mu_k_closed(mu, k, bound)
    return total
