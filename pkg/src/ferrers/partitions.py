"""Integer partitions as Ferrers boards: construction, containment, enumeration.

A partition is stored as its weakly decreasing tuple of positive parts and
conceptually continues with zeros at every later index.  All operations are
pure; partitions are immutable and hashable and can be freely shared between
threads, put in sets, and used as dictionary keys.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceededError

#: Hard ceiling on the weight accepted by the enumeration streams.
ENUMERATION_WEIGHT_CAP = 50

#: Boards wider or taller than this are rejected by the brute-force containment oracle.
ORACLE_MAX_WIDTH = 12
ORACLE_MAX_HEIGHT = 12


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor normalizes arbitrary input: zeros are dropped, parts are
    sorted in decreasing order, and negative or non-integer entries are
    rejected.  ``part(i)`` gives 1-based access with the infinite zero tail,
    ``column(i)`` the length of the i-th column of the board.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        vals = []
        for p in parts:
            if not isinstance(p, int):
                raise TypeError(f"partition parts must be integers, got {p!r}")
            if p < 0:
                raise ValueError(f"partition parts must be nonnegative, got {p}")
            if p:
                vals.append(p)
        vals.sort(reverse=True)
        return tuple.__new__(cls, vals)

    @classmethod
    def _from_sorted(cls, vals: Iterable[int]) -> "Partition":
        # trusted path for callers that already hold a sorted positive sequence
        return tuple.__new__(cls, vals)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """The i-th part, 1-based; zero for every index past the height."""
        if i < 1:
            raise IndexError("part indices are 1-based")
        return self[i - 1] if i <= len(self) else 0

    def column(self, i: int) -> int:
        """Length of the i-th column: the number of parts that are >= i."""
        if i < 1:
            raise IndexError("column indices are 1-based")
        return sum(1 for p in self if p >= i)

    def conjugate(self) -> "Partition":
        """Interchange the rows and columns of the board."""
        if not self:
            return _EMPTY
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition._from_sorted(cols)

    @classmethod
    def from_columns(cls, lengths: Iterable[int]) -> "Partition":
        """The partition whose multiset of column lengths is `lengths`."""
        return cls(lengths).conjugate()

    def __add__(self, other) -> "Partition":
        """Partwise sum: the board whose columns are those of both addends."""
        other = other if isinstance(other, Partition) else Partition(other)
        if len(self) < len(other):
            self, other = other, self
        return Partition._from_sorted(
            p + other.part(i) for i, p in enumerate(self, 1)
        )

    def text(self) -> str:
        """Comma-separated parts; the empty partition renders as '-'."""
        return ",".join(map(str, self)) if self else "-"

    @classmethod
    def parse(cls, s: str) -> "Partition":
        """Inverse of `text`; tolerates whitespace around parts."""
        s = s.strip()
        if s in ("", "-"):
            return cls()
        try:
            return cls(int(tok) for tok in s.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition from {s!r}") from exc

    def __repr__(self) -> str:
        return f"Partition({self.text()!r})"

    def __str__(self) -> str:
        return self.text()


_EMPTY = tuple.__new__(Partition, ())


def contains_rows_only(sigma: Partition, mu: Partition) -> bool:
    """Containment in the rows-deletion-only sense: mu is a sub-multiset of sigma."""
    return not (Counter(mu) - Counter(sigma))


def q_membership(sigma: Partition, beta: Partition) -> bool:
    """Whether sigma arises from beta by appending parts no larger than beta's width."""
    if Counter(beta) - Counter(sigma):
        return False
    extra = Counter(sigma) - Counter(beta)
    return all(p <= beta.width for p in extra)


def contains(sigma: Partition, mu: Partition) -> bool:
    """Decide containment under row-and-column deletion in polynomial time.

    Scanning the rows of sigma from the top, each part of mu is matched
    greedily to the earliest unused row r with mu_i <= sigma_r <= mu_i +
    previous offset; the offsets sigma_r - mu_i must stay nonnegative and
    weakly decreasing, which is exactly the room left for deleted columns.
    Agreement with `contains_oracle` is enforced by the test suite over an
    exhaustive range rather than assumed.
    """
    allowance: float = float("inf")
    r = 0
    for m in mu:
        while r < len(sigma) and sigma[r] - m > allowance:
            r += 1
        if r >= len(sigma) or sigma[r] < m:
            return False
        allowance = sigma[r] - m
        r += 1
    return True


def contains_oracle(
    sigma: Partition,
    mu: Partition,
    *,
    max_width: int = ORACLE_MAX_WIDTH,
    max_height: int = ORACLE_MAX_HEIGHT,
) -> bool:
    """Reference containment decision by exhaustive search over kept-column sets.

    Every subset of the columns of sigma is tried; deleting the complement
    leaves a board whose nonzero row lengths must contain the parts of mu as
    a sub-multiset (the surplus rows are then deleted too).  Exponential in
    the width of sigma, hence the hard size limit.
    """
    if sigma.width > max_width or sigma.height > max_height:
        raise BudgetExceededError(
            f"containment oracle accepts boards at most {max_width} wide "
            f"and {max_height} tall; got {sigma.width}x{sigma.height}"
        )
    target = tuple(mu)
    return any(
        _is_submultiset_desc(target, rows) for rows in _kept_column_row_profiles(sigma)
    )


@lru_cache(maxsize=None)
def _kept_column_row_profiles(sigma: Partition) -> frozenset:
    """All row-length multisets reachable from sigma by deleting a set of columns."""
    profiles = set()
    for mask in range(1 << sigma.width):
        rows = []
        for p in sigma:
            c = (mask & ((1 << p) - 1)).bit_count()
            if c == 0:
                break  # parts are decreasing, later rows keep no columns either
            rows.append(c)
        profiles.add(tuple(rows))
    return frozenset(profiles)


def _is_submultiset_desc(small: tuple, big: tuple) -> bool:
    # both weakly decreasing; greedy matching
    it = iter(big)
    for x in small:
        for y in it:
            if y == x:
                break
            if y < x:
                return False
        else:
            return False
    return True


def enumerate_partitions(
    n: int, *, max_weight: int = ENUMERATION_WEIGHT_CAP
) -> Iterator[Partition]:
    """All partitions of weight n, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n > max_weight:
        raise BudgetExceededError(f"enumeration limited to weight {max_weight}, got {n}")
    return (Partition._from_sorted(t) for t in _weight_tuples(n, n))


def _weight_tuples(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _weight_tuples(n - first, first):
            yield (first, *rest)


@lru_cache(maxsize=None)
def _partitions_of_weight(n: int) -> tuple:
    return tuple(Partition._from_sorted(t) for t in _weight_tuples(n, n))


def enumerate_bounded(
    h: int, k: int, *, max_weight: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions of height <= h and width exactly k, decreasing lexicographic.

    `max_weight`, when given, prunes the stream to partitions of weight at
    most that bound; the stream is finite either way.
    """
    if h < 1 or k < 1:
        raise ValueError("height bound and width must be positive")

    def rec(prefix: tuple, weight: int, rows_left: int) -> Iterator[Partition]:
        if rows_left:
            last = prefix[-1]
            for v in range(last, 0, -1):
                if max_weight is None or weight + v <= max_weight:
                    yield from rec(prefix + (v,), weight + v, rows_left - 1)
        yield Partition._from_sorted(prefix)

    if max_weight is not None and k > max_weight:
        return iter(())
    return rec((k,), k, h - 1)


def count_containing(
    mu: Partition,
    n: int,
    k: Optional[int] = None,
    *,
    max_weight: int = ENUMERATION_WEIGHT_CAP,
) -> int:
    """Number of weight-n partitions containing mu, optionally at width offset k.

    With k given the count is restricted to partitions of width exactly
    mu.width + k, which only makes sense for a nonempty pattern.  Computed by
    filtering the full weight-n enumeration through `contains`; this is the
    ground truth that the series module is validated against.
    """
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n > max_weight:
        raise BudgetExceededError(f"enumeration limited to weight {max_weight}, got {n}")
    if k is not None:
        if not mu:
            raise ValueError("width offsets are relative to a nonempty pattern")
        if k < 0:
            raise ValueError("width offset must be nonnegative")
    want = None if k is None else mu.width + k
    total = 0
    for s in _partitions_of_weight(n):
        if want is not None and s.width != want:
            continue
        if contains(s, mu):
            total += 1
    return total
