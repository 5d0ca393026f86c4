"""Staircase profiles, marked partitions, augmented structures, and their bijections.

A staircase is the profile shape whose intervals descend like steps,
overlapping in at most one index; these are exactly the profiles whose
classes survive in the alternating sums.  Each staircase corresponds to a
partition with a set of marked columns, and each marked partition to a pair
of partitions (a hook partition and an offset partition); composing the two
maps turns the sum over staircases into a sum over purely board-described
data, which is what the closed-form series consumes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .partitions import Partition, enumerate_bounded
from .profiles import INF, Interval, partition_from_profile


class Staircase:
    """Profile whose intervals tile [1, INF) with single-index overlaps.

    Entries (p_i, [a_i, b_i]) are kept sorted by strictly decreasing value,
    ending with the right-infinite zero entry.  The first interval starts at
    index 1, the second must not, and each interval starts either at the
    previous right endpoint (a *left-overlapping* entry) or one past it.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        normalized = tuple(
            sorted(
                ((int(p), Interval(iv[0], iv[1])) for p, iv in entries),
                key=lambda e: -e[0],
            )
        )
        self._validate(normalized)
        self.entries = normalized

    @staticmethod
    def _validate(entries) -> None:
        if len(entries) < 2:
            raise ValueError("a staircase has at least a top entry and the zero entry")
        values = [p for p, _ in entries]
        if any(v <= nxt for v, nxt in zip(values, values[1:])):
            raise ValueError("entry values must strictly decrease")
        if values[-1] != 0:
            raise ValueError("the last entry must have value zero")
        if values[0] < 1:
            raise ValueError("the top value must be positive")
        first = entries[0][1]
        if first.a != 1:
            raise ValueError("the first interval must start at index 1")
        if entries[1][1].a == 1:
            raise ValueError("the second interval must not start at index 1")
        prev_b = None
        for idx, (p, iv) in enumerate(entries, 1):
            if iv.a > iv.b:
                raise ValueError(f"empty interval {iv}")
            is_last = idx == len(entries)
            if is_last and iv.b != INF:
                raise ValueError("the zero interval must be right-infinite")
            if not is_last and iv.b == INF:
                raise ValueError("only the zero interval may be right-infinite")
            if prev_b is not None and iv.a not in (prev_b, prev_b + 1):
                raise ValueError(
                    f"interval {iv} must start at or just after the previous end {prev_b}"
                )
            prev_b = iv.b

    @property
    def top(self) -> int:
        return self.entries[0][0]

    @property
    def length(self) -> int:
        """Right endpoint of the last positive entry."""
        return int(self.entries[-2][1].b)

    @property
    def size(self) -> int:
        return len(self.entries)

    def left_overlapping(self) -> frozenset:
        """1-based indices of entries whose interval starts at the previous end."""
        return frozenset(
            idx
            for idx, ((_, iv), (_, prev)) in enumerate(
                zip(self.entries[1:], self.entries), 2
            )
            if iv.a == prev.b
        )

    def segments(self) -> list:
        """Maximal runs of consecutively left-overlapping entries, in order."""
        overlaps = self.left_overlapping()
        runs = []
        for idx, entry in enumerate(self.entries, 1):
            if idx in overlaps:
                runs[-1].append(entry)
            else:
                runs.append([entry])
        return runs

    @property
    def seg(self) -> int:
        return len(self.segments())

    def __eq__(self, other) -> bool:
        return isinstance(other, Staircase) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({p},[{iv.a},{iv.b}])" for p, iv in self.entries)
        return f"Staircase({body})"


def as_staircase(entries) -> Optional[Staircase]:
    """The entries as a staircase, or None when they violate its shape."""
    try:
        return Staircase(entries)
    except (ValueError, TypeError):
        return None


def enumerate_staircases(h: int, k: int) -> Iterator[Staircase]:
    """All staircases with top value k and length at most h, each exactly once.

    The order is fixed: outer loop over the first right endpoint, then
    recursively over the next value (zero closing first, then descending),
    its overlap choice, and its right endpoint.
    """
    if h < 1 or k < 1:
        raise ValueError("height bound and top value must be positive")

    def extend(entries, prev_b):
        p_prev = entries[-1][0]
        second = len(entries) == 1
        for a in (prev_b, prev_b + 1):
            if second and a == 1:
                continue
            yield Staircase(entries + ((0, Interval(a, INF)),))
        for p in range(p_prev - 1, 0, -1):
            for a in (prev_b, prev_b + 1):
                if second and a == 1:
                    continue
                for b in range(a, h + 1):
                    yield from extend(entries + ((p, Interval(a, b)),), b)

    for b1 in range(1, h + 1):
        yield from extend(((k, Interval(1, b1)),), b1)


@dataclass(frozen=True)
class MarkedPartition:
    """A partition of width k together with a set of marked column indices.

    Marked columns must have length at least 2; a column of length 1 has no
    room for the overlap the mark records.
    """

    sigma: Partition
    marks: frozenset

    def __post_init__(self):
        object.__setattr__(self, "sigma", Partition(self.sigma))
        object.__setattr__(self, "marks", frozenset(self.marks))
        if not self.sigma:
            raise ValueError("marked partitions are built over a nonempty partition")
        for i in self.marks:
            if not 1 <= i <= self.sigma.width:
                raise ValueError(f"mark {i} outside the columns 1..{self.sigma.width}")
            if self.sigma.column(i) < 2:
                raise ValueError(f"marked column {i} has length below 2")


def enumerate_marked(
    h: int, k: int, *, max_sigma_weight: Optional[int] = None
) -> Iterator[MarkedPartition]:
    """All marked partitions of width k and height at most h."""
    for sigma in enumerate_bounded(h, k, max_weight=max_sigma_weight):
        markable = [i for i in range(1, k + 1) if sigma.column(i) >= 2]
        for size in range(len(markable) + 1):
            for combo in itertools.combinations(markable, size):
                yield MarkedPartition(sigma, frozenset(combo))


@dataclass(frozen=True)
class AugmentedStructure:
    """Triple (mu, hook partition, offset partition) in a (h, k) context.

    The hook partition's columns all have length at least 2 and its width
    plus the offset partition's width is k; heights are bounded by h and by
    h plus the hook width respectively.  Its weight counts the boxes of all
    three boards plus one reversed-L hook per hook-partition column.
    """

    mu: Partition
    lam: Partition
    off: Partition
    h: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "off", Partition(self.off))
        if self.h < 1 or self.k < 1:
            raise ValueError("height context and width must be positive")
        if self.lam.height > self.h:
            raise ValueError("hook partition taller than the height context")
        if self.off.height > self.h + self.lam.width:
            raise ValueError("offset partition taller than height context plus hook width")
        if self.lam.width + self.off.width != self.k:
            raise ValueError("hook and offset widths must add up to the total width")
        if self.lam and self.lam.column(self.lam.width) < 2:
            raise ValueError("every column of the hook partition must have length >= 2")

    @property
    def weight(self) -> int:
        return hook_weight(self.mu, self.lam, self.off)

    @property
    def sign(self) -> int:
        return -1 if self.lam.width % 2 else 1


def hook_weight(mu: Partition, lam: Partition, off: Partition) -> int:
    """Boxes of all three boards plus one reversed-L hook per hook column.

    The hook anchored in column i of lam has lam*_i + (i - 1) + mu_{lam*_i}
    boxes; summing over i gives |lam| + a(a-1)/2 + sum mu_{lam*_i} with
    a the width of lam, which is how the three non-board terms arise.
    """
    a = lam.width
    hooks = sum(mu.part(lam.column(i)) for i in range(1, a + 1))
    return mu.weight + lam.weight + off.weight + a * (a - 1) // 2 + hooks


def augmented_weight(structure: AugmentedStructure) -> int:
    return structure.weight


def stair_to_marked(stair: Staircase) -> MarkedPartition:
    """Forward bijection from staircases to marked partitions.

    Each left-overlapping entry of value p gives up one copy of p in the
    part multiset and marks column p + 1 instead; non-overlapping entries
    contribute their full interval length.
    """
    overlaps = stair.left_overlapping()
    marks = []
    parts = []
    for idx, (p, iv) in enumerate(stair.entries, 1):
        if idx in overlaps:
            marks.append(p + 1)
        if p > 0:
            mult = int(iv.b - iv.a) + (0 if idx in overlaps else 1)
            parts.extend([p] * mult)
    return MarkedPartition(Partition._from_sorted(parts), frozenset(marks))


def marked_to_stair(marked: MarkedPartition) -> Staircase:
    """Inverse of `stair_to_marked`.

    The entry values are the parts of sigma together with mark - 1 for each
    mark (a value may occur with multiplicity zero in sigma when its entry
    was left-overlapping with a single-index interval); endpoints come from
    the cumulative multiplicities.
    """
    sigma, marks = marked.sigma, marked.marks
    values = sorted(set(sigma) | {m - 1 for m in marks if m > 1}, reverse=True)
    mult = Counter(sigma)
    entries = []
    cum = 0
    for p in values:
        a = cum if (p + 1) in marks else cum + 1
        cum += mult[p]
        entries.append((p, Interval(a, cum)))
    a = cum if 1 in marks else cum + 1
    entries.append((0, Interval(a, INF)))
    return Staircase(entries)


def marked_to_augmented(
    marked: MarkedPartition, mu: Partition, h: Optional[int] = None
) -> AugmentedStructure:
    """Push the marked columns of sigma together into the hook partition.

    Unmarked columns become the offset partition, each lengthened by the
    number of marked columns to its right; that padding records where the
    column sat and is what makes the map reversible.
    """
    sigma, marks = marked.sigma, marked.marks
    if h is None:
        h = sigma.height
    lam = Partition.from_columns(sigma.column(i) for i in marks)
    off = Partition.from_columns(
        sum(1 for m in marks if m > i) + sigma.column(i)
        for i in range(1, sigma.width + 1)
        if i not in marks
    )
    return AugmentedStructure(Partition(mu), lam, off, h, sigma.width)


def augmented_to_marked(structure: AugmentedStructure) -> MarkedPartition:
    """Invert `marked_to_augmented` by re-inserting each offset column.

    For an offset column of length C there is exactly one count i of marked
    columns to its right such that a column of length C - i fits just left
    of the i rightmost hook columns; a failure of that uniqueness means the
    structure violates its invariants and is reported as a hard error.
    """
    lam, off = structure.lam, structure.off
    a = lam.width
    ascending = [lam.column(i) for i in range(a, 0, -1)]  # right-to-left lengths

    def insert_count(C: int) -> int:
        matches = []
        for i in range(a + 1):
            low = ascending[i - 1] if i >= 1 else 0
            high = ascending[i] if i < a else None
            d = C - i
            if d >= low and (high is None or high >= d):
                matches.append(i)
        if len(matches) != 1:
            raise RuntimeError(
                f"offset column {C} does not re-insert uniquely into {lam.text()}"
            )
        return matches[0]

    gaps: dict = {g: [] for g in range(a + 1)}
    for j in range(1, off.width + 1):
        C = off.column(j)
        i = insert_count(C)
        gaps[a - i].append(C - i)

    descending = [lam.column(i) for i in range(1, a + 1)]
    seq = []
    mark_positions = []
    for g in range(a + 1):
        seq.extend(sorted(gaps[g], reverse=True))
        if g < a:
            mark_positions.append(len(seq) + 1)
            seq.append(descending[g])
    if any(x < y for x, y in zip(seq, seq[1:])):
        raise RuntimeError("re-inserted columns are not weakly decreasing")
    return MarkedPartition(
        Partition.from_columns(seq), frozenset(mark_positions)
    )


def enumerate_augmented(
    mu: Partition, h: int, k: int, *, max_weight: Optional[int] = None
) -> Iterator[AugmentedStructure]:
    """Stream the augmented structures for mu at height context h and width k.

    Implemented through the marked-partition route so the bijection is the
    single code path; `max_weight` prunes structures whose weight exceeds
    the bound (the weight always dominates |mu| + |sigma|, so the underlying
    partition stream can be cut off early).
    """
    mu = Partition(mu)
    if not mu:
        raise ValueError("a nonempty pattern partition is required")
    if k < 1:
        raise ValueError("width must be positive")
    if h < mu.height:
        raise ValueError("height context must cover the pattern height")
    cap = None if max_weight is None else max_weight - mu.weight
    for marked in enumerate_marked(h, k, max_sigma_weight=cap):
        structure = marked_to_augmented(marked, mu, h)
        if max_weight is not None and structure.weight > max_weight:
            continue
        yield structure


def vee_staircase(stair: Staircase, mu: Partition) -> Partition:
    """Direct evaluation of the join of any set realizing the staircase.

    Reads off (mu_{a} + p, ..., mu_{b} + p) along each entry; the zero entry
    contributes the remaining tail of mu.
    """
    parts = []
    for p, iv in stair.entries:
        if p > 0:
            parts.extend(mu.part(j) + p for j in range(iv.a, int(iv.b) + 1))
        else:
            j = iv.a
            while mu.part(j) > 0:
                parts.append(mu.part(j))
                j += 1
    return Partition(parts)


def segment_choice_partition(stair: Staircase, choices) -> Partition:
    """Partition whose profile meets the staircase exactly in the chosen entries.

    `choices` holds one entry per maximal overlapping segment.  Within each
    segment the chosen entry keeps its interval; entries above it lose their
    right endpoint, entries below it their left endpoint, and single-index
    intervals other than the choice disappear.
    """
    segments = stair.segments()
    picks = [(int(p), Interval(iv[0], iv[1])) for p, iv in choices]
    if len(picks) != len(segments):
        raise ValueError(
            f"need one choice per segment: {len(segments)} segments, {len(picks)} choices"
        )
    entries = set()
    for segment, pick in zip(segments, picks):
        if pick not in segment:
            raise ValueError(f"choice {pick} is not in its segment")
        for q, iv in segment:
            if (q, iv) == pick:
                entries.add((q, iv))
            elif iv.size_at_least_two():
                if q > pick[0]:
                    entries.add((q, Interval(iv.a, iv.b - 1)))
                else:
                    entries.add((q, Interval(iv.a + 1, iv.b)))
    return partition_from_profile(entries)


def realizing_set(stair: Staircase) -> frozenset:
    """A witness set of partitions whose profile is exactly the staircase."""
    segments = stair.segments()
    out = set()
    for combo in itertools.product(*segments):
        out.add(segment_choice_partition(stair, combo))
    return frozenset(out)
