"""Value-interval profiles of partition sets, splicing closure, and joins.

The profile of a finite set of partitions records, for every part value p,
the inclusion-maximal index intervals on which some member equals p.  Two
sets have the same profile exactly when they have the same splicing closure,
and exactly when joining them against any partition gives the same result;
the machinery here materializes those equivalence classes and the bipartite
incidence structure used to evaluate their alternating sums.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import BudgetExceededError, SpliceError
from .partitions import Partition, enumerate_bounded

#: Right endpoint of the zero-value interval; compares above every integer.
INF = math.inf

#: Hard cap on the number of partitions a splicing closure may generate.
CLOSURE_CAP = 10**6

#: Largest subset lattice class_reps will walk (2**|ground set|).
SUBSET_BUDGET = 2**20

#: Classes keep their member subsets only while the lattice is at most this big.
MATERIALIZE_LIMIT = 4096


class Interval(NamedTuple):
    """Closed index interval [a, b]; b is INF exactly for zero-value intervals."""

    a: int
    b: float

    def contains(self, other: "Interval") -> bool:
        return self.a <= other.a and other.b <= self.b

    def size_at_least_two(self) -> bool:
        return self.b - self.a >= 1


def entry_sort_key(entry):
    """Canonical order for profile entries: by value descending, then position."""
    p, (a, b) = entry
    return (-p, a, b)


def p_interval(sigma: Partition, p: int) -> Optional[Interval]:
    """The maximal index interval on which sigma equals p; None if p is absent.

    The zero interval is [height + 1, INF] and always exists.
    """
    if p < 0:
        raise ValueError("part values are nonnegative")
    if p == 0:
        return Interval(sigma.height + 1, INF)
    lo = hi = None
    for idx, part in enumerate(sigma, 1):
        if part == p:
            if lo is None:
                lo = idx
            hi = idx
        elif part < p:
            break
    return None if lo is None else Interval(lo, hi)


def profile_entries(sigma: Partition):
    """The (value, interval) pairs of a single partition, zero entry included."""
    for p in sorted(set(sigma), reverse=True):
        yield (p, p_interval(sigma, p))
    yield (0, Interval(sigma.height + 1, INF))


def profile(parts: Iterable[Partition]) -> frozenset:
    """Inclusion-maximal value intervals across a nonempty finite set of partitions."""
    members = list(parts)
    if not members:
        raise ValueError("profile of an empty set is undefined")
    by_value: dict = {}
    for sigma in members:
        for p, iv in profile_entries(sigma):
            by_value.setdefault(p, set()).add(iv)
    entries = set()
    for p, intervals in by_value.items():
        for iv in intervals:
            if not any(other != iv and other.contains(iv) for other in intervals):
                entries.add((p, iv))
    return frozenset(entries)


def profile_equivalent(ps: Iterable[Partition], qs: Iterable[Partition]) -> bool:
    return profile(ps) == profile(qs)


def splice(alpha: Partition, i: int, beta: Partition) -> Partition:
    """Concatenate the first i parts of alpha with the tail of beta past index i.

    Defined only when alpha_i strictly exceeds beta_{i+1}; with >= instead
    the operation would still produce partitions but would not preserve
    profiles, so the strict check is an error boundary, not a convenience.
    """
    if i < 1:
        raise ValueError("splice index is 1-based")
    if alpha.part(i) <= beta.part(i + 1):
        raise SpliceError(
            f"cannot splice {alpha.text()} at {i} with {beta.text()}: "
            f"{alpha.part(i)} <= {beta.part(i + 1)}"
        )
    return Partition._from_sorted(alpha[:i] + beta[i:])


def closure(parts: Iterable[Partition], *, max_size: int = CLOSURE_CAP) -> frozenset:
    """Least splice-closed superset of a nonempty finite set of partitions.

    Spliced results never exceed the widths or heights already present, so
    the closure is finite; the cap guards against blowups all the same and
    overrunning it is an error rather than a truncation.
    """
    closed = set(parts)
    if not closed:
        raise ValueError("closure of an empty set is undefined")
    work = list(closed)
    while work:
        a = work.pop()
        for b in list(closed):
            for x, y in ((a, b), (b, a)):
                for i in range(1, x.height + 1):
                    if x.part(i) > y.part(i + 1):
                        g = Partition._from_sorted(x[:i] + y[i:])
                        if g not in closed:
                            closed.add(g)
                            work.append(g)
                            if len(closed) > max_size:
                                raise BudgetExceededError(
                                    f"splicing closure exceeded {max_size} partitions"
                                )
    return frozenset(closed)


def vee(alpha: Partition, beta: Partition) -> Partition:
    """Partwise-multiplicity maximum of two partitions."""
    ca, cb = Counter(alpha), Counter(beta)
    out = []
    for p in ca.keys() | cb.keys():
        out.extend([p] * max(ca[p], cb[p]))
    return Partition(out)


def join(parts: Iterable[Partition], mu: Partition) -> Partition:
    """Fold of `vee` over mu + alpha for alpha in a nonempty set."""
    result = None
    for alpha in parts:
        summed = mu + alpha
        result = summed if result is None else vee(result, summed)
    if result is None:
        raise ValueError("join of an empty set is undefined")
    return result


def partition_from_profile(entries) -> Partition:
    """Rebuild the unique partition whose profile is `entries`.

    The intervals must tile [1, INF) in order of strictly decreasing value
    and finish with the zero entry.
    """
    items = sorted(entries, key=lambda e: e[1][0])
    if not items:
        raise ValueError("no entries")
    parts = []
    expect = 1
    prev_value = None
    for p, (a, b) in items:
        if a != expect:
            raise ValueError(f"intervals do not tile: expected start {expect}, got {a}")
        if prev_value is not None and p >= prev_value:
            raise ValueError("interval values must strictly decrease")
        prev_value = p
        if p > 0:
            if b == INF:
                raise ValueError("only the zero interval may be infinite")
            parts.extend([p] * int(b - a + 1))
            expect = int(b) + 1
        else:
            if b != INF:
                raise ValueError("the zero interval must be right-infinite")
            expect = None
    if expect is not None:
        raise ValueError("missing zero interval")
    return Partition._from_sorted(parts)


def join_probes(entries, widest: int) -> list:
    """Probe partitions that let joins see each interval in `entries`.

    The probe for an interval [a, b] has a-1 parts of size 4*widest followed
    by enough parts of size 2*widest to span the interval (a single one for
    the infinite zero interval).  Joining against these probes distinguishes
    any two sets whose profiles differ at one of the given entries, provided
    `widest` is at least every width involved.
    """
    big = 4 * max(widest, 1)
    half = big // 2
    probes = []
    for _, (a, b) in sorted(entries, key=entry_sort_key):
        length = 1 if b == INF else int(b - a + 1)
        probes.append(Partition._from_sorted([big] * (a - 1) + [half] * length))
    return probes


@dataclass(frozen=True)
class ProfileClass:
    """One profile-equivalence class of subsets of a ground set of partitions.

    `closure` is the splicing closure shared by every member (equivalently
    the union of all member subsets).  `members` is kept only when the
    subset lattice is small; the even/odd counts are always present and are
    all the alternating sum needs.
    """

    profile: frozenset
    closure: frozenset
    even_members: int
    odd_members: int
    members: Optional[tuple] = None


def class_reps(
    h: int,
    k: int,
    *,
    subset_budget: int = SUBSET_BUDGET,
    materialize_limit: int = MATERIALIZE_LIMIT,
) -> list:
    """Group every nonempty subset of the height-h width-k partitions by profile."""
    ground = tuple(enumerate_bounded(h, k))
    m = len(ground)
    if 2**m > subset_budget:
        raise BudgetExceededError(
            f"{m} ground partitions give {2**m} subsets, over budget {subset_budget}"
        )
    keep_members = 2**m - 1 <= materialize_limit
    groups: dict = {}
    for mask in range(1, 2**m):
        subset = frozenset(ground[i] for i in range(m) if mask >> i & 1)
        pr = profile(subset)
        bucket = groups.setdefault(pr, {"first": subset, "even": 0, "odd": 0, "subsets": []})
        if mask.bit_count() % 2:
            bucket["odd"] += 1
        else:
            bucket["even"] += 1
        if keep_members:
            bucket["subsets"].append(subset)
    out = []
    for pr in sorted(groups, key=lambda p: sorted(p, key=entry_sort_key)):
        bucket = groups[pr]
        members = None
        if keep_members:
            members = tuple(
                sorted(bucket["subsets"], key=lambda s: sorted(s, reverse=True))
            )
        out.append(
            ProfileClass(
                profile=pr,
                closure=closure(bucket["first"]),
                even_members=bucket["even"],
                odd_members=bucket["odd"],
                members=members,
            )
        )
    return out


def profile_class_of(parts: Iterable[Partition]) -> ProfileClass:
    """The class data generated by one concrete set, without walking any lattice.

    Member subsets and parities are unknown here; the result supports the
    graph and selector operations but not `class_alternating_sum`.
    """
    cl = closure(parts)
    return ProfileClass(
        profile=profile(cl), closure=cl, even_members=0, odd_members=0, members=None
    )


def class_alternating_sum(pc: ProfileClass) -> int:
    """Sum of (-1)^{|P|} over the member subsets P of the class."""
    if pc.even_members == 0 and pc.odd_members == 0:
        raise ValueError("class carries no member counts; build it via class_reps")
    return pc.even_members - pc.odd_members


class BipartiteGraph:
    """Finite bipartite graph over hashable vertices with frozen adjacency."""

    __slots__ = ("left", "right", "_nbr")

    def __init__(self, left, right, edges):
        self.left = tuple(left)
        self.right = tuple(right)
        nbr = {v: set() for v in self.left}
        nbr.update({v: set() for v in self.right})
        left_set, right_set = set(self.left), set(self.right)
        for u, v in edges:
            if u not in left_set or v not in right_set:
                raise ValueError(f"edge ({u!r}, {v!r}) does not join the partite sets")
            nbr[u].add(v)
            nbr[v].add(u)
        self._nbr = {v: frozenset(s) for v, s in nbr.items()}

    def neighbors(self, v) -> frozenset:
        return self._nbr[v]

    def neighborhood(self, vs) -> frozenset:
        out = set()
        for v in vs:
            out |= self._nbr[v]
        return frozenset(out)


def class_graph(pc: ProfileClass) -> BipartiteGraph:
    """Incidence between closure partitions and profile entries.

    A partition is adjacent to (p, I) exactly when I is its own p-interval,
    not merely when it meets I.
    """
    parts = tuple(sorted(pc.closure, reverse=True))
    entries = tuple(sorted(pc.profile, key=entry_sort_key))
    edges = [
        (s, e) for s in parts for e in entries if p_interval(s, e[0]) == e[1]
    ]
    return BipartiteGraph(parts, entries, edges)


def _side_masks(graph: BipartiteGraph, target_side: str):
    if target_side == "left":
        target, source = graph.left, graph.right
    elif target_side == "right":
        target, source = graph.right, graph.left
    else:
        raise ValueError("target_side must be 'left' or 'right'")
    index = {v: i for i, v in enumerate(target)}
    masks = [
        sum(1 << index[w] for w in graph.neighbors(v)) for v in source
    ]
    full = (1 << len(target)) - 1
    return source, masks, full


def minimal_sets(
    graph: BipartiteGraph, target_side: str = "left", *, subset_budget: int = 2**16
) -> list:
    """All inclusion-minimal subsets of one side covering the whole other side.

    A subset Y of the source side qualifies when the target side is inside
    N(Y) and no proper subset of Y still covers it.
    """
    source, masks, full = _side_masks(graph, target_side)
    if 2 ** len(source) > subset_budget:
        raise BudgetExceededError(f"{len(source)} source vertices exceed the subset budget")
    out = []
    for m in range(1 << len(source)):
        cover = 0
        for i in range(len(source)):
            if m >> i & 1:
                cover |= masks[i]
        if cover != full:
            continue
        minimal = True
        for i in range(len(source)):
            if m >> i & 1:
                reduced = 0
                for t in range(len(source)):
                    if t != i and m >> t & 1:
                        reduced |= masks[t]
                if reduced == full:
                    minimal = False
                    break
        if minimal:
            out.append(frozenset(source[i] for i in range(len(source)) if m >> i & 1))
    return out


def alternating_cover_sum(graph: BipartiteGraph, side: str = "left") -> int:
    """Sum of (-1)^{|S|} over subsets S of `side` whose neighborhood is the other side."""
    if side == "left":
        target_side = "right"
    elif side == "right":
        target_side = "left"
    else:
        raise ValueError("side must be 'left' or 'right'")
    # _side_masks takes the *target* side; subsets range over the opposite one
    source, masks, full = _side_masks(graph, target_side)
    total = 0
    for m in range(1 << len(source)):
        cover = 0
        for i in range(len(source)):
            if m >> i & 1:
                cover |= masks[i]
        if cover == full:
            total += -1 if m.bit_count() % 2 else 1
    return total


def sigma_selector(pc: ProfileClass, choices) -> Partition:
    """Closure partition whose profile meets the class profile exactly in `choices`.

    Only defined for classes with a staircase profile.  One entry is chosen
    from each maximal overlapping segment; unchosen entries contribute with
    one endpoint trimmed (the right endpoint above the chosen value, the
    left endpoint below it) and single-index intervals vanish outright.
    """
    from .staircases import as_staircase, segment_choice_partition

    stair = as_staircase(pc.profile)
    if stair is None:
        raise ValueError("class profile is not a staircase")
    return segment_choice_partition(stair, choices)
