"""Independent oracles used only by the tests.

Everything here recomputes a quantity by a route the package does not use:
the pentagonal-number recurrence for partition counts, a fully literal
row-and-column submatrix search for containment, a direct enumeration of
augmented structures from their invariants, the inclusion-exclusion sum
evaluated over raw subsets, and a brute-force rook placement counter.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from ferrers import Partition, TruncatedSeries, euler_inverse, q_membership
from ferrers.partitions import enumerate_bounded, enumerate_partitions
from ferrers.profiles import join


@lru_cache(maxsize=None)
def euler_partition_counts(n: int) -> tuple:
    """p(0..n) by the pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if j % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return tuple(p)


def contains_by_submatrix(sigma: Partition, mu: Partition) -> bool:
    """Containment decided by trying every pair of kept-row and kept-column sets.

    Maximally literal: restrict the board to the kept rows and columns, drop
    empty rows, and ask for exact equality with mu.  Exponential in height
    plus width; use only on tiny boards.
    """
    h, w = sigma.height, sigma.width
    target = tuple(mu)
    for rmask in range(1 << h):
        rows = [sigma[i] for i in range(h) if rmask >> i & 1]
        for cmask in range(1 << w):
            cols = [j + 1 for j in range(w) if cmask >> j & 1]
            lens = tuple(
                length
                for length in (sum(1 for c in cols if c <= r) for r in rows)
                if length
            )
            if lens == target:
                return True
    return False


def direct_augmented_pairs(h: int, k: int) -> set:
    """All (hook, offset) partition pairs satisfying the structure invariants.

    Enumerated straight from the definition: the hook partition has columns
    with lengths in [2, h], the offset partition columns with lengths in
    [1, h + hook width], and the widths add up to k.  Independent of the
    marked-partition route used by the package.
    """

    def column_multisets(count, lo, hi):
        if count == 0:
            yield ()
            return
        for first in range(hi, lo - 1, -1):
            for rest in column_multisets(count - 1, lo, first):
                yield (first,) + rest

    out = set()
    for a in range(k + 1):
        for lam_cols in column_multisets(a, 2, h):
            lam = Partition.from_columns(lam_cols)
            for off_cols in column_multisets(k - a, 1, h + a):
                out.add((lam, Partition.from_columns(off_cols)))
    return out


def inclusion_exclusion_series(
    mu: Partition, k: int, h: int, bound: int
) -> TruncatedSeries:
    """The signed sum over nonempty subsets of the (h, k) ground set, literally."""
    ground = list(enumerate_bounded(h, k))
    numer = [0] * (bound + 1)
    for size in range(1, len(ground) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(ground, size):
            weight = join(subset, mu).weight
            if weight <= bound:
                numer[weight] += sign
    return TruncatedSeries(numer) * euler_inverse(k + mu.width, bound)


def rook_counts_brute_force(mu: Partition) -> tuple:
    """Non-attacking rook placement counts by explicit recursion over columns."""
    cols = sorted(mu.conjugate(), reverse=True)

    def place(col_idx: int, used_rows: frozenset) -> dict:
        if col_idx == len(cols):
            return {0: 1}
        rest = place(col_idx + 1, used_rows)
        counts = dict(rest)
        for row in range(1, cols[col_idx] + 1):
            if row in used_rows:
                continue
            sub = place(col_idx + 1, used_rows | {row})
            for j, c in sub.items():
                counts[j + 1] = counts.get(j + 1, 0) + c
        return counts

    table = place(0, frozenset())
    top = max(table)
    return tuple(table.get(j, 0) for j in range(top + 1))


def q_set_weight_n(beta: Partition, n: int) -> set:
    """Members of the width-bounded extension family of beta with weight n."""
    return {s for s in enumerate_partitions(n) if q_membership(s, beta)}
