"""Rook equivalence, corner transforms, and desk-scale Wilf equivalence checks.

Two boards are rook equivalent when they admit the same number of
non-attacking rook placements of every size; for Ferrers boards this is
equivalent to equality of the multisets {mu_i + i}.  Rook equivalence is
decided here by the multiset criterion, cross-validated by a dynamic
program over columns, and witnessed constructively through chains of corner
transforms.  Wilf and width-Wilf equivalence are decided only up to a
truncation degree and are always reported as such.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional

from .errors import BudgetExceededError, TransformError
from .partitions import (
    ENUMERATION_WEIGHT_CAP,
    Partition,
    _partitions_of_weight,
    contains,
)
from .series import wilf_series

#: Visited-set ceiling for the transform-chain search.
CHAIN_NODE_BUDGET = 250_000


class TransformStep(NamedTuple):
    """Corner (i, j) at which a subboard was conjugated."""

    i: int
    j: int


def rook_multiset(mu: Partition, h: int) -> tuple:
    """The multiset {mu_i + i : 1 <= i <= h}, as a sorted tuple.

    Comparisons between two partitions are h-independent once h covers both
    heights, since raising h appends the same values h+1, h+2, ... to both.
    """
    if h < mu.height:
        raise ValueError("h must cover the height of the partition")
    return tuple(sorted(mu.part(i) + i for i in range(1, h + 1)))


def rook_equivalent(mu: Partition, tau: Partition) -> bool:
    """Multiset criterion at the smallest common height."""
    h = max(mu.height, tau.height, 1)
    return rook_multiset(mu, h) == rook_multiset(tau, h)


def rook_numbers(mu: Partition) -> tuple:
    """Counts of non-attacking placements of 0, 1, 2, ... rooks on the board.

    Dynamic program over the columns in increasing length order: rooks
    placed in earlier (shorter) columns always block rows of the current
    column, so the j-th rook placed in a column of length c has c - (j - 1)
    free cells.  Serves as the ground-truth oracle for `rook_equivalent`.
    """
    cols = sorted(mu.conjugate())  # column lengths, increasing
    r = [1]
    for c in cols:
        nxt = r + [0]
        for j in range(1, len(nxt)):
            free = c - (j - 1)
            if free > 0:
                nxt[j] += r[j - 1] * free
        r = nxt
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return tuple(r)


def ij_transform(mu: Partition, i: int, j: int) -> Partition:
    """Replace the subboard weakly below-right of cell (i, j) by its conjugate.

    Valid only when the reattached board is again a Ferrers board: every row
    that continues past column j - 1 must be full up to it, and the rows
    must stay weakly decreasing.  Weight is always preserved; validity is
    checked by constructing the candidate rather than by a side predicate.
    """
    if i < 1 or j < 1:
        raise ValueError("corner coordinates are 1-based")
    sub = Partition(
        mu.part(x) - (j - 1) for x in range(i, mu.height + 1) if mu.part(x) >= j
    )
    conj = sub.conjugate()
    height = max(mu.height, i - 1 + conj.height)
    rows = []
    for x in range(1, height + 1):
        if x < i:
            rows.append(mu.part(x))
            continue
        stem = min(mu.part(x), j - 1)
        tail = conj.part(x - i + 1)
        if tail and stem < j - 1:
            raise TransformError(
                f"({i},{j})-transform of {mu.text()} leaves a gap in row {x}"
            )
        rows.append(stem + tail)
    if any(lo > hi for hi, lo in zip(rows, rows[1:])):
        raise TransformError(
            f"({i},{j})-transform of {mu.text()} breaks row monotonicity"
        )
    return Partition(rows)


def transform_neighbors(mu: Partition) -> List[tuple]:
    """Valid transforms of mu over nonempty subboards, as (step, result) pairs."""
    out = []
    for i in range(1, mu.height + 1):
        for j in range(1, mu.part(i) + 1):
            try:
                t = ij_transform(mu, i, j)
            except TransformError:
                continue
            out.append((TransformStep(i, j), t))
    return out


def transform_chain(
    mu: Partition,
    tau: Partition,
    max_steps: int,
    *,
    node_budget: int = CHAIN_NODE_BUDGET,
) -> Optional[List[TransformStep]]:
    """Breadth-first search for a transform chain from mu to tau.

    Returns the step list when a chain of length at most max_steps exists
    and None when the search space within that depth is exhausted without
    reaching tau.  Overrunning the node budget raises instead: the question
    is then unresolved, which is different from a negative answer.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    if mu == tau:
        return []
    parents: dict = {mu: None}
    frontier = [mu]
    for _ in range(max_steps):
        nxt = []
        for s in frontier:
            for step, t in transform_neighbors(s):
                if t in parents:
                    continue
                parents[t] = (s, step)
                if len(parents) > node_budget:
                    raise BudgetExceededError(
                        f"transform-chain search visited over {node_budget} boards"
                    )
                if t == tau:
                    chain = []
                    node = t
                    while parents[node] is not None:
                        node, step_taken = parents[node]
                        chain.append(step_taken)
                    chain.reverse()
                    return chain
                nxt.append(t)
        if not nxt:
            return None
        frontier = nxt
    return None


def wilf_equivalent_upto(mu: Partition, tau: Partition, bound: int) -> bool:
    """Equality of the full containment series up to the truncation degree.

    A desk-scale check, not a proof: callers must present the result as
    'verified up to bound'.
    """
    if not mu or not tau:
        raise ValueError("Wilf comparisons need nonempty partitions")
    return wilf_series(mu, bound) == wilf_series(tau, bound)


def width_wilf_equivalent_upto(
    mu: Partition,
    tau: Partition,
    bound: int,
    *,
    max_weight: int = ENUMERATION_WEIGHT_CAP,
) -> bool:
    """Per-width agreement of containment counts up to the truncation degree.

    True when the widths agree and the enumerated width-offset series agree
    for every offset that can contribute at or below the bound.
    """
    if not mu or not tau:
        raise ValueError("Wilf comparisons need nonempty partitions")
    if mu.width != tau.width:
        return False
    table_mu = _width_offset_tables(mu, bound, max_weight=max_weight)
    table_tau = _width_offset_tables(tau, bound, max_weight=max_weight)
    return table_mu == table_tau


def _width_offset_tables(mu: Partition, bound: int, *, max_weight: int) -> dict:
    """Offset -> coefficient list of the enumerated width-offset series.

    One pass over all partitions up to the bound, bucketing by width offset;
    equivalent to stacking f_mu_k_enumerated over every offset 0..bound-|mu|.
    """
    if bound > max_weight:
        raise BudgetExceededError(
            f"enumeration limited to weight {max_weight}, got bound {bound}"
        )
    offsets = range(0, max(bound - mu.weight, -1) + 1)
    table = {k: [0] * (bound + 1) for k in offsets}
    for n in range(bound + 1):
        for s in _partitions_of_weight(n):
            k = s.width - mu.width
            if k in table and contains(s, mu):
                table[k][n] += 1
    return table


def rook_classes(n: int, *, max_weight: int = ENUMERATION_WEIGHT_CAP) -> List[list]:
    """Partitions of weight n grouped by rook equivalence.

    Classes and their members are ordered decreasingly, so the output is
    deterministic.
    """
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n > max_weight:
        raise BudgetExceededError(f"enumeration limited to weight {max_weight}, got {n}")
    groups: dict = {}
    h = max(n, 1)  # common height so the multisets are comparable
    for mu in _partitions_of_weight(n):
        groups.setdefault(rook_multiset(mu, h), []).append(mu)
    classes = [sorted(g, reverse=True) for g in groups.values()]
    classes.sort(key=lambda g: g[0], reverse=True)
    return classes
