"""Verification suites: exhaustive, oracle-backed checks grouped by module.

Each check pits an independent computation route against the one it
validates (closed form vs enumeration, fast containment vs brute force,
multiset criterion vs rook-count dynamic program, alternating sums vs their
predicted collapse) over a configured exhaustive range.  The default
configuration is the acceptance range; `QUICK` shrinks every range for
smoke testing.  All sampling is driven by the configured seed, so a report
is reproducible check for check.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Tuple

from .equivalence import (
    _width_offset_tables,
    rook_classes,
    rook_equivalent,
    rook_numbers,
    transform_chain,
)
from .partitions import Partition, _partitions_of_weight, contains, contains_oracle
from .profiles import (
    BipartiteGraph,
    alternating_cover_sum,
    class_alternating_sum,
    class_reps,
    closure,
    join,
    join_probes,
    profile,
)
from .series import f_mu_k_closed, f_mu_k_enumerated, wilf_series
from .staircases import (
    as_staircase,
    augmented_to_marked,
    enumerate_marked,
    enumerate_staircases,
    marked_to_augmented,
    marked_to_stair,
    stair_to_marked,
    vee_staircase,
)


@dataclass(frozen=True)
class VerifyConfig:
    """Ranges and budgets for the verification suites."""

    degree_bound: int = 18
    gf_mu_weight: int = 7
    gf_k_max: int = 3
    oracle_sigma_weight: int = 10
    oracle_mu_weight: int = 6
    pair_weight: int = 9
    chain_weight: int = 8
    chain_max_steps: int = 24
    pool_weight: int = 5
    pool_set_size: int = 3
    stair_hk: int = 4
    sample_mu_count: int = 20
    segment_cases: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 2), (2, 1), (2, 2))
    graph_count: int = 200
    graph_max_side: int = 7
    random_mu_count: int = 50
    random_mu_weight: int = 12
    seed: int = 20250808


#: Reduced ranges for smoke runs; same checks, smaller exhaustive windows.
QUICK = VerifyConfig(
    degree_bound=10,
    gf_mu_weight=4,
    gf_k_max=2,
    oracle_sigma_weight=6,
    oracle_mu_weight=4,
    pair_weight=6,
    chain_weight=5,
    chain_max_steps=12,
    pool_weight=3,
    pool_set_size=2,
    stair_hk=3,
    sample_mu_count=5,
    segment_cases=((1, 1), (2, 1), (2, 2)),
    graph_count=25,
    graph_max_side=5,
    random_mu_count=10,
    random_mu_weight=6,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _fail(case: dict) -> Tuple[bool, str]:
    return False, json.dumps(case, sort_keys=True, default=str)


def _nonempty_upto(weight: int) -> List[Partition]:
    out: List[Partition] = []
    for w in range(1, weight + 1):
        out.extend(_partitions_of_weight(w))
    return out


def _all_upto(weight: int) -> List[Partition]:
    out: List[Partition] = []
    for w in range(weight + 1):
        out.extend(_partitions_of_weight(w))
    return out


def _random_partitions(
    rng: random.Random,
    count: int,
    max_weight: int,
    *,
    max_height: Optional[int] = None,
    nonempty: bool = True,
) -> List[Partition]:
    pool = [
        p
        for p in (_nonempty_upto(max_weight) if nonempty else _all_upto(max_weight))
        if max_height is None or p.height <= max_height
    ]
    return [pool[rng.randrange(len(pool))] for _ in range(count)]


def check_gf_closed_vs_enumerated(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Closed-form series equals the enumeration series, coefficient for coefficient."""
    compared = 0
    for mu in _nonempty_upto(cfg.gf_mu_weight):
        for k in range(1, cfg.gf_k_max + 1):
            enum = f_mu_k_enumerated(mu, k, cfg.degree_bound)
            closed = f_mu_k_closed(mu, k, cfg.degree_bound)
            if enum != closed:
                return _fail(
                    {
                        "mu": mu.text(),
                        "k": k,
                        "enumerated": enum.coefficients,
                        "closed": closed.coefficients,
                    }
                )
            compared += 1
    return True, f"{compared} series pairs agree up to degree {cfg.degree_bound}"


def check_gf_h_independence(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Raising the height context by 1 or 2 must not change the closed form."""
    compared = 0
    for mu in _nonempty_upto(cfg.gf_mu_weight):
        for k in range(1, cfg.gf_k_max + 1):
            base = f_mu_k_closed(mu, k, cfg.degree_bound)
            for dh in (1, 2):
                lifted = f_mu_k_closed(mu, k, cfg.degree_bound, h=mu.height + dh)
                if lifted != base:
                    return _fail({"mu": mu.text(), "k": k, "h": mu.height + dh})
                compared += 1
    return True, f"{compared} lifted series identical to their base"


def check_containment_oracle_agreement(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Fast containment equals the exhaustive row/column-deletion oracle."""
    sigmas = _all_upto(cfg.oracle_sigma_weight)
    mus = _all_upto(cfg.oracle_mu_weight)
    checked = 0
    for sigma in sigmas:
        for mu in mus:
            fast = contains(sigma, mu)
            slow = contains_oracle(sigma, mu)
            if fast != slow:
                return _fail({"sigma": sigma.text(), "mu": mu.text(), "fast": fast, "oracle": slow})
            checked += 1
    return True, f"{checked} containment pairs agree"


def check_rook_implies_wilf(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Every rook-equivalent pair is Wilf equivalent up to the degree bound."""
    cache: dict = {}

    def series(mu: Partition):
        if mu not in cache:
            cache[mu] = wilf_series(mu, cfg.degree_bound)
        return cache[mu]

    pairs = 0
    for n in range(1, cfg.pair_weight + 1):
        for cls in rook_classes(n):
            for a, b in itertools.combinations(cls, 2):
                if series(a) != series(b):
                    return _fail({"mu": a.text(), "tau": b.text(), "bound": cfg.degree_bound})
                pairs += 1
    return True, f"{pairs} rook-equivalent pairs Wilf-agree up to degree {cfg.degree_bound}"


def check_width_wilf_three_way(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Width-Wilf, offset-1 series equality, and rook equivalence coincide.

    Ranges over same-weight same-width nonempty pairs; the three decisions
    must be pairwise identical on every pair.
    """
    bound = cfg.degree_bound
    pairs = 0
    for n in range(1, cfg.pair_weight + 1):
        parts = _partitions_of_weight(n)
        tables = {mu: _width_offset_tables(mu, bound, max_weight=bound) for mu in parts}
        for a, b in itertools.combinations(parts, 2):
            if a.width != b.width:
                continue
            width_wilf = tables[a] == tables[b]
            offset_one = tables[a].get(1) == tables[b].get(1)
            rook = rook_equivalent(a, b)
            if not (width_wilf == offset_one == rook):
                return _fail(
                    {
                        "mu": a.text(),
                        "tau": b.text(),
                        "width_wilf": width_wilf,
                        "offset_one": offset_one,
                        "rook": rook,
                    }
                )
            pairs += 1
    return True, f"{pairs} same-weight same-width pairs give identical decisions"


def check_staircase_alternating_sums(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Class alternating sums collapse to the staircase sign or vanish."""
    classes = 0
    for h, k in cfg.segment_cases:
        for pc in class_reps(h, k):
            actual = class_alternating_sum(pc)
            stair = as_staircase(pc.profile)
            expected = (
                (-1) ** (len(pc.profile) + stair.seg + 1) if stair is not None else 0
            )
            if actual != expected:
                return _fail(
                    {
                        "h": h,
                        "k": k,
                        "profile": sorted(pc.profile),
                        "actual": actual,
                        "expected": expected,
                    }
                )
            classes += 1
    return True, f"{classes} profile classes match the staircase sign rule"


def check_bijection_transport(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Round trips and weight/sign transport of the two bijections."""
    rng = random.Random(cfg.seed)
    stairs_seen = 0
    for h in range(1, cfg.stair_hk + 1):
        for k in range(1, cfg.stair_hk + 1):
            stairs = list(enumerate_staircases(h, k))
            marked = list(enumerate_marked(h, k))
            if len(stairs) != len(marked):
                return _fail({"h": h, "k": k, "stairs": len(stairs), "marked": len(marked)})
            mus = _random_partitions(
                rng, cfg.sample_mu_count, cfg.random_mu_weight, max_height=h
            )
            for stair in stairs:
                m = stair_to_marked(stair)
                if marked_to_stair(m) != stair:
                    return _fail({"h": h, "k": k, "staircase": repr(stair)})
                if len(m.marks) != stair.size - stair.seg:
                    return _fail({"h": h, "k": k, "staircase": repr(stair), "marks": sorted(m.marks)})
                for mu in mus:
                    s = marked_to_augmented(m, mu, h)
                    if s.lam.width != stair.size - stair.seg:
                        return _fail({"h": h, "k": k, "mu": mu.text(), "staircase": repr(stair)})
                    if vee_staircase(stair, mu).weight != s.weight:
                        return _fail(
                            {
                                "h": h,
                                "k": k,
                                "mu": mu.text(),
                                "staircase": repr(stair),
                                "join_weight": vee_staircase(stair, mu).weight,
                                "structure_weight": s.weight,
                            }
                        )
                    if augmented_to_marked(s) != m:
                        return _fail({"h": h, "k": k, "mu": mu.text(), "staircase": repr(stair)})
                stairs_seen += 1
    return True, f"{stairs_seen} staircases round-trip and transport weight and sign"


def check_closure_profile_join(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Closure equality, profile equality, and join agreement coincide.

    Exhaustive over nonempty sets of at most `pool_set_size` partitions of
    weight at most `pool_weight`.  Join agreement is checked on the interval
    probes of each group's profile plus seeded random partitions; it is a
    sampled consequence, profile equality being the exact criterion.
    """
    rng = random.Random(cfg.seed)
    pool = _all_upto(cfg.pool_weight)
    widest = max((p.width for p in pool), default=1)
    subsets = []
    for size in range(1, cfg.pool_set_size + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(pool, size))
    data = [(s, closure(s), profile(s)) for s in subsets]

    by_closure: dict = {}
    by_profile: dict = {}
    for s, cl, pr in data:
        by_closure.setdefault(cl, set()).add(pr)
        by_profile.setdefault(pr, []).append((s, cl))
    for cl, prs in by_closure.items():
        if len(prs) != 1:
            return _fail({"closure": sorted(p.text() for p in cl), "profiles": len(prs)})
    for pr, group in by_profile.items():
        closures = {cl for _, cl in group}
        if len(closures) != 1:
            return _fail({"profile": sorted(pr), "closures": len(closures)})

    randoms = _random_partitions(rng, cfg.random_mu_count, cfg.random_mu_weight)
    joins_checked = 0
    for pr, group in by_profile.items():
        if len(group) < 2:
            continue
        witnesses = join_probes(pr, widest) + randoms
        base_set = group[0][0]
        baselines = [join(base_set, mu) for mu in witnesses]
        for s, _ in group[1:]:
            for mu, expected in zip(witnesses, baselines):
                if join(s, mu) != expected:
                    return _fail(
                        {
                            "set_a": sorted(p.text() for p in base_set),
                            "set_b": sorted(p.text() for p in s),
                            "mu": mu.text(),
                        }
                    )
                joins_checked += 1
    return True, (
        f"{len(subsets)} sets grouped consistently; {joins_checked} join agreements"
    )


def check_rook_cross_validation(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Multiset criterion vs rook-count DP, distinct-parts representatives, chains."""
    parts = _nonempty_upto(cfg.pair_weight)
    vectors = {mu: rook_numbers(mu) for mu in parts}
    pairs = 0
    for a, b in itertools.combinations(parts, 2):
        by_multiset = rook_equivalent(a, b)
        by_vector = vectors[a] == vectors[b]
        if by_multiset != by_vector:
            return _fail(
                {"mu": a.text(), "tau": b.text(), "multiset": by_multiset, "vectors": by_vector}
            )
        pairs += 1
    for n in range(1, cfg.pair_weight + 1):
        for cls in rook_classes(n):
            distinct = [mu for mu in cls if len(set(mu)) == mu.height]
            if len(distinct) != 1:
                return _fail(
                    {"n": n, "class": [m.text() for m in cls], "distinct": len(distinct)}
                )
    chains = 0
    for n in range(1, cfg.chain_weight + 1):
        for cls in rook_classes(n):
            for a, b in itertools.combinations(cls, 2):
                if transform_chain(a, b, cfg.chain_max_steps) is None:
                    return _fail({"mu": a.text(), "tau": b.text(), "max_steps": cfg.chain_max_steps})
                chains += 1
    return True, f"{pairs} pairs cross-validated; {chains} chains found"


def check_bipartite_alternating_sums(cfg: VerifyConfig) -> Tuple[bool, str]:
    """Both cover-sum evaluations of random bipartite graphs agree."""
    rng = random.Random(cfg.seed)
    for trial in range(cfg.graph_count):
        na = rng.randint(1, cfg.graph_max_side)
        nb = rng.randint(1, cfg.graph_max_side)
        left = [("a", i) for i in range(na)]
        right = [("b", j) for j in range(nb)]
        edges = [(u, v) for u in left for v in right if rng.random() < 0.5]
        graph = BipartiteGraph(left, right, edges)
        lhs = alternating_cover_sum(graph, "left")
        rhs = alternating_cover_sum(graph, "right")
        if lhs != rhs:
            return _fail({"trial": trial, "left": na, "right": nb, "lhs": lhs, "rhs": rhs})
    return True, f"{cfg.graph_count} random graphs balance their alternating sums"


#: Acceptance criteria in their canonical order.
CRITERIA: List[Tuple[str, Callable]] = [
    ("gf-closed-vs-enumerated", check_gf_closed_vs_enumerated),
    ("gf-h-independence", check_gf_h_independence),
    ("containment-oracle-agreement", check_containment_oracle_agreement),
    ("rook-implies-wilf", check_rook_implies_wilf),
    ("width-wilf-three-way", check_width_wilf_three_way),
    ("staircase-alternating-sums", check_staircase_alternating_sums),
    ("bijection-transport", check_bijection_transport),
    ("closure-profile-join", check_closure_profile_join),
    ("rook-cross-validation", check_rook_cross_validation),
    ("bipartite-alternating-sums", check_bipartite_alternating_sums),
]

_BY_NAME = dict(CRITERIA)

SUITES = {
    "core": ["containment-oracle-agreement"],
    "gf": ["gf-closed-vs-enumerated", "gf-h-independence"],
    "profiles": [
        "staircase-alternating-sums",
        "closure-profile-join",
        "bipartite-alternating-sums",
    ],
    "staircases": ["bijection-transport"],
    "equivalence": [
        "rook-implies-wilf",
        "width-wilf-three-way",
        "rook-cross-validation",
    ],
    "all": [name for name, _ in CRITERIA],
}


def run_check(name: str, cfg: VerifyConfig) -> CheckResult:
    fn = _BY_NAME[name]
    start = time.perf_counter()
    ok, detail = fn(cfg)
    return CheckResult(name=name, ok=ok, detail=detail, seconds=time.perf_counter() - start)


def run_suite(suite: str, cfg: Optional[VerifyConfig] = None) -> dict:
    """Run one named suite and return the JSON-ready report.

    The report is deterministic for a fixed configuration and seed except
    for the wall-clock `seconds` fields.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    cfg = cfg or VerifyConfig()
    checks = [run_check(name, cfg) for name in SUITES[suite]]
    return {
        "suite": suite,
        "seed": cfg.seed,
        "degree_bound": cfg.degree_bound,
        "passed": all(c.ok for c in checks),
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail, "seconds": round(c.seconds, 3)}
            for c in checks
        ],
    }


def config_for(
    *, quick: bool = False, seed: Optional[int] = None, degree_bound: Optional[int] = None
) -> VerifyConfig:
    """Build a configuration from the command-line knobs."""
    cfg = QUICK if quick else VerifyConfig()
    overrides = {}
    if seed is not None:
        overrides["seed"] = seed
    if degree_bound is not None:
        overrides["degree_bound"] = degree_bound
    return replace(cfg, **overrides) if overrides else cfg
