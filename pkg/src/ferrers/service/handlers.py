"""Request-to-response functions shared by the HTTP routes and the CLI.

Handlers validate domain preconditions by constructing the core objects;
`ValueError`, `SpliceError`, `TransformError`, and `BudgetExceededError`
propagate to the caller, which maps them to an HTTP status or an exit code.
"""

from __future__ import annotations

from .. import verify as verify_mod
from ..equivalence import (
    rook_classes,
    rook_equivalent,
    transform_chain,
    width_wilf_equivalent_upto,
    wilf_equivalent_upto,
)
from ..partitions import Partition, contains, contains_oracle
from ..profiles import INF, closure, entry_sort_key, profile
from ..series import f_mu_k_enumerated, f_mu_k_closed, q_gf, wilf_series
from ..staircases import enumerate_augmented, enumerate_staircases
from . import schemas as s


def _partition(parts) -> Partition:
    return Partition(parts)


def _entry_model(entry) -> s.ProfileEntryModel:
    p, (a, b) = entry
    return s.ProfileEntryModel(p=p, a=a, b="inf" if b == INF else int(b))


def contains_handler(req: s.ContainsRequest) -> s.ContainsResponse:
    sigma, mu = _partition(req.sigma), _partition(req.mu)
    fast = contains(sigma, mu)
    oracle = agree = None
    if req.oracle:
        oracle = contains_oracle(sigma, mu)
        agree = fast == oracle
    return s.ContainsResponse(
        sigma=list(sigma), mu=list(mu), contains=fast, oracle=oracle, agree=agree
    )


K0_NOTICE = "k=0 uses the width-0 extension family q_gf(mu) in place of the closed form"


def gf_handler(req: s.GfRequest) -> s.GfResponse:
    mu = _partition(req.mu)
    enumerated = closed = None
    notice = None
    if req.method in ("enum", "both"):
        enumerated = f_mu_k_enumerated(mu, req.k, req.n_max).to_decimal_strings()
    if req.method in ("closed", "both"):
        if req.k == 0:
            closed = q_gf(mu, req.n_max).to_decimal_strings()
            notice = K0_NOTICE
        else:
            closed = f_mu_k_closed(mu, req.k, req.n_max, h=req.h).to_decimal_strings()
    match = None
    if enumerated is not None and closed is not None:
        match = enumerated == closed
    return s.GfResponse(
        mu=list(mu),
        k=req.k,
        n_max=req.n_max,
        method=req.method,
        enumerated=enumerated,
        closed=closed,
        match=match,
        notice=notice,
    )


def wilf_series_handler(req: s.WilfSeriesRequest) -> s.WilfSeriesResponse:
    mu = _partition(req.mu)
    series = wilf_series(mu, req.n_max)
    return s.WilfSeriesResponse(
        mu=list(mu), n_max=req.n_max, coefficients=series.to_decimal_strings()
    )


def equiv_handler(req: s.EquivRequest) -> s.EquivResponse:
    mu, tau = _partition(req.mu), _partition(req.tau)
    if req.mode == "rook":
        result = rook_equivalent(mu, tau)
        verified = None
    elif req.mode == "wilf":
        result = wilf_equivalent_upto(mu, tau, req.n_max)
        verified = req.n_max
    else:
        result = width_wilf_equivalent_upto(mu, tau, req.n_max)
        verified = req.n_max
    return s.EquivResponse(
        mu=list(mu), tau=list(tau), mode=req.mode, equivalent=result, verified_up_to=verified
    )


def chain_handler(req: s.ChainRequest) -> s.ChainResponse:
    mu, tau = _partition(req.mu), _partition(req.tau)
    chain = transform_chain(mu, tau, req.max_steps)
    steps = None if chain is None else [s.ChainStepModel(i=t.i, j=t.j) for t in chain]
    return s.ChainResponse(
        mu=list(mu), tau=list(tau), found=chain is not None, steps=steps
    )


def classes_handler(req: s.ClassesRequest) -> s.ClassesResponse:
    classes = rook_classes(req.n)
    return s.ClassesResponse(
        n=req.n, classes=[[list(p) for p in cls] for cls in classes]
    )


def profile_handler(req: s.PartitionSetRequest) -> s.ProfileResponse:
    parts = [_partition(p) for p in req.partitions]
    entries = sorted(profile(parts), key=entry_sort_key)
    return s.ProfileResponse(profile=[_entry_model(e) for e in entries])


def closure_handler(req: s.PartitionSetRequest) -> s.ClosureResponse:
    parts = [_partition(p) for p in req.partitions]
    closed = sorted(closure(parts), reverse=True)
    return s.ClosureResponse(closure=[list(p) for p in closed])


def staircases_handler(req: s.StaircasesRequest) -> s.StaircasesResponse:
    stairs = list(enumerate_staircases(req.h, req.k))
    return s.StaircasesResponse(
        h=req.h,
        k=req.k,
        count=len(stairs),
        staircases=[[_entry_model(e) for e in st.entries] for st in stairs],
    )


def augmented_handler(req: s.AugmentedRequest) -> s.AugmentedResponse:
    mu = _partition(req.mu)
    h = req.h if req.h is not None else max(mu.height, 1)
    structures = list(enumerate_augmented(mu, h, req.k, max_weight=req.max_weight))
    return s.AugmentedResponse(
        mu=list(mu),
        h=h,
        k=req.k,
        count=len(structures),
        structures=[
            s.AugmentedStructureModel(
                mu=list(st.mu),
                lam=list(st.lam),
                off=list(st.off),
                weight=st.weight,
                sign=st.sign,
            )
            for st in structures
        ],
    )


def verify_handler(req: s.VerifyRequest) -> s.VerifyResponse:
    cfg = verify_mod.config_for(quick=req.quick, seed=req.seed, degree_bound=req.n_max)
    report = verify_mod.run_suite(req.suite, cfg)
    return s.VerifyResponse(**report)
