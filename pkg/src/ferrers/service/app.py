"""FastAPI application exposing every operation as a POST endpoint."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import BudgetExceededError
from . import handlers
from . import schemas as s

app = FastAPI(
    title="ferrers",
    version="0.1.0",
    description=(
        "Pattern containment for integer partitions: containment tests, "
        "exact q-series, profiles and closures, staircases and augmented "
        "structures, rook/Wilf equivalence, and verification suites."
    ),
)


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(BudgetExceededError)
async def _budget_error(request: Request, exc: BudgetExceededError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": f"budget exceeded: {exc}"})


@app.get("/", response_model=s.ServiceInfo)
def info() -> s.ServiceInfo:
    routes = sorted(
        r.path for r in app.routes if getattr(r, "methods", None) and "POST" in r.methods
    )
    return s.ServiceInfo(name="ferrers", version=app.version, endpoints=routes)


@app.post("/contains", response_model=s.ContainsResponse)
def contains_endpoint(req: s.ContainsRequest) -> s.ContainsResponse:
    return handlers.contains_handler(req)


@app.post("/gf", response_model=s.GfResponse)
def gf_endpoint(req: s.GfRequest) -> s.GfResponse:
    return handlers.gf_handler(req)


@app.post("/wilf-series", response_model=s.WilfSeriesResponse)
def wilf_series_endpoint(req: s.WilfSeriesRequest) -> s.WilfSeriesResponse:
    return handlers.wilf_series_handler(req)


@app.post("/equiv", response_model=s.EquivResponse)
def equiv_endpoint(req: s.EquivRequest) -> s.EquivResponse:
    return handlers.equiv_handler(req)


@app.post("/chain", response_model=s.ChainResponse)
def chain_endpoint(req: s.ChainRequest) -> s.ChainResponse:
    return handlers.chain_handler(req)


@app.post("/classes", response_model=s.ClassesResponse)
def classes_endpoint(req: s.ClassesRequest) -> s.ClassesResponse:
    return handlers.classes_handler(req)


@app.post("/profile", response_model=s.ProfileResponse)
def profile_endpoint(req: s.PartitionSetRequest) -> s.ProfileResponse:
    return handlers.profile_handler(req)


@app.post("/closure", response_model=s.ClosureResponse)
def closure_endpoint(req: s.PartitionSetRequest) -> s.ClosureResponse:
    return handlers.closure_handler(req)


@app.post("/staircases", response_model=s.StaircasesResponse)
def staircases_endpoint(req: s.StaircasesRequest) -> s.StaircasesResponse:
    return handlers.staircases_handler(req)


@app.post("/augmented", response_model=s.AugmentedResponse)
def augmented_endpoint(req: s.AugmentedRequest) -> s.AugmentedResponse:
    return handlers.augmented_handler(req)


@app.post("/verify", response_model=s.VerifyResponse)
def verify_endpoint(req: s.VerifyRequest) -> s.VerifyResponse:
    return handlers.verify_handler(req)
