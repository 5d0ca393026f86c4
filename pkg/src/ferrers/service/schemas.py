"""Pydantic request/response models: the JSON wire format of the service.

Partitions travel as arrays of integers (possibly unsorted, zeros allowed;
they are normalized on intake).  Series coefficients travel as decimal
strings so arbitrary-precision integers survive JSON.  Profile and
staircase entries are {p, a, b} objects with b either an integer or the
string "inf".
"""

from __future__ import annotations

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

PartitionParts = List[int]


class ContainsRequest(BaseModel):
    sigma: PartitionParts
    mu: PartitionParts
    oracle: bool = False


class ContainsResponse(BaseModel):
    sigma: PartitionParts
    mu: PartitionParts
    contains: bool
    oracle: Optional[bool] = None
    agree: Optional[bool] = None


class GfRequest(BaseModel):
    mu: PartitionParts
    k: int = Field(ge=0)
    n_max: int = Field(default=24, ge=0)
    method: Literal["enum", "closed", "both"] = "both"
    h: Optional[int] = Field(default=None, ge=1)


class GfResponse(BaseModel):
    mu: PartitionParts
    k: int
    n_max: int
    method: str
    enumerated: Optional[List[str]] = None
    closed: Optional[List[str]] = None
    match: Optional[bool] = None
    notice: Optional[str] = None


class WilfSeriesRequest(BaseModel):
    mu: PartitionParts
    n_max: int = Field(default=24, ge=0)


class WilfSeriesResponse(BaseModel):
    mu: PartitionParts
    n_max: int
    coefficients: List[str]


class EquivRequest(BaseModel):
    mu: PartitionParts
    tau: PartitionParts
    mode: Literal["rook", "wilf", "width-wilf"] = "rook"
    n_max: int = Field(default=18, ge=0)


class EquivResponse(BaseModel):
    mu: PartitionParts
    tau: PartitionParts
    mode: str
    equivalent: bool
    #: degree bound of the series comparison; None for the exact rook decision
    verified_up_to: Optional[int] = None


class ChainRequest(BaseModel):
    mu: PartitionParts
    tau: PartitionParts
    max_steps: int = Field(default=8, ge=0)


class ChainStepModel(BaseModel):
    i: int
    j: int


class ChainResponse(BaseModel):
    mu: PartitionParts
    tau: PartitionParts
    found: bool
    steps: Optional[List[ChainStepModel]] = None


class ClassesRequest(BaseModel):
    n: int = Field(ge=0)


class ClassesResponse(BaseModel):
    n: int
    classes: List[List[PartitionParts]]


class PartitionSetRequest(BaseModel):
    partitions: List[PartitionParts] = Field(min_length=1)


class ProfileEntryModel(BaseModel):
    p: int
    a: int
    b: Union[int, Literal["inf"]]


class ProfileResponse(BaseModel):
    profile: List[ProfileEntryModel]


class ClosureResponse(BaseModel):
    closure: List[PartitionParts]


class StaircasesRequest(BaseModel):
    h: int = Field(ge=1)
    k: int = Field(ge=1)


class StaircasesResponse(BaseModel):
    h: int
    k: int
    count: int
    staircases: List[List[ProfileEntryModel]]


class AugmentedRequest(BaseModel):
    mu: PartitionParts
    k: int = Field(ge=1)
    h: Optional[int] = Field(default=None, ge=1)
    max_weight: Optional[int] = Field(default=None, ge=0)


class AugmentedStructureModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    mu: PartitionParts
    lam: PartitionParts = Field(alias="lambda")
    off: PartitionParts
    weight: int
    sign: int


class AugmentedResponse(BaseModel):
    mu: PartitionParts
    h: int
    k: int
    count: int
    structures: List[AugmentedStructureModel]


class VerifyRequest(BaseModel):
    suite: Literal["core", "profiles", "staircases", "gf", "equivalence", "all"] = "all"
    seed: Optional[int] = None
    n_max: Optional[int] = Field(default=None, ge=0)
    quick: bool = False


class CheckModel(BaseModel):
    name: str
    ok: bool
    detail: str
    seconds: float


class VerifyResponse(BaseModel):
    suite: str
    seed: int
    degree_bound: int
    passed: bool
    checks: List[CheckModel]


class ServiceInfo(BaseModel):
    name: str
    version: str
    endpoints: List[str]
