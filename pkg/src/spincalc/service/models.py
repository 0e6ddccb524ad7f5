"""Request/response models for the spincalc service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    status: str = "ok"


class PresetRow(BaseModel):
    name: str
    description: str
    validity: str
    size: str


class PresetListResponse(BaseModel):
    presets: list[PresetRow]


class EnumerateRequest(BaseModel):
    genus: int = Field(ge=1)
    r: int = Field(ge=2)


class EnumerateResponse(BaseModel):
    genus: int
    r: int
    total: int
    even: Optional[int] = None
    odd: Optional[int] = None


class VerifyMain2Request(BaseModel):
    genus: int = Field(ge=2)
    parity: Literal["odd", "even"]


class VerifyMain3Request(BaseModel):
    pass


class StabilizedStructure(BaseModel):
    basis_values: list[int]
    parity: Optional[str] = None


class VerificationResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(alias="schema", default="spincalc-report/1")
    theorem: str
    inputs: dict
    stabilized_structure: StabilizedStructure
    order_computed: int
    order_expected: int
    oracle: str
    checks: dict[str, bool]
    verdict: Literal["pass", "fail"]
    notes: list[str]


class OrigamiRequest(BaseModel):
    preset: str
    genus: Optional[int] = Field(default=None, ge=1)


class OrigamiData(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(alias="schema", default="spincalc-origami/1")
    squares: int
    h: list[int]
    v: list[int]


class OrigamiResponse(BaseModel):
    preset: str
    genus: int
    origami: OrigamiData
    stratum: list[int]
    spin_parity: Optional[str] = None
    spin_parity_error: Optional[str] = None


class GraphRequest(BaseModel):
    kind: Literal["CG0", "CG1", "CG1plus", "CG2plus"]
    genus: int = Field(ge=1)
    parity: Literal["odd", "even"] = "odd"
    dot: bool = False
    max_vertices: Optional[int] = Field(default=None, ge=1)


class GraphResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(alias="schema", default="spincalc-graph/1")
    kind: str
    genus: int
    r: int
    parity: Optional[str]
    vertex_count: int
    edge_count: int
    component_count: int
    component_sizes: list[int]
    connected: bool
    diameter_largest: Optional[int]
    consistency: str
    caveats: list[str]
    dot: Optional[str] = None
