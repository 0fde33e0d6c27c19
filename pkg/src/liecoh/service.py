"""HTTP service exposing the engine.

Endpoints accept algebras and modules inline, in the same shape as the CLI
file formats (string-encoded rationals everywhere).  All computation is
exact and deterministic, and engine values are immutable, so the app is
safe to serve concurrently.

Domain errors map to JSON bodies carrying a stable `code`:
`invalid_input` (malformed or non-validating input), `unknown_name`
(catalog / check / family lookups), `resource_cap` (a Leibniz differential
would exceed the entry cap).
"""

from __future__ import annotations

from typing import Literal, Union

from fastapi import FastAPI, HTTPException
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .liealg import LieAlgebra, structure_report, validate_structure
from .repn import Representation
from .cohomology import ce_cohomology, ce_homology
from .leibniz import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_RESOURCE_CAP,
    LeibnizComplexSpec,
    ResourceCapExceeded,
    leibniz_cohomology,
    leibniz_homology,
)
from .checks import CHECK_IDS, FAMILIES, run_checks, hunt
from .catalog import list_names, make
from . import files

SCHEMA_VERSION = 1

app = FastAPI(
    title="liecoh",
    version=__version__,
    description="Exact Chevalley-Eilenberg and Leibniz (co)homology of "
                "finite-dimensional Lie algebras, with structure analysis, "
                "claim checkers and a seeded counterexample hunt.",
)


# -- wire models ------------------------------------------------------------


class AlgebraPayload(BaseModel):
    name: str = "algebra"
    dim: int
    basis: list[str] | None = None
    brackets: dict[str, dict[str, str]] = Field(default_factory=dict)


class ModulePayload(BaseModel):
    dim: int
    action: list[list[str]]


ModuleSelector = Union[Literal["trivial", "adjoint"], ModulePayload]


class ValidateRequest(BaseModel):
    algebra: AlgebraPayload


class JacobiViolationModel(BaseModel):
    triple: tuple[int, int, int]
    residual: list[str]


class ValidateResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    ok: bool
    violations: list[JacobiViolationModel]

    model_config = {"populate_by_name": True}


class ReportRequest(BaseModel):
    algebra: AlgebraPayload


class ReportResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    report: dict

    model_config = {"populate_by_name": True}


class BettiTable(BaseModel):
    degrees: list[int]
    space_dims: list[int]
    betti: list[int]
    inexact_top: int | None = None


class CohomologyRequest(BaseModel):
    algebra: AlgebraPayload
    module: ModuleSelector = "trivial"
    homology: bool = False


class CohomologyResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    module: str
    orientation: Literal["cohomology", "homology"]
    table: BettiTable

    model_config = {"populate_by_name": True}


class LeibnizRequest(BaseModel):
    algebra: AlgebraPayload
    module: ModuleSelector = "trivial"
    max_degree: int = DEFAULT_MAX_DEGREE
    resource_cap: int = DEFAULT_RESOURCE_CAP
    homology: bool = False


class CheckRequest(BaseModel):
    algebra: AlgebraPayload
    ids: Union[Literal["all"], list[str]] = "all"
    pmax: int = 4
    resource_cap: int = DEFAULT_RESOURCE_CAP
    metadata_flags: list[str] = Field(default_factory=list)


class CheckResultModel(BaseModel):
    check_id: str
    algebra_id: str
    degrees: list[int]
    lhs_dims: list[int]
    rhs_dims: list[int]
    verdict: Literal["pass", "fail", "informational"]
    detail: str
    witness: dict | None = None
    flagged: bool = False


class CheckResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    results: list[CheckResultModel]
    all_passed: bool

    model_config = {"populate_by_name": True}


class HuntRequest(BaseModel):
    family: str
    count: int = Field(ge=0)
    seed: int = 0
    checks: Union[Literal["all"], list[str]] = Field(default_factory=lambda: ["prop2.5", "thm4.1"])
    pmax: int = 3
    resource_cap: int = DEFAULT_RESOURCE_CAP


class HuntFailure(BaseModel):
    algebra: AlgebraPayload
    result: CheckResultModel


class HuntResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    family: str
    seed: int
    count: int
    checks: list[str]
    failures: list[HuntFailure]

    model_config = {"populate_by_name": True}


class CatalogListResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    names: list[str]

    model_config = {"populate_by_name": True}


class CatalogEntryResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    flags: list[str]
    description: str
    report: dict
    algebra: AlgebraPayload

    model_config = {"populate_by_name": True}


class HealthResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    status: str
    version: str
    check_ids: list[str]
    hunt_families: list[str]

    model_config = {"populate_by_name": True}


# -- error mapping ----------------------------------------------------------


def _bad_input(message: str, location: str = "") -> HTTPException:
    return HTTPException(status_code=422, detail={
        "code": "invalid_input", "message": message, "location": location})


def _unknown(message: str) -> HTTPException:
    return HTTPException(status_code=404, detail={
        "code": "unknown_name", "message": message})


@app.exception_handler(RequestValidationError)
async def _validation_handler(request, exc):
    return JSONResponse(status_code=422, content={
        "detail": {"code": "invalid_input", "message": str(exc), "location": ""}})


def _load_algebra(payload: AlgebraPayload) -> LieAlgebra:
    try:
        return files.parse_algebra_dict(payload.model_dump())
    except files.InputError as err:
        raise _bad_input(err.message, err.location)


def _load_module(g: LieAlgebra, selector) -> tuple[str, Representation]:
    from .repn import adjoint_rep, trivial_rep
    if selector == "trivial":
        return "trivial", trivial_rep(g, 1)
    if selector == "adjoint":
        return "adjoint", adjoint_rep(g)
    try:
        return "custom", files.parse_module_dict(selector.model_dump(), g)
    except files.InputError as err:
        raise _bad_input(err.message, err.location)


def _table(res) -> BettiTable:
    degrees = sorted(res.betti)
    return BettiTable(
        degrees=degrees,
        space_dims=[res.dims[p] for p in degrees],
        betti=[res.betti[p] for p in degrees],
        inexact_top=res.inexact_top,
    )


# -- endpoints ---------------------------------------------------------------


@app.get("/health", response_model=HealthResponse, response_model_by_alias=True)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__,
                          check_ids=list(CHECK_IDS), hunt_families=list(FAMILIES))


@app.post("/algebra/validate", response_model=ValidateResponse, response_model_by_alias=True)
def validate(req: ValidateRequest) -> ValidateResponse:
    """Jacobi-validate an algebra; reports every violated triple."""
    try:
        g = files.parse_algebra_dict(req.algebra.model_dump())
        violations = []
    except files.InputError as err:
        if err.location != "brackets" or "Jacobi" not in err.message:
            raise _bad_input(err.message, err.location)
        # rebuild without validation to report the violating triples
        raw = req.algebra.model_dump()
        g = _parse_unvalidated(raw)
        violations = [
            JacobiViolationModel(
                triple=v.triple,
                residual=[files.rational_str(x) for x in v.residual])
            for v in validate_structure(g)
        ]
    return ValidateResponse(name=req.algebra.name, ok=not violations, violations=violations)


def _parse_unvalidated(raw: dict) -> LieAlgebra:
    brackets = {}
    for key, entry in raw.get("brackets", {}).items():
        i, j = (int(t) for t in key.split(","))
        brackets[(i, j)] = {int(k): files.parse_rational(c) for k, c in entry.items()}
    return LieAlgebra(raw["dim"], brackets, raw.get("basis"), name=raw.get("name", "algebra"))


@app.post("/algebra/report", response_model=ReportResponse, response_model_by_alias=True)
def report(req: ReportRequest) -> ReportResponse:
    g = _load_algebra(req.algebra)
    return ReportResponse(name=g.name, report=structure_report(g).as_dict())


@app.post("/cohomology", response_model=CohomologyResponse, response_model_by_alias=True)
def cohomology(req: CohomologyRequest) -> CohomologyResponse:
    g = _load_algebra(req.algebra)
    label, m = _load_module(g, req.module)
    res = ce_homology(g, m) if req.homology else ce_cohomology(g, m)
    return CohomologyResponse(
        name=g.name, module=label,
        orientation="homology" if req.homology else "cohomology",
        table=_table(res))


@app.post("/leibniz", response_model=CohomologyResponse, response_model_by_alias=True)
def leibniz(req: LeibnizRequest) -> CohomologyResponse:
    g = _load_algebra(req.algebra)
    label, m = _load_module(g, req.module)
    try:
        spec = LeibnizComplexSpec(g, m, max_degree=req.max_degree,
                                  resource_cap=req.resource_cap)
        res = leibniz_homology(spec) if req.homology else leibniz_cohomology(spec)
    except ResourceCapExceeded as err:
        raise HTTPException(status_code=400, detail={
            "code": "resource_cap", "message": str(err), "degree": err.degree})
    except ValueError as err:
        raise _bad_input(str(err))
    return CohomologyResponse(
        name=g.name, module=label,
        orientation="homology" if req.homology else "cohomology",
        table=_table(res))


@app.post("/checks/run", response_model=CheckResponse, response_model_by_alias=True)
def checks_run(req: CheckRequest) -> CheckResponse:
    g = _load_algebra(req.algebra)
    try:
        results = run_checks(g, req.ids, pmax=req.pmax, cap=req.resource_cap,
                             metadata_flags=frozenset(req.metadata_flags))
    except KeyError as err:
        raise _unknown(str(err.args[0]))
    except ResourceCapExceeded as err:
        raise HTTPException(status_code=400, detail={
            "code": "resource_cap", "message": str(err), "degree": err.degree})
    models = [CheckResultModel(**files.check_result_to_dict(r)) for r in results]
    return CheckResponse(name=g.name, results=models,
                         all_passed=not any(r.verdict == "fail" for r in results))


@app.post("/hunt", response_model=HuntResponse, response_model_by_alias=True)
def hunt_endpoint(req: HuntRequest) -> HuntResponse:
    try:
        rep = hunt(req.family, req.count, req.seed, req.checks,
                   cap=req.resource_cap, pmax=req.pmax)
    except KeyError as err:
        raise _unknown(str(err.args[0]))
    except ResourceCapExceeded as err:
        raise HTTPException(status_code=400, detail={
            "code": "resource_cap", "message": str(err), "degree": err.degree})
    payload = files.hunt_report_to_dict(rep)
    return HuntResponse(
        family=payload["family"], seed=payload["seed"], count=payload["count"],
        checks=payload["checks"],
        failures=[HuntFailure(algebra=AlgebraPayload(**f["algebra"]),
                              result=CheckResultModel(**f["result"]))
                  for f in payload["failures"]])


@app.get("/catalog", response_model=CatalogListResponse, response_model_by_alias=True)
def catalog_list() -> CatalogListResponse:
    return CatalogListResponse(names=list_names())


@app.get("/catalog/{name}", response_model=CatalogEntryResponse, response_model_by_alias=True)
def catalog_entry(name: str) -> CatalogEntryResponse:
    try:
        entry = make(name)
    except KeyError as err:
        raise _unknown(str(err.args[0]))
    return CatalogEntryResponse(
        name=entry.name,
        flags=sorted(entry.flags),
        description=entry.description,
        report=structure_report(entry.algebra).as_dict(),
        algebra=AlgebraPayload(**files.algebra_to_dict(entry.algebra)),
    )
