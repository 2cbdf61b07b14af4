"""HTTP service exposing the analysis pipeline.

Stateless, one endpoint per operation; every computation is a pure
function of the request body, so the service is safe to scale out.
Domain rejections (unsupported assembly, non-coprime exponents,
non-almost-contact targets) come back as 422 with a structured error
body; malformed JSON is FastAPI's usual validation response.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from . import analysis, contactgeom
from .errors import GridTooCoarse, OpenBookError
from .schemas import (
    AnalysisReportModel,
    BindingProfileModel,
    BooksumRequest,
    DeformationProfileModel,
    ProfileVerdictModel,
    RecipeModel,
    TargetModel,
)

app = FastAPI(
    title="openbook5",
    description=(
        "Contact open books on simply-connected five-manifolds: exact "
        "homology of abstract open books, Barden classification, and a "
        "realizer producing a recipe for any admissible target."
    ),
    version="0.1.0",
)


@app.exception_handler(OpenBookError)
async def _domain_error(request: Request, exc: OpenBookError) -> JSONResponse:
    status = 422
    if isinstance(exc, GridTooCoarse):
        status = 400
    return JSONResponse(
        status_code=status,
        content={"error": type(exc).__name__, "message": str(exc)},
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/analyze", response_model=AnalysisReportModel)
def analyze(recipe: RecipeModel, trace: bool = Query(default=False)) -> AnalysisReportModel:
    """Homology, Chern data and Barden identification of a recipe."""
    report = analysis.analyze_recipe(recipe.to_core(), trace=trace)
    return AnalysisReportModel.from_core(report)


@app.post("/realize", response_model=RecipeModel)
def realize(target: TargetModel) -> RecipeModel:
    """Open-book recipe whose analysis reproduces the target."""
    recipe = analysis.realize_target(target.to_core())
    return RecipeModel.from_core(recipe)


@app.post("/booksum", response_model=AnalysisReportModel)
def booksum(request: BooksumRequest, trace: bool = Query(default=False)) -> AnalysisReportModel:
    """Analyze the book-connected sum of several recipes."""
    report = analysis.booksum([r.to_core() for r in request.recipes], trace=trace)
    return AnalysisReportModel.from_core(report)


@app.post("/profiles/binding", response_model=ProfileVerdictModel)
def profiles_binding(
    profile: BindingProfileModel,
    tolerance: float = Query(default=contactgeom.DEFAULT_TOLERANCE, gt=0),
) -> ProfileVerdictModel:
    """Contact-condition check for a sampled (h1, h2) pair."""
    verdict = contactgeom.validate_binding_profiles(profile.to_core(), tolerance)
    return ProfileVerdictModel.from_core("binding", verdict)


@app.post("/profiles/deformation", response_model=ProfileVerdictModel)
def profiles_deformation(
    profile: DeformationProfileModel,
    tolerance: float = Query(default=contactgeom.DEFAULT_TOLERANCE, gt=0),
) -> ProfileVerdictModel:
    """Plateau and slope-bound check for a sampled cutoff function."""
    verdict = contactgeom.deformation_profile_verdict(profile.to_core(), tolerance)
    return ProfileVerdictModel.from_core("deformation", verdict)
