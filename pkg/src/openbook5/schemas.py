"""Pydantic request/response models: the JSON wire contract.

These models are the single definition of the file formats read by the
CLI and the bodies accepted/returned by the HTTP service.  Each wraps
a core immutable value; ``to_core`` / ``from_core`` convert between
the two layers.  Validation mirrors the core invariants so malformed
input is rejected at the boundary (divisibility chains, stabilization
counts, exponent ranges).
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from . import abelian, analysis, barden, contactgeom, pages
from .pham import BrieskornExponents


class GroupModel(BaseModel):
    """Finitely generated abelian group: {"rank": n, "torsion": [d1, ...]}.

    The torsion list must already be a divisibility chain; it is
    enforced on read rather than silently re-canonicalized.
    """

    model_config = ConfigDict(extra="forbid")

    rank: int = Field(default=0, ge=0)
    torsion: list[int] = Field(default_factory=list)

    @field_validator("torsion")
    @classmethod
    def _chain(cls, v: list[int]) -> list[int]:
        prev = None
        for d in v:
            if d < 2:
                raise ValueError("torsion entries must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError(f"torsion {v} is not a divisibility chain")
            prev = d
        return v

    def to_core(self) -> abelian.FgAbelianGroup:
        return abelian.FgAbelianGroup(rank=self.rank, torsion=tuple(self.torsion))

    @classmethod
    def from_core(cls, g: abelian.FgAbelianGroup) -> "GroupModel":
        return cls(rank=g.rank, torsion=list(g.torsion))


class DiskBundlePageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["disk_bundle"]
    k: int = Field(ge=2)
    stab_left: int = Field(ge=0)
    stab_right: int = Field(ge=0)

    @model_validator(mode="after")
    def _stabs(self) -> "DiskBundlePageModel":
        if self.stab_left + self.stab_right != self.k - 2:
            raise ValueError(
                f"stab_left + stab_right must equal k - 2 = {self.k - 2}"
            )
        return self

    def to_core(self) -> pages.DiskBundlePage:
        return pages.DiskBundlePage(self.k, self.stab_left, self.stab_right)


class BrieskornPageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["brieskorn"]
    exponents: list[int] = Field(min_length=2)
    rotated_coordinate: int = Field(default=0, ge=0)
    rotation_power: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _ranges(self) -> "BrieskornPageModel":
        if any(a < 2 for a in self.exponents):
            raise ValueError("all exponents must be >= 2")
        if self.rotated_coordinate >= len(self.exponents):
            raise ValueError("rotated_coordinate out of range")
        return self

    def to_core(self) -> pages.BrieskornPage:
        return pages.BrieskornPage(
            exponents=BrieskornExponents(tuple(self.exponents)),
            rotated_coordinate=self.rotated_coordinate,
            rotation_power=self.rotation_power,
        )


class DiskPageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["disk"]

    def to_core(self) -> pages.DiskPage:
        return pages.DiskPage()


PageModel = Annotated[
    Union[DiskBundlePageModel, BrieskornPageModel, DiskPageModel],
    Field(discriminator="kind"),
]


def page_model_from_core(p: pages.PageSpec) -> BaseModel:
    if isinstance(p, pages.DiskPage):
        return DiskPageModel(kind="disk")
    if isinstance(p, pages.DiskBundlePage):
        return DiskBundlePageModel(
            kind="disk_bundle", k=p.k, stab_left=p.stab_left, stab_right=p.stab_right
        )
    return BrieskornPageModel(
        kind="brieskorn",
        exponents=list(p.exponents.a),
        rotated_coordinate=p.rotated_coordinate,
        rotation_power=p.rotation_power,
    )


class RecipeModel(BaseModel):
    """An open-book recipe: a nonempty book-connected sum of pages."""

    model_config = ConfigDict(extra="forbid")

    pages: list[PageModel] = Field(min_length=1)

    @model_validator(mode="after")
    def _one_twisted(self) -> "RecipeModel":
        odd = [
            p for p in self.pages
            if isinstance(p, DiskBundlePageModel) and p.k % 2 == 1
        ]
        if len(odd) > 1:
            raise ValueError(
                "at most one disk-bundle page with odd k (one X_inf summand)"
            )
        return self

    def to_core(self) -> barden.OpenBookRecipe:
        return barden.OpenBookRecipe(pages=tuple(p.to_core() for p in self.pages))

    @classmethod
    def from_core(cls, r: barden.OpenBookRecipe) -> "RecipeModel":
        return cls(pages=[page_model_from_core(p) for p in r.pages])


class TargetModel(BaseModel):
    """Desired manifold: {"h2": {...}, "spin": bool, "chern": [...]}."""

    model_config = ConfigDict(extra="forbid")

    h2: GroupModel
    spin: bool
    chern: list[int] = Field(default_factory=list)

    def to_core(self) -> barden.TargetSpec:
        return barden.TargetSpec(
            h2=self.h2.to_core(), spin=self.spin, chern=tuple(self.chern)
        )


class BooksumRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    recipes: list[RecipeModel] = Field(min_length=1)


class BindingProfileModel(BaseModel):
    """Sampled binding profiles: {"r": [...], "h1": [...], "h2": [...]}."""

    model_config = ConfigDict(extra="forbid")

    r: list[float]
    h1: list[float]
    h2: list[float]

    @model_validator(mode="after")
    def _lengths(self) -> "BindingProfileModel":
        if len(self.h1) != len(self.r) or len(self.h2) != len(self.r):
            raise ValueError("h1 and h2 must have the same length as r")
        return self

    def to_core(self) -> contactgeom.ProfileSample:
        return contactgeom.ProfileSample(
            r_grid=tuple(self.r),
            h1_values=tuple(self.h1),
            h2_values=tuple(self.h2),
        )


class DeformationProfileModel(BaseModel):
    """Sampled cutoff: {"r": [...], "f": [...], "R0": ..., "R1": ..., "epsilon": ...}."""

    model_config = ConfigDict(extra="forbid")

    r: list[float]
    f: list[float]
    R0: float
    R1: float
    epsilon: float = Field(gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def _shape(self) -> "DeformationProfileModel":
        if len(self.f) != len(self.r):
            raise ValueError("f must have the same length as r")
        if not self.R0 < self.R1:
            raise ValueError("need R0 < R1")
        return self

    def to_core(self) -> contactgeom.DeformationProfile:
        return contactgeom.DeformationProfile(
            r_grid=tuple(self.r),
            f_values=tuple(self.f),
            R0=self.R0,
            R1=self.R1,
            epsilon=self.epsilon,
        )


class ProfileVerdictModel(BaseModel):
    kind: str
    passed: bool
    failures: list[str]

    @classmethod
    def from_core(cls, kind: str, v: contactgeom.ProfileVerdict) -> "ProfileVerdictModel":
        return cls(kind=kind, passed=v.passed, failures=list(v.failures))


class MappingTorusModel(BaseModel):
    h1: GroupModel
    h2: GroupModel
    h3: GroupModel
    page_h2_rank: int

    @classmethod
    def from_core(cls, mt) -> "MappingTorusModel":
        return cls(
            h1=GroupModel.from_core(mt.h1),
            h2=GroupModel.from_core(mt.h2),
            h3=GroupModel.from_core(mt.h3),
            page_h2_rank=mt.page_h2_rank,
        )


class ClosedHomologyModel(BaseModel):
    h1: GroupModel
    h2: GroupModel
    h3: GroupModel
    simply_connected: bool

    @classmethod
    def from_core(cls, h) -> "ClosedHomologyModel":
        return cls(
            h1=GroupModel.from_core(h.h1),
            h2=GroupModel.from_core(h.h2),
            h3=GroupModel.from_core(h.h3),
            simply_connected=h.simply_connected,
        )


class PageTraceModel(BaseModel):
    monodromy: list[list[int]]
    snf_diagonal: list[int]


class PageReportModel(BaseModel):
    kind: str
    label: str
    mapping_torus: MappingTorusModel
    binding_h1: GroupModel
    closed: ClosedHomologyModel
    chern: Optional[int] = None
    manifold: Optional[str] = None
    isotopy_t0: Optional[int] = None
    trace: Optional[PageTraceModel] = None

    @classmethod
    def from_core(cls, r: analysis.PageReport) -> "PageReportModel":
        trace = None
        if r.trace is not None:
            trace = PageTraceModel(
                monodromy=[list(row) for row in r.trace.monodromy],
                snf_diagonal=list(r.trace.snf_diagonal),
            )
        return cls(
            kind=r.kind,
            label=r.label,
            mapping_torus=MappingTorusModel.from_core(r.mapping_torus),
            binding_h1=GroupModel.from_core(r.binding_h1),
            closed=ClosedHomologyModel.from_core(r.closed),
            chern=r.chern,
            manifold=r.manifold,
            isotopy_t0=r.isotopy_t0,
            trace=trace,
        )


class AnalysisReportModel(BaseModel):
    pages: list[PageReportModel]
    homology: ClosedHomologyModel
    summands: list[str]
    identification: str
    chern: list[int]
    spin: bool
    almost_contact: bool

    @classmethod
    def from_core(cls, rep: analysis.AnalysisReport) -> "AnalysisReportModel":
        return cls(
            pages=[PageReportModel.from_core(p) for p in rep.pages],
            homology=ClosedHomologyModel.from_core(rep.homology),
            summands=list(rep.summand_names),
            identification=rep.identification,
            chern=list(rep.chern),
            spin=rep.spin,
            almost_contact=rep.almost_contact,
        )
