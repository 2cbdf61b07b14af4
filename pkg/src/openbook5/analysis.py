"""Recipe analysis: per-page homology, assembly, and identification.

This is the shared engine behind the CLI and the HTTP service.  Given
an ``OpenBookRecipe`` it computes, per page, the mapping-torus
homology (Wang sequence), the binding homology and the closed book's
homology, then combines pages as a book-connected sum and names the
resulting manifold via Barden's classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .abelian import FgAbelianGroup, IntegerMatrix, TRIVIAL_GROUP
from .barden import (
    OpenBookRecipe,
    TargetSpec,
    format_summands,
    identify,
    realize,
    spin_from_pages,
)
from .contactgeom import isotopy_parameter
from .errors import OpenBookError
from .openbook import (
    ClosedBookHomology,
    MappingTorusHomology,
    S5_HOMOLOGY,
    assemble_closed_homology,
    binding_homology,
    book_connected_sum,
    from_h2,
    wang_homology,
)
from .pages import (
    BrieskornPage,
    DiskBundlePage,
    DiskPage,
    PageSpec,
    S5_TAG,
    page_chern_class,
    trivial_monodromy_total_space,
)
from .pham import rotation_matrix


@dataclass(frozen=True)
class PageTrace:
    """Intermediate matrices kept only when tracing is requested."""

    monodromy: tuple[tuple[int, ...], ...]
    snf_diagonal: tuple[int, ...]


@dataclass(frozen=True)
class PageReport:
    """Diagnostics for one page of the book."""

    kind: str
    label: str
    mapping_torus: MappingTorusHomology
    binding_h1: FgAbelianGroup
    closed: ClosedBookHomology
    chern: Optional[int] = None
    manifold: Optional[str] = None
    isotopy_t0: Optional[int] = None
    trace: Optional[PageTrace] = None


@dataclass(frozen=True)
class AnalysisReport:
    """Full analysis of a recipe: a pure function of the recipe data."""

    pages: tuple[PageReport, ...]
    homology: ClosedBookHomology
    summand_names: tuple[str, ...]
    identification: str
    chern: tuple[int, ...]
    spin: bool
    almost_contact: bool = True


def page_label(p: PageSpec) -> str:
    if isinstance(p, DiskPage):
        return "disk"
    if isinstance(p, DiskBundlePage):
        return f"disk_bundle k={p.k} ({p.stab_left},{p.stab_right})"
    return (
        f"brieskorn {p.exponents} coord {p.rotated_coordinate} "
        f"power {p.rotation_power}"
    )


def _trace_for(monodromy: IntegerMatrix) -> PageTrace:
    from .abelian import invariant_factor_diagonal

    delta = monodromy.minus_identity()
    return PageTrace(
        monodromy=tuple(tuple(monodromy.row(i)) for i in range(monodromy.rows)),
        snf_diagonal=invariant_factor_diagonal(delta),
    )


def analyze_page(p: PageSpec, trace: bool = False) -> PageReport:
    """Run the homology pipeline appropriate to the page kind.

    Disk pages short-circuit to the 5-sphere; disk bundles go through
    the sphere-bundle identification (their binding is a circle bundle
    with cyclic H_1, so torsion assembly does not apply); Brieskorn
    pages run Wang sequence + binding homology + Mayer-Vietoris
    assembly.
    """
    if isinstance(p, DiskPage):
        mt = MappingTorusHomology(
            h1=FgAbelianGroup(rank=1),
            h2=TRIVIAL_GROUP,
            h3=TRIVIAL_GROUP,
            page_h2_rank=0,
        )
        return PageReport(
            kind="disk",
            label=page_label(p),
            mapping_torus=mt,
            binding_h1=TRIVIAL_GROUP,
            closed=S5_HOMOLOGY,
            manifold=S5_TAG,
        )

    if isinstance(p, DiskBundlePage):
        monodromy = IntegerMatrix.identity(1)
        mt = wang_homology(monodromy)
        tag, chern = trivial_monodromy_total_space(p)
        return PageReport(
            kind="disk_bundle",
            label=page_label(p),
            mapping_torus=mt,
            binding_h1=FgAbelianGroup(0, (p.k,)),
            closed=from_h2(FgAbelianGroup(rank=1)),
            chern=chern,
            manifold=tag,
            trace=_trace_for(monodromy) if trace else None,
        )

    exponents = p.exponents.rotated_first(p.rotated_coordinate)
    monodromy = rotation_matrix(exponents, 0, p.rotation_power)
    mt = wang_homology(monodromy)
    binding = binding_homology(exponents)
    t0 = isotopy_parameter(exponents)
    closed = assemble_closed_homology(mt, binding)
    return PageReport(
        kind="brieskorn",
        label=page_label(p),
        mapping_torus=mt,
        binding_h1=binding,
        closed=closed,
        isotopy_t0=t0,
        trace=_trace_for(monodromy) if trace else None,
    )


def analyze_recipe(recipe: OpenBookRecipe, trace: bool = False) -> AnalysisReport:
    """Analyze a whole recipe as one book-connected sum.

    Domain errors are re-raised with the offending page named.
    """
    page_reports_list = []
    for idx, p in enumerate(recipe.pages):
        try:
            page_reports_list.append(analyze_page(p, trace=trace))
        except OpenBookError as e:
            raise type(e)(f"page {idx + 1} [{page_label(p)}]: {e}") from e
    page_reports = tuple(page_reports_list)
    combined = book_connected_sum([r.closed for r in page_reports])
    summands = identify(combined, recipe.pages)
    chern = tuple(
        r.chern for r in page_reports if r.kind == "disk_bundle" and r.chern is not None
    )
    return AnalysisReport(
        pages=page_reports,
        homology=combined,
        summand_names=tuple(str(s) for s in summands),
        identification=format_summands(summands),
        chern=chern,
        spin=spin_from_pages(recipe.pages),
    )


def realize_target(t: TargetSpec) -> OpenBookRecipe:
    """Thin alias so the service layer has one import surface."""
    return realize(t)


def booksum(recipes: list[OpenBookRecipe], trace: bool = False) -> AnalysisReport:
    """Concatenate page lists and analyze the result as one recipe."""
    pages: list[PageSpec] = []
    for r in recipes:
        pages.extend(r.pages)
    return analyze_recipe(OpenBookRecipe(pages=tuple(pages)), trace=trace)
