"""Contact open books on simply-connected five-manifolds.

Exact homology of abstract open books (Smith normal form over Z, Wang
sequences, binding homology, Mayer-Vietoris assembly), Barden
classification, Chern-class bookkeeping for disk-bundle pages, and a
realizer that produces an open-book recipe for any admissible target.
"""

from .abelian import (
    FgAbelianGroup,
    IntegerMatrix,
    SmithDecomposition,
    cokernel,
    direct_sum,
    is_isomorphic,
    kernel_rank,
    smith_normal_form,
)
from .analysis import AnalysisReport, analyze_page, analyze_recipe, booksum
from .barden import (
    OpenBookRecipe,
    PrimeSummand,
    TargetSpec,
    admits_almost_contact,
    decompose,
    identify,
    realize,
    summand_invariants,
)
from .contactgeom import (
    DeformationProfile,
    ProfileSample,
    isotopy_parameter,
    validate_binding_profiles,
    validate_deformation_profile,
)
from .openbook import (
    ClosedBookHomology,
    MappingTorusHomology,
    assemble_closed_homology,
    binding_homology,
    book_connected_sum,
    is_homology_sphere,
    remark_higher_binding,
    wang_homology,
)
from .pages import (
    BrieskornPage,
    DiskBundlePage,
    DiskPage,
    PageSpec,
    legendrian_invariants,
    mirror,
    page_chern_class,
    realizable_chern_values,
    trivial_monodromy_total_space,
)
from .pham import BrieskornExponents, PhamBasis, basis, full_monodromy_matrix, rotation_matrix

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BrieskornExponents",
    "BrieskornPage",
    "ClosedBookHomology",
    "DeformationProfile",
    "DiskBundlePage",
    "DiskPage",
    "FgAbelianGroup",
    "IntegerMatrix",
    "MappingTorusHomology",
    "OpenBookRecipe",
    "PageSpec",
    "PhamBasis",
    "PrimeSummand",
    "ProfileSample",
    "SmithDecomposition",
    "TargetSpec",
    "admits_almost_contact",
    "analyze_page",
    "analyze_recipe",
    "assemble_closed_homology",
    "basis",
    "binding_homology",
    "book_connected_sum",
    "booksum",
    "cokernel",
    "decompose",
    "direct_sum",
    "full_monodromy_matrix",
    "identify",
    "is_homology_sphere",
    "is_isomorphic",
    "isotopy_parameter",
    "kernel_rank",
    "legendrian_invariants",
    "mirror",
    "page_chern_class",
    "realizable_chern_values",
    "realize",
    "remark_higher_binding",
    "rotation_matrix",
    "smith_normal_form",
    "summand_invariants",
    "trivial_monodromy_total_space",
    "validate_binding_profiles",
    "validate_deformation_profile",
    "wang_homology",
]
