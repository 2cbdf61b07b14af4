"""Homology pipeline for abstract open books.

A page P with monodromy map induces the mapping torus A (a bundle over
the circle, handled by the Wang sequence), the thickened binding
B = K x D^2, and the closed manifold X = A u B.  With a simply
connected page whose only reduced homology is a free H_2, the Wang
sequence collapses to

    0 -> H_3(A) -> H_2(P) --(M - id)--> H_2(P) -> H_2(A) -> 0,

so H_2(A) = coker(M - id) and H_3(A) is free of rank ker(M - id).
Binding homology comes from the same lattice: the middle homology of
the Brieskorn manifold K is the cokernel of (full monodromy - id) on
the page's middle homology (Wang sequence of the Milnor fibration plus
duality on the link).

The Mayer-Vietoris assembly into H_*(X) is implemented as the explicit
case analysis that is actually justified for the catalog pages; inputs
outside those hypotheses raise UnsupportedAssembly instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    FgAbelianGroup,
    IntegerMatrix,
    TRIVIAL_GROUP,
    Z,
    cokernel,
    cokernel_and_kernel_rank,
    direct_sum,
    factor_integer,
)
from .errors import InvalidExponent, NonSquare, UnsupportedAssembly
from .pham import BrieskornExponents, full_monodromy_matrix


@dataclass(frozen=True)
class MappingTorusHomology:
    """H_* of the mapping torus of a simply connected page.

    h1 is always Z (fiber bundle over the circle) and h3 is always
    free (it is a kernel of an integer map).
    """

    h1: FgAbelianGroup
    h2: FgAbelianGroup
    h3: FgAbelianGroup
    page_h2_rank: int

    def __post_init__(self) -> None:
        if self.h1 != Z:
            raise ValueError("mapping torus of a simply connected page has H_1 = Z")
        if self.h3.torsion:
            raise ValueError("H_3 of the mapping torus is torsion-free")


@dataclass(frozen=True)
class ClosedBookHomology:
    """H_* of the closed open book X; h0 = h5 = Z, h1 = h4 = 0.

    rank(h3) = rank(h2) and h3 is torsion-free (Poincare duality with
    universal coefficients); both are asserted at construction.
    """

    h2: FgAbelianGroup
    h3: FgAbelianGroup
    simply_connected: bool = True

    def __post_init__(self) -> None:
        if self.h3.torsion:
            raise ValueError("H_3 of a closed simply connected 5-manifold is free")
        if self.h3.rank != self.h2.rank:
            raise ValueError("rank(H_3) must equal rank(H_2)")
        if not self.simply_connected:
            raise ValueError("this pipeline only produces simply connected books")

    @property
    def h0(self) -> FgAbelianGroup:
        return Z

    @property
    def h1(self) -> FgAbelianGroup:
        return TRIVIAL_GROUP

    @property
    def h4(self) -> FgAbelianGroup:
        return TRIVIAL_GROUP

    @property
    def h5(self) -> FgAbelianGroup:
        return Z

    def to_json_dict(self) -> dict:
        return {
            "h1": TRIVIAL_GROUP.to_json_dict(),
            "h2": self.h2.to_json_dict(),
            "h3": self.h3.to_json_dict(),
            "simply_connected": self.simply_connected,
        }


def from_h2(h2: FgAbelianGroup) -> ClosedBookHomology:
    """Closed-book homology determined by H_2 (duality fixes the rest)."""
    return ClosedBookHomology(h2=h2, h3=FgAbelianGroup(rank=h2.rank))


S5_HOMOLOGY = from_h2(TRIVIAL_GROUP)


def wang_homology(monodromy_on_h2: IntegerMatrix) -> MappingTorusHomology:
    """Homology of the mapping torus from the monodromy action on H_2.

    Assumes the page is simply connected with H_1 = H_3 = 0 and H_2
    free of rank equal to the matrix size (true for every catalog
    page).
    """
    if not monodromy_on_h2.is_square:
        raise NonSquare("monodromy must act on H_2 by a square matrix")
    delta = monodromy_on_h2.minus_identity()
    h2, h3_rank = cokernel_and_kernel_rank(delta)
    return MappingTorusHomology(
        h1=Z,
        h2=h2,
        h3=FgAbelianGroup(rank=h3_rank),
        page_h2_rank=monodromy_on_h2.rows,
    )


def binding_homology(a: BrieskornExponents) -> FgAbelianGroup:
    """Middle homology H_{n-1}(K) of the Brieskorn manifold K.

    Computed as coker(full monodromy - id) on the page's middle
    homology lattice; reproduces the classical link-homology values
    (Z_{2^k} (+) Z_{2^k} for (2^k,3,3), Z_{3^k} for (3^k,4,2), trivial
    for pairwise coprime exponents).
    """
    if len(a) < 3:
        raise InvalidExponent("binding of dimension >= 3 needs at least three exponents")
    delta = full_monodromy_matrix(a).minus_identity()
    return cokernel(delta)


def is_homology_sphere(a: BrieskornExponents) -> bool:
    """True iff the Brieskorn manifold has the homology of a sphere."""
    if len(a) < 3:
        raise InvalidExponent("binding of dimension >= 3 needs at least three exponents")
    delta = full_monodromy_matrix(a).minus_identity()
    coker, ker_rank = cokernel_and_kernel_rank(delta)
    return coker.is_trivial and ker_rank == 0


def remark_higher_binding(a: BrieskornExponents) -> FgAbelianGroup:
    """H_2 of a five-dimensional Brieskorn manifold (four exponents).

    Same monodromy-cokernel computation one dimension up; gives e.g.
    Z_{p^k} (+) Z_{p^k} for (p^k,3,3,3) with p not divisible by 3.
    """
    if len(a) != 4:
        raise InvalidExponent("a five-dimensional Brieskorn manifold needs four exponents")
    return cokernel(full_monodromy_matrix(a).minus_identity())


def _homogeneous_modulus(g: FgAbelianGroup) -> int | None:
    """m such that g = Z_m^a with m a prime power, else None."""
    if g.rank != 0 or not g.torsion:
        return None
    m = g.torsion[0]
    if any(d != m for d in g.torsion):
        return None
    if len(factor_integer(m)) != 1:
        return None
    return m


def assemble_closed_homology(
    mt: MappingTorusHomology, binding_h1: FgAbelianGroup
) -> ClosedBookHomology:
    """Mayer-Vietoris assembly of H_*(X) from mapping torus and binding.

    Supported hypotheses:

    * binding trivial (homology-sphere binding): H_2(X) = H_2(A);
    * binding and H_2(A) both homogeneous Z_m^b and Z_m^a for one
      prime power m with b <= a: H_2(X) = Z_m^{a-b} (the inclusion of
      H_2(A n B) has a unit subdeterminant over Z_m, so it splits off).

    Anything else --- mixed primes, composite modulus, free H_2(A) ---
    is outside the implemented argument and raises
    UnsupportedAssembly.  In particular disk-bundle books (free H_2,
    circle-bundle binding) are identified by the sphere-bundle
    dispatch in the pages module, never here.
    """
    if mt.h2.rank > 0:
        raise UnsupportedAssembly(
            "H_2 of the mapping torus has free rank; this book is handled by the "
            "sphere-bundle identification, not torsion assembly"
        )
    if binding_h1.is_trivial:
        return from_h2(mt.h2)
    if binding_h1.rank > 0:
        raise UnsupportedAssembly("binding H_1 with free rank is not covered")
    m_a = _homogeneous_modulus(mt.h2)
    m_b = _homogeneous_modulus(binding_h1)
    if m_a is None or m_b is None or m_a != m_b:
        raise UnsupportedAssembly(
            f"need H_2(A) = Z_m^a and H_1(K) = Z_m^b for one prime power m; "
            f"got {mt.h2} and {binding_h1}"
        )
    a_copies = len(mt.h2.torsion)
    b_copies = len(binding_h1.torsion)
    if b_copies > a_copies:
        raise UnsupportedAssembly(
            f"binding torsion Z_{m_b}^{b_copies} exceeds mapping-torus torsion "
            f"Z_{m_a}^{a_copies}"
        )
    return from_h2(FgAbelianGroup(rank=0, torsion=(m_a,) * (a_copies - b_copies)))


def book_connected_sum(reports: list[ClosedBookHomology]) -> ClosedBookHomology:
    """Connected sum of simply connected books: H_2 adds up."""
    h2 = TRIVIAL_GROUP
    for r in reports:
        h2 = direct_sum(h2, r.h2)
    return from_h2(h2)
