"""Catalog of Stein pages and their contact-topological invariants.

Three page kinds feed the pipeline:

* ``DiskBundlePage`` -- the 2-disk bundle over the sphere with Euler
  number -k, presented by a single Legendrian unknot with k - 2
  stabilizations; used with the identity monodromy.  The total space
  of that book is a 3-sphere bundle over the 2-sphere, trivial for k
  even and twisted for k odd, and the first Chern class of the contact
  structure equals the rotation number of the unknot.
* ``BrieskornPage`` -- a Brieskorn variety with a coordinate rotation
  as monodromy; homology flows through the openbook module.
* ``DiskPage`` -- the 4-disk with identity monodromy, which
  short-circuits to the 5-sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .pham import BrieskornExponents

S2xS3 = "S2xS3"
S2xS3_TWISTED = "S2x~S3"
S5_TAG = "S5"


@dataclass(frozen=True)
class DiskBundlePage:
    """Disk bundle with Euler number -k, k >= 2; framing tb - 1 = -k."""

    k: int
    stab_left: int
    stab_right: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("Euler-number magnitude k must be >= 2")
        if self.stab_left < 0 or self.stab_right < 0:
            raise ValueError("stabilization counts must be nonnegative")
        if self.stab_left + self.stab_right != self.k - 2:
            raise ValueError(
                f"stab_left + stab_right must equal k - 2 = {self.k - 2} "
                f"(got {self.stab_left} + {self.stab_right})"
            )


@dataclass(frozen=True)
class BrieskornPage:
    """Brieskorn variety page with a root-of-unity rotation as monodromy."""

    exponents: BrieskornExponents
    rotated_coordinate: int = 0
    rotation_power: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.rotated_coordinate < len(self.exponents):
            raise ValueError(
                f"rotated coordinate {self.rotated_coordinate} out of range"
            )
        if self.rotation_power < 1:
            raise ValueError("rotation power must be >= 1")


@dataclass(frozen=True)
class DiskPage:
    """The 4-disk with identity monodromy (the 5-sphere's book)."""


PageSpec = Union[DiskBundlePage, BrieskornPage, DiskPage]


def legendrian_invariants(stab_left: int, stab_right: int) -> tuple[int, int, int]:
    """(tb, rotation, framing) of the stabilized Legendrian unknot.

    Starting from tb = -1, rot = 0, each stabilization drops tb by one
    and moves rot by -1 (left) or +1 (right); the handle framing is
    the contact framing minus one.
    """
    if stab_left < 0 or stab_right < 0:
        raise ValueError("stabilization counts must be nonnegative")
    tb = -1 - stab_left - stab_right
    rot = stab_right - stab_left
    return tb, rot, tb - 1


def realizable_chern_values(k: int) -> set[int]:
    """Rotation numbers of unknots presenting the Euler -k bundle.

    The set {-k+2, -k+4, ..., k-2}; every value has the parity of k.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    return set(range(-k + 2, k - 1, 2))


def page_chern_class(p: DiskBundlePage) -> int:
    """c_1 of the Stein structure: the unknot's rotation number."""
    return legendrian_invariants(p.stab_left, p.stab_right)[1]


def trivial_monodromy_total_space(p: DiskBundlePage) -> tuple[str, int]:
    """(manifold tag, contact c_1) for the identity-monodromy book.

    The book's total space is the boundary of a rank-4 disk bundle
    over the sphere, hence the trivial S^3-bundle for k even and the
    twisted one for k odd; the contact structure's Chern class is the
    page's.
    """
    tag = S2xS3 if p.k % 2 == 0 else S2xS3_TWISTED
    return tag, page_chern_class(p)


def mirror(p: DiskBundlePage) -> DiskBundlePage:
    """Mirror the Legendrian unknot: swaps stabilizations, negates c_1."""
    return DiskBundlePage(k=p.k, stab_left=p.stab_right, stab_right=p.stab_left)
