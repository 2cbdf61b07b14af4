"""Barden's classification of simply-connected 5-manifolds as a decision
procedure.

A simply-connected 5-manifold is a connected sum of prime pieces: the
spin pieces S^5, M_k = (H_2 = Z_k (+) Z_k, k a prime power) and
M_inf = S^2 x S^3, plus at most one non-spin piece, of which only
X_inf = S^2 x~ S^3 (the twisted bundle) has vanishing third integral
Stiefel-Whitney class and therefore admits almost contact structures.
For almost-contact targets the full w_2 data collapses to a single
spin boolean together with the at-most-one-X_inf rule.

``decompose`` turns (H_2, spin) into the summand multiset, ``realize``
turns the multiset into an open-book recipe (Brieskorn pages for
torsion, stabilized disk bundles for the free part, the disk page for
the sphere), and ``identify`` names a computed homology using the page
provenance for the spin flag.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from .abelian import FgAbelianGroup, TRIVIAL_GROUP, Z, factor_integer, is_prime_power
from .errors import ChernParityMismatch, MultipleXSummands, NotAlmostContact
from .openbook import ClosedBookHomology
from .pages import BrieskornPage, DiskBundlePage, DiskPage, PageSpec
from .pham import BrieskornExponents

SummandKind = Literal["S5", "M", "M_inf", "X_inf", "X", "X_wu"]


@dataclass(frozen=True, order=True)
class PrimeSummand:
    """One prime building block; ``param`` is k for M(k), j for X(j)."""

    kind: SummandKind
    param: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "M":
            if self.param is None or self.param < 2 or not is_prime_power(self.param):
                raise ValueError(f"M(k) requires a prime power k >= 2, got {self.param}")
        elif self.kind == "X":
            if self.param is None or self.param < 1:
                raise ValueError(f"X(j) requires j >= 1, got {self.param}")
        elif self.param is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    def __str__(self) -> str:
        if self.kind == "M":
            return f"M({self.param})"
        if self.kind == "X":
            return f"X({self.param})"
        return self.kind


S5 = PrimeSummand("S5")
M_INF = PrimeSummand("M_inf")
X_INF = PrimeSummand("X_inf")
X_WU = PrimeSummand("X_wu")


def M(k: int) -> PrimeSummand:
    return PrimeSummand("M", k)


def X(j: int) -> PrimeSummand:
    return PrimeSummand("X", j)


def summand_invariants(s: PrimeSummand) -> tuple[FgAbelianGroup, bool, bool]:
    """(H_2, w_2 trivial?, W_3 zero?) for one prime summand."""
    if s.kind == "S5":
        return TRIVIAL_GROUP, True, True
    if s.kind == "M":
        return FgAbelianGroup(0, (s.param, s.param)), True, True
    if s.kind == "M_inf":
        return Z, True, True
    if s.kind == "X_inf":
        return Z, False, True
    if s.kind == "X":
        q = 2**s.param
        return FgAbelianGroup(0, (q, q)), False, False
    # X_wu
    return FgAbelianGroup(0, (2,)), False, False


def _check_x_count(summands: Iterable[PrimeSummand]) -> list[PrimeSummand]:
    items = list(summands)
    x_like = [s for s in items if s.kind in ("X_inf", "X", "X_wu")]
    if len(x_like) > 1:
        raise MultipleXSummands(
            f"at most one X-type summand is allowed, got {[str(s) for s in x_like]}"
        )
    return items


def admits_almost_contact(summands: Iterable[PrimeSummand]) -> bool:
    """True iff no summand carries W_3 != 0 (no X(j), no Wu manifold)."""
    items = _check_x_count(summands)
    return all(summand_invariants(s)[2] for s in items)


@dataclass(frozen=True)
class TargetSpec:
    """A desired 5-manifold: H_2, spin flag, Chern data on free part.

    ``chern`` lists one integer per free generator of H_2 (empty means
    all zero).  Whether the torsion actually decomposes into doubled
    prime-power pairs is checked by ``decompose``, so inadmissible
    targets can be constructed and then rejected loudly.
    """

    h2: FgAbelianGroup
    spin: bool
    chern: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not isinstance(self.chern, tuple):
            object.__setattr__(self, "chern", tuple(int(c) for c in self.chern))

    def chern_values(self) -> tuple[int, ...]:
        """Chern vector padded with zeros to the free rank."""
        if len(self.chern) > self.h2.rank:
            raise ChernParityMismatch(
                f"{len(self.chern)} Chern values for rank {self.h2.rank}"
            )
        return self.chern + (0,) * (self.h2.rank - len(self.chern))


@dataclass(frozen=True)
class OpenBookRecipe:
    """A book-connected sum of pages; order is irrelevant to the manifold."""

    pages: tuple[PageSpec, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.pages, tuple):
            object.__setattr__(self, "pages", tuple(self.pages))
        if not self.pages:
            raise ValueError("a recipe needs at least one page")
        odd = [p for p in self.pages if isinstance(p, DiskBundlePage) and p.k % 2 == 1]
        if len(odd) > 1:
            raise ValueError(
                "at most one disk-bundle page with odd k (one X_inf summand) is allowed"
            )


def _doubled_prime_power_pairs(torsion: Sequence[int]) -> list[int]:
    """Rewrite a torsion chain as q's with T = (+)_q (Z_q (+) Z_q).

    Raises NotAlmostContact when some prime power occurs an odd number
    of times: such classes force an X(j) or Wu summand, which has
    W_3 != 0.
    """
    counts: Counter[int] = Counter()
    for d in torsion:
        for p, e in factor_integer(d):
            counts[p**e] += 1
    qs: list[int] = []
    for q in sorted(counts):
        c = counts[q]
        if c % 2 != 0:
            raise NotAlmostContact(
                f"torsion is not a doubled sum of prime-power pairs "
                f"(Z_{q} occurs {c} times); the class has W_3 != 0"
            )
        qs.extend([q] * (c // 2))
    return qs


def decompose(t: TargetSpec) -> list[PrimeSummand]:
    """Prime decomposition of an almost-contact target.

    Torsion contributes one M(q) per doubled pair Z_q (+) Z_q, the free
    rank contributes M_inf's, one of which becomes X_inf when the
    target is not spin.  The empty spin target is the sphere.
    """
    if not t.spin and t.h2.rank == 0:
        raise NotAlmostContact(
            "a non-spin class with no free H_2 forces an X(j) or Wu summand (W_3 != 0)"
        )
    qs = _doubled_prime_power_pairs(t.h2.torsion)
    summands: list[PrimeSummand] = []
    free = [M_INF] * t.h2.rank
    if not t.spin:
        free[0] = X_INF
    summands.extend(free)
    summands.extend(M(q) for q in qs)
    if not summands:
        return [S5]
    return summands


def summands_h2(summands: Iterable[PrimeSummand]) -> FgAbelianGroup:
    """Direct sum of the summands' H_2 (connected-sum homology)."""
    from .abelian import direct_sum

    total = TRIVIAL_GROUP
    for s in summands:
        total = direct_sum(total, summand_invariants(s)[0])
    return total


def summands_spin(summands: Iterable[PrimeSummand]) -> bool:
    return all(summand_invariants(s)[1] for s in _check_x_count(summands))


def format_summands(summands: Sequence[PrimeSummand]) -> str:
    """Connected-sum string, free pieces first: "X_inf # M_inf # M(4)"."""
    order = {"X_inf": 0, "M_inf": 1, "M": 2, "S5": 3, "X": 4, "X_wu": 5}
    ordered = sorted(summands, key=lambda s: (order[s.kind], s.param or 0))
    return " # ".join(str(s) for s in ordered)


def spin_from_pages(pages: Iterable[PageSpec]) -> bool:
    """w_2 of the book from page provenance: only an odd-k disk bundle
    (the twisted sphere bundle) makes the result non-spin."""
    return not any(
        isinstance(p, DiskBundlePage) and p.k % 2 == 1 for p in pages
    )


def identify(h: ClosedBookHomology, pages: Iterable[PageSpec]) -> list[PrimeSummand]:
    """Barden identification of a computed book: decompose (H_2, spin).

    Brieskorn and disk pages yield spin books (their books carry
    contact structures, so W_3 = 0, and among non-spin primes only
    X_inf satisfies that); disk bundles contribute w_2 = k mod 2.
    """
    return decompose(TargetSpec(h2=h.h2, spin=spin_from_pages(pages)))


def brieskorn_exponents_for(q: int) -> BrieskornExponents:
    """Torsion exponent table: (q,3,2) generically, (q,3,3) for 2-power
    q, (q,4,2) for 3-power q, keeping the rotated exponent coprime to
    the rest."""
    p = factor_integer(q)[0][0]
    if p == 2:
        return BrieskornExponents((q, 3, 3))
    if p == 3:
        return BrieskornExponents((q, 4, 2))
    return BrieskornExponents((q, 3, 2))


def _disk_bundle_for_chern(c: int, odd: bool) -> DiskBundlePage:
    """Smallest page realizing rotation number c with the asked parity."""
    k = max(3 if odd else 2, abs(c) + 2)
    sr = (k - 2 + c) // 2
    sl = (k - 2 - c) // 2
    return DiskBundlePage(k=k, stab_left=sl, stab_right=sr)


def realize(t: TargetSpec) -> OpenBookRecipe:
    """Open-book recipe whose analysis reproduces the target.

    One page per prime summand: M(q) gets the Brieskorn page from the
    exponent table, each free generator gets a stabilized disk bundle
    realizing its Chern value (the unique odd value on the twisted
    bundle when the target is not spin), the sphere gets the disk
    page.
    """
    summands = decompose(t)
    chern = t.chern_values()
    parities = [c % 2 for c in chern]
    if t.spin:
        if any(parities):
            raise ChernParityMismatch(
                f"spin target needs even Chern values, got {list(chern)}"
            )
    else:
        if sum(parities) != 1:
            raise ChernParityMismatch(
                f"non-spin target needs exactly one odd Chern value, got {list(chern)}"
            )

    free_pages: list[PageSpec] = [
        _disk_bundle_for_chern(c, odd=bool(c % 2)) for c in chern
    ]
    torsion_pages: list[PageSpec] = [
        BrieskornPage(exponents=brieskorn_exponents_for(s.param))
        for s in sorted(
            (s for s in summands if s.kind == "M"), key=lambda s: s.param
        )
    ]
    pages = free_pages + torsion_pages
    if not pages:
        pages = [DiskPage()]
    return OpenBookRecipe(pages=tuple(pages))
