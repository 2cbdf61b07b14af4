"""Middle homology of a Brieskorn page and its rotation monodromy.

The Milnor fiber of z_0^{a_0} + ... + z_n^{a_n} deformation-retracts
onto a join of cyclic groups; its middle homology is free with one
generator per index tuple (k_0, ..., k_n), 0 <= k_j <= a_j - 2.  The
product of cyclic groups acts by multiplying coordinates by roots of
unity; on homology the generator w_j of the j-th factor acts through
the group ring modulo the ideal generated by

    1 + w_j + w_j^2 + ... + w_j^{a_j - 1}.

This module enumerates the lattice basis and writes those actions as
exact integer matrices; all homology downstream is Smith normal form
applied to them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .abelian import IntegerMatrix
from .errors import InvalidExponent, InvalidIndex


@dataclass(frozen=True)
class BrieskornExponents:
    """Exponent tuple (a_0, ..., a_n) with every a_i >= 2 and n >= 1."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.a, tuple):
            object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) < 2:
            raise InvalidExponent("need at least two exponents (n >= 1)")
        if any(x < 2 for x in self.a):
            raise InvalidExponent(f"all exponents must be >= 2, got {list(self.a)}")

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> int:
        return self.a[i]

    def lcm(self) -> int:
        return math.lcm(*self.a)

    def rotated_first(self, j: int) -> "BrieskornExponents":
        """Same exponents with coordinate j moved to the front.

        The variety is symmetric under permuting coordinates, so
        rotating coordinate j of ``a`` is rotating coordinate 0 of the
        permuted tuple.
        """
        if not 0 <= j < len(self.a):
            raise InvalidIndex(f"coordinate {j} out of range for {list(self.a)}")
        return BrieskornExponents((self.a[j],) + self.a[:j] + self.a[j + 1 :])

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + ")"


@dataclass(frozen=True)
class PhamBasis:
    """Ordered lattice basis of the page's middle homology.

    Tuples run over 0 <= k_j <= a_j - 2 with k_0 varying fastest, so
    the matrix of the first-coordinate rotation is block-diagonal with
    prod_{i>=1}(a_i - 1) companion blocks of size a_0 - 1.
    """

    exponents: BrieskornExponents
    tuples: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.tuples)

    def index_of(self, tup: tuple[int, ...]) -> int:
        # lexicographic with k_0 fastest: mixed-radix value, k_0 least significant
        idx = 0
        for k, a in zip(reversed(tup), reversed(self.exponents.a)):
            idx = idx * (a - 1) + k
        return idx


def basis(a: BrieskornExponents) -> PhamBasis:
    """Enumerate the basis tuples; size is prod(a_j - 1)."""
    ranges = [range(x - 1) for x in reversed(a.a)]
    tuples = tuple(tuple(reversed(t)) for t in product(*ranges))
    return PhamBasis(exponents=a, tuples=tuples)


def rotation_matrix(a: BrieskornExponents, j: int, power: int = 1) -> IntegerMatrix:
    """Matrix of multiplication by w_j^power on the basis.

    w_j has order a_j, so only power mod a_j matters.  Raising the
    j-th index past a_j - 2 triggers the rewrite

        w_j^{a_j - 1} == -(1 + w_j + ... + w_j^{a_j - 2}),

    and one rewrite per basis vector suffices because a single
    multiplication raises only one index.
    """
    if not 0 <= j < len(a):
        raise InvalidIndex(f"coordinate {j} out of range for {list(a.a)}")
    b = basis(a)
    n = b.size
    aj = a[j]
    p = power % aj
    col_entries: list[list[tuple[int, int]]] = []
    for src, tup in enumerate(b.tuples):
        k = tup[j] + p
        targets: list[tuple[int, int]] = []
        if k <= aj - 2:
            targets.append((b.index_of(tup[:j] + (k,) + tup[j + 1 :]), 1))
        elif k == aj - 1:
            for m in range(aj - 1):
                targets.append((b.index_of(tup[:j] + (m,) + tup[j + 1 :]), -1))
        else:
            targets.append((b.index_of(tup[:j] + (k - aj,) + tup[j + 1 :]), 1))
        col_entries.append(targets)
    entries = [0] * (n * n)
    for col, targets in enumerate(col_entries):
        for row, val in targets:
            entries[row * n + col] += val
    return IntegerMatrix(n, n, tuple(entries))


def full_monodromy_matrix(a: BrieskornExponents) -> IntegerMatrix:
    """Matrix of the composite rotation w_0 w_1 ... w_n.

    This is the geometric monodromy of the Milnor fibration on middle
    homology; its order divides lcm(a_0, ..., a_n).

    Built directly: the coordinates act independently, so the image of
    a basis vector is the product over coordinates of either a single
    shifted generator or the rewritten negative sum.  This equals the
    product of the rotation_matrix factors (they commute) without the
    dense matrix multiplications.
    """
    b = basis(a)
    n = b.size
    shift_tables: list[list[tuple[tuple[int, ...], int]]] = []
    for aj in a.a:
        table: list[tuple[tuple[int, ...], int]] = []
        for k in range(aj - 1):
            if k + 1 <= aj - 2:
                table.append(((k + 1,), 1))
            else:
                table.append((tuple(range(aj - 1)), -1))
        shift_tables.append(table)
    entries = [0] * (n * n)
    for col, tup in enumerate(b.tuples):
        choices = [shift_tables[j][k] for j, k in enumerate(tup)]
        sign = 1
        for _, s in choices:
            sign *= s
        for combo in product(*(targets for targets, _ in choices)):
            entries[b.index_of(combo) * n + col] += sign
    return IntegerMatrix(n, n, tuple(entries))
