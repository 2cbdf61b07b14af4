"""Exact integer matrix algebra and finitely generated abelian groups.

Everything downstream (monodromy actions, Wang sequences, binding
homology) reduces to Smith normal form over Z, so this module is the
single exact-arithmetic engine of the package.  All values are
immutable and all functions are pure.

Matrices carry arbitrary-precision Python integers.  The Smith routine
selects pivots of minimal nonzero absolute value (ties broken by lowest
row, then column index) to limit coefficient blow-up and to make the
output reproducible bit-for-bit.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import MatrixTooLarge, NonSquare

MAX_MATRIX_ENV = "OPENBOOK_MAX_MATRIX"
DEFAULT_MAX_MATRIX = 4096


def _max_dimension() -> int:
    raw = os.environ.get(MAX_MATRIX_ENV)
    if raw is None:
        return DEFAULT_MAX_MATRIX
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_MATRIX


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, row-major; empty shapes are permitted.

    A matrix with 0 columns is the map from the trivial group, one with
    0 rows is the map to the trivial group.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        nrows = len(rows)
        if nrows == 0:
            return cls(0, 0 if cols is None else cols, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "IntegerMatrix":
        m, n = arr.shape
        return cls(m, n, tuple(int(x) for x in arr.reshape(-1)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntegerMatrix":
        n = len(diag)
        return cls(n, n, tuple(int(diag[i]) if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        arr = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                arr[i, j] = self.entries[i * self.cols + j]
        return arr

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix.from_array(self.to_array() @ other.to_array())

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntegerMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def power(self, p: int) -> "IntegerMatrix":
        if not self.is_square:
            raise NonSquare("matrix power requires a square matrix")
        if p < 0:
            raise ValueError("negative powers are not supported")
        result = IntegerMatrix.identity(self.rows)
        base = self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base if p > 1 else base
            p >>= 1
        return result

    def minus_identity(self) -> "IntegerMatrix":
        if not self.is_square:
            raise NonSquare("expected a square matrix")
        return self - IntegerMatrix.identity(self.rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D in Smith normal form."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    source_rows: int
    source_cols: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D.entry(i, i) for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _select_pivot(A: np.ndarray, t: int) -> tuple[int, int] | None:
    """Position of the minimal-|value| nonzero entry of A[t:, t:].

    Ties broken by lowest row index, then lowest column index, so the
    whole reduction is deterministic.  np.nonzero scans in row-major
    order, so the first entry of absolute value 1 already wins.
    """
    m, n = A.shape
    best_abs = None
    best = None
    for i in range(t, m):
        row = A[i, t:]
        for off in np.nonzero(row)[0]:
            v = abs(row[off])
            if best_abs is None or v < best_abs:
                best_abs = v
                best = (i, int(off) + t)
                if v == 1:
                    return best
    return best


def _diagonalize(A: np.ndarray, track: bool) -> tuple[np.ndarray, np.ndarray | None, np.ndarray | None]:
    """Reduce A in place to Smith form; optionally track U, V with U A V = D."""
    m, n = A.shape
    U = np.identity(m, dtype=object) if track else None
    V = np.identity(n, dtype=object) if track else None

    t = 0
    while t < min(m, n):
        pos = _select_pivot(A, t)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            A[[t, pi], :] = A[[pi, t], :]
            if track:
                U[[t, pi], :] = U[[pi, t], :]
        if pj != t:
            A[:, [t, pj]] = A[:, [pj, t]]
            if track:
                V[:, [t, pj]] = V[:, [pj, t]]
        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            if track:
                U[t, :] = -U[t, :]

        # Euclidean sweeps: clear column t and row t.  Remainders are
        # strictly smaller than the pivot, so re-selecting the pivot
        # terminates; once both are clear, enforce that the pivot
        # divides the rest of the submatrix (this is what produces the
        # divisibility chain d1 | d2 | ...).
        while True:
            p = A[t, t]
            col = A[t + 1 :, t]
            dirty = False
            for off in np.nonzero(col)[0]:
                i = int(off) + t + 1
                q = A[i, t] // p
                if q:
                    A[i, :] -= q * A[t, :]
                    if track:
                        U[i, :] -= q * U[t, :]
                if A[i, t] != 0:
                    dirty = True
            row = A[t, t + 1 :]
            for off in np.nonzero(row)[0]:
                j = int(off) + t + 1
                q = A[t, j] // p
                if q:
                    A[:, j] -= q * A[:, t]
                    if track:
                        V[:, j] -= q * V[:, t]
                if A[t, j] != 0:
                    dirty = True
            if dirty:
                pos = _select_pivot(A, t)
                pi, pj = pos
                if pi != t:
                    A[[t, pi], :] = A[[pi, t], :]
                    if track:
                        U[[t, pi], :] = U[[pi, t], :]
                if pj != t:
                    A[:, [t, pj]] = A[:, [pj, t]]
                    if track:
                        V[:, [t, pj]] = V[:, [pj, t]]
                if A[t, t] < 0:
                    A[t, :] = -A[t, :]
                    if track:
                        U[t, :] = -U[t, :]
                continue

            p = A[t, t]
            offender = None
            # entries not divisible by the pivot break the chain; a unit
            # pivot divides everything, so skip the scan outright then
            if p > 1 and t + 1 < m and t + 1 < n:
                rem = A[t + 1 :, t + 1 :]
                bad_rows, bad_cols = np.nonzero(np.mod(rem, p))
                if len(bad_rows) > 0:
                    offender = int(bad_rows[0]) + t + 1
            if offender is None:
                break
            A[t, :] += A[offender, :]
            if track:
                U[t, :] += U[offender, :]

        t += 1
    return A, U, V


def smith_normal_form(A: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms: U @ A @ V = D.

    Total and deterministic; D's diagonal is nonnegative with each
    entry dividing the next and zeros trailing.
    """
    cap = _max_dimension()
    if max(A.rows, A.cols) > cap:
        raise MatrixTooLarge(
            f"matrix is {A.rows}x{A.cols}; {MAX_MATRIX_ENV} caps dimensions at {cap}"
        )
    work = A.to_array()
    D, U, V = _diagonalize(work, track=True)
    return SmithDecomposition(
        U=IntegerMatrix.from_array(U),
        D=IntegerMatrix.from_array(D),
        V=IntegerMatrix.from_array(V),
        source_rows=A.rows,
        source_cols=A.cols,
    )


def invariant_factor_diagonal(A: IntegerMatrix) -> tuple[int, ...]:
    """Diagonal of the Smith form only; skips the U/V bookkeeping."""
    cap = _max_dimension()
    if max(A.rows, A.cols) > cap:
        raise MatrixTooLarge(
            f"matrix is {A.rows}x{A.cols}; {MAX_MATRIX_ENV} caps dimensions at {cap}"
        )
    work = A.to_array()
    D, _, _ = _diagonalize(work, track=False)
    n = min(A.rows, A.cols)
    return tuple(int(D[i, i]) for i in range(n))


def canonical_invariant_factors(factors: Iterable[int]) -> tuple[int, ...]:
    """Canonicalize cyclic orders into the divisibility chain d1 | d2 | ...

    Accepts arbitrary positive moduli (1s are dropped, Z/a (+) Z/b is
    rewritten as Z/gcd (+) Z/lcm until the chain stabilizes).  No
    factorization needed, so this stays exact for huge orders.
    """
    given = [int(f) for f in factors]
    if any(f == 0 for f in given):
        raise ValueError("torsion factors must be nonzero; rank is tracked separately")
    vals = sorted(abs(f) for f in given if abs(f) > 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a != 0:
                    g = math.gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
        vals = sorted(v for v in vals if v > 1)
    return tuple(vals)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    ``torsion`` is the canonical divisibility chain (each entry >= 2,
    each dividing the next); equality of (rank, torsion) is group
    isomorphism.
    """

    rank: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not isinstance(self.torsion, tuple):
            object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion entries must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError(
                    f"torsion {list(self.torsion)} is not a divisibility chain"
                )
            prev = d

    @classmethod
    def from_factors(cls, rank: int = 0, factors: Iterable[int] = ()) -> "FgAbelianGroup":
        return cls(rank, canonical_invariant_factors(factors))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        if self.rank > 0:
            return None
        return math.prod(self.torsion) if self.torsion else 1

    def elementary_divisors(self) -> tuple[int, ...]:
        """Primary decomposition (prime powers, sorted) for display."""
        out: list[int] = []
        for d in self.torsion:
            for p, e in factor_integer(d):
                out.append(p**e)
        return tuple(sorted(out))

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"C{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


TRIVIAL_GROUP = FgAbelianGroup()
Z = FgAbelianGroup(rank=1)


def factor_integer(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, (prime, exponent) pairs.

    Orders arising here are small (torsion of 5-manifold homology), so
    trial division is plenty and keeps imports light.
    """
    if n < 1:
        raise ValueError("expected a positive integer")
    out: list[tuple[int, int]] = []
    rem = n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rem > 1:
        out.append((rem, 1))
    return out


def is_prime_power(n: int) -> bool:
    fac = factor_integer(n) if n >= 2 else []
    return len(fac) == 1


def cokernel_and_kernel_rank(A: IntegerMatrix) -> tuple[FgAbelianGroup, int]:
    """(Z^rows / image(A), rank of ker(A)) from one diagonalization."""
    diag = invariant_factor_diagonal(A)
    nonzero = [d for d in diag if d != 0]
    coker = FgAbelianGroup(
        rank=A.rows - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )
    return coker, A.cols - len(nonzero)


def cokernel(A: IntegerMatrix) -> FgAbelianGroup:
    """Z^rows / image(A) in canonical invariant-factor form."""
    return cokernel_and_kernel_rank(A)[0]


def kernel_rank(A: IntegerMatrix) -> int:
    """Rank of the kernel lattice: cols - rank(A)."""
    return cokernel_and_kernel_rank(A)[1]


def direct_sum(G: FgAbelianGroup, H: FgAbelianGroup) -> FgAbelianGroup:
    """Direct sum, re-canonicalized to an invariant-factor chain."""
    return FgAbelianGroup.from_factors(G.rank + H.rank, G.torsion + H.torsion)


def is_isomorphic(G: FgAbelianGroup, H: FgAbelianGroup) -> bool:
    """Both sides are canonical, so isomorphism is plain equality."""
    return G == H
