"""Independent oracles for the test suite.

Everything here is deliberately written against the textbook
definitions, with no imports from the package's linear algebra, so
production results are checked against a second route:

* naive elimination (first-nonzero pivoting, plain Euclid) for
  diagonalizing integer matrices;
* cofactor-expansion determinants;
* determinantal divisors (gcds of k x k minors) as a third route to
  invariant factors;
* primary-decomposition recombination for the canonical chain;
* brute-force residue search for the isotopy parameter.
"""

from __future__ import annotations

import math
from itertools import combinations


def naive_diagonalize(rows: list[list[int]]) -> list[int]:
    """Row/column Euclid with first-nonzero pivoting; |diagonal| values."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    while t < min(m, n):
        found = False
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j]:
                    found = True
                    if i != t:
                        A[t], A[i] = A[i], A[t]
                    if j != t:
                        for r in range(m):
                            A[r][t], A[r][j] = A[r][j], A[r][t]
                    break
            if found:
                break
        if not found:
            break
        while True:
            off = next((i for i in range(t + 1, m) if A[i][t]), None)
            if off is not None:
                if abs(A[off][t]) < abs(A[t][t]):
                    A[t], A[off] = A[off], A[t]
                q = A[off][t] // A[t][t]
                for j in range(n):
                    A[off][j] -= q * A[t][j]
                continue
            offc = next((j for j in range(t + 1, n) if A[t][j]), None)
            if offc is not None:
                if abs(A[t][offc]) < abs(A[t][t]):
                    for r in range(m):
                        A[r][t], A[r][offc] = A[r][offc], A[r][t]
                q = A[t][offc] // A[t][t]
                for r in range(m):
                    A[r][offc] -= q * A[r][t]
                continue
            break
        t += 1
    return [abs(A[i][i]) for i in range(min(m, n))]


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    rem = n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
        p += 1
    if rem > 1:
        out.append((rem, 1))
    return out


def chain_from_orders(orders: list[int]) -> list[int]:
    """Canonical invariant factors from arbitrary cyclic orders, via
    primary decomposition (ascending divisibility chain, 1s dropped)."""
    primes: dict[int, list[int]] = {}
    for d in orders:
        if d in (0, 1):
            continue
        for p, e in factorize(abs(d)):
            primes.setdefault(p, []).append(e)
    depth = max((len(v) for v in primes.values()), default=0)
    chain = []
    for idx in range(depth):
        f = 1
        for p, es in primes.items():
            es_sorted = sorted(es, reverse=True)
            if idx < len(es_sorted):
                f *= p ** es_sorted[idx]
        chain.append(f)
    return sorted(chain)


def naive_cokernel(rows: list[list[int]], nrows: int) -> tuple[int, list[int]]:
    """(free rank, torsion chain) of Z^nrows / column span, by the
    naive elimination route."""
    diag = naive_diagonalize(rows)
    nonzero = [d for d in diag if d != 0]
    return nrows - len(nonzero), chain_from_orders(nonzero)


def naive_det(rows: list[list[int]]) -> int:
    """Cofactor expansion; exact, for small matrices."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * head * naive_det(minor)
    return total


def determinantal_divisor_chain(rows: list[list[int]]) -> list[int]:
    """Invariant factors via gcds of k x k minors: d_k = D_k / D_{k-1}."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    chain = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rsel in combinations(range(m), k):
            for csel in combinations(range(n), k):
                minor = [[rows[i][j] for j in csel] for i in rsel]
                g = math.gcd(g, abs(naive_det(minor)))
        if g == 0:
            break
        chain.append(g // prev)
        prev = g
    return chain


def brute_force_t0(a: tuple[int, ...]) -> int | None:
    """Smallest positive t with t = -1 mod a[0], t = 0 mod a[i]."""
    bound = a[0]
    for ai in a[1:]:
        bound = math.lcm(bound, ai)
    bound *= a[0]
    for t in range(1, bound + 1):
        if t % a[0] == a[0] - 1 and all(t % ai == 0 for ai in a[1:]):
            return t
    return None


def random_matrix(rng, max_dim: int = 6, lo: int = -20, hi: int = 20) -> list[list[int]]:
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
