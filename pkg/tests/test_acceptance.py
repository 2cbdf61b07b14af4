"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All expected values are exact; the per-case timing bounds are part of
the criteria.
"""

import json
import math
import random
import time
from contextlib import contextmanager
from itertools import combinations, product

import pytest

from openbook5.abelian import FgAbelianGroup, IntegerMatrix, TRIVIAL_GROUP, smith_normal_form
from openbook5.analysis import analyze_recipe, realize_target
from openbook5.barden import OpenBookRecipe, TargetSpec
from openbook5.contactgeom import (
    DeformationProfile,
    ProfileSample,
    deformation_profile_verdict,
    isotopy_parameter,
    reference_binding_profile,
    validate_binding_profiles,
    validate_deformation_profile,
)
from openbook5.errors import NonCoprime
from openbook5.openbook import binding_homology, is_homology_sphere, remark_higher_binding
from openbook5.pages import (
    BrieskornPage,
    DiskBundlePage,
    DiskPage,
    S2xS3,
    S2xS3_TWISTED,
    page_chern_class,
    realizable_chern_values,
    trivial_monodromy_total_space,
)
from openbook5.pham import BrieskornExponents

from helpers import brute_force_t0, naive_cokernel, naive_det, random_matrix


@contextmanager
def criterion(number, label):
    try:
        yield
    except Exception:
        print(f"[acceptance] criterion {number:>2} FAIL: {label}")
        raise
    print(f"[acceptance] criterion {number:>2} PASS: {label}")


def analyze_exponents(t):
    recipe = OpenBookRecipe((BrieskornPage(BrieskornExponents(t)),))
    return analyze_recipe(recipe)


def doubled(q, copies=2):
    return FgAbelianGroup.from_factors(0, [q] * copies)


def test_criterion_1_brieskorn_p_torsion_table():
    with criterion(1, "p-torsion books (p^k,3,2) for p in {5,7,11}, k in {1,2}"):
        for p in (5, 7, 11):
            for k in (1, 2):
                q = p**k
                start = time.perf_counter()
                rep = analyze_exponents((q, 3, 2))
                elapsed = time.perf_counter() - start
                page = rep.pages[0]
                assert page.binding_h1 == TRIVIAL_GROUP, (q, "binding")
                assert is_homology_sphere(BrieskornExponents((q, 3, 2)))
                assert page.mapping_torus.h2 == doubled(q), (q, "H2(A)")
                assert rep.homology.h2 == doubled(q), (q, "H2(X)")
                assert rep.identification == f"M({q})"
                assert elapsed < 1.0, (q, f"{elapsed:.3f}s")


def test_criterion_2_two_torsion():
    with criterion(2, "2-torsion books (2^k,3,3) for k in {1,2,3}"):
        for k in (1, 2, 3):
            q = 2**k
            start = time.perf_counter()
            rep = analyze_exponents((q, 3, 3))
            elapsed = time.perf_counter() - start
            page = rep.pages[0]
            assert page.binding_h1 == doubled(q), (q, "H1(K)")
            assert page.mapping_torus.h2 == doubled(q, 4), (q, "H2(A)")
            assert rep.homology.h2 == doubled(q), (q, "H2(X)")
            assert rep.identification == f"M({q})"
            assert elapsed < 1.0, (q, f"{elapsed:.3f}s")


def test_criterion_3_three_torsion():
    with criterion(3, "3-torsion books (3^k,4,2) for k in {1,2}"):
        for k in (1, 2):
            q = 3**k
            start = time.perf_counter()
            rep = analyze_exponents((q, 4, 2))
            elapsed = time.perf_counter() - start
            page = rep.pages[0]
            assert page.binding_h1 == doubled(q, 1), (q, "H1(K)")
            assert page.mapping_torus.h2 == doubled(q, 3), (q, "H2(A)")
            assert rep.homology.h2 == doubled(q), (q, "H2(X)")
            assert rep.identification == f"M({q})"
            assert elapsed < 1.0, (q, f"{elapsed:.3f}s")


def test_criterion_4_higher_dimensional_bindings():
    with criterion(4, "five-dimensional Brieskorn manifolds (p^k,3,3,3) / (p,2,4,4)"):
        start = time.perf_counter()
        assert remark_higher_binding(BrieskornExponents((5, 3, 3, 3))) == doubled(5)
        assert remark_higher_binding(BrieskornExponents((5, 2, 4, 4))) == doubled(5)
        assert remark_higher_binding(BrieskornExponents((7, 3, 3, 3))) == doubled(7)
        elapsed = time.perf_counter() - start
        assert elapsed < 2.0, f"{elapsed:.3f}s"


def test_criterion_5_disk_bundle_catalog():
    with criterion(5, "disk-bundle catalog k in {2..7}: Chern sets, tags, H2"):
        for k in range(2, 8):
            pages = [DiskBundlePage(k, left, k - 2 - left) for left in range(k - 1)]
            values = {page_chern_class(p) for p in pages}
            assert values == set(range(-k + 2, k - 1, 2)) == realizable_chern_values(k)
            for p in pages:
                tag, chern = trivial_monodromy_total_space(p)
                assert tag == (S2xS3 if k % 2 == 0 else S2xS3_TWISTED)
                assert chern == page_chern_class(p)
                rep = analyze_recipe(OpenBookRecipe((p,)))
                assert rep.homology.h2 == FgAbelianGroup(rank=1)


def _prime_powers_upto(bound):
    out = []
    for q in range(2, bound + 1):
        p = min(p for p in range(2, q + 1) if q % p == 0)
        n = q
        while n % p == 0:
            n //= p
        if n == 1:
            out.append(q)
    return out


def test_criterion_6_realizer_round_trip():
    with criterion(6, "realizer round-trip on 200 randomized targets"):
        rng = random.Random(20240601)
        qs = _prime_powers_upto(64)
        start = time.perf_counter()
        for i in range(200):
            rank = rng.randint(0, 4)
            pairs = [rng.choice(qs) for _ in range(rng.randint(0, 3))]
            spin = True if rank == 0 else rng.random() < 0.5
            chern = []
            for g in range(rank):
                c = rng.randint(-4, 4) * 2  # even, |c| <= 8
                chern.append(c)
            if not spin:
                pos = rng.randrange(rank)
                odd = rng.choice([c for c in range(-9, 10) if c % 2 != 0])
                chern[pos] = odd
            torsion = [x for q in pairs for x in (q, q)]
            target = TargetSpec(
                h2=FgAbelianGroup.from_factors(rank, torsion),
                spin=spin,
                chern=tuple(chern),
            )
            recipe = realize_target(target)
            rep = analyze_recipe(recipe)
            assert rep.homology.h2 == target.h2, (i, target)
            assert rep.spin == target.spin, (i, target)
            assert sorted(rep.chern) == sorted(target.chern_values()), (i, target)
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"{elapsed:.1f}s"


def test_criterion_7_snf_property_suite():
    with criterion(7, "SNF properties on 500 random matrices up to 6x6"):
        rng = random.Random(777)
        for i in range(500):
            rows = random_matrix(rng, max_dim=6, lo=-20, hi=20)
            A = IntegerMatrix.from_rows(rows)
            s = smith_normal_form(A)
            assert s.D == s.U @ A @ s.V, i
            assert abs(naive_det(s.U.to_lists())) == 1, i
            assert abs(naive_det(s.V.to_lists())) == 1, i
            diag = s.diagonal
            assert all(d >= 0 for d in diag), i
            nonzero = [d for d in diag if d]
            assert list(diag[: len(nonzero)]) == nonzero, i
            for x, y in zip(nonzero, nonzero[1:]):
                assert y % x == 0, i
            from openbook5.abelian import cokernel

            got = cokernel(A)
            free, torsion = naive_cokernel(rows, A.rows)
            assert (got.rank, list(got.torsion)) == (free, torsion), i


def test_criterion_8_crt():
    with criterion(8, "isotopy parameter vs brute force, entries <= 8"):
        assert isotopy_parameter(BrieskornExponents((5, 3, 2))) == 24
        for length in (2, 3):
            for t in product(range(2, 9), repeat=length):
                a = BrieskornExponents(t)
                coprime = all(math.gcd(t[0], x) == 1 for x in t[1:])
                if coprime:
                    assert isotopy_parameter(a) == brute_force_t0(t), t
                else:
                    with pytest.raises(NonCoprime):
                        isotopy_parameter(a)


def test_criterion_9_homology_sphere_criterion():
    with criterion(9, "homology-sphere criterion on coprime triples <= 12"):
        for tri in combinations(range(2, 13), 3):
            if all(math.gcd(x, y) == 1 for x, y in combinations(tri, 2)):
                assert is_homology_sphere(BrieskornExponents(tri)), tri
        expected = {
            (2, 3, 3): doubled(2),
            (3, 4, 2): doubled(3, 1),
            (2, 2, 2): doubled(2, 1),
        }
        for t, h1 in expected.items():
            a = BrieskornExponents(t)
            assert not is_homology_sphere(a), t
            assert binding_homology(a) == h1, t


def test_criterion_10_profile_validation():
    with criterion(10, "profile validation: bundled pass, named failures"):
        assert validate_binding_profiles(reference_binding_profile()).passed

        n = 101
        r = tuple(i / (n - 1) for i in range(n))
        proportional = ProfileSample(r, tuple(x + 1 for x in r), tuple(x + 1 for x in r))
        verdict = validate_binding_profiles(proportional, 0.2)
        assert not verdict.passed and verdict.failures[0] == "wronskian_vanishes"

        r0 = 1.0
        grid = tuple(4.0 * i / 80 for i in range(81))

        def smoothstep(r1):
            def f(x):
                if x <= r0:
                    return 1.0
                if x >= r1:
                    return 0.0
                u = (x - r0) / (r1 - r0)
                return 1.0 - (3 * u * u - 2 * u**3)

            return f

        wide = DeformationProfile(
            grid, tuple(smoothstep(3.0)(x) for x in grid), r0, 3.0, 0.2
        )
        assert validate_deformation_profile(wide, 1e-6)

        lin = DeformationProfile(
            grid,
            tuple(1.0 if x <= 1.0 else (0.0 if x >= 2.0 else 2.0 - x) for x in grid),
            1.0,
            2.0,
            0.2,
        )
        v = deformation_profile_verdict(lin, 1e-6)
        assert not v.passed and v.failures == ("slope_bound",)
