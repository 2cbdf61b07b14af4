import math
import random
from itertools import combinations

import pytest

from openbook5.abelian import FgAbelianGroup, IntegerMatrix, TRIVIAL_GROUP, Z
from openbook5.errors import InvalidExponent, NonSquare, UnsupportedAssembly
from openbook5.openbook import (
    ClosedBookHomology,
    MappingTorusHomology,
    S5_HOMOLOGY,
    assemble_closed_homology,
    binding_homology,
    book_connected_sum,
    from_h2,
    is_homology_sphere,
    remark_higher_binding,
    wang_homology,
)
from openbook5.pham import BrieskornExponents, full_monodromy_matrix, rotation_matrix

from helpers import naive_det


def wang_for(t, power=1):
    return wang_homology(rotation_matrix(BrieskornExponents(t), 0, power))


def test_wang_identity_page():
    mt = wang_homology(IntegerMatrix.identity(1))
    assert mt.h1 == Z
    assert mt.h2 == Z
    assert mt.h3 == Z
    assert mt.page_h2_rank == 1


def test_wang_rejects_rectangular():
    with pytest.raises(NonSquare):
        wang_homology(IntegerMatrix.zeros(2, 3))


def test_wang_5_3_2():
    mt = wang_for((5, 3, 2))
    assert mt.h2 == FgAbelianGroup(0, (5, 5))
    assert mt.h3 == TRIVIAL_GROUP


def test_wang_2_3_3():
    mt = wang_for((2, 3, 3))
    assert mt.h2 == FgAbelianGroup(0, (2, 2, 2, 2))


def test_wang_order_equals_determinant():
    # when ker(M - id) = 0 the cokernel order is |det(M - id)|
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 4)
        M = IntegerMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        )
        delta = M.minus_identity()
        det = naive_det(delta.to_lists())
        mt = wang_homology(M)
        if mt.h3.rank == 0:
            assert det != 0
            assert mt.h2.order() == abs(det)


@pytest.mark.parametrize(
    "t,expected",
    [
        ((5, 3, 2), TRIVIAL_GROUP),
        ((2, 3, 3), FgAbelianGroup(0, (2, 2))),
        ((3, 4, 2), FgAbelianGroup(0, (3,))),
        ((2, 2, 2), FgAbelianGroup(0, (2,))),
        ((4, 3, 3), FgAbelianGroup(0, (4, 4))),
        ((8, 3, 3), FgAbelianGroup(0, (8, 8))),
        ((9, 4, 2), FgAbelianGroup(0, (9,))),
    ],
)
def test_binding_homology_values(t, expected):
    assert binding_homology(BrieskornExponents(t)) == expected


def test_binding_needs_three_exponents():
    with pytest.raises(InvalidExponent):
        binding_homology(BrieskornExponents((3, 2)))
    with pytest.raises(InvalidExponent):
        is_homology_sphere(BrieskornExponents((3, 2)))


def test_homology_sphere_examples():
    assert is_homology_sphere(BrieskornExponents((5, 3, 2)))
    assert is_homology_sphere(BrieskornExponents((7, 3, 2)))
    assert not is_homology_sphere(BrieskornExponents((2, 3, 3)))


def test_pairwise_coprime_triples_are_spheres_small():
    for t in combinations(range(2, 9), 3):
        if all(math.gcd(x, y) == 1 for x, y in combinations(t, 2)):
            assert is_homology_sphere(BrieskornExponents(t)), t


def test_remark_higher_binding_values():
    assert remark_higher_binding(BrieskornExponents((5, 3, 3, 3))) == FgAbelianGroup(0, (5, 5))
    assert remark_higher_binding(BrieskornExponents((5, 2, 4, 4))) == FgAbelianGroup(0, (5, 5))
    # full monodromy acts trivially on the rank-1 lattice: one free class
    assert remark_higher_binding(BrieskornExponents((2, 2, 2, 2))) == Z


def test_remark_higher_binding_needs_four():
    with pytest.raises(InvalidExponent):
        remark_higher_binding(BrieskornExponents((5, 3, 2)))


def finite(*factors):
    return FgAbelianGroup.from_factors(0, factors)


def mt_with(h2, page_rank=None):
    rank = page_rank if page_rank is not None else max(1, len(h2.torsion))
    return MappingTorusHomology(h1=Z, h2=h2, h3=TRIVIAL_GROUP, page_h2_rank=rank)


def test_assemble_trivial_binding():
    out = assemble_closed_homology(mt_with(finite(5, 5)), TRIVIAL_GROUP)
    assert out.h2 == finite(5, 5)
    assert out.h3 == TRIVIAL_GROUP
    assert out.simply_connected


def test_assemble_quotient_case_2_torsion():
    out = assemble_closed_homology(mt_with(finite(2, 2, 2, 2)), finite(2, 2))
    assert out.h2 == finite(2, 2)


def test_assemble_quotient_case_3_torsion():
    out = assemble_closed_homology(mt_with(finite(3, 3, 3)), finite(3))
    assert out.h2 == finite(3, 3)


def test_assemble_rejects_free_mapping_torus():
    # the disk-bundle book (free H_2, circle-bundle binding) must go
    # through the sphere-bundle identification instead
    mt = MappingTorusHomology(h1=Z, h2=Z, h3=Z, page_h2_rank=1)
    with pytest.raises(UnsupportedAssembly):
        assemble_closed_homology(mt, TRIVIAL_GROUP)


def test_assemble_rejects_mixed_and_composite():
    with pytest.raises(UnsupportedAssembly):
        assemble_closed_homology(mt_with(finite(2, 2)), finite(3))
    with pytest.raises(UnsupportedAssembly):
        assemble_closed_homology(mt_with(finite(6, 6)), finite(6))
    with pytest.raises(UnsupportedAssembly):
        assemble_closed_homology(mt_with(finite(2, 4)), finite(2))
    with pytest.raises(UnsupportedAssembly):
        assemble_closed_homology(mt_with(finite(2)), finite(2, 2))


def test_assemble_order_counting():
    # |H_2(X)| * |H_1(K)| = |H_2(A)| in the quotient case
    for copies in range(1, 5):
        for b in range(0, copies + 1):
            mt = mt_with(finite(*([3] * copies)))
            binding = finite(*([3] * b)) if b else TRIVIAL_GROUP
            out = assemble_closed_homology(mt, binding)
            assert out.h2.order() * binding.order() == mt.h2.order()


def test_book_sum_identity():
    rep = from_h2(finite(7, 7))
    assert book_connected_sum([rep, S5_HOMOLOGY]).h2 == rep.h2


def test_book_sum_examples():
    a = from_h2(finite(5, 5))
    b = from_h2(finite(2, 2))
    assert book_connected_sum([a, b]).h2 == finite(10, 10)
    c = from_h2(Z)
    d = from_h2(finite(9, 9))
    out = book_connected_sum([c, d])
    assert out.h2 == FgAbelianGroup(1, (9, 9))
    assert out.h3 == Z


def test_book_sum_commutative_associative():
    rng = random.Random(31)
    pool = [from_h2(FgAbelianGroup.from_factors(rng.randint(0, 2),
                                                [rng.choice([2, 3, 4, 5, 9]) for _ in range(rng.randint(0, 3))]))
            for _ in range(12)]
    for _ in range(30):
        picks = rng.sample(pool, 3)
        h_abc = book_connected_sum(picks)
        h_cba = book_connected_sum(list(reversed(picks)))
        assert h_abc == h_cba
        nested = book_connected_sum([book_connected_sum(picks[:2]), picks[2]])
        assert nested == h_abc


def test_closed_book_duality_bookkeeping():
    rep = from_h2(FgAbelianGroup(2, (3, 3)))
    assert rep.h1 == TRIVIAL_GROUP
    assert rep.h4 == TRIVIAL_GROUP
    assert rep.h0 == Z and rep.h5 == Z
    assert rep.h3 == FgAbelianGroup(rank=2)
    with pytest.raises(ValueError):
        ClosedBookHomology(h2=Z, h3=TRIVIAL_GROUP)
    with pytest.raises(ValueError):
        ClosedBookHomology(h2=TRIVIAL_GROUP, h3=FgAbelianGroup(0, (2,)))


def test_closed_book_json_shape():
    rep = from_h2(finite(5, 5))
    assert rep.to_json_dict() == {
        "h1": {"rank": 0, "torsion": []},
        "h2": {"rank": 0, "torsion": [5, 5]},
        "h3": {"rank": 0, "torsion": []},
        "simply_connected": True,
    }


def test_binding_matches_wang_determinant_route():
    # cross-check: |H_1(K)| equals |det(h - id)| when the kernel is 0
    for t in [(2, 3, 3), (3, 4, 2), (2, 2, 2), (5, 3, 2)]:
        a = BrieskornExponents(t)
        delta = full_monodromy_matrix(a).minus_identity()
        det = abs(naive_det(delta.to_lists()))
        assert binding_homology(a).order() == det
