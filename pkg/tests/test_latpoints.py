import random

import pytest

from conftest import oracle_points, oracle_sums, random_polytope
from normloc.errors import (DimensionMismatch, NotLattice, NormlocError,
                            Unbounded)
from normloc.latpoints import (LatticePointSet, decompose, enumerate_points,
                               enumerate_windowed, is_normal, lattice_sum,
                               normally_located)
from normloc.polyhedra import (HRep, VRep, from_h, from_v, minkowski_sum,
                               scale)


def test_enumerate_unit_square():
    sq = from_v(VRep(((0, 0), (1, 0), (0, 1), (1, 1)), ()))
    pts = enumerate_points(sq)
    assert list(pts) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(pts) == 4
    assert (1, 1) in pts and (2, 0) not in pts


def test_enumerate_matches_membership_oracle():
    rng = random.Random(31)
    for _ in range(25):
        d = rng.randint(1, 3)
        p = random_polytope(rng, d, 7, full_dim=False)
        assert list(enumerate_points(p)) == oracle_points(p)


def test_enumerate_fractional_vertices():
    p = from_h(HRep((((2, 0), 3), ((-2, 0), -1), ((0, 2), 3), ((0, -2), -1))))
    assert list(enumerate_points(p)) == [(1, 1)]


def test_enumerate_unbounded_raises():
    cone = from_v(VRep(((0, 0),), ((1, 0), (0, 1))))
    with pytest.raises(Unbounded):
        enumerate_points(cone)
    windowed = enumerate_windowed(cone, (0, 0), (2, 2))
    assert len(windowed) == 9


def test_lattice_sum_matches_pairwise():
    rng = random.Random(37)
    for _ in range(10):
        p = random_polytope(rng, 2, 4)
        q = random_polytope(rng, 2, 4)
        a, b = enumerate_points(p), enumerate_points(q)
        assert list(lattice_sum(a, b)) == oracle_sums(list(a), list(b))
    with pytest.raises(DimensionMismatch):
        lattice_sum(LatticePointSet(1, ((0,),)), LatticePointSet(2, ()))


def test_decompose_basic():
    tri = from_v(VRep(((0, 0), (1, 0), (0, 1)), ()))
    pair = decompose((1, 1), tri, tri)
    assert pair == ((0, 1), (1, 0))
    z1, z2 = pair
    assert tri.contains(z1) and tri.contains(z2)
    assert decompose((2, 2), tri, tri) is None


def test_decompose_lex_least_first_summand():
    sq = from_v(VRep(((0, 0), (2, 0), (0, 2), (2, 2)), ()))
    z1, z2 = decompose((2, 2), sq, sq)
    assert z1 == (0, 0) and z2 == (2, 2)


def test_decompose_witness_of_triangle_pair():
    p = from_v(VRep(((165, 0), (175, 0), (0, 385)), ()))
    q = from_v(VRep(((0, 0), (35, 0), (0, 77)), ()))
    assert decompose((1, 383), p, q) is None
    assert decompose((0, 385), p, q) == ((0, 385), (0, 0))


def test_decompose_unbounded_tails():
    # both polyhedra share the tail cone spanned by (1, 0): region bounded
    p = from_v(VRep(((0, 0),), ((1, 0),)))
    q = from_v(VRep(((0, 1),), ((1, 0),)))
    assert decompose((3, 1), p, q) == ((0, 0), (3, 1))
    # opposite tails make the split region unbounded
    r = from_v(VRep(((0, 0),), ((-1, 0),)))
    with pytest.raises(Unbounded):
        decompose((0, 1), p, r)


def test_normally_located_positive_and_negative():
    sq = from_v(VRep(((0, 0), (1, 0), (0, 1), (1, 1)), ()))
    rep = normally_located(sq, sq)
    assert rep.verdict == "located" and rep.witness is None
    p = from_v(VRep(((165, 0), (175, 0), (0, 385)), ()))
    q = from_v(VRep(((0, 0), (35, 0), (0, 77)), ()))
    rep = normally_located(p, q)
    assert rep.verdict == "not_located"
    assert rep.witness.point == (1, 383)
    assert rep.witness.kind == "no_decomposition"


def test_normally_located_witness_is_lex_least():
    rng = random.Random(41)
    hits = 0
    for _ in range(40):
        p = random_polytope(rng, 2, 6)
        q = random_polytope(rng, 2, 6)
        rep = normally_located(p, q)
        pts_p = list(enumerate_points(p))
        pts_q = list(enumerate_points(q))
        sums = set(oracle_sums(pts_p, pts_q))
        missing = [z for z in enumerate_points(minkowski_sum(p, q))
                   if z not in sums]
        if rep.verdict == "located":
            assert not missing
        else:
            hits += 1
            assert rep.witness.point == min(missing)
    assert hits  # the seed above does produce failing pairs


def test_normally_located_window_modes():
    p = from_v(VRep(((0, 0),), ((1, 0), (0, 1))))
    with pytest.raises(Unbounded):
        normally_located(p, p)
    rep = normally_located(p, p, window=((0, 0), (4, 4)))
    assert rep.verdict == "verified_up_to"
    assert rep.checked["window"] == [[0, 0], [4, 4]]
    sq = from_v(VRep(((0, 0), (1, 0), (0, 1), (1, 1)), ()))
    rep = normally_located(sq, sq, window=((0, 0), (5, 5)))
    assert rep.verdict == "located"


def test_is_normal_small_polygons():
    sq = from_v(VRep(((0, 0), (1, 0), (0, 1), (1, 1)), ()))
    rep = is_normal(sq, 5)
    assert rep.verdict == "verified_up_to"
    assert rep.checked == {"s_max": 5}


def test_is_normal_reeve_simplex():
    reeve = from_v(VRep(((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)), ()))
    rep = is_normal(reeve, 3)
    assert rep.verdict == "not_located"
    assert rep.witness.scale == 2
    assert rep.witness.kind == "normality_failure"
    # independent oracle: failure set at s = 2 via pairwise sums
    pts = list(enumerate_points(reeve))
    sums = set(oracle_sums(pts, pts))
    missing = [z for z in enumerate_points(scale(reeve, 2))
               if z not in sums]
    assert missing == [(1, 1, 1), (1, 1, 2)]
    assert rep.witness.point == min(missing)
    # the doubled simplex is normal up to the checked bound
    assert is_normal(scale(reeve, 2), 3).verdict == "verified_up_to"


def test_is_normal_validation():
    half = from_h(HRep((((2, 0), 1), ((-1, 0), 0), ((0, 2), 1),
                        ((0, -1), 0))))
    with pytest.raises(NotLattice):
        is_normal(half, 2)
    ray = from_v(VRep(((0, 0),), ((1, 0),)))
    with pytest.raises(Unbounded):
        is_normal(ray, 2)
    sq = from_v(VRep(((0, 0), (1, 0), (0, 1), (1, 1)), ()))
    with pytest.raises(NormlocError):
        is_normal(sq, 0)


def test_is_normal_matches_oracle_on_random_polygons():
    rng = random.Random(43)
    for _ in range(10):
        p = random_polytope(rng, 2, 6)
        rep = is_normal(p, 4)
        pts = list(enumerate_points(p))
        level = pts
        for s in range(2, 5):
            level = oracle_sums(level, pts)
            missing = [z for z in enumerate_points(scale(p, s))
                       if z not in set(level)]
            assert not missing
        assert rep.verdict == "verified_up_to"
