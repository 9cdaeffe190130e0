"""Shared generators and independent oracles for the test suite.

Oracles deliberately avoid the code paths they check: lattice point counts
come from exhaustive box membership with rational dot products, vertex sets
from solving d-subsets of the constraint rows, decompositions from pairwise
sums of the oracle point lists.
"""

import random
from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from normloc.errors import NormlocError
from normloc.exact import dot, rank, solve_rational
from normloc.polyhedra import Polyhedron, VRep, from_v


def box_of(p: Polyhedron):
    lo = tuple(ceil(min(v[i] for v in p.v.vertices)) for i in range(p.dim))
    hi = tuple(floor(max(v[i] for v in p.v.vertices)) for i in range(p.dim))
    return lo, hi


def oracle_points(p: Polyhedron):
    """Lattice points by brute box search with exact membership tests."""
    lo, hi = box_of(p)
    out = []

    def walk(prefix):
        i = len(prefix)
        if i == p.dim:
            if p.contains(prefix):
                out.append(tuple(prefix))
            return
        for v in range(lo[i], hi[i] + 1):
            walk(prefix + [v])

    walk([])
    return out


def oracle_vertices(p: Polyhedron):
    """Vertices from rank-d subsets of the constraint rows."""
    d = p.dim
    rows = list(p.h.inequalities)
    for n, b in p.h.equalities:
        rows.append((n, b))
        rows.append((tuple(-x for x in n), -b))
    verts = set()
    for sub in combinations(rows, d):
        mat = tuple(tuple(Fraction(x) for x in n) for n, _ in sub)
        if rank(mat) != d:
            continue
        sol = solve_rational(mat, tuple(b for _, b in sub))
        if sol is None:
            continue
        if p.contains(sol):
            verts.add(tuple(sol))
    return sorted(verts)


def oracle_sums(points_a, points_b):
    return sorted({tuple(x + y for x, y in zip(u, v))
                   for u in points_a for v in points_b})


def random_polytope(rng: random.Random, d: int, bound: int,
                    npoints=None, full_dim=True) -> Polyhedron:
    """Hull of random nonnegative lattice points inside [0, bound]^d."""
    npoints = npoints or d + 3
    while True:
        pts = {tuple(rng.randint(0, bound) for _ in range(d))
               for _ in range(npoints)}
        try:
            p = from_v(VRep(tuple(sorted(pts)), ()))
        except NormlocError:
            continue
        if not full_dim or p.affine_dimension() == d:
            return p
