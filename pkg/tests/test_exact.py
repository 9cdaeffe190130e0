import random
from fractions import Fraction

import pytest

from normloc.errors import ZeroVector
from normloc.exact import (canonical_sign, det, dot, hermite_normal_form,
                           identity_matrix, kernel_lattice_basis, matmul,
                           primitive, project_off, rank, saturated_basis,
                           solve_integral, solve_rational, transpose)


def test_primitive_divides_out_content():
    assert primitive((4, -6, 8)) == (2, -3, 4)
    assert primitive((0, 5, 0)) == (0, 1, 0)
    assert primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


def test_canonical_sign_flips_to_positive_leader():
    assert canonical_sign((0, -2, 5)) == (0, 2, -5)
    assert canonical_sign((3, -1)) == (3, -1)


def test_hnf_properties_random():
    rng = random.Random(7)
    for _ in range(60):
        ncols = rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-9, 9) for _ in range(ncols))
                  for _ in range(rng.randint(1, 4)))
        h, u = hermite_normal_form(m)
        assert matmul(u, m) == h
        assert abs(det(u)) == 1
        # pivots positive, entries above each pivot reduced
        pivots = []
        for row in h:
            nz = [j for j, x in enumerate(row) if x]
            if nz:
                pivots.append(nz[0])
                assert row[nz[0]] > 0
        assert pivots == sorted(pivots)
        for k, row in enumerate(h):
            nz = [j for j, x in enumerate(row) if x]
            if not nz:
                continue
            piv = nz[0]
            for above in h[:k]:
                assert 0 <= above[piv] < row[piv]


def test_hnf_is_canonical_for_row_space():
    # two generating sets of the same lattice
    a = ((2, 4), (0, 6))
    b = ((2, 10), (2, 4))
    assert hermite_normal_form(a)[0] == hermite_normal_form(b)[0]


def test_kernel_lattice_basis_spans_and_saturates():
    rng = random.Random(11)
    for _ in range(40):
        nrows = rng.randint(1, 3)
        ncols = rng.randint(nrows, 5)
        m = tuple(tuple(rng.randint(-5, 5) for _ in range(ncols))
                  for _ in range(nrows))
        ker = kernel_lattice_basis(m)
        for v in ker:
            assert all(dot(row, v) == 0 for row in m)
        # membership: integer combinations land back in the row lattice
        for _ in range(5):
            coeffs = [rng.randint(-3, 3) for _ in ker]
            v = tuple(sum(c * k[j] for c, k in zip(coeffs, ker))
                      for j in range(ncols))
            if ker:
                assert solve_integral(transpose(ker), v) is not None
        # saturation: every integer solution of m @ x = 0 is reachable
        for _ in range(10):
            x = tuple(rng.randint(-3, 3) for _ in range(ncols))
            if any(dot(row, x) != 0 for row in m):
                continue
            if any(x):
                assert ker and solve_integral(transpose(ker), x) is not None


def test_solve_integral_exactness():
    m = ((2, 0), (0, 3))
    # target (2, 3) = 1*(2,0) + 1*(0,3)
    assert solve_integral(m, (2, 3)) is not None
    x = solve_integral(m, (2, 3))
    assert tuple(sum(x[i] * m[i][j] for i in range(2)) for j in range(2)) \
        == (2, 3)
    assert solve_integral(m, (1, 0)) is None


def test_solve_integral_random_roundtrip():
    rng = random.Random(13)
    for _ in range(40):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-6, 6) for _ in range(ncols))
                  for _ in range(nrows))
        x = tuple(rng.randint(-4, 4) for _ in range(nrows))
        target = tuple(sum(x[i] * m[i][j] for i in range(nrows))
                       for j in range(ncols))
        sol = solve_integral(transpose(m), target)
        assert sol is not None
        back = tuple(sum(sol[i] * m[i][j] for i in range(nrows))
                     for j in range(ncols))
        assert back == target


def test_rank_and_solve_rational():
    m = ((1, 2), (2, 4))
    assert rank(m) == 1
    assert solve_rational(((1, 0), (0, 1)), (3, 4)) == \
        (Fraction(3), Fraction(4))
    assert solve_rational(((1, 1), (1, 1)), (0, 1)) is None


def test_det_matches_definition():
    assert det(((2, 1), (1, 2))) == 3
    assert det(((0, 1), (1, 0))) == -1
    assert det(((1, 2, 3), (4, 5, 6), (7, 8, 9))) == 0
    assert det(identity_matrix(4)) == 1


def test_saturated_basis_contains_input_lattice():
    basis = saturated_basis(((2, 4, 0),))
    assert len(basis) == 1
    assert basis[0] == (1, 2, 0)


def test_project_off_orthogonality():
    basis = ((1, 1, 0),)
    v = project_off((3, 1, 2), basis)
    assert dot(v, basis[0]) == 0


def test_transpose_matmul():
    m = ((1, 2, 3), (4, 5, 6))
    assert transpose(m) == ((1, 4), (2, 5), (3, 6))
    assert matmul(m, transpose(m)) == ((14, 32), (32, 77))
