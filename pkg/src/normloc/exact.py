"""Exact integer and rational linear algebra.

Everything in this package runs over Z and Q.  Vectors are tuples of ints
(``IVec``) or Fractions (``QVec``); matrices are tuples of row tuples.  No
floats anywhere: all comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ZeroVector

# Exact rational scalar.  str() serializes as "p/q" (or "p" for integers),
# which is the wire format used by the JSON layer.
Rat = Fraction

IVec = tuple[int, ...]
QVec = tuple[Fraction, ...]
IMat = tuple[IVec, ...]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v) -> IVec:
    """Shortest integer vector with the same direction as ``v``.

    Accepts int or Fraction entries.  Raises ZeroVector on the zero vector.
    """
    v = tuple(Fraction(x) for x in v)
    if all(x == 0 for x in v):
        raise ZeroVector(f"no primitive vector for {v}")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    w = tuple(int(x * den) for x in v)
    g = vec_gcd(w)
    return tuple(x // g for x in w)


def canonical_sign(v: IVec) -> IVec:
    """Flip ``v`` so its first nonzero entry is positive (key use only)."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def identity_matrix(n: int) -> IMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb) for cb in bt) for ra in a)


def hermite_normal_form(m: IMat) -> tuple[IMat, IMat]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``h = u @ m``, ``u`` unimodular, pivots of ``h``
    positive with strictly increasing column indices, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows at the bottom.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(r) for r in m]
    u = [list(r) for r in identity_matrix(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # knock column c down to a single nonzero entry at or below row r
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            for i in nz:
                if i == i0:
                    continue
                q = h[i][c] // h[i0][c]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[i0])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[i0])]
        nz = [i for i in range(r, rows) if h[i][c] != 0]
        if not nz:
            continue
        i0 = nz[0]
        h[r], h[i0] = h[i0], h[r]
        u[r], u[i0] = u[i0], u[r]
        if h[r][c] < 0:
            h[r] = [-a for a in h[r]]
            u[r] = [-a for a in u[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        r += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u))


def det(m: IMat) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def kernel_lattice_basis(m: IMat) -> IMat:
    """Canonical basis of the saturated kernel lattice ``{x : m @ x = 0}``.

    The rows of the result generate ker(m) as a subgroup of Z^n and the
    subgroup is saturated (Z^n / ker has no torsion), so the basis can be
    extended to a basis of Z^n.
    """
    if not m:
        return ()
    n = len(m[0])
    h, u = hermite_normal_form(transpose(m))
    ker = [u[i] for i in range(n) if all(x == 0 for x in h[i])]
    if not ker:
        return ()
    hk, _ = hermite_normal_form(tuple(ker))
    return tuple(r for r in hk if any(x != 0 for x in r))


def solve_integral(m: IMat, target: IVec) -> IVec | None:
    """One integral solution of ``m @ x = target``, or None.

    Uses the HNF of the transpose: with h = u @ m^T, solve h^T z = target by
    forward substitution along the pivots, then x = u^T z.
    """
    rows = len(m)
    if rows == 0:
        return None
    n = len(m[0])
    h, u = hermite_normal_form(transpose(m))
    residual = list(target)
    z = [0] * n
    for j in range(n):
        piv = next((c for c in range(rows) if h[j][c] != 0), None)
        if piv is None:
            break
        if residual[piv] % h[j][piv] != 0:
            return None
        z[j] = residual[piv] // h[j][piv]
        if z[j]:
            for c in range(rows):
                residual[c] -= z[j] * h[j][c]
    if any(residual):
        return None
    x = [0] * n
    for j in range(n):
        if z[j]:
            for i in range(n):
                x[i] += z[j] * u[j][i]
    return tuple(x)


def rank(rows) -> int:
    """Rank over Q of a list of int/Fraction row vectors."""
    work = [list(map(Fraction, r)) for r in rows]
    n = len(work[0]) if work else 0
    rk = 0
    for c in range(n):
        piv = next((i for i in range(rk, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        pr = work[rk]
        for i in range(len(work)):
            if i != rk and work[i][c] != 0:
                f = work[i][c] / pr[c]
                work[i] = [a - f * b for a, b in zip(work[i], pr)]
        rk += 1
        if rk == len(work):
            break
    return rk


def solve_rational(a, b) -> QVec | None:
    """One rational solution of ``a @ x = b``, or None if inconsistent.

    Free variables are set to 0.  ``a`` is a sequence of rows, ``b`` the
    right hand side; entries may be ints or Fractions.
    """
    m = [list(map(Fraction, row)) + [Fraction(bb)] for row, bb in zip(a, b)]
    if not m:
        return None
    n = len(m[0]) - 1
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [x - f * y for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n] / m[i][c]
    return tuple(x)


def saturated_basis(vectors) -> IMat:
    """Canonical HNF basis of span(vectors) intersected with Z^n.

    Input rows may be int or Fraction vectors; the span is taken over Q.
    """
    vs = [primitive(v) for v in vectors if any(x != 0 for x in v)]
    if not vs:
        return ()
    comp = kernel_lattice_basis(tuple(vs))
    if not comp:
        n = len(vs[0])
        return identity_matrix(n)
    return kernel_lattice_basis(comp)


def project_off(v, basis) -> QVec:
    """Orthogonal projection of ``v`` onto the complement of span(basis).

    ``basis`` rows must be linearly independent.  Returns a Fraction vector.
    """
    v = tuple(Fraction(x) for x in v)
    if not basis:
        return v
    gram = [[Fraction(dot(p, q)) for q in basis] for p in basis]
    rhs = [dot(p, v) for p in basis]
    coeff = solve_rational(gram, rhs)
    out = list(v)
    for c, p in zip(coeff, basis):
        if c:
            for i, x in enumerate(p):
                out[i] -= c * x
    return tuple(out)
