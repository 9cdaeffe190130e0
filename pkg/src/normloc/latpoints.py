"""Lattice point enumeration, decomposition, and normal location.

A pair (P, Q) of polyhedra with a common ambient dimension is *normally
located* when every lattice point z of P + Q splits as z = z' + z'' with
z' a lattice point of P and z'' one of Q.  A lattice polytope P is *normal
up to s_max* when for every s <= s_max each lattice point of s*P is a sum
of s lattice points of P.

Verdicts are three-valued: "located" and "not_located" are exact answers,
"verified_up_to" means the search space was truncated (a window, or a scale
bound) and no witness appeared inside it.  A witness is only present on
"not_located" and is always the lexicographically least failing point.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import (DimensionMismatch, EmptyPolyhedron, NotLattice,
                     NormlocError, Unbounded)
from .fans import cone_from_generators, intersect_cones
from .polyhedra import (HRep, Polyhedron, Witness, from_h,
                        integer_constraint_rows, minkowski_sum, scale,
                        vertex_box)
from .reps import NO_DECOMPOSITION, NORMALITY_FAILURE

VERDICT_LOCATED = "located"
VERDICT_NOT_LOCATED = "not_located"
VERDICT_VERIFIED_UP_TO = "verified_up_to"


@dataclass(frozen=True)
class LatticePointSet:
    """Finite set of integer points, stored sorted and deduplicated."""

    dim: int
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return tuple(x) in set(self.points)


def _point_set(dim, pts) -> LatticePointSet:
    return LatticePointSet(dim, tuple(sorted(set(pts))))


@dataclass(frozen=True)
class LocationReport:
    verdict: str
    witness: Witness | None
    checked: dict

    def to_dict(self):
        return {"verdict": self.verdict,
                "witness": self.witness.to_dict() if self.witness else None,
                "checked": dict(self.checked)}


def _rows(p: Polyhedron):
    rows = integer_constraint_rows(p)
    return tuple(a for a, _ in rows), tuple(b for _, b in rows)


def _clip_box(p: Polyhedron, lo, hi):
    """Intersect a window box with the vertex box when P is bounded."""
    if len(lo) != p.dim or len(hi) != p.dim:
        raise DimensionMismatch("window box has wrong length")
    lo = tuple(int(x) for x in lo)
    hi = tuple(int(x) for x in hi)
    if not p.v.rays:
        plo, phi = vertex_box(p)
        lo = tuple(max(a, b) for a, b in zip(lo, plo))
        hi = tuple(min(a, b) for a, b in zip(hi, phi))
    return lo, hi


def enumerate_points(p: Polyhedron) -> LatticePointSet:
    """All lattice points of a bounded polyhedron, in lexicographic order."""
    lo, hi = vertex_box(p)
    coeffs, rhs = _rows(p)
    return LatticePointSet(p.dim, tuple(kernels.scan_points(coeffs, rhs,
                                                            lo, hi)))


def enumerate_windowed(p: Polyhedron, lo, hi) -> LatticePointSet:
    """Lattice points of P inside the box lo <= x <= hi (any P)."""
    lo, hi = _clip_box(p, lo, hi)
    coeffs, rhs = _rows(p)
    return LatticePointSet(p.dim, tuple(kernels.scan_points(coeffs, rhs,
                                                            lo, hi)))


def lattice_sum(a: LatticePointSet, b: LatticePointSet) -> LatticePointSet:
    """Pointwise sumset {x + y : x in a, y in b}."""
    if a.dim != b.dim:
        raise DimensionMismatch("sumset of point sets of different dims")
    return _point_set(a.dim, (tuple(x + y for x, y in zip(u, v))
                              for u in a.points for v in b.points))


def _decompose_unbounded_guard(p: Polyhedron, q: Polyhedron):
    # z' ranges over P cap (z - Q); its recession cone tail(P) cap -tail(Q)
    # does not depend on z, so one pointedness check covers every z
    neg = cone_from_generators(q.dim, rays=[tuple(-x for x in r)
                                            for r in q.tail.rays],
                               lines=q.tail.lines)
    meet = intersect_cones(p.tail, neg)
    if meet.rays or meet.lines:
        raise Unbounded("decomposition search region is unbounded: "
                        "tail(P) meets -tail(Q) outside the origin")


def _split_system(z, p: Polyhedron, q: Polyhedron):
    """Integer rows and box for {z' in P : z - z' in Q}, or None if empty."""
    pc, pb = _rows(p)
    qc, qb = _rows(q)
    coeffs = pc + tuple(tuple(-a for a in row) for row in qc)
    rhs = pb + tuple(b - sum(a * x for a, x in zip(row, z))
                     for row, b in zip(qc, qb))
    if p.v.rays or q.v.rays:
        # bounded by the pointedness guard; get a box from the actual region
        ineqs = [(row, b) for row, b in zip(coeffs, rhs)]
        try:
            region = from_h(HRep(tuple(ineqs)))
        except EmptyPolyhedron:
            return None
        lo, hi = vertex_box(region)
    else:
        plo, phi = vertex_box(p)
        qlo, qhi = vertex_box(q)
        lo = tuple(max(a, zz - b) for a, zz, b in zip(plo, z, qhi))
        hi = tuple(min(a, zz - b) for a, zz, b in zip(phi, z, qlo))
    return coeffs, rhs, lo, hi


def decompose(z, p: Polyhedron, q: Polyhedron):
    """Split z = z' + z'' over the lattice points of P and Q.

    Returns the pair (z', z'') with z' lexicographically least, or None when
    no split exists.  Raises Unbounded when the split region can be infinite.
    """
    if p.dim != q.dim:
        raise DimensionMismatch("P and Q live in different dimensions")
    z = tuple(int(x) for x in z)
    if len(z) != p.dim:
        raise DimensionMismatch("point has wrong length")
    if p.v.rays or q.v.rays:
        _decompose_unbounded_guard(p, q)
    system = _split_system(z, p, q)
    if system is None:
        return None
    first = kernels.scan_first(*system)
    if first is None:
        return None
    return first, tuple(a - b for a, b in zip(z, first))


def _located_over(r: Polyhedron, p: Polyhedron, q: Polyhedron,
                  window=None, classify=None) -> LocationReport:
    """Location engine: split every lattice point of R over (P, Q).

    R is the ambient set whose points must split; callers pass P + Q for the
    normal-location check, or a possibly larger set (then a witness may lie
    outside the sum, and ``classify`` decides its kind).
    """
    bounded = not r.v.rays
    if window is None:
        if not bounded:
            raise Unbounded("point set to split is unbounded; "
                            "pass a window box")
        rlo, rhi = vertex_box(r)
        full = True
    else:
        rlo, rhi = _clip_box(r, *window)
        # a window that still covers the whole vertex box loses nothing
        full = bounded and (rlo, rhi) == vertex_box(r)
    checked = {"window": None if full else [list(rlo), list(rhi)]}

    def report(witness_point):
        if witness_point is not None:
            z = tuple(witness_point)
            kind = classify(z) if classify else NO_DECOMPOSITION
            return LocationReport(VERDICT_NOT_LOCATED, Witness(z, kind),
                                  checked)
        verdict = VERDICT_LOCATED if full else VERDICT_VERIFIED_UP_TO
        return LocationReport(verdict, None, checked)

    if bounded and not p.v.rays and not q.v.rays:
        rc, rb = _rows(r)
        pc, pb = _rows(p)
        qc, qb = _rows(q)
        plo, phi = vertex_box(p)
        qlo, qhi = vertex_box(q)
        return report(kernels.scan_undecomposed(rc, rb, rlo, rhi,
                                                pc, pb, plo, phi,
                                                qc, qb, qlo, qhi))
    _decompose_unbounded_guard(p, q)
    for z in enumerate_windowed(r, rlo, rhi):
        system = _split_system(z, p, q)
        if system is None or kernels.scan_first(*system) is None:
            return report(z)
    return report(None)


def normally_located(p: Polyhedron, q: Polyhedron,
                     window=None) -> LocationReport:
    """Check that every lattice point of P + Q splits over P and Q.

    Bounded inputs are checked completely.  Unbounded inputs need a window
    box (lo, hi); points of P + Q inside the window are checked and the
    verdict degrades to "verified_up_to" unless the window provably covers
    all lattice points of P + Q.
    """
    if p.dim != q.dim:
        raise DimensionMismatch("P and Q live in different dimensions")
    return _located_over(minkowski_sum(p, q), p, q, window)


def is_normal(p: Polyhedron, s_max: int) -> LocationReport:
    """Check normality of a bounded lattice polytope for scales 2..s_max.

    Scale s holds when ((s-1)P, P) is normally located.  For the smallest
    failing s the two notions coincide: scales below s hold, so a splitting
    of a point of sP into s lattice points of P would in particular give a
    split over (s-1)P and P by grouping, and conversely.  The witness is
    therefore a genuine normality failure at its scale.
    """
    if not isinstance(s_max, int) or s_max < 1:
        raise NormlocError(f"s_max must be a positive integer: {s_max}")
    if p.v.rays:
        raise Unbounded("normality is checked for bounded polytopes")
    if not p.is_lattice():
        raise NotLattice("normality needs integral vertices")
    for s in range(2, s_max + 1):
        step = normally_located(scale(p, s - 1), p)
        if step.verdict == VERDICT_NOT_LOCATED:
            w = Witness(step.witness.point, NORMALITY_FAILURE, scale=s)
            return LocationReport(VERDICT_NOT_LOCATED, w, {"scale": s})
    return LocationReport(VERDICT_VERIFIED_UP_TO, None, {"s_max": s_max})
