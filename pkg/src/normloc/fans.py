"""Polyhedral cones and fans with exact canonical forms.

A :class:`Cone` stores both descriptions at once, each canonicalized so that
equal cones compare equal: lines and equality normals as saturated HNF bases,
rays and facet normals primitive, reduced modulo the respective span, and
sorted.  Inequality normals follow the convention ``n @ x <= 0``.

Normal fans are taken with respect to maximizers: the cone attached to a
vertex v of Q consists of the functionals whose maximum over Q is attained
at v, and is generated by the outer normals of the facets through v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import dd
from .errors import SupportMismatch, ZeroVector
from .exact import (IMat, IVec, dot, primitive, project_off, saturated_basis)
from .reps import HRep


@dataclass(frozen=True)
class Cone:
    dim: int
    rays: IMat
    lines: IMat
    ineq_normals: IMat
    eq_normals: IMat

    @property
    def h(self) -> HRep:
        """Halfspace form with all right hand sides zero."""
        zero = Fraction(0)
        return HRep(tuple((n, zero) for n in self.ineq_normals),
                    tuple((n, zero) for n in self.eq_normals))

    @property
    def span_dim(self) -> int:
        return self.dim - len(self.eq_normals)

    def is_pointed(self) -> bool:
        return not self.lines

    def contains_point(self, x) -> bool:
        return (all(dot(n, x) == 0 for n in self.eq_normals)
                and all(dot(n, x) <= 0 for n in self.ineq_normals))

    def sort_key(self):
        return (self.rays, self.lines)

    def to_dict(self):
        return {"rays": [list(r) for r in self.rays],
                "lines": [list(ln) for ln in self.lines]}


def _reduce_mod(vectors, basis) -> IMat:
    if not basis:
        return tuple(sorted(tuple(v) for v in vectors))
    return tuple(sorted(primitive(project_off(v, basis)) for v in vectors))


def _assemble(dim, lines, rays, eq_normals, ineq_normals) -> Cone:
    lines_c = saturated_basis(lines)
    eqs_c = saturated_basis(eq_normals)
    return Cone(dim,
                _reduce_mod(rays, lines_c),
                lines_c,
                _reduce_mod(ineq_normals, eqs_c),
                eqs_c)


def _clean(dim, vectors):
    out = []
    for v in vectors:
        v = tuple(v)
        if len(v) != dim:
            raise ZeroVector(f"expected vectors of length {dim}")
        if any(v):
            out.append(primitive(v))
    return out


def cone_from_generators(dim: int, rays=(), lines=()) -> Cone:
    """The cone lin(lines) + cone(rays).  Zero generators are dropped."""
    rays0 = _clean(dim, rays)
    lines0 = _clean(dim, lines)
    eqs, ineqs = dd.constraints_from_generators(dim, lines0, rays0)
    glines, grays = dd.generators_from_constraints(dim, eqs, ineqs)
    return _assemble(dim, glines, grays, eqs, ineqs)


def cone_from_h(dim: int, ineqs=(), eqs=()) -> Cone:
    """The cone of solutions of ``eqs @ x = 0`` and ``ineqs @ x <= 0``."""
    ineqs0 = _clean(dim, ineqs)
    eqs0 = _clean(dim, eqs)
    lines, rays = dd.generators_from_constraints(dim, eqs0, ineqs0)
    ceqs, cineqs = dd.constraints_from_generators(dim, lines, rays)
    return _assemble(dim, lines, rays, ceqs, cineqs)


def intersect_cones(a: Cone, b: Cone) -> Cone:
    if a.dim != b.dim:
        raise SupportMismatch("cones live in different dimensions")
    return cone_from_h(a.dim,
                       ineqs=a.ineq_normals + b.ineq_normals,
                       eqs=a.eq_normals + b.eq_normals)


def dual_cone(c: Cone) -> Cone:
    """All functionals nonnegative on c (zero on its lines)."""
    return cone_from_h(c.dim,
                       ineqs=tuple(tuple(-x for x in r) for r in c.rays),
                       eqs=c.lines)


def cone_contains(outer: Cone, inner: Cone) -> bool:
    """Set containment, checked on the inner cone's generators."""
    for r in inner.rays:
        if not outer.contains_point(r):
            return False
    for ln in inner.lines:
        if not (all(dot(n, ln) == 0 for n in outer.eq_normals)
                and all(dot(n, ln) == 0 for n in outer.ineq_normals)):
            return False
    return True


def relative_interior_contains(c: Cone, x) -> bool:
    """Strict membership: on the span of c and off every facet."""
    return (all(dot(n, x) == 0 for n in c.eq_normals)
            and all(dot(n, x) < 0 for n in c.ineq_normals))


@dataclass(frozen=True)
class Fan:
    """A finite fan, stored through its maximal cones."""

    dim: int
    maximal_cones: tuple[Cone, ...]

    def to_dict(self):
        return {"dim": self.dim,
                "maximal_cones": [c.to_dict() for c in self.maximal_cones]}


def fan_from_cones(dim: int, cones) -> Fan:
    """Dedupe, drop cones contained in strictly larger ones, sort."""
    unique = sorted(set(cones), key=Cone.sort_key)
    keep = [c for i, c in enumerate(unique)
            if not any(j != i and cone_contains(d, c)
                       for j, d in enumerate(unique))]
    return Fan(dim, tuple(keep))


def fan_from_dict(data) -> Fan:
    dim = data["dim"]
    cones = [cone_from_generators(dim, rays=c.get("rays", ()),
                                  lines=c.get("lines", ()))
             for c in data["maximal_cones"]]
    return fan_from_cones(dim, cones)


def normal_fan(q) -> Fan:
    """Fan of maximizer cones of a polyhedron, one per vertex.

    The cone at vertex v is generated by the outer normals of the facets
    active at v, plus the span of the equality normals.
    """
    eq_normals = [n for n, _ in q.h.equalities]
    cones = []
    for v in q.v.vertices:
        active = [n for n, rhs in q.h.inequalities if dot(n, v) == rhs]
        cones.append(cone_from_generators(q.dim, rays=active,
                                          lines=eq_normals))
    return fan_from_cones(q.dim, cones)


def support(f: Fan) -> Cone:
    """Conic hull of the fan's support (exact for convex supports)."""
    rays = [r for c in f.maximal_cones for r in c.rays]
    lines = [ln for c in f.maximal_cones for ln in c.lines]
    return cone_from_generators(f.dim, rays=rays, lines=lines)


def is_face(f: Cone, c: Cone) -> bool:
    """Whether f is a face of c (f must already be contained in c)."""
    if not cone_contains(c, f):
        return False
    tight = [n for n in c.ineq_normals
             if all(dot(n, r) == 0 for r in f.rays)
             and all(dot(n, ln) == 0 for ln in f.lines)]
    carved = cone_from_h(c.dim, ineqs=c.ineq_normals,
                         eqs=c.eq_normals + tuple(tight))
    return carved == f


def is_fan(f: Fan) -> bool:
    """Pairwise intersections of maximal cones must be common faces."""
    cones = f.maximal_cones
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            cap = intersect_cones(cones[i], cones[j])
            if not (is_face(cap, cones[i]) and is_face(cap, cones[j])):
                return False
    return True


def refines(f1: Fan, f2: Fan) -> bool:
    """Whether every maximal cone of f1 sits inside some cone of f2."""
    if support(f1) != support(f2):
        raise SupportMismatch("fans have different supports")
    return all(any(cone_contains(c2, c1) for c2 in f2.maximal_cones)
               for c1 in f1.maximal_cones)


def common_refinement(f1: Fan, f2: Fan) -> Fan:
    """Coarsest fan refining both: all pairwise intersections."""
    if f1.dim != f2.dim:
        raise SupportMismatch("fans live in different dimensions")
    if support(f1) != support(f2):
        raise SupportMismatch("fans have different supports")
    cells = [intersect_cones(c1, c2)
             for c1 in f1.maximal_cones for c2 in f2.maximal_cones]
    return fan_from_cones(f1.dim, cells)
