"""Rational polyhedra with exact double descriptions.

Every :class:`Polyhedron` carries a canonical vertex description (vertices
sorted lexicographically, recession rays primitive and sorted) and a
canonical halfspace description (irredundant facets ``normal @ x <= rhs``
with primitive integer normals, equalities as an HNF-reduced system), plus
its cached tail cone.  Construction goes through the double description
engine in both directions, so two polyhedra are equal as sets iff their
records compare equal.

Only pointed polyhedra are supported: a constraint system whose solution set
contains a line has no vertex description and raises NotPointed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, lcm

from . import dd
from .errors import (DimensionMismatch, EmptyPolyhedron, NormlocError,
                     NotPointed, Unbounded, ZeroVector)
from .exact import (IMat, IVec, QVec, dot, hermite_normal_form, primitive,
                    rank, vec_gcd)
from .fans import Cone, cone_from_generators
from .reps import HRep, VRep, Witness  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class Polyhedron:
    dim: int
    h: HRep
    v: VRep
    tail: Cone

    @property
    def vertices(self):
        return self.v.vertices

    @property
    def rays(self):
        return self.v.rays

    def contains(self, x) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point has length {len(x)}, "
                                    f"polyhedron lives in {self.dim}")
        return (all(dot(n, x) == rhs for n, rhs in self.h.equalities)
                and all(dot(n, x) <= rhs for n, rhs in self.h.inequalities))

    def is_bounded(self) -> bool:
        return not self.v.rays

    def is_lattice(self) -> bool:
        """Whether every vertex is integral."""
        return all(x.denominator == 1 for v in self.v.vertices for x in v)

    def affine_dimension(self) -> int:
        v0 = self.v.vertices[0]
        rows = [tuple(a - b for a, b in zip(v, v0))
                for v in self.v.vertices[1:]]
        rows += [tuple(map(Fraction, r)) for r in self.v.rays]
        return rank(rows) if rows else 0


def hrep(inequalities, equalities=()) -> HRep:
    """Coerce rows (normal, rhs) into canonical scaling."""
    def row(n, b):
        nf = tuple(Fraction(x) for x in n)
        if all(x == 0 for x in nf):
            raise ZeroVector("constraint with zero normal")
        p = primitive(nf)
        j = next(i for i, x in enumerate(p) if x != 0)
        factor = nf[j] / p[j]
        return p, Fraction(b) / factor

    return HRep(tuple(row(n, b) for n, b in inequalities),
                tuple(row(n, b) for n, b in equalities))


def vrep(vertices, rays=()) -> VRep:
    verts = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    return VRep(verts, tuple(primitive(r) for r in rays))


def _homogenize_h(d, h: HRep):
    """Integer constraint rows for the cone {(x, t) : t >= 0, x/t in P}."""
    ineqs = []
    eqs = []
    for n, b in h.inequalities:
        den = b.denominator
        ineqs.append(primitive(tuple(den * x for x in n) + (-b.numerator,)))
    for n, b in h.equalities:
        den = b.denominator
        eqs.append(primitive(tuple(den * x for x in n) + (-b.numerator,)))
    ineqs.append((0,) * d + (-1,))
    return eqs, ineqs


def _h_to_v(d, h: HRep):
    eqs, ineqs = _homogenize_h(d, h)
    lines, rays = dd.generators_from_constraints(d + 1, eqs, ineqs)
    verts = []
    rec = []
    for r in rays:
        t = r[-1]
        if t > 0:
            verts.append(tuple(Fraction(x, t) for x in r[:-1]))
        else:
            rec.append(primitive(r[:-1]))
    # an infeasible system can still homogenize to a nontrivial cone (all of
    # it in the t = 0 slice), so emptiness must be decided before pointedness
    if not verts:
        raise EmptyPolyhedron("constraint system is infeasible")
    if lines:
        raise NotPointed("solution set contains a line; no vertex exists")
    return sorted(verts), sorted(rec)


def _v_to_h(d, verts, rec):
    """Canonical facets and equalities via the polar of the homogenization."""
    gens = set()
    for v in verts:
        den = 1
        for x in v:
            den = lcm(den, x.denominator)
        gens.add(tuple(int(x * den) for x in v) + (den,))
    for r in rec:
        gens.add(tuple(r) + (0,))
    plines, prays = dd.generators_from_constraints(d + 1, (), sorted(gens))
    ineqs = []
    for m in prays:
        sp, c = m[:-1], m[-1]
        if not any(sp):
            continue  # the t >= 0 facet of the homogenization
        g = vec_gcd(sp)
        ineqs.append((tuple(x // g for x in sp), Fraction(-c, g)))
    eq_rows = []
    for m in plines:
        sp, c = m[:-1], m[-1]
        eq_rows.append(sp + (-c,))
    eqs = []
    if eq_rows:
        hn, _ = hermite_normal_form(tuple(eq_rows))
        for row in hn:
            if any(row):
                eqs.append((row[:-1], Fraction(row[-1])))
    return sorted(ineqs), eqs


def from_h(h: HRep) -> Polyhedron:
    """Polyhedron of a halfspace description.

    Raises EmptyPolyhedron if the system is infeasible and NotPointed if the
    solution set contains a line.
    """
    rows = tuple(h.inequalities) + tuple(h.equalities)
    if not rows:
        raise NormlocError("empty constraint system")
    d = len(rows[0][0])
    if any(len(n) != d for n, _ in rows):
        raise DimensionMismatch("constraint normals of mixed lengths")
    h = hrep(h.inequalities, h.equalities)
    verts, rec = _h_to_v(d, h)
    ineqs, eqs = _v_to_h(d, verts, rec)
    return Polyhedron(d, HRep(tuple(ineqs), tuple(eqs)),
                      VRep(tuple(verts), tuple(rec)),
                      cone_from_generators(d, rays=rec))


def from_v(v: VRep) -> Polyhedron:
    """Polyhedron of a vertex description (at least one vertex required)."""
    if not v.vertices:
        raise NormlocError("a polyhedron needs at least one vertex")
    d = len(v.vertices[0])
    if any(len(p) != d for p in v.vertices) or any(len(r) != d
                                                   for r in v.rays):
        raise DimensionMismatch("generators of mixed lengths")
    v = vrep(v.vertices, v.rays)
    ineqs, eqs = _v_to_h(d, v.vertices, v.rays)
    canon = from_h(HRep(tuple(ineqs), tuple(eqs)))
    return canon


def dd_convert(rep):
    """VRep of an HRep, or HRep of a VRep (canonical in both directions)."""
    if isinstance(rep, HRep):
        return from_h(rep).v
    if isinstance(rep, VRep):
        return from_v(rep).h
    raise TypeError(f"expected HRep or VRep, got {type(rep).__name__}")


def equals(p: Polyhedron, q: Polyhedron) -> bool:
    return p == q


def contains(p: Polyhedron, x) -> bool:
    return p.contains(x)


def dimension(p: Polyhedron) -> int:
    return p.affine_dimension()


def is_lattice(p: Polyhedron) -> bool:
    return p.is_lattice()


def tail_cone(p: Polyhedron) -> Cone:
    return p.tail


def minkowski_sum(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    """Pointwise sum: pairwise vertex sums plus the union of the rays."""
    if p.dim != q.dim:
        raise DimensionMismatch("summands live in different dimensions")
    verts = sorted({tuple(a + b for a, b in zip(vp, vq))
                    for vp in p.v.vertices for vq in q.v.vertices})
    rays = sorted(set(p.v.rays) | set(q.v.rays))
    return from_v(VRep(tuple(verts), tuple(rays)))


def scale(p: Polyhedron, k: int) -> Polyhedron:
    """The dilation k * P for a positive integer k."""
    if not isinstance(k, int) or k < 1:
        raise NormlocError(f"scale factor must be a positive integer: {k}")
    verts = tuple(tuple(k * x for x in v) for v in p.v.vertices)
    return from_v(VRep(verts, p.v.rays))


def translate(p: Polyhedron, t) -> Polyhedron:
    if len(t) != p.dim:
        raise DimensionMismatch("translation vector has wrong length")
    verts = tuple(tuple(x + s for x, s in zip(v, t)) for v in p.v.vertices)
    return from_v(VRep(verts, p.v.rays))


def vertex_box(p: Polyhedron):
    """Integer box [lo, hi] containing all lattice points of a bounded P."""
    if p.v.rays:
        raise Unbounded("no finite bounding box: polyhedron has rays")
    lo = tuple(ceil(min(v[i] for v in p.v.vertices)) for i in range(p.dim))
    hi = tuple(floor(max(v[i] for v in p.v.vertices)) for i in range(p.dim))
    return lo, hi


def integer_constraint_rows(p: Polyhedron):
    """All constraints as integer rows (a, b) meaning a @ x <= b.

    Equalities are emitted as opposing inequality pairs, so the rows cut out
    exactly P.  Used by the lattice scan kernels.
    """
    rows = []
    for n, b in p.h.inequalities:
        den = b.denominator
        rows.append((tuple(den * x for x in n), b.numerator))
    for n, b in p.h.equalities:
        den = b.denominator
        nn = tuple(den * x for x in n)
        rows.append((nn, b.numerator))
        rows.append((tuple(-x for x in nn), -b.numerator))
    return rows


def polyhedron_to_dict(p: Polyhedron):
    return {"dim": p.dim,
            "vertices": [[str(x) for x in v] for v in p.v.vertices],
            "rays": [list(r) for r in p.v.rays]}


def polyhedron_from_dict(data) -> Polyhedron:
    """Accepts either the vertex form or the halfspace form."""
    if "vertices" in data:
        verts = [tuple(Fraction(x) for x in v) for v in data["vertices"]]
        rays = [tuple(int(x) for x in r) for r in data.get("rays", [])]
        return from_v(VRep(tuple(verts), tuple(rays)))
    ineqs = [(tuple(int(x) for x in row["normal"]), Fraction(row["rhs"]))
             for row in data.get("inequalities", [])]
    eqs = [(tuple(int(x) for x in row["normal"]), Fraction(row["rhs"]))
           for row in data.get("equalities", [])]
    return from_h(HRep(tuple(ineqs), tuple(eqs)))
