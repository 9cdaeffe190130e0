"""GIT fans of graded polynomial rings and realizations of polytope pairs.

A grading is a projection pi: Z^n -> Z^m sending the i-th unit vector to the
weight w_i.  The fiber over a degree u is the polyhedron
P(u) = {x in Q^n : x >= 0, pi(x) = u}.  Orbit cones are the cones spanned by
subsets of the weights; the GIT cone of u is the intersection of all orbit
cones containing u, and the GIT cones form a fan covering the weight cone.

The sum conditions connect this back to lattice geometry:

* fiber_sum_exact:        P(u1) + P(u2)  =  P(u1 + u2)        (polyhedra)
* fiber_point_sum_exact:  the same on lattice points           (splitting)
* multiple_making_sums_exact: some multiple k makes the point
  condition hold for all s*k*u1, s*k*u2 up to a scale bound

realize_pair embeds any pair of lattice polyhedra with a common pointed tail
as two fibers of one grading, turning normal-location questions into degree
arithmetic, and refinement_iff_interior cross-checks the fan refinement
criterion against GIT cone membership on such a realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (DimensionMismatch, EmptyPolyhedron, NormlocError,
                     NotFullDimensional, NotLattice, RealizationError,
                     RefinementRequired, SubsetCapExceeded, SupportMismatch,
                     TailConeMismatch, WeightOutsideCone)
from .exact import (canonical_sign, dot, hermite_normal_form,
                    identity_matrix, kernel_lattice_basis, primitive,
                    transpose)
from .fans import (Cone, Fan, cone_from_generators, cone_from_h,
                   common_refinement, fan_from_cones, intersect_cones,
                   is_fan, normal_fan, refines, relative_interior_contains,
                   support)
from .latpoints import (LocationReport, VERDICT_LOCATED, VERDICT_NOT_LOCATED,
                        VERDICT_VERIFIED_UP_TO, _located_over,
                        normally_located)
from .polyhedra import (HRep, Polyhedron, VRep, from_h, from_v,
                        minkowski_sum, scale, translate)
from .reps import NO_DECOMPOSITION, NOT_IN_SUM

VERDICT_EXHAUSTED = "exhausted"

GENERATING_BY_THEOREM = "generating_by_theorem"
NOT_GENERATING_BY_THEOREM = "not_generating_by_theorem"
INDETERMINATE_BOUNDARY = "indeterminate_boundary"

SUBSET_CAP = 20


@dataclass(frozen=True)
class GradedProjection:
    """A surjective grading Z^n -> Z^m given by its weights pi(e_i) = w_i."""

    n: int
    m: int
    weights: tuple

    @property
    def matrix(self):
        """The m x n integer matrix of the projection (weights as columns)."""
        return transpose(self.weights)

    def to_dict(self):
        return {"n": self.n, "m": self.m,
                "weights": [list(w) for w in self.weights]}


def graded_projection(weights) -> GradedProjection:
    """Validated grading from a list of n weights in Z^m.

    Requires n >= m and surjectivity onto Z^m (checked through the Hermite
    form of the weight rows: their row lattice must be all of Z^m).
    """
    ws = tuple(tuple(int(x) for x in w) for w in weights)
    if not ws:
        raise NormlocError("a grading needs at least one weight")
    m = len(ws[0])
    if m < 1 or any(len(w) != m for w in ws):
        raise DimensionMismatch("weights of mixed lengths")
    n = len(ws)
    if n < m:
        raise NormlocError(f"need at least m = {m} weights, got {n}")
    h, _ = hermite_normal_form(ws)
    ident = identity_matrix(m)
    nonzero = [row for row in h if any(row)]
    if list(nonzero) != list(ident):
        raise NormlocError("weights do not span Z^m; grading not surjective")
    return GradedProjection(n, m, ws)


def graded_projection_from_dict(data) -> GradedProjection:
    return graded_projection(data["weights"])


def _degree(g: GradedProjection, u):
    u = tuple(int(x) for x in u)
    if len(u) != g.m:
        raise DimensionMismatch(f"degree has length {len(u)}, grading "
                                f"maps onto Z^{g.m}")
    return u


@lru_cache(maxsize=256)
def weight_cone(g: GradedProjection) -> Cone:
    """Cone spanned by all weights; every fiber degree must lie in it."""
    return cone_from_generators(g.m, rays=[w for w in g.weights if any(w)])


def _require_in_cone(g: GradedProjection, u):
    """Check u in cone(weights) by testing the fiber for emptiness.

    The fiber is the set of nonnegative combinations of the weights hitting
    u, so it is nonempty exactly when u lies in the weight cone.  Going
    through the fiber keeps the check cheap for wide projections, where the
    weight cone's facet description can be enormous.
    """
    u = _degree(g, u)
    try:
        _fiber_cached(g, u)
    except EmptyPolyhedron:
        raise WeightOutsideCone(f"degree {u} lies outside the weight cone")
    return u


def orbit_cones(g: GradedProjection, cap: int = SUBSET_CAP):
    """All cones spanned by subsets of the weights, deduplicated and sorted.

    Subset enumeration is exponential in n, so gradings with n > cap are
    rejected rather than silently ground through.
    """
    if g.n > cap:
        raise SubsetCapExceeded(f"{g.n} weights exceed the subset cap {cap}")
    distinct = sorted({primitive(w) for w in g.weights if any(w)})
    cones = {cone_from_generators(g.m)}
    for size in range(1, len(distinct) + 1):
        for sub in combinations(distinct, size):
            cones.add(cone_from_generators(g.m, rays=sub))
    return tuple(sorted(cones, key=Cone.sort_key))


def fiber(g: GradedProjection, u) -> Polyhedron:
    """The fiber polyhedron P(u) = {x >= 0 : pi(x) = u} in Q^n."""
    u = _require_in_cone(g, u)
    return _fiber_cached(g, u)


@lru_cache(maxsize=4096)
def _fiber_cached(g: GradedProjection, u) -> Polyhedron:
    eqs = [(row, u_j) for row, u_j in zip(g.matrix, u)]
    ineqs = [(tuple(-int(i == j) for j in range(g.n)), 0)
             for i in range(g.n)]
    return from_h(HRep(tuple(ineqs), tuple(eqs)))


def git_cone(g: GradedProjection, u) -> Cone:
    """Intersection of all orbit cones containing u.

    Computed without subset enumeration: the orbit cones spanned by the
    supports of the fiber's vertices suffice.  Each of them contains u, and
    any orbit cone containing u contains a point x of the fiber supported on
    its spanning set; the minimal face of the fiber through x (cut out by
    the coordinate hyperplanes vanishing on x) carries a vertex v with
    supp(v) inside supp(x), so the vertex-support cone sits inside that
    orbit cone.  At a fiber vertex the active rows have full rank, which
    forces the supporting weights to be linearly independent; GIT cones are
    therefore intersections of simplicial cones, in particular pointed.
    """
    u = _require_in_cone(g, u)
    return _git_cone_cached(g, u)


@lru_cache(maxsize=4096)
def _git_cone_cached(g: GradedProjection, u) -> Cone:
    f = _fiber_cached(g, u)
    supports = sorted({tuple(i for i, x in enumerate(v) if x != 0)
                       for v in f.v.vertices})
    result = None
    for sup in supports:
        c = cone_from_generators(g.m, rays=[g.weights[i] for i in sup])
        result = c if result is None else intersect_cones(result, c)
    return result


@dataclass(frozen=True)
class GitFan:
    weight_cone: Cone
    orbit_cones: tuple
    git_cones: tuple
    fan_verified: bool

    @property
    def fan(self) -> Fan:
        return Fan(self.weight_cone.dim, self.git_cones)

    def to_dict(self):
        return {"weight_cone": self.weight_cone.to_dict(),
                "orbit_cones": [c.to_dict() for c in self.orbit_cones],
                "git_cones": [c.to_dict() for c in self.git_cones],
                "fan_verified": self.fan_verified}


def _wall_normals(g: GradedProjection):
    """Primitive normals of the hyperplanes spanned by m-1 weights."""
    if g.m == 1:
        return [(1,)]
    distinct = sorted({primitive(w) for w in g.weights if any(w)})
    normals = set()
    for sub in combinations(distinct, g.m - 1):
        ker = kernel_lattice_basis(sub)
        if len(ker) == 1:
            normals.add(canonical_sign(primitive(ker[0])))
    return sorted(normals)


def git_fan(g: GradedProjection, cap: int = SUBSET_CAP) -> GitFan:
    """The fan of all GIT cones, covering the weight cone.

    The weight cone is cut into chambers along every hyperplane spanned by
    m-1 weights; orbit cones are bounded by such hyperplanes, so each
    chamber lies in a single GIT cone, namely the one of any of its interior
    points.  The result is cross-checked (pairwise intersections are faces,
    union has the right conic hull) and the outcome recorded in
    fan_verified rather than trusted.
    """
    orb = orbit_cones(g, cap)
    wc = weight_cone(g)
    cells = {wc}
    for nrm in _wall_normals(g):
        neg = tuple(-x for x in nrm)
        nxt = set()
        for cell in cells:
            for side in (nrm, neg):
                piece = intersect_cones(cell, cone_from_h(g.m,
                                                          ineqs=(side,)))
                if piece.span_dim == wc.span_dim:
                    nxt.add(piece)
        cells = nxt
    chambers = set()
    for cell in sorted(cells, key=Cone.sort_key):
        sample = tuple(sum(col) for col in zip(*cell.rays)) if cell.rays \
            else (0,) * g.m
        chambers.add(git_cone(g, sample))
    fan = fan_from_cones(g.m, chambers)
    verified = support(fan) == wc and is_fan(fan)
    return GitFan(wc, orb, fan.maximal_cones, verified)


def fiber_sum_exact(g: GradedProjection, u1, u2) -> bool:
    """Whether P(u1) + P(u2) = P(u1 + u2) as polyhedra."""
    u1 = _require_in_cone(g, u1)
    u2 = _require_in_cone(g, u2)
    u12 = tuple(a + b for a, b in zip(u1, u2))
    return minkowski_sum(fiber(g, u1), fiber(g, u2)) == fiber(g, u12)


def fiber_point_sum_exact(g: GradedProjection, u1, u2,
                          window=None) -> LocationReport:
    """Whether every lattice point of P(u1 + u2) splits over P(u1), P(u2).

    Stronger than normal location of the pair: a witness can lie outside
    P(u1) + P(u2) entirely (kind "not_in_sum") or inside it but without a
    lattice split (kind "no_decomposition").
    """
    u1 = _require_in_cone(g, u1)
    u2 = _require_in_cone(g, u2)
    u12 = tuple(a + b for a, b in zip(u1, u2))
    f1 = fiber(g, u1)
    f2 = fiber(g, u2)
    f12 = fiber(g, u12)

    def classify(z):
        return (NO_DECOMPOSITION if minkowski_sum(f1, f2).contains(z)
                else NOT_IN_SUM)

    report = _located_over(f12, f1, f2, window, classify)
    checked = dict(report.checked)
    checked["u1"], checked["u2"] = list(u1), list(u2)
    return LocationReport(report.verdict, report.witness, checked)


def _multiple_sweep(k_max: int, s_max: int, step):
    """Search k <= k_max with step(k, s) located for every s <= s_max."""
    if k_max < 1 or s_max < 1:
        raise NormlocError("k_max and s_max must be positive")
    failures = []
    for k in range(1, k_max + 1):
        hit = None
        for s in range(1, s_max + 1):
            rep = step(k, s)
            if rep.verdict == VERDICT_NOT_LOCATED:
                hit = (k, s, rep.witness)
                break
            if rep.verdict != VERDICT_LOCATED:
                raise NormlocError("sweep needs complete checks; got "
                                   f"verdict {rep.verdict!r} at k={k} s={s}")
        if hit is None:
            return LocationReport(VERDICT_VERIFIED_UP_TO, None,
                                  {"k": k, "k_max": k_max, "s_max": s_max})
        failures.append([hit[0], hit[1], list(hit[2].point)])
    return LocationReport(VERDICT_EXHAUSTED, None,
                          {"k_max": k_max, "s_max": s_max,
                           "failures": failures})


def multiple_making_sums_exact(g: GradedProjection, u1, u2,
                               k_max: int, s_max: int) -> LocationReport:
    """Search a multiple k <= k_max making the lattice point splitting of
    the fibers over s*k*u1, s*k*u2 exact for every s <= s_max.

    Verdict "verified_up_to" reports the first such k (in checked["k"]);
    "exhausted" means every k failed, with the first failing scale and
    witness per k recorded in checked["failures"].
    """
    u1 = _require_in_cone(g, u1)
    u2 = _require_in_cone(g, u2)

    def step(k, s):
        w1 = tuple(s * k * x for x in u1)
        w2 = tuple(s * k * x for x in u2)
        return fiber_point_sum_exact(g, w1, w2)

    return _multiple_sweep(k_max, s_max, step)


def zero_support(c):
    """Indices of the zero coordinates of a vector."""
    return tuple(i for i, x in enumerate(c) if x == 0)


def is_generating_candidate(g: GradedProjection, u1, u2) -> str:
    """Classify the pair by position in the GIT fan.

    Some GIT cone contains both degrees iff both lie in the GIT cone of
    u1 + u2 (any common cone contains the segment between them, hence
    u1 + u2, hence the face it generates there, which pins down every orbit
    cone through u1 + u2).  Pairs interior to that common cone are
    generating; pairs with no common cone are not; pairs touching the
    boundary are left undecided by these criteria.
    """
    u1 = _require_in_cone(g, u1)
    u2 = _require_in_cone(g, u2)
    u12 = tuple(a + b for a, b in zip(u1, u2))
    lam = git_cone(g, u12)
    if not (lam.contains_point(u1) and lam.contains_point(u2)):
        return NOT_GENERATING_BY_THEOREM
    if (relative_interior_contains(lam, u1)
            and relative_interior_contains(lam, u2)):
        return GENERATING_BY_THEOREM
    return INDETERMINATE_BOUNDARY


@dataclass(frozen=True)
class RealizedPair:
    """Two polyhedra embedded as fibers of one grading.

    q1 and q2 are the translated copies the construction actually realizes;
    the functionals are the rows of the linear part, so the grading sends
    (x, y) in Z^d x Z^m to (y_i + functionals[i] . x)_i.
    """

    projection: GradedProjection
    u1: tuple
    u2: tuple
    functionals: tuple
    translation: tuple
    q1: Polyhedron
    q2: Polyhedron

    def to_dict(self):
        return {"projection": self.projection.to_dict(),
                "u1": list(self.u1), "u2": list(self.u2),
                "functionals": [list(f) for f in self.functionals],
                "translation": list(self.translation)}


def _project_front(p: Polyhedron, d: int) -> Polyhedron:
    verts = tuple(v[:d] for v in p.v.vertices)
    rays = tuple(r[:d] for r in p.v.rays if any(r[:d]))
    return from_v(VRep(verts, rays))


def realize_pair(q1: Polyhedron, q2: Polyhedron) -> RealizedPair:
    """Embed lattice polyhedra Q1, Q2 with a common tail as two fibers.

    Both are translated into the positive orthant by one shared shift t.
    The functionals are the rays of the common refinement of the two normal
    fans; with l_1 > ... > l_m in lexicographic order and a_i, b_i their
    maxima over the shifted Q1, Q2, the grading on Z^(d+m) has weights
    (columns of the functional matrix, then unit vectors) and the fibers
    over u1 = a and u2 = b project isomorphically onto the shifted Q1, Q2.
    The construction verifies this, and the sum identity, before returning.
    """
    if q1.dim != q2.dim:
        raise DimensionMismatch("polyhedra live in different dimensions")
    d = q1.dim
    for q in (q1, q2):
        if not q.is_lattice():
            raise NotLattice("realization needs integral vertices")
        if q.affine_dimension() != d:
            raise NotFullDimensional("realization needs full-dimensional "
                                     "polyhedra")
    if q1.tail != q2.tail:
        raise TailConeMismatch("realization needs a common tail cone")
    if any(x < 0 for r in q1.tail.rays for x in r):
        raise TailConeMismatch("tail cone must lie in the nonnegative "
                               "orthant")
    lo = [min(min(v[i] for v in q.v.vertices) for q in (q1, q2))
          for i in range(d)]
    shift = tuple(max(0, 1 - int(x)) for x in lo)
    q1t = translate(q1, shift)
    q2t = translate(q2, shift)
    refined = common_refinement(normal_fan(q1t), normal_fan(q2t))
    funcs = sorted({r for c in refined.maximal_cones for r in c.rays},
                   reverse=True)
    if not funcs:
        raise RealizationError("refined normal fan has no rays")
    m = len(funcs)
    u1 = tuple(max(dot(f, v) for v in q1t.v.vertices) for f in funcs)
    u2 = tuple(max(dot(f, v) for v in q2t.v.vertices) for f in funcs)
    cols = [tuple(f[j] for f in funcs) for j in range(d)]
    units = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    g = graded_projection(cols + units)
    for u, target in ((u1, q1t), (u2, q2t),
                      (tuple(a + b for a, b in zip(u1, u2)),
                       minkowski_sum(q1t, q2t))):
        if _project_front(fiber(g, u), d) != target:
            raise RealizationError(f"fiber over {u} does not project onto "
                                   "its polyhedron")
    return RealizedPair(g, tuple(int(x) for x in u1),
                        tuple(int(x) for x in u2),
                        tuple(funcs), shift, q1t, q2t)


@dataclass(frozen=True)
class CrossCheckReport:
    refines_normal_fans: bool
    interior_of_common_git_cone: bool
    agree: bool
    pair: RealizedPair

    def to_dict(self):
        return {"refines_normal_fans": self.refines_normal_fans,
                "interior_of_common_git_cone":
                    self.interior_of_common_git_cone,
                "agree": self.agree,
                "pair": self.pair.to_dict()}


def refinement_iff_interior(q1: Polyhedron, q2: Polyhedron)\
        -> CrossCheckReport:
    """Cross-check the refinement criterion on a realized pair.

    N(Q1) refines N(Q2) exactly when some GIT cone of the realization has
    u1 in its relative interior and contains u2 (that cone can only be the
    GIT cone of u1).  Both sides are computed independently; disagreement
    indicates a defect and is reported, not hidden.
    """
    rp = realize_pair(q1, q2)
    fan_side = refines(normal_fan(rp.q1), normal_fan(rp.q2))
    lam = git_cone(rp.projection, rp.u1)
    git_side = (relative_interior_contains(lam, rp.u1)
                and lam.contains_point(rp.u2))
    return CrossCheckReport(fan_side, git_side, fan_side == git_side, rp)


def located_multiple_search(q1: Polyhedron, q2: Polyhedron,
                            k_max: int, s_max: int) -> LocationReport:
    """Search a multiple k <= k_max with (s*k*Q1, s*k*Q2) normally located
    for every s <= s_max.

    Requires N(Q1) to refine N(Q2); without refinement no multiple can make
    the pair normally located, so the precondition failure is an error, not
    a verdict.
    """
    try:
        ok = refines(normal_fan(q1), normal_fan(q2))
    except SupportMismatch as exc:
        raise RefinementRequired(str(exc)) from exc
    if not ok:
        raise RefinementRequired("normal fan of Q1 does not refine the "
                                 "normal fan of Q2")

    def step(k, s):
        return normally_located(scale(q1, s * k), scale(q2, s * k))

    return _multiple_sweep(k_max, s_max, step)
