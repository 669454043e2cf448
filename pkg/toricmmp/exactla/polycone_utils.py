"""
Operations on cones and polyhedra built on ``ppl`` and the exact simplex:
faces, common refinements, relative interior points, projections,
triangulations, volumes and lattice point enumeration.
"""
import logging
import itertools
from fractions import Fraction
from math import factorial, floor, ceil

from .rational import primitive, dot, vsub, vadd, vscale, is_zero, int_vec
from .linalg import (rank, det, solve, saturate, transpose,
                     echelon_with_transform)
from .lp import lp_solve
from .polycone import (PolyCone, Polyhedron, cone_from_generators,
                       cone_from_inequalities, _fdot,
                       _ppl_from_constraints)
from ..utils import from_currsys

logger = logging.getLogger(__name__)


def faces_of_codim(cone, k):
    """
    All faces of ``cone`` of codimension ``k``

    Faces are the intersections of the cone with sets of its facets. The
    lineality space is contained in every face.

    Raises
    ------
    ValueError
        If ``k`` is outside [0, dim(cone)]

    """
    dim = cone.dim
    if not 0 <= k <= dim:
        raise ValueError("Codimension {} outside [0, {}]".format(k, dim))
    all_rays = frozenset(range(len(cone.rays)))
    facet_sets = [frozenset(i for i, r in enumerate(cone.rays)
                            if _fdot(f, r) == 0) for f in cone.facets]
    faces = {all_rays}
    frontier = [all_rays]
    while frontier:
        new = []
        for face in frontier:
            for fs in facet_sets:
                sub = face & fs
                if sub not in faces:
                    faces.add(sub)
                    new += [sub]
        frontier = new

    out = []
    for face in faces:
        gens = [cone.rays[i] for i in sorted(face)] + cone.lineality
        fdim = rank(gens) if gens else 0
        if fdim == dim - k:
            out += [cone_from_generators([cone.rays[i] for i in sorted(face)],
                                         cone.lineality, cone.ambient_dim)]
    return sorted(out, key=lambda c: c.key)


class Subdivision:
    """
    A finite collection of cones covering a common support

    Parameters
    ----------
    cells : list of PolyCone

    """
    def __init__(self, cells):
        self.cells = list(cells)
        if not self.cells:
            raise ValueError("A subdivision needs at least one cell")
        self.ambient_dim = self.cells[0].ambient_dim
        self.meta = {}

    @property
    def dim(self):
        return max(c.dim for c in self.cells)

    def support_volume(self):
        return sum((_cell_volume(c, self.dim) for c in self.cells),
                   Fraction(0))

    def locate(self, v):
        """Indices of the cells containing v"""
        return [i for i, c in enumerate(self.cells) if c.contains(v)]

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)


def _cell_volume(cone, dim):
    """Volume of cone intersected with the unit box, in span coordinates"""
    if cone.dim < dim:
        return Fraction(0)
    n = cone.ambient_dim
    box = []
    for i in range(n):
        e = tuple(Fraction(int(i == j)) for j in range(n))
        box += [(e, Fraction(-1)), (tuple(-x for x in e), Fraction(-1))]
    poly = Polyhedron([(f, 0) for f in cone.facets] + box,
                      [(e, 0) for e in cone.equations], n)
    return polytope_volume(poly)


def cone_volume(cone):
    """Volume of a cone cut by the unit box, in its own span"""
    return _cell_volume(cone, cone.dim)


def common_refinement(subdivisions):
    """
    Coarsest common refinement of subdivisions with a common support

    Raises
    ------
    ValueError
        If the supports differ

    """
    subdivisions = list(subdivisions)
    if not subdivisions:
        raise ValueError("Nothing to refine")
    dim = subdivisions[0].dim
    vols = [s.support_volume() for s in subdivisions]
    if any(s.dim != dim for s in subdivisions) or \
            any(v != vols[0] for v in vols):
        raise ValueError("Subdivisions do not share a common support")

    cells = list(subdivisions[0].cells)
    for sub in subdivisions[1:]:
        new = []
        for a in cells:
            for b in sub.cells:
                c = a.intersection(b)
                if c.dim == dim:
                    new += [c]
        cells = new
    uniq = {}
    for c in cells:
        uniq.setdefault(c.key, c)
    refinement = Subdivision(sorted(uniq.values(), key=lambda c: c.key))
    if refinement.support_volume() != vols[0]:
        raise ValueError("Subdivisions do not share a common support")
    return refinement


def relative_interior_point(poly):
    """
    A point in the relative interior of a polyhedron, None if it is empty
    """
    n = poly.ambient_dim
    res = lp_solve([0] * n, poly.inequalities, poly.equalities)
    if not res.is_optimal:
        return None
    implicit, strict = [], []
    for a, b in poly.inequalities:
        top = lp_solve(a, poly.inequalities, poly.equalities, sense="max")
        if top.is_optimal and top.value == b:
            implicit += [(a, b)]
        else:
            strict += [(a, b)]
    if not strict:
        return res.witness
    # maximise s with a.x - s >= b, s <= 1
    ineqs = [(tuple(a) + (Fraction(-1),), b) for a, b in strict]
    ineqs += [(tuple([Fraction(0)] * n) + (Fraction(-1),), Fraction(-1))]
    eqs = [(tuple(a) + (Fraction(0),), b) for a, b in
           list(poly.equalities) + implicit]
    obj = [0] * n + [1]
    best = lp_solve(obj, ineqs, eqs, sense="max")
    return tuple(best.witness[:n])


def project(poly, keep):
    """
    Projection of a polyhedron onto the coordinates listed in ``keep``

    The kept coordinates are moved to the front and ``ppl`` drops the
    trailing ones, which projects the polyhedron.

    Returns
    -------
    Polyhedron
        In the coordinates ``keep``, in that order, with a minimal
        constraint description

    """
    n = poly.ambient_dim
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= j < n for j in keep):
        raise ValueError("Bad coordinate list {} for dimension {}"
                         "".format(keep, n))
    order = keep + [j for j in range(n) if j not in keep]

    def permuted(rows):
        return [(tuple(a[j] for j in order), b) for a, b in rows]

    joint = _ppl_from_constraints(permuted(poly.inequalities),
                                  permuted(poly.equalities), n)
    joint.remove_higher_space_dimensions(len(keep))
    out = Polyhedron.from_ppl(joint)
    out.meta["projected_from"] = n
    logger.debug("Projected dimension %d onto %s: %d rows", n, keep,
                 len(out.inequalities) + len(out.equalities))
    return out


def pulling_triangulation(rays, idx=None):
    """
    Pulling triangulation of cone(rays) using the rays in index order

    Returns a sorted list of index tuples, each spanning a simplicial cone.
    Rays in the interior of a cone other than the pulled one are not used.
    """
    if idx is None:
        idx = list(range(len(rays)))
    idx = sorted(idx)
    gens = [rays[i] for i in idx]
    if not gens:
        return [()]
    cone = cone_from_generators(gens, (), len(gens[0]))
    if cone.lineality:
        raise ValueError("Cannot triangulate a cone with lineality")
    d = cone.dim
    extremal = [i for i in idx if primitive(rays[i]) in cone.rays]
    if len(cone.rays) == d and len(extremal) == len(idx):
        # simplicial: use one generator per extremal ray
        chosen = {}
        for i in idx:
            p = primitive(rays[i])
            if p in cone.rays and p not in chosen:
                chosen[p] = i
        return [tuple(sorted(chosen.values()))]
    first = idx[0]
    out = []
    for facet in faces_of_codim(cone, 1):
        if facet.contains(rays[first]):
            continue
        sub = [i for i in idx if facet.contains(rays[i])]
        for simplex in pulling_triangulation(rays, sub):
            out += [tuple(sorted(simplex + (first,)))]
    return sorted(set(out))


def polytope_volume(poly):
    """
    Volume of a bounded polyhedron relative to the lattice of its affine span

    An empty polyhedron has volume 0, a point has volume 1.
    """
    pts = poly.vertices
    if not pts:
        return Fraction(0)
    if poly.recession_rays or poly.lineality:
        raise ValueError("Volume of an unbounded polyhedron")
    diffs = [vsub(p, pts[0]) for p in pts[1:]]
    diffs = [d for d in diffs if not is_zero(d)]
    if not diffs:
        return Fraction(1)
    basis = saturate(diffs, poly.ambient_dim)
    basis_t = transpose(basis)
    coords = [solve(basis_t, vsub(p, pts[0]), len(basis)) for p in pts]
    lifted = [(Fraction(1),) + tuple(c) for c in coords]
    d = len(basis)
    total = Fraction(0)
    for simplex in pulling_triangulation(lifted):
        total += abs(det([lifted[i] for i in simplex]))
    return total / factorial(d)


def regular_subdivision(rays, heights):
    """
    Regular subdivision of cone(rays) induced by heights

    The cells are the tight sets of the vertices of
    {m : <m, u_i> >= -h_i}. With the coefficients of a divisor as heights
    this is the fan on which that divisor is ample.

    Returns
    -------
    list of tuple
        Sorted index tuples, one per maximal cell

    """
    ineqs = [(tuple(u), -Fraction(h)) for u, h in zip(rays, heights)]
    poly = Polyhedron(ineqs, dim=len(rays[0]))
    cells = set()
    for m in poly.vertices:
        tight = tuple(i for i, u in enumerate(rays)
                      if dot(m, u) == -Fraction(heights[i]))
        cells.add(tight)
    # drop cells contained in others, which come from non-pointed pieces
    cells = [c for c in cells if not any(set(c) < set(o) for o in cells)]
    return sorted(cells)


def lattice_points(poly):
    """
    Integer points of a bounded polyhedron

    Raises
    ------
    ValueError
        If the polyhedron is unbounded

    """
    n = poly.ambient_dim
    if relative_interior_point(poly) is None:
        return []
    bounds = []
    for i in range(n):
        e = [int(i == j) for j in range(n)]
        lo = lp_solve(e, poly.inequalities, poly.equalities, sense="min")
        hi = lp_solve(e, poly.inequalities, poly.equalities, sense="max")
        if not (lo.is_optimal and hi.is_optimal):
            raise ValueError("Cannot enumerate lattice points of an unbounded"
                             " polyhedron")
        bounds += [range(ceil(lo.value), floor(hi.value) + 1)]
    return [p for p in itertools.product(*bounds) if poly.contains(p)]


def box_points(rays):
    """
    Nonzero lattice points sum c_i u_i with 0 <= c_i < 1

    ``rays`` must be linearly independent integer vectors. The number of
    points is the multiplicity minus one.

    Raises
    ------
    ValueError
        If the multiplicity exceeds ``!CHAMBERS.box_point_cap``

    """
    rays = [int_vec(r) for r in rays]
    if not rays:
        return []
    dim = len(rays[0])
    basis = saturate(rays, dim)
    if len(basis) != len(rays):
        raise ValueError("Box points need independent rays: {}".format(rays))
    basis_t = transpose(basis)
    k = len(basis)
    umat = [[int(x) for x in solve(basis_t, r, k)] for r in rays]
    mult = abs(det(umat))
    cap = from_currsys("!CHAMBERS.box_point_cap")
    if mult > cap:
        raise ValueError("Multiplicity {} exceeds box point cap {}"
                         "".format(mult, cap))
    hmat, _, _ = echelon_with_transform(umat, k)
    diag = [abs(hmat[j][j]) for j in range(k)]
    umat_t = transpose(umat)
    out = set()
    for w in itertools.product(*[range(d) for d in diag]):
        c = solve(umat_t, w, k)
        frac = [x - floor(x) for x in c]
        if all(x == 0 for x in frac):
            continue
        v = [Fraction(0)] * dim
        for f, r in zip(frac, rays):
            v = vadd(v, vscale(f, r))
        out.add(tuple(int(x) for x in v))
    return sorted(out)
