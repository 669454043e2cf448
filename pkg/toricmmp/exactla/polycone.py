"""
Polyhedral cones and polyhedra on the Parma Polyhedra Library

A ``PolyCone`` always carries both descriptions: primitive integer rays plus
a lineality basis, and primitive facet normals plus equations. ``ppl``
computes one description from the other and minimises both.
"""
import logging
from fractions import Fraction

import ppl
import sympy

from ..base_classes import PolyConeBase

from .rational import primitive, dot, vsub, vscale, is_zero, vec_str
from .linalg import rank

logger = logging.getLogger(__name__)


def _fdot(h, v):
    return sum((Fraction(a) * Fraction(b) for a, b in zip(h, v)), Fraction(0))


def _expr(coeffs, inhom=0):
    """Integer ``ppl.Linear_Expression`` sum(c_i x_i) + inhom"""
    expr = ppl.Linear_Expression(int(inhom))
    for i, c in enumerate(coeffs):
        if c:
            expr += int(c) * ppl.Variable(i)
    return expr


def _padded(coeffs, dim):
    out = [int(c) for c in coeffs]
    return tuple(out + [0] * (dim - len(out)))


def _int_row(a, b=0):
    """Clears denominators of the row a.x >= b, returns (ints a, int -b)"""
    row = primitive(tuple(a) + (-Fraction(b),))
    return row[:-1], row[-1]


def _ppl_from_constraints(ineqs, eqs, dim):
    """
    ``ppl.C_Polyhedron`` for {a.x >= b} and {a.x = b}

    ``ineqs`` and ``eqs`` hold ``(a, b)`` pairs with rational entries.
    """
    poly = ppl.C_Polyhedron(dim, "universe")
    for a, b in ineqs:
        a, c = _int_row(a, b)
        poly.add_constraint(_expr(a, c) >= 0)
    for a, b in eqs:
        a, c = _int_row(a, b)
        poly.add_constraint(_expr(a, c) == 0)
    return poly


def _ppl_from_generators(rays, lines, dim):
    poly = ppl.C_Polyhedron(dim, "empty")
    poly.add_generator(ppl.point())
    for r in rays:
        if not is_zero(r):
            poly.add_generator(ppl.ray(_expr(primitive(r))))
    for l in lines:
        if not is_zero(l):
            poly.add_generator(ppl.line(_expr(primitive(l))))
    return poly


def _cone_generators(poly, dim):
    """Minimal ``(rays, lineality)`` of a ppl cone as primitive int tuples"""
    rays, lin = [], []
    for g in poly.minimized_generators():
        if g.is_ray():
            rays += [_padded(g.coefficients(), dim)]
        elif g.is_line():
            lin += [_padded(g.coefficients(), dim)]
    return sorted(set(rays)), lin


def _cone_constraints(poly, dim):
    """Minimal ``(facets, equations)`` of a ppl cone"""
    facets, eqs = [], []
    for c in poly.minimized_constraints():
        normal = _padded(c.coefficients(), dim)
        if is_zero(normal):
            continue
        if c.is_equality():
            eqs += [normal]
        else:
            facets += [normal]
    return sorted(set(facets)), eqs


class PolyCone(PolyConeBase):
    """
    A rational polyhedral cone in Q^n

    Parameters
    ----------
    rays, lineality : lists of int tuples
        Minimal generators of the pointed part, and a lineality basis
    facets, equations : lists of int tuples
        Minimal inequality normals (h.x >= 0) and equation normals (h.x = 0)
    dim : int
        Ambient dimension

    """
    def __init__(self, rays, lineality, facets, equations, dim):
        self.rays = [tuple(r) for r in rays]
        self.lineality = [tuple(l) for l in lineality]
        self.facets = [tuple(f) for f in facets]
        self.equations = [tuple(e) for e in equations]
        self.ambient_dim = dim
        self.meta = {}
        self._key = None

    @property
    def generators(self):
        return self.rays + self.lineality + [tuple(-x for x in l)
                                             for l in self.lineality]

    @property
    def facet_normals(self):
        return self.facets + self.equations + [tuple(-x for x in e)
                                               for e in self.equations]

    @property
    def dim(self):
        return rank(self.rays + self.lineality) if self.rays or \
            self.lineality else 0

    @property
    def is_pointed(self):
        return len(self.lineality) == 0

    @property
    def is_full_dimensional(self):
        return len(self.equations) == 0

    def contains(self, v):
        return all(_fdot(f, v) >= 0 for f in self.facets) and \
            all(_fdot(e, v) == 0 for e in self.equations)

    def interior_contains(self, v):
        """True if v lies in the relative interior"""
        return all(_fdot(f, v) > 0 for f in self.facets) and \
            all(_fdot(e, v) == 0 for e in self.equations)

    def contains_cone(self, other):
        return all(self.contains(g) for g in other.generators)

    def intersection(self, other):
        return cone_from_inequalities(self.facets + other.facets,
                                      self.equations + other.equations,
                                      self.ambient_dim)

    def dual(self):
        return cone_dual(self)

    def relative_interior_point(self):
        from .rational import vsum
        return vsum([tuple(Fraction(x) for x in r) for r in self.rays],
                    self.ambient_dim)

    @property
    def key(self):
        """Canonical hashable form independent of the chosen bases"""
        if self._key is None:
            if self.lineality:
                rref, pivots = sympy.Matrix(self.lineality).rref()
                basis = [tuple(Fraction(int(x.p), int(x.q))
                               for x in rref.row(i))
                         for i in range(len(pivots))]
            else:
                basis, pivots = [], ()
            reduced = []
            for r in self.rays:
                r = tuple(Fraction(x) for x in r)
                for b, p in zip(basis, pivots):
                    r = vsub(r, vscale(r[p], b))
                reduced += [primitive(r)]
            self._key = (tuple(tuple(primitive(b)) for b in basis),
                         tuple(sorted(set(reduced))))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PolyCone):
            return False
        return self.ambient_dim == other.ambient_dim and \
            self.contains_cone(other) and other.contains_cone(self)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "PolyCone(rays=[{}], lineality=[{}])".format(
            ", ".join(vec_str(r) for r in self.rays),
            ", ".join(vec_str(l) for l in self.lineality))


def _cone_from_ppl(poly, dim):
    rays, lin = _cone_generators(poly, dim)
    facets, eqs = _cone_constraints(poly, dim)
    logger.debug("cone with %d rays, %d lines, %d facets", len(rays), len(lin),
                 len(facets))
    return PolyCone(rays, lin, facets, eqs, dim)


def cone_from_generators(rays, lineality=(), dim=None):
    """
    Build a ``PolyCone`` from (possibly redundant) generators

    Raises
    ------
    ValueError
        If the generators have inconsistent dimensions

    """
    gens = [tuple(r) for r in rays] + [tuple(l) for l in lineality]
    if dim is None:
        if not gens:
            raise ValueError("Ambient dimension needed for an empty generator"
                             " list")
        dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise ValueError("Generators must all have dimension {}: {}"
                         "".format(dim, gens))
    poly = _ppl_from_generators(rays, lineality, dim)
    return _cone_from_ppl(poly, dim)


def cone_from_inequalities(facets, equations=(), dim=None):
    """Build a ``PolyCone`` from {h.x >= 0} and {e.x = 0}"""
    normals = [tuple(f) for f in facets] + [tuple(e) for e in equations]
    if dim is None:
        if not normals:
            raise ValueError("Ambient dimension needed for an empty list")
        dim = len(normals[0])
    if any(len(h) != dim for h in normals):
        raise ValueError("Normals must all have dimension {}".format(dim))
    poly = _ppl_from_constraints([(f, 0) for f in facets],
                                 [(e, 0) for e in equations], dim)
    return _cone_from_ppl(poly, dim)


def cone_dual(cone):
    """
    The dual cone {m : <m, x> >= 0 for all x in cone}
    """
    dual = PolyCone(cone.facets, cone.equations, cone.rays, cone.lineality,
                    cone.ambient_dim)
    dual.meta["dual_of"] = cone.key
    return dual


class Polyhedron:
    """
    A rational polyhedron {x : a.x >= b for (a, b) in inequalities,
    a.x = b for (a, b) in equalities}

    The rows are kept as given for the exact simplex. Vertices, recession
    rays and lineality come from the minimised ``ppl`` generators.
    """
    def __init__(self, inequalities=(), equalities=(), dim=None):
        self.inequalities = [(tuple(Fraction(x) for x in a), Fraction(b))
                             for a, b in inequalities]
        self.equalities = [(tuple(Fraction(x) for x in a), Fraction(b))
                           for a, b in equalities]
        if dim is None:
            rows = self.inequalities + self.equalities
            if not rows:
                raise ValueError("Ambient dimension needed for an empty "
                                 "polyhedron description")
            dim = len(rows[0][0])
        self.ambient_dim = dim
        self.meta = {}
        self._ppl = None
        self._generators = None

    @classmethod
    def from_ppl(cls, poly):
        """Reads the minimised constraints of a ``ppl.C_Polyhedron``"""
        dim = poly.space_dimension()
        ineqs, eqs = [], []
        for c in poly.minimized_constraints():
            a = _padded(c.coefficients(), dim)
            b = -Fraction(int(c.inhomogeneous_term()))
            if c.is_equality():
                eqs += [(a, b)]
            else:
                ineqs += [(a, b)]
        out = cls(ineqs, eqs, dim)
        out._ppl = poly
        return out

    @property
    def ppl(self):
        if self._ppl is None:
            self._ppl = _ppl_from_constraints(self.inequalities,
                                              self.equalities,
                                              self.ambient_dim)
        return self._ppl

    def _split_generators(self):
        if self._generators is None:
            n = self.ambient_dim
            pts, rays, lin = [], [], []
            if not self.ppl.is_empty():
                for g in self.ppl.minimized_generators():
                    coeffs = _padded(g.coefficients(), n)
                    if g.is_point():
                        div = int(g.divisor())
                        pts += [tuple(Fraction(x, div) for x in coeffs)]
                    elif g.is_ray():
                        rays += [coeffs]
                    elif g.is_line():
                        lin += [coeffs]
            self._generators = (sorted(set(pts)), sorted(set(rays)), lin)
        return self._generators

    @property
    def vertices(self):
        return self._split_generators()[0]

    @property
    def recession_rays(self):
        return self._split_generators()[1]

    @property
    def lineality(self):
        return self._split_generators()[2]

    def is_empty(self):
        return self.ppl.is_empty()

    def is_bounded(self):
        return not self.is_empty() and self.ppl.is_bounded()

    @property
    def dim(self):
        """Affine dimension, -1 if empty"""
        if self.is_empty():
            return -1
        return int(self.ppl.affine_dimension())

    def contains(self, x):
        return all(dot(a, x) >= b for a, b in self.inequalities) and \
            all(dot(a, x) == b for a, b in self.equalities)

    def intersection(self, other):
        return Polyhedron(self.inequalities + other.inequalities,
                          self.equalities + other.equalities,
                          self.ambient_dim)

    def with_constraints(self, inequalities=(), equalities=()):
        return Polyhedron(self.inequalities + list(inequalities),
                          self.equalities + list(equalities),
                          self.ambient_dim)

    def __repr__(self):
        return "Polyhedron({} inequalities, {} equalities, dim={})".format(
            len(self.inequalities), len(self.equalities), self.ambient_dim)
