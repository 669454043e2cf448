"""
Fans: the combinatorial model of a toric variety
"""
import logging
from fractions import Fraction

from ..base_classes import FanBase
from ..exactla.rational import primitive, is_primitive, int_vec
from ..exactla.linalg import rank, lattice_index
from ..exactla.polycone import cone_from_generators
from ..exactla.polycone_utils import cone_volume
from . import fan_utils as fu

logger = logging.getLogger(__name__)


class Fan(FanBase):
    """
    A rational polyhedral fan in N = Z^n

    Parameters
    ----------
    rays : list of int tuples
        Ray generators. They should be primitive; ``validate`` reports the
        ones that are not.
    cones : list of index iterables
        Cones as sets of ray indices. Only the maximal ones are kept. Rays
        not used by any cone become one-dimensional cones.
    lattice_rank : int, optional
        Rank of N. Needed when ``rays`` is empty.

    Examples
    --------
    The projective plane::

        >>> p2 = Fan([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
        >>> p2.is_complete()
        True

    """
    def __init__(self, rays, cones, lattice_rank=None, **kwargs):
        self.rays = [int_vec(r) for r in rays]
        if lattice_rank is None:
            if not self.rays:
                raise ValueError("lattice_rank is needed for a fan without "
                                 "rays")
            lattice_rank = len(self.rays[0])
        self.lattice_rank = int(lattice_rank)
        for i, r in enumerate(self.rays):
            if len(r) != self.lattice_rank:
                raise ValueError("Ray {} {} does not have dimension {}"
                                 "".format(i, r, self.lattice_rank))

        n = len(self.rays)
        cones = {tuple(sorted(set(int(i) for i in c))) for c in cones}
        for c in cones:
            if any(not 0 <= i < n for i in c):
                raise ValueError("Cone {} refers to a missing ray".format(c))
        maximal = [c for c in cones if not any(set(c) < set(o)
                                                for o in cones)]
        used = set(i for c in maximal for i in c)
        maximal += [(i,) for i in range(n) if i not in used]
        self.cones = sorted(maximal) if maximal else [()]

        self.meta = {"name": kwargs.get("name", "<unnamed>")}
        self.meta.update(kwargs)
        self._polycones = {}
        self._faces = None

    @classmethod
    def point(cls):
        """The fan of a point: rank 0, one zero cone"""
        return cls([], [()], lattice_rank=0, name="point")

    @property
    def n_rays(self):
        return len(self.rays)

    @property
    def dim(self):
        return max(self.polycone(c).dim for c in self.cones)

    def polycone(self, cone):
        cone = tuple(sorted(cone))
        if cone not in self._polycones:
            self._polycones[cone] = cone_from_generators(
                [self.rays[i] for i in cone], (), self.lattice_rank)
        return self._polycones[cone]

    def cone_faces(self, cone, codim=None):
        return fu.cone_faces(self.rays, cone, self.polycone(cone), codim)

    def all_cones(self):
        """Every cone of the fan (faces included) as sorted index tuples"""
        if self._faces is None:
            faces = set()
            for c in self.cones:
                faces.update(self.cone_faces(c))
            self._faces = sorted(faces, key=lambda c: (len(c), c))
        return self._faces

    def cones_of_dim(self, d):
        return [c for c in self.all_cones() if self.polycone(c).dim == d]

    def walls(self):
        """
        Interior walls: codimension-one cones shared by two maximal cones

        Returns
        -------
        list of (wall, (cone1, cone2))

        """
        owners = {}
        for c in self.cones:
            if self.polycone(c).dim != self.lattice_rank:
                continue
            for facet in self.cone_faces(c, codim=1):
                owners.setdefault(facet, []).append(c)
        return sorted((w, tuple(sorted(cs))) for w, cs in owners.items()
                      if len(cs) == 2)

    def boundary_facets(self):
        owners = {}
        for c in self.cones:
            for facet in self.cone_faces(c, codim=1):
                owners.setdefault(facet, []).append(c)
        return sorted(w for w, cs in owners.items() if len(cs) == 1)

    def is_complete(self):
        if self.lattice_rank == 0:
            return True
        if any(self.polycone(c).dim != self.lattice_rank for c in self.cones):
            return False
        return len(self.boundary_facets()) == 0

    def is_simplicial(self):
        return all(len(c) == self.polycone(c).dim for c in self.cones)

    def is_q_factorial(self):
        return self.is_simplicial()

    def multiplicity(self, cone):
        """Index of the lattice spanned by the rays of a simplicial cone"""
        return lattice_index([self.rays[i] for i in cone], self.lattice_rank)

    def is_smooth(self):
        return self.is_simplicial() and \
            all(self.multiplicity(c) == 1 for c in self.cones)

    def ray_index(self, v):
        try:
            v = int_vec(v)
        except ValueError:
            return None
        return self.rays.index(v) if v in self.rays else None

    def minimal_cone_containing(self, v):
        """The smallest cone containing v, None outside the support"""
        for c in self.all_cones():
            if self.polycone(c).contains(v):
                return c
        return None

    def maximal_cone_containing(self, v):
        for c in self.cones:
            if self.polycone(c).contains(v):
                return c
        return None

    def contains(self, v):
        return self.maximal_cone_containing(v) is not None

    def covers_cone(self, cone):
        """
        True if the ``PolyCone`` lies in the support of the fan

        The cone is cut into its intersections with the cones of the fan. A
        piece is counted at the smallest fan cone holding its relative
        interior, so the pieces never overlap and the cone is covered exactly
        when their volumes add up to its own.
        """
        d = cone.dim
        if d == 0:
            return True
        covered = Fraction(0)
        for c in self.all_cones():
            piece = cone.intersection(self.polycone(c))
            if piece.dim != d:
                continue
            if self.minimal_cone_containing(
                    piece.relative_interior_point()) != c:
                continue
            covered += cone_volume(piece)
        return covered == cone_volume(cone)

    def has_same_support(self, other):
        """True if both fans cover the same subset of N_Q"""
        if self.lattice_rank != other.lattice_rank:
            return False
        return all(other.covers_cone(self.polycone(c)) for c in self.cones) \
            and all(self.covers_cone(other.polycone(c)) for c in other.cones)

    def canonical_form(self):
        """Ray-order independent form: sorted primitive ray sets of cones"""
        return (self.lattice_rank,
                tuple(sorted(tuple(sorted(primitive(self.rays[i]) for i in c))
                             for c in self.cones)))

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return False
        return self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def validate(self):
        """
        Check the fan axioms

        Returns
        -------
        dict
            ``simplicial``, ``complete`` flags and an ``errors`` list, empty
            iff the axioms hold

        """
        errors = []
        for i, r in enumerate(self.rays):
            if not is_primitive(r) or not any(r):
                errors += ["ray {} {} is not primitive".format(i, r)]
        for c in self.cones:
            if self.polycone(c).lineality:
                errors += ["cone {} is not strongly convex".format(c)]
        for k, c1 in enumerate(self.cones):
            for c2 in self.cones[k + 1:]:
                common = sorted(set(c1) & set(c2))
                p1, p2 = self.polycone(c1), self.polycone(c2)
                meet = p1.intersection(p2)
                spanned = cone_from_generators([self.rays[i] for i in common],
                                               (), self.lattice_rank)
                sub = [self.rays[i] for i in common]
                if meet != spanned or not fu.is_face(p1, sub) or \
                        not fu.is_face(p2, sub):
                    errors += ["cones {} and {} do not meet in a common face"
                               "".format(c1, c2)]
        return {"simplicial": self.is_simplicial(),
                "complete": self.is_complete(),
                "errors": errors}

    def star_subdivision(self, v):
        """
        Star subdivision at a primitive vector v

        Returns
        -------
        fan : Fan
        f : LatticeMap
            The identity of N, from the new fan to this one

        Raises
        ------
        ValueError
            If v is already a ray, not primitive or outside the support

        """
        from .lattice_map import LatticeMap
        v = int_vec(v)
        if not is_primitive(v) or not any(v):
            raise ValueError("{} is not a primitive vector".format(v))
        if v in self.rays:
            raise ValueError("{} is already a ray of the fan".format(v))
        if not self.contains(v):
            raise ValueError("{} lies outside the support of the fan"
                             "".format(v))
        new = len(self.rays)
        cones = []
        for c in self.cones:
            if self.polycone(c).contains(v):
                for facet in self.cone_faces(c, codim=1):
                    if not self.polycone(facet).contains(v):
                        cones += [facet + (new,)]
            else:
                cones += [c]
        fan = Fan(self.rays + [v], cones, self.lattice_rank,
                  name="{}*{}".format(self.meta["name"], v))
        logger.debug("Star subdivision at %s: %d -> %d cones", v,
                     len(self.cones), len(fan.cones))
        return fan, LatticeMap.identity(fan, self)

    def q_factorialize(self):
        """
        Small simplicial refinement on the existing rays

        Returns ``(fan, f)`` with f the identity of N. An already simplicial
        fan is returned unchanged.
        """
        from .lattice_map import LatticeMap
        if self.is_simplicial():
            return self, LatticeMap.identity(self, self)
        cones = fu.triangulate_cones(self.rays, self.cones)
        fan = Fan(self.rays, cones, self.lattice_rank,
                  name="{}-qfac".format(self.meta["name"]))
        return fan, LatticeMap.identity(fan, self)

    def __repr__(self):
        return "Fan(rank={}, rays={}, cones={})".format(
            self.lattice_rank, self.rays, self.cones)
