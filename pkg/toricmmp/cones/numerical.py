"""
Contracted curves, intersection numbers and the spaces N^1(X/Z), N_1(X/Z)

A torus-invariant curve V(tau) sits on an interior wall tau shared by the
maximal cones sigma = tau + u_i and sigma' = tau + u_j. The wall relation

    b_i u_i + b_j u_j + sum_{k in tau} b_k u_k = 0

normalised by b_j = mult(tau) / mult(sigma') gives (D_rho . C) = b_rho.
"""
import logging
from fractions import Fraction

from ..exactla.rational import dot, qvec, rat_str
from ..exactla.linalg import nullspace, solve, independent_rows, rank
from ..exactla.linalg import transpose
from ..exactla.polycone import cone_from_generators, cone_dual

logger = logging.getLogger(__name__)


class CurveClass:
    """
    The class of the torus-invariant curve of a wall

    Parameters
    ----------
    fan : Fan
    wall : tuple of int
    cones : (tuple, tuple)
        The two maximal cones sharing ``wall``
    vector : tuple of Fraction
        (D_rho . C) for every ray rho

    """
    def __init__(self, fan, wall, cones, vector):
        self.fan = fan
        self.wall = tuple(wall)
        self.cones = tuple(cones)
        self.vector = tuple(vector)
        self.meta = {}

    @property
    def off_wall_rays(self):
        return tuple(sorted(set(self.cones[0]) ^ set(self.cones[1])))

    def degree(self, divisor):
        return intersection_number(divisor, self)

    def __eq__(self, other):
        return isinstance(other, CurveClass) and self.wall == other.wall \
            and self.vector == other.vector

    def __hash__(self):
        return hash((self.wall, self.vector))

    def __repr__(self):
        return "CurveClass(wall={}, vector=({}))".format(
            self.wall, ", ".join(rat_str(b) for b in self.vector))


def wall_relation(fan, wall, cones):
    """
    Intersection vector of the curve of a simplicial wall

    Raises
    ------
    ValueError
        If the wall or one of its cones is not simplicial

    """
    n = fan.lattice_rank
    s1, s2 = cones
    if len(wall) != n - 1 or len(s1) != n or len(s2) != n:
        raise ValueError("Wall {} between {} and {} is not simplicial"
                         "".format(wall, s1, s2))
    (i,) = set(s1) - set(wall)
    (j,) = set(s2) - set(wall)
    order = list(wall) + [i, j]
    cols = [fan.rays[k] for k in order]
    kernel = nullspace(transpose(cols), len(order))
    if len(kernel) != 1:
        raise ValueError("Wall {} does not carry a unique relation"
                         "".format(wall))
    rel = kernel[0]
    if rel[-1] < 0:
        rel = tuple(-x for x in rel)
    mult_tau = fan.multiplicity(wall) if wall else 1
    scale = Fraction(mult_tau) / fan.multiplicity(s2) / rel[-1]
    vec = [Fraction(0)] * fan.n_rays
    for k, c in zip(order, rel):
        vec[k] = c * scale
    return tuple(vec)


def contracted_walls(p):
    """
    Interior walls whose curve maps to a point of the base

    V(tau) is contracted iff pi(u) lies in the span of the smallest base
    cone containing pi(relint tau), u being a ray of sigma off the wall.
    Works for non-simplicial fans.
    """
    fan, f = p.fan, p.base_map
    out = []
    for wall, (s1, s2) in fan.walls():
        if p.base.lattice_rank == 0:
            out += [(wall, (s1, s2))]
            continue
        tau_z = f.image_cone(wall)
        span = [p.base.rays[k] for k in tau_z]
        off = [k for k in s1 if k not in wall]
        image = f.apply(fan.rays[off[0]])
        if not any(image):
            out += [(wall, (s1, s2))]
        elif span and rank(span + [image]) == rank(span):
            out += [(wall, (s1, s2))]
    return out


def contracted_curves(p):
    """
    The torus-invariant curves contracted by X -> Z

    Raises
    ------
    ValueError
        If a contracted wall is not simplicial

    """
    curves = []
    for wall, cones in contracted_walls(p):
        vec = wall_relation(p.fan, wall, cones)
        curves += [CurveClass(p.fan, wall, cones, vec)]
    return curves


def intersection_number(divisor, curve):
    """
    (D . C) = sum a_rho b_rho

    Raises
    ------
    NotQCartierError
        If D is not Q-Cartier

    """
    divisor.cartier_data()
    return dot(divisor.coeffs, curve.vector)


def cartier_degree(divisor, curve):
    """(D . C) from Cartier data: b_j <m_sigma - m_sigma', u_j>"""
    data = divisor.cartier_data()
    s1, s2 = curve.cones
    (j,) = set(s2) - set(s1)
    diff = tuple(a - b for a, b in zip(data[s1], data[s2]))
    return curve.vector[j] * dot(diff, qvec(curve.fan.rays[j]))


class NumSpace:
    """
    N^1(X/Z) and N_1(X/Z) in coordinates dual to a basis of curves

    The first linearly independent contracted curves B_1..B_r form the
    basis of N_1. A divisor has class y = (D.B_1, ..., D.B_r) and a curve
    C = sum x_j B_j has coordinates x, so (D.C) = y.x.

    Parameters
    ----------
    p : Pair

    """
    def __init__(self, p, curves=None):
        self.pair = p
        self.fan = p.fan
        self.curves = contracted_curves(p) if curves is None else curves
        vectors = [c.vector for c in self.curves]
        idx = independent_rows(vectors) if vectors else []
        self.basis = [self.curves[i] for i in idx]
        self.rank = len(self.basis)
        self.meta = {"rank_n1": self.rank}

    @property
    def rank_n1(self):
        return self.rank

    def divisor_to_class(self, divisor):
        divisor.cartier_data()
        return tuple(dot(divisor.coeffs, b.vector) for b in self.basis)

    def curve_coordinates(self, curve):
        vec = curve.vector if isinstance(curve, CurveClass) else curve
        if self.rank == 0:
            return tuple()
        cols = transpose([b.vector for b in self.basis])
        x = solve(cols, vec, self.rank)
        if x is None:
            raise ValueError("Curve {} is not in the span of the contracted "
                             "curves".format(curve))
        return x

    def pairing(self, y, x):
        return dot(y, x)

    def pairing_matrix(self):
        """(D_rho . B_j) for every prime divisor and basis curve"""
        return [tuple(b.vector[r] for b in self.basis)
                for r in range(self.fan.n_rays)]

    def mori_generators(self):
        gens = []
        for c in self.curves:
            x = self.curve_coordinates(c)
            if x not in gens:
                gens += [x]
        return gens

    def divisor_from_class(self, y):
        """Some TDivisor whose class is y"""
        from ..toric.divisor import TDivisor
        if self.rank == 0:
            return TDivisor.zero(self.fan)
        rows = [b.vector for b in self.basis]
        a = solve(rows, y, self.fan.n_rays)
        if a is None:
            raise ValueError("{} is not a divisor class".format(y))
        return TDivisor(self.fan, a)

    def __repr__(self):
        return "NumSpace(rank={}, curves={})".format(self.rank,
                                                     len(self.curves))


def build_n1(p):
    return NumSpace(p)
