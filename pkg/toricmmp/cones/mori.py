"""
Mori and nef cones, Kleiman tests, supporting faces and the cone theorem
"""
import logging
from fractions import Fraction

from ..exceptions import NotNefError
from ..exactla.rational import dot, qvec
from ..exactla.lp import lp_solve
from ..exactla.polycone import (cone_from_generators, cone_from_inequalities,
                                cone_dual)
from .numerical import (NumSpace, contracted_walls, intersection_number,
                        cartier_degree)

logger = logging.getLogger(__name__)


def _num_space(p, ns):
    return NumSpace(p) if ns is None else ns


def mori_cone(p, ns=None):
    """NE(X/Z) as the cone over the contracted curve classes in N_1"""
    ns = _num_space(p, ns)
    cone = cone_from_generators(ns.mori_generators(), (), ns.rank)
    cone.meta["num_space"] = ns
    return cone


def nef_cone(p, ns=None):
    """Nef(X/Z), the dual of the Mori cone under the pairing"""
    ns = _num_space(p, ns)
    cone = cone_dual(mori_cone(p, ns))
    cone.meta["num_space"] = ns
    return cone


def is_nef(divisor, p, ns=None):
    ns = _num_space(p, ns)
    return all(intersection_number(divisor, c) >= 0 for c in ns.curves)


def is_ample(divisor, p, ns=None):
    """Kleiman: strictly positive on every contracted curve"""
    ns = _num_space(p, ns)
    return all(intersection_number(divisor, c) > 0 for c in ns.curves)


def negative_curve(divisor, p, ns=None):
    """A contracted curve with (D.C) < 0, None if D is nef"""
    ns = _num_space(p, ns)
    for c in ns.curves:
        if intersection_number(divisor, c) < 0:
            return c
    return None


def is_ample_by_convexity(divisor, p):
    """
    Strict convexity of the support function across contracted walls

    For adjacent cones sigma, sigma' the functional m_sigma must satisfy
    <m_sigma, u> > -a_u for every ray u of sigma' off sigma. Needs no curve
    classes and works on non-simplicial fans.
    """
    data = divisor.cartier_data()
    fan = p.fan
    for wall, (s1, s2) in contracted_walls(p):
        for a, b in ((s1, s2), (s2, s1)):
            for k in set(b) - set(a):
                if dot(data[a], qvec(fan.rays[k])) <= -divisor.coeffs[k]:
                    return False
    return True


def is_projective(p):
    """
    Existence of a strictly convex support function over the base

    Solves an LP in (a_rho, m_sigma): <m_sigma, u_rho> + a_rho = 0 on sigma
    and <m_sigma, u_rho> + a_rho >= 1 across each contracted wall.

    Returns
    -------
    ok : bool
    divisor : TDivisor or None
        A relatively ample divisor when ``ok``

    """
    from ..toric.divisor import TDivisor
    fan = p.fan
    n, nr = fan.lattice_rank, fan.n_rays
    cones = list(fan.cones)
    nvar = nr + n * len(cones)

    def row(cone_idx, ray):
        r = [Fraction(0)] * nvar
        r[ray] = Fraction(1)
        for k in range(n):
            r[nr + n * cone_idx + k] = Fraction(fan.rays[ray][k])
        return r

    eqs = [(row(ci, rho), 0) for ci, c in enumerate(cones) for rho in c]
    ineqs = []
    index = {c: ci for ci, c in enumerate(cones)}
    for wall, (s1, s2) in contracted_walls(p):
        for a, b in ((s1, s2), (s2, s1)):
            for k in set(b) - set(a):
                ineqs += [(row(index[a], k), 1)]
    res = lp_solve([0] * nvar, ineqs, eqs)
    if not res.is_optimal:
        return False, None
    divisor = TDivisor(fan, res.witness[:nr], name="H")
    return True, divisor


def ample_divisor(p):
    """
    A relatively ample divisor, raising ValueError if there is none
    """
    ok, divisor = is_projective(p)
    if not ok:
        raise ValueError("{} is not projective over its base".format(p.fan))
    return divisor


def supporting_data(divisor, p, ns=None):
    """
    The extremal face of NE(X/Z) on which a nef, non-ample D vanishes

    Returns
    -------
    dict
        ``hyperplane`` (class of D), ``face`` (PolyCone in N_1),
        ``curves`` (contracted curves in the face) and ``is_ray``

    Raises
    ------
    NotNefError
        If D is not nef, carrying a negative curve
    ValueError
        If D is ample

    """
    ns = _num_space(p, ns)
    bad = negative_curve(divisor, p, ns)
    if bad is not None:
        raise NotNefError("{} is negative on {}".format(divisor, bad),
                          curve=bad)
    if is_ample(divisor, p, ns):
        raise ValueError("{} is ample: no supporting hyperplane"
                         "".format(divisor))
    on_face = [c for c in ns.curves if intersection_number(divisor, c) == 0]
    gens = [ns.curve_coordinates(c) for c in on_face]
    face = cone_from_generators(gens, (), ns.rank)
    return {"hyperplane": ns.divisor_to_class(divisor), "face": face,
            "curves": on_face, "is_ray": face.dim == 1}


def max_fiber_dimension(p):
    """
    b = max over cones sigma of (n - dim sigma) - (n_Z - dim tau_Z)

    with tau_Z the smallest base cone containing the image of relint sigma.
    """
    fan, base = p.fan, p.base
    best = 0
    for c in fan.all_cones():
        tau = p.base_map.image_cone(c)
        tau_dim = base.polycone(tau).dim if tau else 0
        fib = (fan.lattice_rank - fan.polycone(c).dim) - \
            (base.lattice_rank - tau_dim)
        best = max(best, fib)
    return best


def cone_theorem_decomposition(p, ample=None, ns=None):
    """
    NE(X/Z) = NE_{K+Delta >= 0} + sum of (K+Delta)-negative extremal rays

    Each negative ray carries the contracted curve of least
    -(K+Delta)-degree on it, and the reduced denominator v of
    (A.C) / (a (K+Delta).C) for a Cartier ample A, where a is the Cartier
    index of K + Delta. The bound is v <= a(b+1) with b the maximal fiber
    dimension.

    Raises
    ------
    NotQCartierError
        If K + Delta is not Q-Cartier
    ValueError
        If the pair is not klt

    """
    ns = _num_space(p, ns)
    kd = p.log_canonical
    kd.cartier_data()
    if any(a >= 1 for a in p.boundary.coeffs):
        raise ValueError("Cone theorem needs a klt pair")
    ne = mori_cone(p, ns)
    yk = ns.divisor_to_class(kd)
    if ns.rank == 0:
        return {"non_negative_part": ne, "negative_rays": [], "mori_cone": ne}
    nonneg = cone_from_inequalities(ne.facets + [yk], ne.equations, ns.rank)

    if ample is None:
        ample = ample_divisor(p)
    ample = ample * ample.cartier_index()
    a = kd.cartier_index()
    b = max_fiber_dimension(p)
    bound = a * (b + 1)

    rays = []
    for ray in ne.rays:
        if dot(yk, ray) >= 0:
            continue
        on_ray = []
        for c in ns.curves:
            x = ns.curve_coordinates(c)
            if cone_from_generators([ray], (), ns.rank).contains(x) and any(x):
                on_ray += [(-intersection_number(kd, c), c)]
        length, curve = min(on_ray, key=lambda t: (t[0], t[1].wall))
        ratio = intersection_number(ample, curve) / \
            (a * intersection_number(kd, curve))
        rays += [{"ray": ray, "curve": curve, "length": length,
                  "ratio": ratio, "denominator": ratio.denominator,
                  "bound": bound, "ok": ratio.denominator <= bound}]
    return {"non_negative_part": nonneg, "negative_rays": rays,
            "mori_cone": ne}
