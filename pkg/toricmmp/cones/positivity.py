"""
Bigness, Kodaira decompositions and pseudoeffectivity
"""
from fractions import Fraction

from ..exactla.rational import qvec
from ..exactla.lp import lp_solve
from ..exactla.polycone import Polyhedron
from ..exactla.polycone_utils import relative_interior_point
from ..toric.divisor import TDivisor
from ..toric.sections import section_polyhedron
from .numerical import NumSpace
from .mori import ample_divisor, is_ample


def _chart_polyhedra(divisor, p):
    """Section polyhedra over each maximal cone of the base"""
    if p.base.lattice_rank == 0 or len(p.base.cones) == 1:
        return [section_polyhedron(divisor)]
    fan = divisor.fan
    out = []
    for tau in p.base.cones:
        base_cone = p.base.polycone(tau)
        rays = [i for i, u in enumerate(fan.rays)
                if base_cone.contains(p.base_map.apply(u))]
        ineqs = [(qvec(fan.rays[i]), -divisor.coeffs[i]) for i in rays]
        out += [Polyhedron(ineqs, dim=fan.lattice_rank)]
    return out


def is_big(divisor, p):
    """Big over the base: every chart section polyhedron is full-dimensional"""
    n = divisor.fan.lattice_rank
    return all(poly.dim == n for poly in _chart_polyhedra(divisor, p))


def _base_ample_pullback(p):
    from ..cones.mori import ample_divisor as base_ample
    from ..toric.pair import Pair
    hz = base_ample(Pair(p.base))
    hz = hz * hz.cartier_index()
    return p.base_map.pullback_divisor(hz)


def kodaira_decompose(divisor, p, max_twist=16):
    """
    D ~_Q A + E with A ample over the base and E effective

    An ample D is returned as (D, 0). Otherwise an interior point m0 of P_D
    gives a strictly positive E0 = D + div(m0), from which a small multiple
    of an ample H is split off.

    Returns
    -------
    (A, E, m0) or None
        None iff D is not big. Over a non-affine base D is first twisted by
        a pullback from the base, stored in E.meta["base_twist"]

    """
    fan = divisor.fan
    if not is_big(divisor, p):
        return None
    if is_ample(divisor, p):
        return divisor, TDivisor.zero(fan), tuple([Fraction(0)] *
                                                   fan.lattice_rank)
    shifted = divisor
    twist = TDivisor.zero(fan)
    if p.is_relative and len(p.base.cones) > 1:
        # over a non-affine base add pullbacks of an ample base divisor
        hz = _base_ample_pullback(p)
        for _ in range(max_twist):
            if section_polyhedron(shifted).dim == fan.lattice_rank:
                break
            shifted, twist = shifted + hz, twist + hz
    poly = section_polyhedron(shifted)
    if poly.dim != fan.lattice_rank:
        return None
    m0 = relative_interior_point(poly)
    e0 = shifted + TDivisor.principal(fan, m0)
    h = ample_divisor(p)
    eps = min(e0.coeffs[i] / h.coeffs[i] for i in range(fan.n_rays)
              if h.coeffs[i] > 0) / 2
    ample = eps * h
    effective = e0 - ample
    # D + twist ~ A + E, the twist being pulled back from the base
    effective.meta["base_twist"] = twist
    return ample, effective, m0


def is_pseudoeffective(divisor, p, ns=None):
    """
    Class of D in the cone spanned by the classes of the prime divisors
    """
    ns = NumSpace(p) if ns is None else ns
    y = ns.divisor_to_class(divisor)
    if ns.rank == 0:
        return True
    fan = divisor.fan
    primes = [ns.divisor_to_class(TDivisor.prime(fan, i))
              for i in range(fan.n_rays)]
    # lambda >= 0 with sum lambda_i class(D_i) = y
    eqs = [([cls[j] for cls in primes], y[j]) for j in range(ns.rank)]
    res = lp_solve([0] * fan.n_rays, [], eqs, nonneg=True)
    return res.is_optimal
