"""
Small birational maps between fans on the same rays
"""
import logging

from ..exactla.rational import primitive, vec_str
from ..toric.pair import Pair
from ..cones.mori import is_nef
from .orders import asymptotic_order

logger = logging.getLogger(__name__)


def _check_small(g):
    if not g.is_invertible:
        raise ValueError("{} is not birational".format(g))
    back = {primitive(g.apply(u)) for u in g.source.rays}
    if g.exceptional_rays() or back != set(g.target.rays):
        raise ValueError("The map {} -> {} is not small"
                         "".format(g.source, g.target))


def transform_order_invariance(g, v, divisor):
    """
    Compare o_v(D) on the source with o_{g v}(g_* D) on the target

    Both orders share the section polyhedron; they can only differ through
    the multiplicity c_v, which depends on the fan when the center of v lies
    in the exceptional locus of g.

    Returns
    -------
    equal : bool
    values : (Rational, Rational)

    Raises
    ------
    ValueError
        If g is not small

    """
    _check_small(g)
    o1 = asymptotic_order(v, divisor)
    o2 = asymptotic_order(g.apply(v), g.birational_transform(divisor))
    if o1 != o2:
        logger.info("o_v differs across %s at v = %s: %s != %s", g,
                    vec_str(v), o1, o2)
    return o1 == o2, (o1, o2)


def inverse_is_morphism(g, ample, over=None):
    """
    Is g_* A nef on the target, and is then g^-1 a morphism?

    Parameters
    ----------
    g : LatticeMap
        Small map from X to X'
    ample : TDivisor
        Ample on X
    over : Pair, optional
        The target pair. Default is X' over a point.

    Returns
    -------
    nef : bool
    certificate : dict
        ``nef``, ``refines`` (every cone of X' lies in a cone of X) and
        ``fans_equal``

    Raises
    ------
    ValueError
        If g is not small
    NotQCartierError
        If g_* A is not Q-Cartier

    """
    _check_small(g)
    pushed = g.birational_transform(ample)
    pushed.cartier_data()
    over = Pair(g.target) if over is None else over
    nef = is_nef(pushed, over)
    refines = all(
        any(g.source.polycone(s).contains_cone(g.target.polycone(t))
            for s in g.source.cones)
        for t in g.target.cones)
    certificate = {"nef": nef, "refines": refines,
                   "fans_equal": g.source.canonical_form() ==
                   g.target.canonical_form()}
    return nef, certificate
