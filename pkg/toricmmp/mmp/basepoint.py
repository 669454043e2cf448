"""
Basepoint-freeness of nef divisors H with aH - (K + Delta) ample
"""
import logging
from fractions import Fraction

from ..exactla.rational import dot, qvec
from ..cones.numerical import NumSpace, intersection_number
from ..cones.mori import is_nef, negative_curve

logger = logging.getLogger(__name__)


def _ample_shift(p, divisor, ns):
    """Least a with aH - (K+Delta) ample is any a > returned bound"""
    kd = p.log_canonical
    bound = None
    for c in ns.curves:
        hc = intersection_number(divisor, c)
        kc = intersection_number(kd, c)
        if hc > 0:
            t = kc / hc
            bound = t if bound is None else max(bound, t)
        elif kc >= 0:
            raise ValueError("aH - (K + Delta) is not ample for any a: fails "
                             "on {}".format(c))
    return Fraction(0) if bound is None else bound


def basepoint_free_check(p, divisor):
    """
    Find m0 with |mH| basepoint free for m0 | m

    Parameters
    ----------
    p : Pair
        klt pair
    divisor : TDivisor
        H, Q-Cartier

    Returns
    -------
    dict
        ``m0`` (None when H is not nef), ``generators`` (cone -> m_sigma,
        the section generating m0*H on U_sigma), ``counterexample`` (a curve
        with H.C < 0) and ``a`` (a value with aH - (K+Delta) ample)

    Raises
    ------
    ValueError
        If the pair is not klt or no a makes aH - (K+Delta) ample

    """
    if any(b >= 1 for b in p.boundary.coeffs):
        raise ValueError("Basepoint-freeness needs a klt pair")
    ns = NumSpace(p)
    bad = negative_curve(divisor, p, ns)
    if bad is not None:
        return {"m0": None, "generators": {}, "counterexample": bad,
                "a": None}
    a = _ample_shift(p, divisor, ns) + 1
    m0 = divisor.cartier_index()
    mh = m0 * divisor
    data = mh.cartier_data()
    fan = p.fan
    gens = {}
    for cone in fan.cones:
        m = data[cone]
        # m_sigma must be a section of O(m0 H)
        if any(dot(m, qvec(u)) < -c for u, c in zip(fan.rays, mh.coeffs)):
            raise RuntimeError("Nef divisor {} is not generated on {}"
                               "".format(mh, cone))
        gens[cone] = m
    logger.debug("|%d H| is basepoint free", m0)
    return {"m0": m0, "generators": gens, "counterexample": None, "a": a}


def is_semiample(divisor, p, cross_check=False):
    """
    Semiample iff nef on a toric variety

    With ``cross_check`` the asymptotic orders along the test valuations
    are compared with nefness, for absolute pairs with |D|_Q nonempty.

    Raises
    ------
    RuntimeError
        If the cross-check disagrees

    """
    nef = is_nef(divisor, p)
    if cross_check and not p.is_relative:
        from ..chambers.orders import asymptotic_order, valuation_family
        orders = [asymptotic_order(v, divisor, p)
                  for v in valuation_family(p.fan)]
        if all(o is not None for o in orders):
            stable = all(o == 0 for o in orders)
            if stable != nef:
                raise RuntimeError("Nefness {} disagrees with asymptotic "
                                   "orders {}".format(nef, orders))
    return nef
