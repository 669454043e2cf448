"""
Nef thresholds, extremal ray selection and the rationality certificate
"""
import logging
import warnings
from fractions import Fraction

from ..utils import from_currsys
from ..exactla.rational import primitive
from ..cones.numerical import NumSpace, intersection_number
from ..cones.mori import is_nef, max_fiber_dimension, mori_cone

logger = logging.getLogger(__name__)


def nef_threshold(p, scaling, rescale=None, ns=None, upper=1):
    """
    lambda = min{t >= 0 : K + Delta + tA nef over the base}

    Computed as the maximum over contracted curves C with (A.C) > 0 of
    -(K+Delta).C / (A.C), clamped at 0.

    Parameters
    ----------
    p : Pair
    scaling : TDivisor
        The scaling divisor A
    rescale : bool, optional
        Accept K + Delta + upper*A not nef and only warn. Default
        ``!MMP.rescale_scaling_divisor``.
    upper : Fraction, optional
        K + Delta + upper*A is expected to be nef. Default 1.

    Raises
    ------
    ValueError
        If K + Delta + upper*A is not nef and ``rescale`` is False, or if
        no t makes K + Delta + tA nef

    """
    if rescale is None:
        rescale = from_currsys("!MMP.rescale_scaling_divisor")
    ns = NumSpace(p) if ns is None else ns
    kd = p.log_canonical
    kd.cartier_data()
    scaling.cartier_data()
    if not is_nef(kd + Fraction(upper) * scaling, p, ns):
        if not rescale:
            raise ValueError("K + Delta + {}A is not nef, rescale the scaling "
                             "divisor first".format(upper))
        warnings.warn("K + Delta + A is not nef; computing the threshold of "
                      "the rescaled divisor")
    lam = Fraction(0)
    for c in ns.curves:
        kc = intersection_number(kd, c)
        ac = intersection_number(scaling, c)
        if ac > 0:
            lam = max(lam, -kc / ac)
        elif kc < 0:
            raise ValueError("K + Delta + tA is not nef for any t: negative on"
                             " {}".format(c))
    logger.debug("Nef threshold %s on %s", lam, p.fan.meta["name"])
    return lam


def threshold_face(p, scaling, lam, ns=None):
    """Contracted curves C with (K+Delta+lam A).C = 0 and (K+Delta).C < 0"""
    ns = NumSpace(p) if ns is None else ns
    kd = p.log_canonical
    target = kd + lam * scaling
    return [c for c in ns.curves
            if intersection_number(target, c) == 0 and
            intersection_number(kd, c) < 0]


def select_extremal_ray(p, scaling, lam, ns=None):
    """
    A (K+Delta)-negative curve spanning an extremal ray of NE(X/Z) on which
    K + Delta + lam A vanishes

    Ties are broken by the lexicographically smallest wall.

    Raises
    ------
    ValueError
        If lam is 0 or no curve qualifies

    """
    if lam == 0:
        raise ValueError("Nothing to select at threshold 0")
    rule = from_currsys("!MMP.tie_break")
    if rule != "lexicographic":
        raise ValueError("Unknown tie break rule: {}".format(rule))
    ns = NumSpace(p) if ns is None else ns
    rays = set(mori_cone(p, ns).rays)
    face = [c for c in threshold_face(p, scaling, lam, ns)
            if primitive(ns.curve_coordinates(c)) in rays]
    if not face:
        raise ValueError("No extremal ray attains the threshold {}"
                         "".format(lam))
    return min(face, key=lambda c: (c.wall, c.cones))


def rationality_certificate(p, scaling, lam=None, ns=None):
    """
    Check r/a = u/v with v <= a(b+1) for r = 1/lambda

    a is the Cartier index of K + Delta and b the maximal fiber dimension.
    The statement applies to a Cartier scaling divisor and a non-nef
    K + Delta.

    Returns
    -------
    dict

    """
    ns = NumSpace(p) if ns is None else ns
    if lam is None:
        lam = nef_threshold(p, scaling, ns=ns)
    a = p.log_canonical.cartier_index()
    b = max_fiber_dimension(p)
    bound = a * (b + 1)
    applicable = lam > 0 and scaling.is_cartier()
    out = {"lambda": lam, "a": a, "b": b, "bound": bound,
           "applicable": applicable, "denominator": None, "ok": True}
    if lam > 0:
        r = 1 / Fraction(lam)
        v = (r / a).denominator
        out.update({"r": r, "denominator": v})
        if applicable:
            out["ok"] = v <= bound
    return out
