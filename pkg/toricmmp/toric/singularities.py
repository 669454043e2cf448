"""
Discrepancies and singularity classes of toric pairs

The log discrepancy function psi of (X, Delta) is linear on each cone with
psi(u_rho) = 1 - coeff_Delta(rho). The discrepancy of the toric valuation v
is psi(v) - 1.
"""
import logging
from fractions import Fraction

from ..exactla.rational import primitive, is_primitive, qvec, vadd, int_vec
from ..exactla.polycone_utils import box_points
from .pair import Pair

logger = logging.getLogger(__name__)

TERMINAL = "terminal"
CANONICAL = "canonical"
KLT = "klt"
LC = "lc"
NONE = "none"


def log_discrepancy(p, v):
    """
    psi(v) for the pair ``p``

    Raises
    ------
    NotQCartierError
        If K + Delta is not Q-Cartier
    ValueError
        If v lies outside the support of the fan

    """
    return p.log_canonical.cartier_data().evaluate(v)


def discrepancy(p, v):
    """
    Discrepancy a(v, X, Delta) = psi(v) - 1

    For a ray generator this is -coeff_Delta(rho).
    """
    v = int_vec(v)
    if not any(v) or not is_primitive(v):
        raise ValueError("Valuations need a nonzero primitive vector: {}"
                         "".format(v))
    return log_discrepancy(p, v) - 1


def discrepancy_by_subdivision(p, v):
    """
    Discrepancy read off the star subdivision at v

    Pulls K + Delta back to the subdivision and compares the coefficient of
    the new ray with K' = -1 on it.
    """
    v = int_vec(v)
    i = p.fan.ray_index(v)
    if i is not None:
        return -p.boundary.coeffs[i]
    fan, f = p.fan.star_subdivision(v)
    pulled = f.pullback_divisor(p.log_canonical)
    return -1 - pulled.coeffs[fan.ray_index(v)]


def _exceptional_candidates(fan):
    """
    Lattice points that minimise psi over the non-ray points of each cone

    These are the nonzero box points of the simplicial cones of a
    Q-factorial refinement, together with sums of two distinct rays.
    """
    qfan, _ = fan.q_factorialize()
    rays = set(fan.rays)
    cands = set()
    for c in qfan.cones:
        gens = [qfan.rays[i] for i in c]
        for b in box_points(gens):
            cands.add(primitive(b))
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                cands.add(primitive(vadd(gens[a], gens[b])))
    return sorted(w for w in cands if w not in rays and any(w))


def singularity_report(p):
    """
    Flags klt, lc, canonical, terminal and the minimal exceptional
    discrepancy with a valuation attaining it

    Returns
    -------
    dict

    """
    p.log_canonical.cartier_data()
    coeffs = p.boundary.coeffs
    klt = all(a < 1 for a in coeffs)
    lc = all(a <= 1 for a in coeffs)
    best, arg = None, None
    for w in _exceptional_candidates(p.fan):
        a = discrepancy(p, w)
        if best is None or a < best or (a == best and w < arg):
            best, arg = a, w
    canonical = klt and (best is None or best >= 0)
    terminal = klt and (best is None or best > 0)
    if terminal:
        cls = TERMINAL
    elif canonical:
        cls = CANONICAL
    elif klt:
        cls = KLT
    elif lc:
        cls = LC
    else:
        cls = NONE
    return {"class": cls, "klt": klt, "lc": lc, "canonical": canonical,
            "terminal": terminal, "min_exceptional_discrepancy": best,
            "minimizer": arg}


def classify_pair(p):
    """
    The strongest of terminal, canonical, klt, lc, none

    Examples
    --------
    ::

        >>> classify_pair(Pair(p2_fan))
        'terminal'

    """
    return singularity_report(p)["class"]


def terminalize(p, max_steps=None):
    """
    Crepant terminal model of a klt Q-factorial pair

    Repeatedly star-subdivides at a valuation of minimal discrepancy a <= 0
    and gives the new ray the coefficient -a.

    Returns
    -------
    pair : Pair
    f : LatticeMap
        From the terminal model to ``p.fan``

    Raises
    ------
    ValueError
        If ``p`` is not klt or not Q-factorial

    """
    from .lattice_map import LatticeMap
    if not p.fan.is_q_factorial():
        raise ValueError("terminalize needs a Q-factorial pair")
    report = singularity_report(p)
    if not report["klt"]:
        raise ValueError("terminalize needs a klt pair, boundary is {}"
                         "".format(p.boundary))
    if max_steps is None:
        max_steps = 100 * max(1, p.fan.n_rays)
    current = p
    for _ in range(max_steps):
        if report["terminal"]:
            f = LatticeMap.identity(current.fan, p.fan)
            return current, f
        v = report["minimizer"]
        a = report["min_exceptional_discrepancy"]
        fan, _ = current.fan.star_subdivision(v)
        coeffs = list(current.boundary.coeffs) + [-a]
        current = Pair(fan, coeffs, current.base, current.base_map.matrix,
                       name=p.meta["name"])
        logger.debug("Terminalize: extracted %s with coefficient %s", v, -a)
        report = singularity_report(current)
    raise RuntimeError("terminalize did not finish in {} steps"
                       "".format(max_steps))
