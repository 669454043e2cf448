"""
Flips of small contractions as bistellar exchanges
"""
import logging

from ..utils import from_currsys
from ..exceptions import FlipError
from ..toric.fan import Fan
from ..toric.pair import Pair
from ..toric.divisor import TDivisor
from ..toric.lattice_map import LatticeMap
from ..toric.fan_utils import ample_cells
from ..cones.numerical import NumSpace, intersection_number
from ..cones.mori import is_ample_by_convexity
from .contraction import FLIP

logger = logging.getLogger(__name__)


class FlipResult:
    """
    X -> Y <- X+ with the flipped pair on X+

    Attributes
    ----------
    source : Pair
    target : Pair
        (X+, Delta+)
    contraction : Contraction
        The small contraction X -> Y
    lattice_map : LatticeMap
        Identity of N from X to X+
    circuits : list of (tuple, tuple)
        (J+, J-) per merged cone

    """
    def __init__(self, source, target, contraction, circuits, **kwargs):
        self.source = source
        self.target = target
        self.contraction = contraction
        self.lattice_map = LatticeMap.identity(source.fan, target.fan)
        self.circuits = circuits
        self.meta = {}
        self.meta.update(kwargs)

    @property
    def small_base(self):
        return self.contraction.target.fan

    def __repr__(self):
        return "FlipResult({} -> {})".format(self.source.fan.cones,
                                             self.target.fan.cones)


def bistellar_exchange(contraction):
    """
    Replace each circuit triangulation T+ by T-

    For the circuit Z = J+ u J- of a flipping curve (J+ the rays with
    positive intersection), the cones of X over Y are L + (Z - {j}) for
    j in J+; the cones of X+ are L + (Z - {j}) for j in J-.

    Returns
    -------
    cones : list of tuple
    circuits : list of (tuple, tuple)

    """
    fan = contraction.source.fan
    in_group = set()
    cones, circuits = [], []
    for group in contraction.groups:
        if len(group) == 1:
            continue
        in_group.update(group)
        group_set = set(group)
        curve = next(c for c in contraction.curves
                     if set(c.cones) <= group_set)
        jplus = tuple(i for i, b in enumerate(curve.vector) if b > 0)
        jminus = tuple(i for i, b in enumerate(curve.vector) if b < 0)
        circuit = set(jplus) | set(jminus)
        links = sorted({tuple(sorted(set(c) - circuit)) for c in group})
        for link in links:
            for j in jminus:
                cones += [tuple(sorted(set(link) | (circuit - {j})))]
        circuits += [(jplus, jminus)]
    cones += [c for c in fan.cones if c not in in_group]
    return sorted(set(cones)), circuits


def flip(p, contraction, verify=None):
    """
    The flip of a small (K+Delta)-negative contraction

    Parameters
    ----------
    p : Pair
    contraction : Contraction
        Of kind ``"Flip"``
    verify : bool, optional
        Check the flip axioms. Default ``!MMP.verify_flip_axioms``.

    Returns
    -------
    FlipResult

    Raises
    ------
    FlipError
        If the contraction is not small, is (K+Delta)-trivial (a flop) or
        (K+Delta)-positive, or if the exchange and the regular subdivision
        disagree

    """
    if verify is None:
        verify = from_currsys("!MMP.verify_flip_axioms")
    if contraction.kind != FLIP:
        raise FlipError("Only small contractions are flipped, got {}"
                        "".format(contraction.kind))
    kd = p.log_canonical
    degrees = {intersection_number(kd, c) for c in contraction.curves}
    if 0 in degrees:
        raise FlipError("K + Delta is trivial on the face: this is a flop")
    if any(d > 0 for d in degrees):
        raise FlipError("K + Delta is positive on the face")

    fan = p.fan
    cones, circuits = bistellar_exchange(contraction)

    heights = kd.coeffs
    regular = [c for c in fan.cones
               if not any(c in g for g in contraction.groups if len(g) > 1)]
    for group, merged in zip(contraction.groups, contraction.merged):
        if len(group) > 1:
            regular += ample_cells(fan.rays, merged, heights)
    if sorted(set(regular)) != cones:
        raise FlipError("Bistellar exchange {} disagrees with the regular "
                        "subdivision {}".format(cones, sorted(set(regular))))

    plus = Fan(fan.rays, cones, fan.lattice_rank,
               name="{}+".format(fan.meta["name"]))
    target = Pair(plus, p.boundary.coeffs, p.base, p.base_map.matrix,
                  name=p.meta["name"])
    out = FlipResult(p, target, contraction, circuits)
    if verify:
        report = check_flip_axioms(p, plus, contraction.target.fan)
        out.meta["axioms"] = report
        if not report["all_passed"]:
            failed = [k for k, v in report.items()
                      if k != "all_passed" and not v["passed"]]
            raise FlipError("Flip axioms fail: {}".format(failed))
    logger.info("Flipped %s: circuits %s", fan.meta["name"], circuits)
    return out


def check_flip_axioms(p, plus_fan, small_fan):
    """
    Check X+ -> Y against the definition of the flip of X -> Y

    Returns
    -------
    dict
        One ``{"passed": bool, "certificate": ...}`` entry per axiom and an
        ``all_passed`` flag

    """
    fan = p.fan
    rays_x = set(fan.rays)
    report = {}

    same = rays_x == set(plus_fan.rays) == set(small_fan.rays)
    report["small"] = {"passed": same,
                       "certificate": sorted(rays_x ^ set(plus_fan.rays))}
    report["not_isomorphism"] = {
        "passed": plus_fan != small_fan,
        "certificate": [c for c in plus_fan.cones
                        if c not in small_fan.cones]}
    report["q_factorial"] = {"passed": plus_fan.is_simplicial(),
                             "certificate": [c for c in plus_fan.cones
                                             if len(c) != plus_fan.
                                             polycone(c).dim]}

    kd_x = dict(zip(fan.rays, p.log_canonical.coeffs))
    coeffs = [kd_x.get(r, 0) for r in plus_fan.rays]
    kd_plus = TDivisor(plus_fan, coeffs)
    q_cartier = kd_plus.is_q_cartier()
    report["q_cartier"] = {"passed": q_cartier, "certificate": None}

    degrees = []
    ample = False
    to_y = LatticeMap.identity(plus_fan, small_fan)
    if q_cartier and same and to_y.is_fan_morphism():
        over_y = Pair(plus_fan, None, small_fan, to_y)
        ns = NumSpace(over_y)
        degrees = [(c.wall, intersection_number(kd_plus, c))
                   for c in ns.curves]
        ample = all(d > 0 for _, d in degrees) and \
            is_ample_by_convexity(kd_plus, over_y)
    report["relatively_ample"] = {"passed": ample, "certificate": degrees}
    report["all_passed"] = all(v["passed"] for v in report.values())
    return report


def negativity_check(h, divisor):
    """
    Negativity lemma for a proper birational toric morphism h: X -> Y

    If -B is h-nef and h_*B is effective, then B is effective.

    Returns
    -------
    bool
        Whether B is effective

    Raises
    ------
    ValueError
        If the hypotheses fail

    """
    if not h.is_invertible:
        raise ValueError("Negativity needs a birational morphism")
    if not h.is_fan_morphism():
        raise ValueError("h is not a morphism of fans")
    over = Pair(h.source, None, h.target, h)
    ns = NumSpace(over)
    for c in ns.curves:
        if intersection_number(-divisor, c) < 0:
            raise ValueError("-B is not h-nef: negative on {}".format(c))
    pushed = h.birational_transform(divisor)
    if not pushed.is_effective():
        raise ValueError("h_*B = {} is not effective".format(pushed))
    return divisor.is_effective()
