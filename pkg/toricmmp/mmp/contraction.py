"""
Contraction of a (K+Delta)-negative extremal face

The maximal cones of X joined across contracted walls merge into the cones
of Y. Three shapes occur:

- a merged cone carries lineality: the contraction is of fiber type and Y
  is the quotient fan by the contracted directions,
- exactly one ray stops being extremal: a divisorial contraction,
- no ray disappears: a small contraction, Y is not Q-factorial and a flip
  is needed.
"""
import logging

from ..utils import from_currsys
from ..exceptions import ContractionError
from ..exactla.rational import primitive
from ..exactla.linalg import quotient_map, lattice_section, saturate
from ..exactla.linalg import mat_mul
from ..exactla.polycone import cone_from_generators
from ..toric.fan import Fan
from ..toric.pair import Pair
from ..toric.divisor import TDivisor
from ..toric.lattice_map import LatticeMap
from ..toric.fan_utils import reindex
from ..cones.numerical import NumSpace, intersection_number
from ..cones.mori import is_projective, is_nef

logger = logging.getLogger(__name__)

DIVISORIAL = "Divisorial"
FLIP = "Flip"
MORI_FIBER = "MoriFiber"


class Contraction:
    """
    The result of contracting an extremal face

    Attributes
    ----------
    kind : str
        ``"Divisorial"``, ``"Flip"`` or ``"MoriFiber"``
    source, target : Pair
    lattice_map : LatticeMap
        N_X -> N_Y
    curves : list of CurveClass
        The contracted curves of X
    groups : list of list of tuple
        The maximal cones of X merged into each cone of Y
    merged : list of tuple
        Ray index tuples of X spanning each merged cone
    dropped : list of int
        Rays of X that are not rays of Y

    """
    def __init__(self, kind, source, target, lattice_map, curves, groups,
                 merged, dropped, **kwargs):
        self.kind = kind
        self.source = source
        self.target = target
        self.lattice_map = lattice_map
        self.curves = curves
        self.groups = groups
        self.merged = merged
        self.dropped = dropped
        self.meta = {}
        self.meta.update(kwargs)

    @property
    def is_birational(self):
        return self.kind != MORI_FIBER

    def __repr__(self):
        return "Contraction({}, dropped={}, merged={})".format(
            self.kind, self.dropped, self.merged)


def _merge_groups(fan, walls):
    parent = {c: c for c in fan.cones}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for s1, s2 in walls:
        r1, r2 = find(s1), find(s2)
        if r1 != r2:
            parent[max(r1, r2)] = min(r1, r2)
    groups = {}
    for c in fan.cones:
        groups.setdefault(find(c), []).append(c)
    return sorted(groups.values())


def face_walls(p, curves, ns=None):
    """
    All contracted walls whose curve class lies in the face spanned by
    ``curves``
    """
    ns = NumSpace(p) if ns is None else ns
    gens = [ns.curve_coordinates(c) for c in curves]
    face = cone_from_generators(gens, (), ns.rank)
    return [c for c in ns.curves if face.contains(ns.curve_coordinates(c))]


def _fiber_type(p, face_curves, groups, merged):
    fan = p.fan
    n = fan.lattice_rank
    kernel = []
    for cone in merged:
        kernel += fan.polycone(cone).lineality
    kernel = saturate(kernel, n)
    pmat = quotient_map(kernel, n)
    smat = lattice_section(pmat, n)

    images = {}
    for i, u in enumerate(fan.rays):
        w = tuple(sum(a * b for a, b in zip(row, u)) for row in pmat)
        if any(w):
            images[i] = primitive(w)
    y_rays = sorted(set(images.values()))
    y_cones = []
    for cone in merged:
        gens = [images[i] for i in cone if i in images]
        if not gens:
            y_cones += [()]
            continue
        pc = cone_from_generators(gens, (), len(pmat))
        if pc.lineality:
            raise ContractionError("Quotient cone of {} is not strongly "
                                   "convex".format(cone))
        y_cones += [tuple(sorted(y_rays.index(tuple(r)) for r in pc.rays))]
    y_fan = Fan(y_rays, y_cones, len(pmat),
                name="{}/{}".format(fan.meta["name"], kernel))
    errors = y_fan.validate()["errors"]
    if errors:
        raise ContractionError("Quotient fan is degenerate: {}"
                               "".format(errors))

    if p.base.lattice_rank:
        base_matrix = mat_mul(p.base_map.matrix, smat)
        base_matrix = [tuple(int(x) for x in row) for row in base_matrix]
    else:
        base_matrix = None
    target = Pair(y_fan, None, p.base, base_matrix,
                  name="{}-fiber".format(p.meta["name"]))
    f = LatticeMap(pmat, fan, y_fan)
    if not f.is_fan_morphism():
        raise ContractionError("Quotient map is not a map of fans")
    return Contraction(MORI_FIBER, p, target, f, face_curves, groups, merged,
                       [], kernel=kernel)


def _check_good(p, contraction, ns):
    """Divisors trivial on the face descend to Y, the others do not"""
    fan = p.fan
    for i in range(fan.n_rays):
        d = TDivisor.prime(fan, i)
        data = d.cartier_data()
        trivial = all(intersection_number(d, c) == 0
                      for c in contraction.curves)
        for group in contraction.groups:
            agree = all(data[c] == data[group[0]] for c in group)
            if trivial and not agree:
                raise ContractionError("D_{} is trivial on the face but does "
                                       "not descend".format(i))
        if not trivial and all(all(data[c] == data[g[0]] for c in g)
                               for g in contraction.groups):
            raise ContractionError("D_{} descends but is not trivial on the "
                                   "face".format(i))


def contract_face(p, curves, supporting=None, ns=None, verify=None):
    """
    Contract the extremal face of NE(X/Z) spanned by ``curves``

    Parameters
    ----------
    p : Pair
        Q-factorial pair
    curves : list of CurveClass
    supporting : TDivisor, optional
        A nef divisor vanishing exactly on the face. Checked when given.
    verify : bool, optional
        Run the good-contraction check. Default
        ``!MMP.verify_good_contraction``.

    Returns
    -------
    Contraction

    Raises
    ------
    ContractionError
        If the face is not extremal, two or more rays drop out, Y is not
        projective over the base or the contraction is not good

    """
    if verify is None:
        verify = from_currsys("!MMP.verify_good_contraction")
    if not curves:
        raise ContractionError("Cannot contract an empty face")
    ns = NumSpace(p) if ns is None else ns
    fan = p.fan
    face_curves = face_walls(p, curves, ns)

    if supporting is not None:
        if not is_nef(supporting, p, ns):
            raise ContractionError("Supporting divisor is not nef")
        zero = {c for c in ns.curves
                if intersection_number(supporting, c) == 0}
        if zero != set(face_curves):
            raise ContractionError("Face is not extremal: the supporting "
                                   "divisor vanishes elsewhere")

    groups = _merge_groups(fan, [c.cones for c in face_curves])
    merged = [tuple(sorted(set(i for c in g for i in c))) for g in groups]

    if any(fan.polycone(m).lineality for m in merged):
        out = _fiber_type(p, face_curves, groups, merged)
        logger.info("Fiber type contraction of %s onto rank %d",
                    fan.meta["name"], out.target.fan.lattice_rank)
        return out

    extremal = set()
    for m in merged:
        pc = fan.polycone(m)
        extremal.update(i for i in m if primitive(fan.rays[i]) in pc.rays)
    dropped = sorted(set(range(fan.n_rays)) - extremal)
    if len(dropped) > 1:
        raise ContractionError("Contraction drops rays {}".format(dropped))

    y_cones = [tuple(i for i in m if i in extremal) for m in merged]
    new_rays, new_cones, _ = reindex(fan.rays, y_cones)
    y_fan = Fan(new_rays, new_cones, fan.lattice_rank,
                name="{}-contracted".format(fan.meta["name"]))
    f = LatticeMap.identity(fan, y_fan)
    boundary = f.birational_transform(p.boundary)
    target = Pair(y_fan, boundary, p.base, p.base_map.matrix,
                  name=p.meta["name"])
    ok, _ = is_projective(target)
    if not ok:
        raise ContractionError("Target {} is not projective over the base"
                               "".format(y_fan))
    kind = DIVISORIAL if dropped else FLIP
    out = Contraction(kind, p, target, f, face_curves, groups, merged,
                      dropped)
    if verify:
        _check_good(p, out, ns)
    logger.info("%s contraction of %s, merged %s", kind, fan.meta["name"],
                merged)
    return out


def contract_ray(p, curve, supporting=None, ns=None, verify=None):
    """Contract the extremal ray R = R+[C]"""
    return contract_face(p, [curve], supporting, ns, verify)
