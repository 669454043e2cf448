"""
Restriction of a pair over a torus-invariant open subset of the base
"""
import logging

from ..toric.fan import Fan
from ..toric.pair import Pair
from ..toric.divisor import TDivisor
from ..toric.fan_utils import reindex
from .numerical import contracted_curves

logger = logging.getLogger(__name__)


def _close_under_faces(base, cones):
    out = set()
    for c in cones:
        out.update(base.cone_faces(tuple(sorted(c))))
    return out


def restrict_to_open(p, patch):
    """
    The pair X_U -> U over a subfan U of the base

    Parameters
    ----------
    p : Pair
    patch : list of tuples
        Cones of the base fan (ray index tuples). Faces are added.

    Returns
    -------
    pair : Pair
    maps : dict
        ``ray_map`` (old -> new ray index of X), ``base_ray_map``,
        ``divisor_map`` (restriction of a TDivisor on X) and
        ``curve_map`` (curve index of X_U -> curve index of X)

    Raises
    ------
    ValueError
        If the patch is empty or not made of base cones

    """
    base = p.base
    patch = [tuple(sorted(c)) for c in patch]
    if not patch:
        raise ValueError("Cannot restrict to an empty patch")
    known = set(base.all_cones())
    for c in patch:
        if c not in known:
            raise ValueError("{} is not a cone of the base fan".format(c))
    u_cones = _close_under_faces(base, patch)

    fan = p.fan
    x_cones = []
    for c in fan.all_cones():
        images = [p.base_map.apply(fan.rays[i]) for i in c]
        if any(all(base.polycone(t).contains(w) for w in images)
               for t in u_cones):
            x_cones += [c]
    if not x_cones or x_cones == [()]:
        raise ValueError("No cone of X lies over the patch {}".format(patch))
    new_rays, new_cones, ray_map = reindex(fan.rays, x_cones)
    sub = Fan(new_rays, new_cones, fan.lattice_rank,
              name="{}|{}".format(fan.meta["name"], patch))
    b_rays, b_cones, base_ray_map = reindex(base.rays, u_cones)
    if b_rays:
        sub_base = Fan(b_rays, b_cones, base.lattice_rank)
    else:
        sub_base = Fan([], [()], lattice_rank=base.lattice_rank)

    def divisor_map(divisor):
        coeffs = [None] * len(new_rays)
        for old, new in ray_map.items():
            coeffs[new] = divisor.coeffs[old]
        return TDivisor(sub, coeffs)

    restricted = Pair(sub, divisor_map(p.boundary), sub_base,
                      p.base_map.matrix, name=p.meta["name"])

    global_curves = contracted_curves(p)
    lookup = {}
    for k, c in enumerate(global_curves):
        lookup[tuple(sorted(fan.rays[i] for i in c.wall))] = k
    curve_map = {}
    for k, c in enumerate(contracted_curves(restricted)):
        key = tuple(sorted(sub.rays[i] for i in c.wall))
        if key in lookup:
            curve_map[k] = lookup[key]
    logger.debug("Restricted %d rays to %d over %s", fan.n_rays,
                 len(new_rays), patch)
    maps = {"ray_map": ray_map, "base_ray_map": base_ray_map,
            "divisor_map": divisor_map, "curve_map": curve_map}
    return restricted, maps
