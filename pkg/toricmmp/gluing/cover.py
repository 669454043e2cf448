"""
Torus invariant covers of the base and restriction of a family to a patch
"""
import logging

from ..cones.numerical import contracted_curves
from ..cones.restriction import restrict_to_open

logger = logging.getLogger(__name__)


def _face_closure(base, cones):
    out = set()
    for c in cones:
        out.update(f for f in base.all_cones() if set(f) <= set(c))
    return out


class BaseCover:
    """
    A finite cover of the base by torus invariant open subsets

    Parameters
    ----------
    base : Fan
    patches : list of list of tuple
        Each patch is a list of base cones. Together they must contain every
        maximal cone of the base.

    Raises
    ------
    ValueError
        If a patch is empty, names a missing cone, or the patches miss a
        maximal cone

    """
    def __init__(self, base, patches, **kwargs):
        self.base = base
        self.patches = [sorted(tuple(sorted(c)) for c in patch)
                        for patch in patches]
        known = set(base.all_cones())
        for k, patch in enumerate(self.patches):
            if not patch:
                raise ValueError("Patch {} is empty".format(k))
            missing = [c for c in patch if c not in known]
            if missing:
                raise ValueError("Patch {} has cones {} not in the base"
                                 "".format(k, missing))
        covered = set().union(*(_face_closure(base, p) for p in self.patches))
        uncovered = [c for c in base.cones if c not in covered]
        if uncovered:
            raise ValueError("Cones {} are not covered".format(uncovered))
        self.meta = {"name": kwargs.get("name", "cover")}
        self.meta.update(kwargs)

    def closure(self, k):
        """All base cones of patch k, faces included"""
        return sorted(_face_closure(self.base, self.patches[k]))

    def overlap(self, a, b):
        """Maximal cones of the intersection of patches a and b"""
        common = set(self.closure(a)) & set(self.closure(b))
        return sorted(c for c in common
                      if not any(set(c) < set(o) for o in common))

    def __len__(self):
        return len(self.patches)

    def __repr__(self):
        return "BaseCover({} patches over {})".format(len(self.patches),
                                                      self.base)


def affine_cover(base):
    """One affine patch per maximal cone"""
    return BaseCover(base, [[c] for c in base.cones], name="affine")


def restrict_family(p, patch):
    """
    X_U -> U for a patch U of the base

    The restriction maps of ``restrict_to_open`` are stored in
    ``meta["restriction"]``. The contracted curves of X_U are checked to
    inject into those of X.

    Raises
    ------
    ValueError
        If the patch is empty or not made of base cones

    """
    restricted, maps = restrict_to_open(p, patch)
    images = list(maps["curve_map"].values())
    n_local = len(contracted_curves(restricted))
    if len(set(images)) != len(images) or len(images) != n_local:
        raise ValueError("Contracted curves of the restriction to {} do not "
                         "inject".format(patch))
    restricted.meta["restriction"] = maps
    restricted.meta["patch"] = [tuple(c) for c in patch]
    return restricted
