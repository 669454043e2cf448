"""
Helpers for fans that work on plain ray lists and index tuples
"""
from fractions import Fraction

from ..exactla.rational import primitive
from ..exactla.polycone import cone_from_generators, _fdot
from ..exactla.polycone_utils import (faces_of_codim, pulling_triangulation,
                                      regular_subdivision)


def is_face(cone, sub_rays):
    """
    True if cone(sub_rays) is a face of the PolyCone ``cone``

    The face spanned by a set of rays is cut out by the facets vanishing on
    the sum of the rays. ``sub_rays`` form a face exactly when that face
    contains no other ray of ``cone``.
    """
    sub_rays = [tuple(r) for r in sub_rays]
    if not all(cone.contains(r) for r in sub_rays):
        return False
    p = [sum(Fraction(r[i]) for r in sub_rays) for i in
         range(cone.ambient_dim)]
    tight = [f for f in cone.facets if _fdot(f, p) == 0]
    face = {tuple(r) for r in cone.rays if all(_fdot(f, r) == 0 for f in tight)}
    return face == {primitive(r) for r in sub_rays}


def cone_faces(rays, cone, polycone=None, codim=None):
    """
    Faces of the cone spanned by ``rays[i] for i in cone`` as index tuples

    Parameters
    ----------
    rays : list of tuples
    cone : tuple of int
    polycone : PolyCone, optional
        Precomputed cone for ``cone``
    codim : int, optional
        Only faces of this codimension. Default: all faces.

    """
    cone = tuple(sorted(cone))
    if polycone is None:
        polycone = cone_from_generators([rays[i] for i in cone], (),
                                        len(rays[cone[0]]) if cone else 0)
    dim = polycone.dim
    if len(cone) == dim:
        # simplicial: every subset is a face
        subsets = [()]
        for i in cone:
            subsets += [s + (i,) for s in subsets]
        faces = [tuple(sorted(s)) for s in subsets]
        if codim is not None:
            faces = [f for f in faces if len(f) == dim - codim]
        return sorted(set(faces))
    codims = range(dim + 1) if codim is None else [codim]
    out = set()
    for k in codims:
        if not 0 <= k <= dim:
            continue
        for face in faces_of_codim(polycone, k):
            out.add(tuple(i for i in cone if face.contains(rays[i])))
    return sorted(out)


def reindex(rays, cones):
    """
    Drop rays not used by any cone

    Returns
    -------
    new_rays, new_cones, index_map
        ``index_map`` maps old ray indices to new ones

    """
    used = sorted(set(i for c in cones for i in c))
    index_map = {old: new for new, old in enumerate(used)}
    new_rays = [tuple(rays[i]) for i in used]
    new_cones = [tuple(sorted(index_map[i] for i in c)) for c in cones]
    return new_rays, new_cones, index_map


def triangulate_cones(rays, cones):
    """Pulling triangulation of every cone with the global ray order"""
    out = []
    for c in cones:
        out += pulling_triangulation(rays, list(c))
    return sorted(set(out))


def ample_cells(rays, cone, heights):
    """
    Regular subdivision of one cone with heights given per ray of the cone

    Returns index tuples into ``rays``.
    """
    cone = tuple(sorted(cone))
    local = regular_subdivision([rays[i] for i in cone],
                                [heights[i] for i in cone])
    return sorted(tuple(sorted(cone[j] for j in cell)) for cell in local)


__all__ = ["is_face", "cone_faces", "reindex", "triangulate_cones",
           "ample_cells", "regular_subdivision"]
