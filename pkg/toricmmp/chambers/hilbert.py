"""
Hilbert bases of pointed rational cones

The basis is found among the rays and the box points of a pulling
triangulation, then reduced to its irreducible elements.
"""
import logging
from fractions import Fraction

from ..utils import from_currsys, get_rng
from ..exactla.rational import qvec, vsub, is_zero, dot, vec_str
from ..exactla.polycone import cone_from_inequalities
from ..exactla.polycone_utils import pulling_triangulation, box_points

logger = logging.getLogger(__name__)


def _is_lattice_point(cone, x):
    return all(Fraction(a).denominator == 1 for a in x) and cone.contains(x)


def hilbert_basis(cone):
    """
    The unique minimal generating set of the lattice points of ``cone``

    Parameters
    ----------
    cone : PolyCone
        Must be pointed

    Returns
    -------
    list of tuple
        Sorted integer vectors

    Raises
    ------
    ValueError
        If the cone has lineality, or the candidate set exceeds
        ``!CHAMBERS.hilbert_basis_cap``

    """
    if cone.lineality:
        raise ValueError("Hilbert basis of a cone with lineality: {}"
                         "".format(cone))
    if not cone.rays:
        return []
    cap = from_currsys("!CHAMBERS.hilbert_basis_cap")
    candidates = set(cone.rays)
    for simplex in pulling_triangulation(cone.rays):
        candidates.update(box_points([cone.rays[i] for i in simplex]))
        if len(candidates) > cap:
            raise ValueError("More than {} Hilbert basis candidates"
                             "".format(cap))
    candidates = sorted(candidates)

    basis = []
    for x in candidates:
        reducible = any(y != x and _is_lattice_point(cone, vsub(x, y))
                        for y in candidates)
        if not reducible:
            basis += [x]
    logger.debug("Hilbert basis: %d of %d candidates", len(basis),
                 len(candidates))
    return basis


def _grading(cone):
    """A functional positive on the cone minus the origin"""
    dim = cone.ambient_dim
    g = [Fraction(0)] * dim
    for f in cone.facets:
        g = [a + b for a, b in zip(g, f)]
    return g


def decompose(x, basis, cone):
    """
    Write the lattice point x as a sum of basis elements

    Returns
    -------
    list of int
        Multiplicities, one per basis element

    Raises
    ------
    ValueError
        If x is not a lattice point of the cone, or is not reached

    """
    x = tuple(qvec(x))
    if not _is_lattice_point(cone, x):
        raise ValueError("{} is not a lattice point of the cone"
                         "".format(vec_str(x)))
    grading = _grading(cone)
    order = sorted(range(len(basis)), key=lambda i: -dot(grading, basis[i]))
    counts = [0] * len(basis)
    while not is_zero(x):
        for i in order:
            rest = vsub(x, basis[i])
            if _is_lattice_point(cone, rest):
                counts[i] += 1
                x = rest
                break
        else:
            raise ValueError("{} does not decompose over the basis"
                             "".format(vec_str(x)))
    return counts


def section_cone(divisors, p=None):
    """
    {(t, m) : t >= 0, m in P_{sum t_i D_i}}

    Its semigroup of lattice points is the multigraded section ring.
    """
    fan = divisors[0].fan
    k, n = len(divisors), fan.lattice_rank
    facets = [tuple(int(i == j) for j in range(k + n)) for i in range(k)]
    for r, u in enumerate(fan.rays):
        facets += [tuple(d.coeffs[r] for d in divisors) + tuple(qvec(u))]
    return cone_from_inequalities(facets, (), k + n)


def hilbert_basis_witness(divisors, p=None, n_samples=None, seed=None):
    """
    Finite generation witness for the ring of sum t_i D_i

    Parameters
    ----------
    divisors : list of TDivisor
    p : Pair, optional
    n_samples : int, optional
        Default ``!CHAMBERS.sample_size``
    seed : int, optional
        Default ``!SIM.random.seed``

    Returns
    -------
    dict
        ``cone``, ``basis``, ``samples`` (lattice points with their
        decompositions) and ``verified``

    Raises
    ------
    ValueError
        If k + rank N exceeds ``!CHAMBERS.lattice_dim_cap``

    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("hilbert_basis_witness needs at least one divisor")
    dim = len(divisors) + divisors[0].fan.lattice_rank
    cap = from_currsys("!CHAMBERS.lattice_dim_cap")
    if dim > cap:
        raise ValueError("Lattice dimension {} exceeds cap {}"
                         "".format(dim, cap))
    if n_samples is None:
        n_samples = from_currsys("!CHAMBERS.sample_size")

    cone = section_cone(divisors, p)
    basis = hilbert_basis(cone)
    rng = get_rng(seed)
    samples = []
    if basis:
        for _ in range(n_samples):
            mult = rng.integers(0, 4, size=len(basis))
            x = tuple(sum(int(c) * b[j] for c, b in zip(mult, basis))
                      for j in range(dim))
            samples += [(x, decompose(x, basis, cone))]
    verified = all(
        tuple(sum(c * b[j] for c, b in zip(counts, basis))
              for j in range(dim)) == x for x, counts in samples)
    return {"cone": cone, "basis": basis, "samples": samples,
            "verified": verified}
