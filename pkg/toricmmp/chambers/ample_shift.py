"""
The ample-shifted set of classes c[K + Delta_a] + (ample) per patch

Membership is decided with torus invariant boundaries: over each patch an
LP in (c, c*Delta, s) looks for a klt boundary with u - c(K + Delta) ample.
"""
import logging
from fractions import Fraction

from ..exactla.rational import dot, primitive
from ..exactla.lp import lp_solve
from ..exactla.polycone import Polyhedron
from ..toric.divisor import TDivisor
from ..cones.numerical import NumSpace
from ..cones.mori import is_nef, is_ample
from ..cones.positivity import kodaira_decompose
from ..mmp.scaling import general_member_klt

logger = logging.getLogger(__name__)


def _patch_lp(u, p, c=None):
    """
    Maximise s over (c, B', m_sigma, s) with B' = c * Delta

    0 <= B'_rho <= c - s, s <= c, (u - cK - B').C >= s for contracted C,
    cK + B' Q-Cartier, s <= 1.
    """
    fan = p.fan
    ns = NumSpace(p)
    nr, n = fan.n_rays, fan.lattice_rank
    cones = [] if fan.is_simplicial() else list(fan.cones)
    nv = 2 + nr + n * len(cones)
    ic, ib, im, js = 0, 1, 1 + nr, nv - 1

    def row(entries):
        r = [Fraction(0)] * nv
        for k, v in entries.items():
            r[k] += v
        return r

    ineqs, eqs = [], []
    kcoeffs = p.canonical.coeffs
    for i in range(nr):
        ineqs += [(row({ib + i: 1}), 0)]
        ineqs += [(row({ic: 1, ib + i: -1, js: -1}), 0)]
    ineqs += [(row({ic: 1, js: -1}), 0)]
    ineqs += [(row({js: -1}), -1)]
    for curve in ns.curves:
        vec = curve.vector
        r = [Fraction(0)] * nv
        r[ic] = -dot(kcoeffs, vec)
        for i in range(nr):
            r[ib + i] = -Fraction(vec[i])
        r[js] = Fraction(-1)
        ineqs += [(r, -dot(u.coeffs, vec))]
    for k, cone in enumerate(cones):
        for i in cone:
            # <m_sigma, u_i> = -(c * k_i + b'_i)
            r = [Fraction(0)] * nv
            for j, x in enumerate(fan.rays[i]):
                r[im + k * n + j] = Fraction(x)
            r[ic] += kcoeffs[i]
            r[ib + i] += 1
            eqs += [(r, 0)]
    if c is not None:
        eqs += [(row({ic: 1}), Fraction(c))]
    objective = [0] * nv
    objective[js] = 1
    return lp_solve(objective, ineqs, eqs, sense="max"), ns, (ic, ib, js)


def in_ample_shifted_set(u, p, patches=None, c=None):
    """
    Is the class of u of the form c_a[K + Delta_a] + w_a on every patch?

    Parameters
    ----------
    u : TDivisor
        Q-Cartier divisor on X
    p : Pair
    patches : list of (Pair, callable), optional
        Patch pairs with the restriction of divisors, as returned by
        ``restrict_to_open``. Default is X itself.
    c : Rational, optional
        Fix c_a = c on every patch

    Returns
    -------
    member : bool
    witnesses : list of dict
        Per patch ``c``, ``boundary`` (klt, torus invariant), ``ample`` and
        the slack ``s``; ``None`` for a patch without witness

    """
    u.cartier_data()
    if patches is None:
        patches = [(p, lambda d: d)]
    witnesses = []
    for pair, restrict in patches:
        ua = restrict(u)
        res, ns, (ic, ib, js) = _patch_lp(ua, pair, c)
        if not res.is_optimal or res.value <= 0:
            witnesses += [None]
            continue
        x = res.witness
        ca = x[ic]
        boundary = TDivisor(pair.fan, [x[ib + i] / ca
                                       for i in range(pair.fan.n_rays)])
        ample = ua - ca * (pair.canonical + boundary)
        witnesses += [{"c": ca, "boundary": boundary, "ample": ample,
                       "s": res.value}]
    member = all(w is not None for w in witnesses)
    logger.debug("Ample shifted set membership over %d patches: %s",
                 len(patches), member)
    return member, witnesses


def ample_shift_witness(p, scaling, lam, max_halvings=20):
    """
    K + Delta + lam*A = K + Delta' + H' with (X, Delta') klt, H' ample

    With A ~ H + E a Kodaira decomposition, Delta' is the torus invariant
    Delta + eps*E plus a general member of (lam - eps - delta)A, and
    H' = eps*H + delta*A. eps and delta are halved until both conditions
    hold.

    Returns
    -------
    dict
        ``c`` (always 1), ``torus_boundary``, ``general_class``, ``ample``,
        ``eps``, ``delta``, ``m0``

    Raises
    ------
    ValueError
        If lam <= 0, A is not big, or no eps is found

    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("The shifted class needs lam > 0, got {}"
                         "".format(lam))
    decomposition = kodaira_decompose(scaling, p)
    if decomposition is None:
        raise ValueError("{} is not big".format(scaling))
    h, e, m0 = decomposition
    if e.meta.get("base_twist") is not None and \
            not e.meta["base_twist"].is_zero():
        raise ValueError("The Kodaira decomposition needs a base twist; "
                         "restrict to an affine patch first")
    eps = lam / 4
    for _ in range(max_halvings):
        delta = eps
        torus = p.boundary + eps * e
        general = (lam - eps - delta) * scaling
        ample = eps * h + delta * scaling
        klt_failure = general_member_klt(p, torus, general)
        if klt_failure is None and is_ample(ample, p):
            return {"c": Fraction(1), "torus_boundary": torus,
                    "general_class": general, "ample": ample,
                    "eps": eps, "delta": delta, "m0": m0}
        eps /= 2
    raise ValueError("No ample shift found for lam = {}".format(lam))


def _class_cube(y, radius):
    dim = len(y)
    ineqs = []
    for i in range(dim):
        e = tuple(Fraction(int(i == j)) for j in range(dim))
        ineqs += [(e, y[i] - radius),
                  (tuple(-x for x in e), -y[i] - radius)]
    return Polyhedron(ineqs, dim=dim)


def _default_radius(y, functionals):
    vals = [(dot(y, x), sum(abs(a) for a in x)) for x in functionals]
    pos = [v / (2 * norm) for v, norm in vals if v > 0]
    return min(pos) if pos else Fraction(1)


def boundary_structure(poly, u, p, ns=None):
    """
    Codim-one faces of P cap Nef that meet the interior of P

    Parameters
    ----------
    poly : Polyhedron or None
        A polyhedron in class coordinates around the class of u. ``None``
        uses a cube too small to reach any wall not through u.
    u : TDivisor
        Nef divisor
    p : Pair

    Returns
    -------
    list of tuple
        Primitive curve functionals, one per supporting hyperplane

    Raises
    ------
    ValueError
        If u is not nef

    """
    ns = NumSpace(p) if ns is None else ns
    if not is_nef(u, p, ns):
        raise ValueError("{} is not nef".format(u))
    y = ns.divisor_to_class(u)
    functionals = sorted(set(primitive(ns.curve_coordinates(c))
                             for c in ns.curves))
    functionals = [tuple(Fraction(a) for a in f) for f in functionals]
    if poly is None:
        poly = _class_cube(y, _default_radius(y, functionals))
    dim = ns.rank
    nef_rows = [(f, Fraction(0)) for f in functionals]
    out = []
    for f in functionals:
        face = poly.with_constraints(nef_rows, [(f, Fraction(0))])
        if face.dim != dim - 1:
            continue
        # a point of the face strictly inside P
        ineqs = [(tuple(a) + (Fraction(-1),), b) for a, b in
                 poly.inequalities]
        ineqs += [(tuple(a) + (Fraction(0),), b) for a, b in nef_rows]
        ineqs += [(tuple([Fraction(0)] * dim) + (Fraction(-1),),
                   Fraction(-1))]
        eqs = [(tuple(a) + (Fraction(0),), b) for a, b in
               poly.equalities + [(f, Fraction(0))]]
        res = lp_solve([0] * dim + [1], ineqs, eqs, sense="max")
        if res.is_optimal and res.value > 0:
            out += [tuple(int(a) for a in primitive(f))]
    return out
