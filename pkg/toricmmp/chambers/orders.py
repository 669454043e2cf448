"""
Asymptotic orders of vanishing o_v and the chambers on which they are linear

For D in the cone spanned by D_1..D_k, D(t) = sum t_i D_i, LP duality gives

    o_v(D(t)) = max_j sum_rho (w_rho - y^j_rho) a_rho(t)

where w are the coordinates of v in a cone containing it and y^j runs over
the vertices of {y >= 0 : sum y_rho u_rho = v}. Each o_v is convex and
piecewise linear in t; its domains of linearity refine the support cone.
"""
import logging
from fractions import Fraction

from astropy.table import Table

from ..exactla.rational import qvec, dot, primitive, vec_str
from ..exactla.lp import lp_solve
from ..exactla.polycone import (Polyhedron, cone_from_generators,
                                cone_from_inequalities)
from ..exactla.polycone_utils import (Subdivision, common_refinement,
                                      box_points)
from ..exactla.linalg import solve, transpose
from ..toric.divisor import TDivisor
from ..toric.sections import section_polyhedron, is_effective_class
from ..cones.numerical import NumSpace, intersection_number

logger = logging.getLogger(__name__)


def asymptotic_order(v, divisor, p=None):
    """
    o_v(D) = c_v(D) + min over m in P_D of <m, v>

    Returns None when |D|_Q is empty.

    Raises
    ------
    ValueError
        If the minimum is unbounded (v outside the support)

    """
    v = qvec(v)
    if not is_effective_class(divisor):
        return None
    poly = section_polyhedron(divisor)
    if p is not None and p.is_relative and len(p.base.cones) > 1:
        # sections over the affine chart of the base containing f(v)
        tau = p.base.maximal_cone_containing(p.base_map.apply(v))
        if tau is None:
            raise ValueError("{} maps outside the base".format(vec_str(v)))
        chart = p.base.polycone(tau)
        fan = divisor.fan
        poly = Polyhedron([(qvec(u), -a) for u, a in
                           zip(fan.rays, divisor.coeffs)
                           if chart.contains(p.base_map.apply(u))],
                          dim=fan.lattice_rank)
    c_v = divisor.order_along(v)
    res = lp_solve(v, poly.inequalities, poly.equalities, sense="min")
    if not res.is_optimal:
        raise ValueError("o_v is unbounded for v = {}".format(vec_str(v)))
    return c_v + res.value


def stable_fixed_part(divisor, p=None):
    """sum over rays of o_{u_rho}(D) D_rho, None if |D|_Q is empty"""
    fan = divisor.fan
    orders = [asymptotic_order(u, divisor, p) for u in fan.rays]
    if any(o is None for o in orders):
        return None
    return TDivisor(fan, orders, name="SFix")


def valuation_family(fan):
    """
    Rays, primitive sums of the rays of every cone, and the box points of
    the simplicial cones
    """
    vals = set(fan.rays)
    for c in fan.all_cones():
        if len(c) > 1:
            s = [0] * fan.lattice_rank
            for i in c:
                s = [a + b for a, b in zip(s, fan.rays[i])]
            vals.add(primitive(s))
    qfan, _ = fan.q_factorialize()
    for c in qfan.cones:
        try:
            vals.update(primitive(b) for b in
                        box_points([qfan.rays[i] for i in c]))
        except ValueError as err:
            logger.warning("Skipping box points of %s: %s", c, err)
    return sorted(v for v in vals if any(v))


def support_cone(divisors, p=None):
    """
    {t >= 0 : sum t_i D_i has a nonempty |.|_Q}

    Computed as the projection onto t of the cone
    {(t, m) : t >= 0, <m, u_rho> + sum_i t_i a_{i,rho} >= 0}.

    Raises
    ------
    ValueError
        If ``divisors`` is empty

    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("support_cone needs at least one divisor")
    fan = divisors[0].fan
    k, n = len(divisors), fan.lattice_rank
    facets = [tuple(int(i == j) for j in range(k)) + tuple([0] * n)
              for i in range(k)]
    for r, u in enumerate(fan.rays):
        facets += [tuple(d.coeffs[r] for d in divisors) + tuple(qvec(u))]
    joint = cone_from_inequalities(facets, (), k + n)
    rays = [r[:k] for r in joint.rays if any(r[:k])]
    lin = [l[:k] for l in joint.lineality if any(l[:k])]
    if not rays and not lin:
        cone = cone_from_inequalities(
            [tuple(int(i == j) for j in range(k)) for i in range(k)] +
            [tuple(-int(i == j) for j in range(k)) for i in range(k)],
            (), k)
    else:
        cone = cone_from_generators([primitive(r) for r in rays],
                                    [primitive(l) for l in lin], k)
    cone.meta["divisors"] = divisors
    return cone


def _order_forms(v, divisors):
    """
    The linear forms l_j(t) whose maximum is o_v(sum t_i D_i)
    """
    fan = divisors[0].fan
    nr = fan.n_rays
    v = qvec(v)
    qfan, _ = fan.q_factorialize()
    cone = qfan.minimal_cone_containing(v)
    if cone is None:
        raise ValueError("{} lies outside the support".format(vec_str(v)))
    w = [Fraction(0)] * nr
    if cone:
        coords = solve(transpose([fan.rays[i] for i in cone]), v, len(cone))
        for i, c in zip(cone, coords):
            w[i] = c
    eqs = [(tuple(Fraction(u[k]) for u in fan.rays), v[k])
           for k in range(fan.lattice_rank)]
    ineqs = [(tuple(Fraction(int(i == j)) for j in range(nr)), 0)
             for i in range(nr)]
    verts = Polyhedron(ineqs, eqs, nr).vertices
    forms = set()
    for y in verts:
        forms.add(tuple(sum((w[r] - y[r]) * d.coeffs[r] for r in range(nr))
                        for d in divisors))
    return sorted(forms)


class ChamberDecomposition:
    """
    Cells of a support cone on which every tested o_v is linear

    Attributes
    ----------
    support : PolyCone
    cells : list of PolyCone
    valuations : list of tuple
    forms : list of list of tuple
        ``forms[c][k]`` is the linear form of o_{valuations[k]} on cell c

    """
    def __init__(self, support, cells, valuations, forms, divisors,
                 **kwargs):
        self.support = support
        self.cells = cells
        self.valuations = valuations
        self.forms = forms
        self.divisors = divisors
        self.meta = {}
        self.meta.update(kwargs)

    def locate(self, t):
        return [i for i, c in enumerate(self.cells) if c.contains(t)]

    def evaluate(self, k, t):
        """o_{valuations[k]} at t, from the linear form of a cell"""
        cells = self.locate(t)
        if not cells:
            raise ValueError("{} lies outside the support".format(t))
        return dot(self.forms[cells[0]][k], qvec(t))

    def coarseness_certificate(self):
        """
        For every pair of cells sharing a facet, the valuations whose forms
        differ across it

        Returns
        -------
        certified : bool
        pairs : list of (int, int, list of int)

        """
        d = self.support.dim
        pairs = []
        for a in range(len(self.cells)):
            for b in range(a + 1, len(self.cells)):
                meet = self.cells[a].intersection(self.cells[b])
                if meet.dim != d - 1:
                    continue
                diff = [k for k in range(len(self.valuations))
                        if self.forms[a][k] != self.forms[b][k]]
                pairs += [(a, b, diff)]
        return all(diff for _, _, diff in pairs), pairs

    def summary(self):
        rows = [(i, ", ".join(vec_str(r) for r in c.rays),
                 sum(1 for f in self.forms[i] if any(f)))
                for i, c in enumerate(self.cells)]
        names = ["cell", "rays", "nonzero_orders"]
        if not rows:
            return Table(names=names, dtype=[int, str, int])
        return Table(rows=rows, names=names)

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return "ChamberDecomposition({} cells, {} valuations)".format(
            len(self.cells), len(self.valuations))


def _form_key(form, support):
    return tuple(dot(form, qvec(g)) for g in support.generators)


def chamber_decomposition(sc, valuations, p=None):
    """
    Coarsest subdivision of ``sc`` on which every o_v is linear

    Parameters
    ----------
    sc : PolyCone
        A support cone, with ``meta["divisors"]``
    valuations : list of tuple

    Returns
    -------
    ChamberDecomposition

    """
    divisors = sc.meta["divisors"]
    k = len(divisors)
    valuations = [tuple(v) for v in valuations]
    d = sc.dim
    if d == 0:
        zero = [tuple([Fraction(0)] * k) for _ in valuations]
        return ChamberDecomposition(sc, [sc], valuations, [zero], divisors)

    all_forms = [_order_forms(v, divisors) for v in valuations]
    subdivisions = []
    for forms in all_forms:
        uniq = {}
        for f in forms:
            uniq.setdefault(_form_key(f, sc), f)
        forms = list(uniq.values())
        cells = []
        for f in forms:
            ineqs = [tuple(a - b for a, b in zip(f, g)) for g in forms
                     if g is not f]
            cell = cone_from_inequalities(sc.facets + ineqs, sc.equations, k)
            if cell.dim == d:
                cells += [cell]
        subdivisions += [Subdivision(cells)]
    if subdivisions:
        cells = list(common_refinement(subdivisions)) if \
            len(subdivisions) > 1 else list(subdivisions[0])
    else:
        cells = [sc]

    def forms_on(cell):
        t = cell.relative_interior_point()
        out = []
        for forms in all_forms:
            out += [max(forms, key=lambda f: (dot(f, t), f))]
        return out

    forms = [forms_on(c) for c in cells]
    # merge cells with identical form tuples
    groups = {}
    for cell, fs in zip(cells, forms):
        key = tuple(_form_key(f, sc) for f in fs)
        groups.setdefault(key, ([], fs))[0].append(cell)
    merged_cells, merged_forms = [], []
    for key in sorted(groups):
        cs, fs = groups[key]
        if len(cs) == 1:
            merged_cells += cs
        else:
            gens = [r for c in cs for r in c.generators]
            merged_cells += [cone_from_generators(gens, (), k)]
        merged_forms += [fs]
    logger.info("Chamber decomposition: %d cells from %d valuations",
                len(merged_cells), len(valuations))
    return ChamberDecomposition(sc, merged_cells, valuations, merged_forms,
                                divisors)


def nef_preimage(cd, p):
    """Supp cone intersected with the preimage of Nef(X/Z)"""
    ns = NumSpace(p)
    k = len(cd.divisors)
    ineqs = [tuple(intersection_number(d, c) for d in cd.divisors)
             for c in ns.curves]
    return cone_from_inequalities(cd.support.facets + ineqs,
                                  cd.support.equations, k)


def nef_chamber(cd, p, certificate=False):
    """
    The index of the cell meeting the preimage of the ample cone

    That cell is checked against ``nef_preimage``: it should equal
    Supp cone intersected with the preimage of Nef(X/Z), and every tested
    o_v should vanish on it. A failed check is logged as a warning.

    Parameters
    ----------
    cd : ChamberDecomposition
    p : Pair
    certificate : bool
        Also return a dict with ``equals_nef_preimage``, ``orders_vanish``,
        ``nef_preimage`` and the ample ``witness``

    Returns
    -------
    index : int, None
        None when no cell meets the ample preimage
    cert : dict
        Only with ``certificate=True``

    """
    ns = NumSpace(p)
    k = len(cd.divisors)
    degrees = [tuple(intersection_number(d, c) for d in cd.divisors)
               for c in ns.curves]
    index, witness = None, None
    for i, cell in enumerate(cd.cells):
        ineqs = [(f, 0) for f in cell.facets] + [(g, 1) for g in degrees]
        eqs = [(e, 0) for e in cell.equations]
        if not degrees:
            ineqs += [(tuple([1] * k), 1)]
        res = lp_solve([0] * k, ineqs, eqs)
        if res.is_optimal and any(res.witness):
            index, witness = i, res.witness
            break

    cert = {"equals_nef_preimage": False, "orders_vanish": False,
            "nef_preimage": nef_preimage(cd, p), "witness": witness}
    if index is not None:
        cert["equals_nef_preimage"] = cd.cells[index] == cert["nef_preimage"]
        cert["orders_vanish"] = all(not any(f) for f in cd.forms[index])
        if not (cert["equals_nef_preimage"] and cert["orders_vanish"]):
            logger.warning("Nef cell %d is not Supp cone meet Nef preimage: "
                           "equal=%s, orders vanish=%s", index,
                           cert["equals_nef_preimage"], cert["orders_vanish"])
    return (index, cert) if certificate else index
