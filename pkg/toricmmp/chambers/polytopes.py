"""
The polytopes L(V), E_A(V) and B_A^S(V) of a span of prime divisors

Points B = sum b_i S_i of V are given by their coordinates b. Both E_A(V)
and B_A^S(V) are projections of a polyhedron in (b, m)-space onto b.
"""
import logging
from fractions import Fraction

from ..exactla.rational import qvec
from ..exactla.polycone import Polyhedron
from ..exactla.polycone_utils import project
from ..toric.divisor import TDivisor, canonical_divisor

logger = logging.getLogger(__name__)


class DivisorSpan:
    """
    V = sum R S_i for distinct prime divisors S_i = D_{indices[i]}

    Parameters
    ----------
    fan : Fan
    indices : list of int
        Ray indices of the basis divisors

    """
    def __init__(self, fan, indices, **kwargs):
        indices = [int(i) for i in indices]
        if len(set(indices)) != len(indices):
            raise ValueError("Basis divisors must be distinct: {}"
                             "".format(indices))
        if any(not 0 <= i < fan.n_rays for i in indices):
            raise ValueError("Basis refers to a missing ray: {}"
                             "".format(indices))
        self.fan = fan
        self.indices = indices
        self.meta = {"name": kwargs.get("name", "V")}

    @property
    def dim(self):
        return len(self.indices)

    @property
    def basis(self):
        return [TDivisor.prime(self.fan, i) for i in self.indices]

    def divisor(self, b):
        """sum b_i S_i"""
        b = qvec(b)
        if len(b) != self.dim:
            raise ValueError("Expected {} coordinates".format(self.dim))
        coeffs = [Fraction(0)] * self.fan.n_rays
        for i, x in zip(self.indices, b):
            coeffs[i] = x
        return TDivisor(self.fan, coeffs)

    def __repr__(self):
        return "DivisorSpan({})".format(self.indices)


def polytope_l(span):
    """L(V): the unit cube 0 <= b_i <= 1"""
    p = span.dim
    ineqs = []
    for i in range(p):
        e = tuple(Fraction(int(i == j)) for j in range(p))
        ineqs += [(e, 0), (tuple(-x for x in e), -1)]
    poly = Polyhedron(ineqs, dim=p)
    poly.meta["span"] = span
    return poly


def _joint_rows(divisor, span, extra=0):
    """
    Rows of {(b, m) : <m,u_rho> + a_rho + b_i [rho = S_i] >= 0} together
    with the unit cube on b
    """
    fan = divisor.fan
    p, n = span.dim, fan.lattice_rank
    rows = [(tuple(c) + tuple([Fraction(0)] * n), b)
            for c, b in polytope_l(span).inequalities]
    for k, (u, a) in enumerate(zip(fan.rays, divisor.coeffs)):
        coef = [Fraction(int(k == i)) for i in span.indices]
        rows += [(tuple(coef) + tuple(qvec(u)), -a)]
    return rows


def compute_eav(canonical, ample, span):
    """
    E_A(V) = {B in L(V) : |K + A + B|_Q nonempty}

    Returns
    -------
    Polyhedron
        In span coordinates. Vertices are exact rationals.

    """
    d = canonical + ample
    rows = _joint_rows(d, span)
    joint = Polyhedron(rows, dim=span.dim + d.fan.lattice_rank)
    out = project(joint, list(range(span.dim)))
    for v in out.vertices:
        assert all(isinstance(x, Fraction) for x in v)
    out.meta.update({"span": span, "kind": "E_A(V)"})
    logger.debug("E_A(V) has vertices %s", out.vertices)
    return out


def compute_bsav(s_index, ample, span):
    """
    B_A^S(V) = {B in L(V) : o_S(K + S + A + B) = 0}

    o_S vanishes iff some m in the section polyhedron is tight on u_S.

    Raises
    ------
    ValueError
        If S is one of the basis divisors of V

    """
    fan = ample.fan
    if s_index in span.indices:
        raise ValueError("S = D_{} lies in the span V".format(s_index))
    s = TDivisor.prime(fan, s_index)
    d = canonical_divisor(fan) + s + ample
    rows = _joint_rows(d, span)
    p, n = span.dim, fan.lattice_rank
    tight = (tuple([Fraction(0)] * p) + tuple(qvec(fan.rays[s_index])),
             -d.coeffs[s_index])
    joint = Polyhedron(rows, [tight], dim=p + n)
    out = project(joint, list(range(p)))
    out.meta.update({"span": span, "kind": "B_A^S(V)", "S": s_index})
    return out
