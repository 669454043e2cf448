"""
Torus-invariant Q-divisors and their Cartier data
"""
import logging
from fractions import Fraction
from functools import reduce
from math import floor, ceil

from ..base_classes import DivisorBase
from ..exceptions import NotQCartierError
from ..exactla.rational import qvec, dot, rat_str, lcm, common_denominator
from ..exactla.linalg import solve, integer_solve, lattice_index
from ..exactla.polycone_utils import pulling_triangulation

logger = logging.getLogger(__name__)


class CartierData:
    """
    Linear functionals m_sigma per maximal cone with <m_sigma, u> = -a_u

    Parameters
    ----------
    fan : Fan
    functionals : dict
        Maximal cone (tuple of ray indices) -> tuple of Fractions

    """
    def __init__(self, fan, functionals):
        self.fan = fan
        self.functionals = functionals

    def __getitem__(self, cone):
        return self.functionals[tuple(cone)]

    def items(self):
        return self.functionals.items()

    def evaluate(self, v):
        """
        <m_sigma, v> for a maximal cone sigma containing v

        The value is independent of the cone chosen.
        """
        cone = self.fan.maximal_cone_containing(v)
        if cone is None:
            raise ValueError("{} lies outside the support of the fan"
                             "".format(tuple(v)))
        return dot(self.functionals[cone], qvec(v))


class TDivisor(DivisorBase):
    """
    A torus-invariant Q-divisor sum a_rho D_rho on a fan

    Parameters
    ----------
    fan : Fan
    coeffs : list
        One exact rational per ray of ``fan`` (ints, Fractions or "p/q")

    """
    def __init__(self, fan, coeffs, **kwargs):
        self.fan = fan
        self.coeffs = qvec(coeffs)
        if len(self.coeffs) != fan.n_rays:
            raise ValueError("Divisor has {} coefficients but the fan has {} "
                             "rays".format(len(self.coeffs), fan.n_rays))
        self.meta = {"name": kwargs.get("name", None)}
        self._cartier = None

    @classmethod
    def zero(cls, fan):
        return cls(fan, [0] * fan.n_rays)

    @classmethod
    def prime(cls, fan, i):
        return cls(fan, [int(j == i) for j in range(fan.n_rays)],
                   name="D{}".format(i))

    @classmethod
    def principal(cls, fan, m):
        """div(chi^m) = sum <m, u_rho> D_rho"""
        return cls(fan, [dot(qvec(m), qvec(u)) for u in fan.rays])

    def _check(self, other):
        if not isinstance(other, TDivisor):
            raise TypeError("Expected a TDivisor, got {}".format(type(other)))
        if other.fan is not self.fan and other.fan != self.fan:
            raise ValueError("Divisors live on different fans")

    def __add__(self, other):
        self._check(other)
        return TDivisor(self.fan, [a + b for a, b in
                                   zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TDivisor(self.fan, [a - b for a, b in
                                   zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TDivisor(self.fan, [-a for a in self.coeffs])

    def __mul__(self, c):
        c = Fraction(c)
        return TDivisor(self.fan, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TDivisor):
            return False
        return self.fan == other.fan and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.fan, self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i]

    def floor(self):
        return TDivisor(self.fan, [floor(a) for a in self.coeffs])

    def ceil(self):
        return TDivisor(self.fan, [ceil(a) for a in self.coeffs])

    def frac(self):
        return TDivisor(self.fan, [a - floor(a) for a in self.coeffs])

    def meet(self, other):
        self._check(other)
        return TDivisor(self.fan, [min(a, b) for a, b in
                                   zip(self.coeffs, other.coeffs)])

    def is_effective(self):
        return all(a >= 0 for a in self.coeffs)

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def is_integral(self):
        return all(a.denominator == 1 for a in self.coeffs)

    @property
    def support(self):
        return [i for i, a in enumerate(self.coeffs) if a != 0]

    def cartier_data(self):
        """
        Solve <m_sigma, u_rho> = -a_rho on every maximal cone

        Returns
        -------
        CartierData

        Raises
        ------
        NotQCartierError
            Carrying the first cone whose system is inconsistent

        """
        if self._cartier is None:
            fan = self.fan
            functionals = {}
            for c in fan.cones:
                rows = [fan.rays[i] for i in c]
                rhs = [-self.coeffs[i] for i in c]
                m = solve(rows, rhs, fan.lattice_rank)
                if m is None:
                    raise NotQCartierError("{} is not Q-Cartier on cone {}"
                                           "".format(self, c), cone=c)
                functionals[c] = m
            self._cartier = CartierData(fan, functionals)
        return self._cartier

    def is_q_cartier(self):
        try:
            self.cartier_data()
        except NotQCartierError:
            return False
        return True

    def is_cartier(self):
        """Integral Cartier data on every maximal cone"""
        self.cartier_data()
        fan = self.fan
        for c in fan.cones:
            rhs = [-self.coeffs[i] for i in c]
            if any(Fraction(b).denominator != 1 for b in rhs):
                return False
            if integer_solve([fan.rays[i] for i in c], rhs,
                             fan.lattice_rank) is None:
                return False
        return True

    def cartier_index(self):
        """
        Smallest k >= 1 with kD Cartier

        Raises
        ------
        NotQCartierError
            If D is not Q-Cartier

        """
        self.cartier_data()
        den = common_denominator(self.coeffs)
        mults = [1]
        for c in self.fan.cones:
            for simplex in pulling_triangulation(self.fan.rays, list(c)):
                if simplex:
                    mults += [int(lattice_index(
                        [self.fan.rays[i] for i in simplex],
                        self.fan.lattice_rank))]
        bound = den * reduce(lcm, mults, 1)
        for k in range(1, bound + 1):
            if (k * self).is_cartier():
                return k
        raise RuntimeError("No Cartier multiple of {} up to {}"
                           "".format(self, bound))

    def order_along(self, v):
        """Coefficient of the valuation v in the pullback: -<m_sigma, v>"""
        return -self.cartier_data().evaluate(v)

    def linearly_equivalent(self, other):
        """
        A witness m with D1 - D2 = div(chi^m), or None
        """
        self._check(other)
        rows = list(self.fan.rays)
        rhs = [a - b for a, b in zip(self.coeffs, other.coeffs)]
        if not rows:
            return tuple() if all(r == 0 for r in rhs) else None
        return solve(rows, rhs, self.fan.lattice_rank)

    def to_list(self):
        return [rat_str(a) for a in self.coeffs]

    def __repr__(self):
        terms = ["{}*D{}".format(rat_str(a), i)
                 for i, a in enumerate(self.coeffs) if a != 0]
        return "TDivisor({})".format(" + ".join(terms) if terms else "0")


def canonical_divisor(fan):
    """K = -sum D_rho"""
    return TDivisor(fan, [-1] * fan.n_rays, name="K")
