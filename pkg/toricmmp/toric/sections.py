"""
Section polyhedra P_D, effectivity, fixed parts and volumes
"""
from fractions import Fraction
from math import factorial

from ..exactla.rational import dot, qvec
from ..exactla.polycone import Polyhedron
from ..exactla.polycone_utils import (lattice_points, polytope_volume,
                                      relative_interior_point)
from .divisor import TDivisor


def section_polyhedron(divisor, p=None):
    """
    P_D = {m : <m, u_rho> >= -coeff(rho) for all rays}

    The same inequalities are used over an affine base, where P_D may be
    unbounded.
    """
    fan = divisor.fan
    ineqs = [(qvec(u), -a) for u, a in zip(fan.rays, divisor.coeffs)]
    poly = Polyhedron(ineqs, dim=fan.lattice_rank)
    poly.meta["divisor"] = divisor
    return poly


def is_effective_class(divisor):
    """|D|_Q is nonempty iff P_D is nonempty"""
    return relative_interior_point(section_polyhedron(divisor)) is not None


effectivity = is_effective_class


def global_sections(divisor):
    """Lattice points of P_D, a basis of H^0(X, O(D)) for bounded P_D"""
    return lattice_points(section_polyhedron(divisor))


def fixed_part(divisor):
    """
    Fix|D|: coefficient min over lattice points m of P_D of <m,u>+a

    Raises
    ------
    ValueError
        If P_D is unbounded or has no lattice points

    """
    pts = global_sections(divisor)
    if not pts:
        raise ValueError("The linear system of {} is empty".format(divisor))
    fan = divisor.fan
    coeffs = [min(dot(qvec(m), qvec(u)) + a for m in pts)
              for u, a in zip(fan.rays, divisor.coeffs)]
    return TDivisor(fan, coeffs, name="Fix")


def volume(divisor):
    """
    vol(D) = n! * euclidean volume of P_D on a complete fan

    Raises
    ------
    ValueError
        If the fan is not complete

    """
    fan = divisor.fan
    if not fan.is_complete():
        raise ValueError("volume needs a complete fan")
    poly = section_polyhedron(divisor)
    if poly.is_empty() or poly.dim < fan.lattice_rank:
        return Fraction(0)
    return factorial(fan.lattice_rank) * polytope_volume(poly)
