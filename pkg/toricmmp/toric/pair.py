"""
Log pairs (X, Delta), optionally relative to a toric base
"""
from ..base_classes import PairBase
from .fan import Fan
from .divisor import TDivisor, canonical_divisor
from .lattice_map import LatticeMap


class Pair(PairBase):
    """
    A toric pair (X, Delta) over a base Z

    Parameters
    ----------
    fan : Fan
        The fan of X
    boundary : TDivisor or list, optional
        Delta, with coefficients >= 0. Default 0.
    base : Fan, optional
        The fan of Z. Default: a point.
    base_map : LatticeMap or matrix, optional
        The map N_X -> N_Z. Required when ``base`` is not a point.

    """
    def __init__(self, fan, boundary=None, base=None, base_map=None,
                 **kwargs):
        self.fan = fan
        if boundary is None:
            boundary = TDivisor.zero(fan)
        elif not isinstance(boundary, TDivisor):
            boundary = TDivisor(fan, boundary)
        if boundary.fan is not fan and boundary.fan != fan:
            raise ValueError("Boundary lives on a different fan")
        if any(a < 0 for a in boundary.coeffs):
            raise ValueError("Boundary coefficients must be >= 0: {}"
                             "".format(boundary))
        self.boundary = TDivisor(fan, boundary.coeffs, name="Delta")

        if base is None:
            base = Fan.point()
        self.base = base
        if base_map is None:
            if base.lattice_rank != 0:
                raise ValueError("A base_map is needed for a non-point base")
            base_map = LatticeMap([], fan, base)
        elif not isinstance(base_map, LatticeMap):
            base_map = LatticeMap(base_map, fan, base)
        if not base_map.is_fan_morphism():
            raise ValueError("base_map does not map cones into cones")
        self.base_map = base_map
        self.meta = {"name": kwargs.get("name", fan.meta.get("name"))}

    @property
    def canonical(self):
        return canonical_divisor(self.fan)

    @property
    def log_canonical(self):
        """K + Delta"""
        return self.canonical + self.boundary

    @property
    def is_relative(self):
        return self.base.lattice_rank > 0

    def divisor(self, coeffs):
        return TDivisor(self.fan, coeffs)

    def with_boundary(self, boundary):
        return Pair(self.fan, boundary, self.base, self.base_map.matrix,
                    name=self.meta["name"])

    def with_fan(self, fan, boundary=None):
        """Same base and base matrix on a new fan of the same lattice"""
        return Pair(fan, boundary, self.base, self.base_map.matrix,
                    name=self.meta["name"])

    def over(self, base, base_map):
        return Pair(self.fan, self.boundary, base, base_map,
                    name=self.meta["name"])

    def __repr__(self):
        return "Pair(fan={}, boundary={}, base_rank={})".format(
            self.fan, self.boundary, self.base.lattice_rank)
