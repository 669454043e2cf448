"""
Lattice maps between fans: toric morphisms and birational maps
"""
from fractions import Fraction

from ..exactla.rational import primitive, dot, int_vec
from ..exactla.linalg import det


class LatticeMap:
    """
    An integer matrix N_source -> N_target with the two fans attached

    Parameters
    ----------
    matrix : list of rows
        ``len(matrix) == target.lattice_rank``, each row of length
        ``source.lattice_rank``
    source, target : Fan

    """
    def __init__(self, matrix, source, target):
        self.matrix = [int_vec(row) for row in matrix]
        self.source = source
        self.target = target
        self._preserves_support = None
        if len(self.matrix) != target.lattice_rank or \
                any(len(row) != source.lattice_rank for row in self.matrix):
            raise ValueError("Matrix shape does not match lattice ranks {} -> "
                             "{}".format(source.lattice_rank,
                                         target.lattice_rank))

    @classmethod
    def identity(cls, source, target=None):
        target = source if target is None else target
        n = source.lattice_rank
        return cls([[int(i == j) for j in range(n)] for i in range(n)],
                   source, target)

    def apply(self, v):
        return tuple(sum(Fraction(a) * Fraction(b) for a, b in zip(row, v))
                     for row in self.matrix)

    def apply_int(self, v):
        return int_vec(self.apply(v))

    @property
    def is_identity(self):
        return self.source.lattice_rank == self.target.lattice_rank and \
            all(self.matrix[i][j] == int(i == j)
                for i in range(len(self.matrix))
                for j in range(len(self.matrix)))

    @property
    def is_invertible(self):
        n = len(self.matrix)
        return n == self.source.lattice_rank and (n == 0 or
                                                  det(self.matrix) != 0)

    def image_cone(self, cone):
        """Smallest target cone containing the image of relint(cone)"""
        rays = self.source.rays
        n = self.source.lattice_rank
        p = tuple(sum(Fraction(rays[i][k]) for i in cone) for k in range(n))
        return self.target.minimal_cone_containing(self.apply(p))

    def is_fan_morphism(self):
        """Every source cone maps into some target cone"""
        for c in self.source.cones:
            images = [self.apply(self.source.rays[i]) for i in c]
            if not any(all(self.target.polycone(t).contains(w)
                           for w in images) for t in self.target.cones):
                return False
        return True

    def compose(self, other):
        """``self o other``: apply ``other`` first"""
        rows = [[sum(self.matrix[i][k] * other.matrix[k][j]
                     for k in range(len(other.matrix)))
                 for j in range(other.source.lattice_rank)]
                for i in range(len(self.matrix))]
        return LatticeMap(rows, other.source, self.target)

    def pullback_divisor(self, divisor):
        """
        Pull back a Q-Cartier divisor from the target fan

        The coefficient at a source ray u is -<m_tau, f(u)> for the target
        cone tau containing f(u).

        Raises
        ------
        NotQCartierError
            If ``divisor`` is not Q-Cartier
        ValueError
            If some source ray maps outside the target support

        """
        from .divisor import TDivisor
        data = divisor.cartier_data()
        coeffs = []
        for u in self.source.rays:
            w = self.apply(u)
            coeffs += [-data.evaluate(w)]
        return TDivisor(self.source, coeffs)

    def preserves_support(self):
        """True if the image of the source fan has the support of the target"""
        if self._preserves_support is None:
            from .fan import Fan
            image = Fan([primitive(self.apply(u)) for u in self.source.rays],
                        self.source.cones, self.target.lattice_rank)
            self._preserves_support = image.has_same_support(self.target)
        return self._preserves_support

    def birational_transform(self, divisor):
        """
        Push a divisor on the source fan to the target fan

        Coefficients are copied along rays that map to target rays. Target
        rays with no preimage get coefficient 0.

        Raises
        ------
        ValueError
            If the lattice map is not invertible over Q, or the two fans do
            not have the same support

        """
        from .divisor import TDivisor
        if not self.is_invertible:
            raise ValueError("Birational transform needs an invertible "
                             "lattice map")
        if not self.preserves_support():
            raise ValueError("Birational transform needs fans with the same "
                             "support: {} -> {}".format(
                                 self.source.meta.get("name"),
                                 self.target.meta.get("name")))
        images = {}
        for i, u in enumerate(self.source.rays):
            images[primitive(self.apply(u))] = divisor.coeffs[i]
        coeffs = [images.get(tuple(t), Fraction(0))
                  for t in self.target.rays]
        return TDivisor(self.target, coeffs)

    def exceptional_rays(self):
        """Source rays that do not map onto a target ray"""
        targets = {tuple(t) for t in self.target.rays}
        return [i for i, u in enumerate(self.source.rays)
                if primitive(self.apply(u)) not in targets]

    def __repr__(self):
        return "LatticeMap({})".format(self.matrix)
