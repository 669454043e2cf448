from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.cones.numerical import (NumSpace, contracted_curves,
                                      contracted_walls, intersection_number,
                                      cartier_degree)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_pair, _f1_pair,
                                                         _f1_scaling,
                                                         _quadric_pair,
                                                         _f1xp1_pair)


def _vectors(p):
    return {c.wall: c.vector for c in contracted_curves(p)}


class TestContractedCurves:
    def test_lines_on_p2(self):
        vecs = _vectors(_p2_pair())
        assert len(vecs) == 3
        assert all(v == (1, 1, 1) for v in vecs.values())

    def test_f1_exceptional_curve_and_fibre(self):
        vecs = _vectors(_f1_pair())
        assert vecs[(1,)] == (1, -1, 1, 0)
        assert vecs[(0,)] == (0, 1, 0, 1)
        assert vecs[(2,)] == (0, 1, 0, 1)

    def test_quadric_flipping_curve(self):
        vecs = _vectors(_quadric_pair())
        assert vecs == {(0, 2): (-1, 1, -1, 1)}

    def test_only_fibre_curves_over_p1(self):
        walls = contracted_walls(_f1xp1_pair())
        assert len(walls) == 8
        assert all(4 in w or 5 in w for w, _ in walls)


class TestIntersectionNumber:
    def test_scaling_divisor_on_f1(self):
        a = _f1_scaling()
        vecs = {c.wall: c for c in contracted_curves(_f1_pair())}
        assert intersection_number(a, vecs[(1,)]) == 1
        assert intersection_number(a, vecs[(0,)]) == 3

    def test_canonical_degree_on_e(self):
        p = _f1_pair()
        e = [c for c in contracted_curves(p) if c.wall == (1,)][0]
        assert intersection_number(p.canonical, e) == -1

    def test_cartier_degree_agrees(self):
        p = _f1_pair()
        a = _f1_scaling()
        for c in contracted_curves(p):
            assert cartier_degree(a, c) == intersection_number(a, c)

    def test_log_canonical_on_flipping_curve(self):
        p = _quadric_pair()
        (c,) = contracted_curves(p)
        assert intersection_number(p.log_canonical, c) == Fraction(-1, 2)


class TestNumSpace:
    def test_ranks(self):
        assert NumSpace(_p2_pair()).rank == 1
        assert NumSpace(_f1_pair()).rank == 2
        assert NumSpace(_quadric_pair()).rank == 1
        assert NumSpace(_f1xp1_pair()).rank_n1 == 2

    def test_class_round_trip(self):
        p = _f1_pair()
        ns = NumSpace(p)
        y = ns.divisor_to_class(_f1_scaling())
        d = ns.divisor_from_class(y)
        assert ns.divisor_to_class(d) == y

    def test_mori_generators_are_unique(self):
        ns = NumSpace(_p2_pair())
        assert len(ns.curves) == 3
        assert len(ns.mori_generators()) == 1

    def test_pairing_matrix_shape(self):
        ns = NumSpace(_f1_pair())
        mat = ns.pairing_matrix()
        assert len(mat) == 4
        assert all(len(row) == 2 for row in mat)

    def test_throws_error_for_foreign_curve(self):
        ns = NumSpace(_quadric_pair())
        with pytest.raises(ValueError):
            ns.curve_coordinates((1, 0, 0, 0))
