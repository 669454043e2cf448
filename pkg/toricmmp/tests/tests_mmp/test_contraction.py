import pytest

from toricmmp.exceptions import ContractionError
from toricmmp.toric.divisor import TDivisor
from toricmmp.cones.numerical import contracted_curves
from toricmmp.mmp.contraction import (contract_ray, contract_face,
                                      face_walls, DIVISORIAL, FLIP,
                                      MORI_FIBER)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_pair, _p2_fan,
                                                         _f1_pair, _f1_fan,
                                                         _quadric_pair,
                                                         _quadric_cone_fan)


def _curve(p, wall):
    return [c for c in contracted_curves(p) if c.wall == wall][0]


class TestDivisorial:
    def test_contracting_e_gives_p2(self):
        p = _f1_pair()
        con = contract_ray(p, _curve(p, (1,)))
        assert con.kind == DIVISORIAL
        assert con.dropped == [1]
        assert con.target.fan == _p2_fan()
        assert con.is_birational


class TestFiberType:
    def test_contracting_the_fibre_gives_p1(self):
        p = _f1_pair()
        con = contract_ray(p, _curve(p, (0,)))
        assert con.kind == MORI_FIBER
        assert con.target.fan.lattice_rank == 1
        assert len(con.target.fan.rays) == 2
        assert not con.is_birational

    def test_contracting_a_line_gives_a_point(self):
        p = _p2_pair()
        con = contract_ray(p, contracted_curves(p)[0])
        assert con.kind == MORI_FIBER
        assert con.target.fan.lattice_rank == 0

    def test_fibre_walls(self):
        p = _f1_pair()
        walls = [c.wall for c in face_walls(p, [_curve(p, (0,))])]
        assert walls == [(0,), (2,)]


class TestSmall:
    def test_quadric_contraction_is_small(self):
        p = _quadric_pair()
        (c,) = contracted_curves(p)
        con = contract_ray(p, c)
        assert con.kind == FLIP
        assert con.dropped == []
        assert con.target.fan == _quadric_cone_fan()
        assert not con.target.fan.is_q_factorial()


class TestSupportingDivisor:
    def test_fibre_class_supports_the_fibre(self):
        p = _f1_pair()
        con = contract_ray(p, _curve(p, (0,)),
                           supporting=TDivisor.prime(_f1_fan(), 0))
        assert con.kind == MORI_FIBER

    def test_throws_error_for_wrong_support(self):
        p = _f1_pair()
        with pytest.raises(ContractionError):
            contract_ray(p, _curve(p, (1,)),
                         supporting=TDivisor.prime(_f1_fan(), 0))

    def test_throws_error_for_empty_face(self):
        with pytest.raises(ContractionError):
            contract_face(_f1_pair(), [])
