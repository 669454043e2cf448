from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.chambers.orders import (asymptotic_order, stable_fixed_part,
                                      valuation_family, support_cone,
                                      chamber_decomposition, nef_chamber,
                                      nef_preimage)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_fan, _f1_fan,
                                                         _f1_pair)


@pytest.fixture(scope="function")
def e():
    return TDivisor.prime(_f1_fan(), 1)


@pytest.fixture(scope="function")
def fibre():
    return TDivisor.prime(_f1_fan(), 0)


@pytest.fixture(scope="function")
def f1_chambers(fibre, e):
    sc = support_cone([fibre, e])
    return chamber_decomposition(sc, [(1, 1)])


class TestAsymptoticOrder:
    def test_exceptional_curve_along_itself(self, e):
        assert asymptotic_order((1, 1), e) == 1
        assert asymptotic_order((1, 0), e) == 0

    def test_free_divisor_has_zero_orders(self, fibre):
        assert all(asymptotic_order(v, fibre) == 0
                   for v in valuation_family(_f1_fan()))

    def test_non_effective_class_is_none(self):
        assert asymptotic_order((1, 0),
                                -TDivisor.prime(_p2_fan(), 0)) is None

    def test_stable_fixed_part(self, e):
        assert stable_fixed_part(e).coeffs == (0, 1, 0, 0)
        assert stable_fixed_part(TDivisor.prime(_p2_fan(), 0)).is_zero()


class TestValuationFamily:
    def test_p2_rays_and_sums(self):
        vals = valuation_family(_p2_fan())
        assert len(vals) == 6
        assert (1, 1) in vals and (-1, 0) in vals


class TestSupportCone:
    def test_effective_pair_spans_the_quadrant(self, fibre, e):
        sc = support_cone([fibre, e])
        assert sc.dim == 2
        assert sorted(sc.rays) == [(0, 1), (1, 0)]
        assert sc.meta["divisors"] == [fibre, e]

    def test_anti_effective_gives_the_origin(self):
        sc = support_cone([-TDivisor.prime(_p2_fan(), 0)])
        assert sc.dim == 0

    def test_throws_error_for_no_divisors(self):
        with pytest.raises(ValueError):
            support_cone([])


class TestChamberDecomposition:
    def test_two_chambers_split_by_the_diagonal(self, f1_chambers):
        assert len(f1_chambers) == 2
        assert f1_chambers.evaluate(0, (1, 2)) == 1
        assert f1_chambers.evaluate(0, (2, 1)) == 0
        assert f1_chambers.evaluate(0, (1, 3)) == 2

    def test_diagonal_lies_in_both_cells(self, f1_chambers):
        assert len(f1_chambers.locate((1, 1))) == 2

    def test_coarseness(self, f1_chambers):
        certified, pairs = f1_chambers.coarseness_certificate()
        assert certified
        assert len(pairs) == 1

    def test_summary(self, f1_chambers):
        tbl = f1_chambers.summary()
        assert len(tbl) == 2
        assert sorted(tbl["nonzero_orders"]) == [0, 1]

    def test_full_test_family_keeps_two_cells(self, fibre, e):
        sc = support_cone([fibre, e])
        cd = chamber_decomposition(sc, valuation_family(_f1_fan()))
        assert len(cd) == 2


class TestNefChamber:
    def test_nef_cell_holds_fibre_heavy_classes(self, f1_chambers):
        idx = nef_chamber(f1_chambers, _f1_pair())
        assert idx == f1_chambers.locate((3, 1))[0]

    def test_nef_cell_is_the_nef_preimage(self, f1_chambers):
        idx, cert = nef_chamber(f1_chambers, _f1_pair(), certificate=True)
        assert cert["equals_nef_preimage"]
        assert cert["orders_vanish"]
        assert f1_chambers.cells[idx] == cert["nef_preimage"]
        assert f1_chambers.cells[idx] == \
            nef_preimage(f1_chambers, _f1_pair())

    def test_coarse_cell_fails_the_preimage_check(self, fibre, e):
        # without o_E the quadrant stays one cell, larger than Nef
        cd = chamber_decomposition(support_cone([fibre, e]), [(1, 0)])
        idx, cert = nef_chamber(cd, _f1_pair(), certificate=True)
        assert idx == 0
        assert not cert["equals_nef_preimage"]
        assert cert["witness"] is not None

    def test_nef_preimage(self, f1_chambers):
        cone = nef_preimage(f1_chambers, _f1_pair())
        assert cone.contains((2, 1))
        assert not cone.contains((1, 2))
