from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.toric.sections import (section_polyhedron, is_effective_class,
                                     global_sections, fixed_part, volume)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_fan, _f1_fan,
                                                         _quadrant_fan)


@pytest.fixture(scope="function")
def hyperplane():
    return TDivisor.prime(_p2_fan(), 0)


class TestSectionPolyhedron:
    def test_hyperplane_gives_a_triangle(self, hyperplane):
        poly = section_polyhedron(hyperplane)
        assert len(poly.vertices) == 3
        assert poly.meta["divisor"] is hyperplane

    def test_three_sections(self, hyperplane):
        assert len(global_sections(hyperplane)) == 3
        assert len(global_sections(2 * hyperplane)) == 6

    def test_negative_class_is_not_effective(self, hyperplane):
        assert is_effective_class(hyperplane)
        assert not is_effective_class(-hyperplane)


class TestFixedPart:
    def test_hyperplane_is_free(self, hyperplane):
        assert fixed_part(hyperplane).is_zero()

    def test_exceptional_curve_is_fixed(self):
        e = TDivisor.prime(_f1_fan(), 1)
        assert fixed_part(e).coeffs == (0, 1, 0, 0)

    def test_throws_error_for_empty_system(self, hyperplane):
        with pytest.raises(ValueError):
            fixed_part(-hyperplane)


class TestVolume:
    def test_volume_of_multiples(self, hyperplane):
        assert volume(hyperplane) == 1
        assert volume(2 * hyperplane) == 4
        assert volume(Fraction(1, 2) * hyperplane) == Fraction(1, 4)

    def test_exceptional_curve_has_zero_volume(self):
        assert volume(TDivisor.prime(_f1_fan(), 1)) == 0

    def test_throws_error_for_non_complete(self):
        with pytest.raises(ValueError):
            volume(TDivisor.prime(_quadrant_fan(), 0))
