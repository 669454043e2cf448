from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor, canonical_divisor
from toricmmp.chambers.polytopes import (DivisorSpan, polytope_l,
                                         compute_eav, compute_bsav)
from toricmmp.tests.mocks.py_objects.fan_objects import _p2_fan


@pytest.fixture(scope="function")
def span():
    return DivisorSpan(_p2_fan(), [0])


def _multiple(k):
    return k * TDivisor.prime(_p2_fan(), 0)


class TestDivisorSpan:
    def test_divisor_from_coordinates(self, span):
        assert span.divisor(["1/2"]).coeffs == (Fraction(1, 2), 0, 0)
        assert span.dim == 1

    def test_throws_error_for_repeated_basis(self):
        with pytest.raises(ValueError):
            DivisorSpan(_p2_fan(), [0, 0])

    def test_throws_error_for_missing_ray(self):
        with pytest.raises(ValueError):
            DivisorSpan(_p2_fan(), [3])

    def test_unit_cube(self, span):
        assert polytope_l(span).vertices == [(0,), (1,)]


class TestComputeEAV:
    @pytest.mark.parametrize("k, vertices", [(2, [(1,)]),
                                             (3, [(0,), (1,)])])
    def test_multiples_of_the_hyperplane(self, span, k, vertices):
        eav = compute_eav(canonical_divisor(_p2_fan()), _multiple(k), span)
        assert eav.vertices == vertices
        assert eav.meta["kind"] == "E_A(V)"

    def test_empty_for_the_hyperplane(self, span):
        eav = compute_eav(canonical_divisor(_p2_fan()), _multiple(1), span)
        assert eav.is_empty()


class TestComputeBSAV:
    def test_whole_cube_for_three_h(self, span):
        bsav = compute_bsav(1, _multiple(3), span)
        assert bsav.vertices == [(0,), (1,)]
        assert bsav.meta["S"] == 1

    def test_throws_error_when_s_is_in_the_span(self, span):
        with pytest.raises(ValueError):
            compute_bsav(0, _multiple(3), span)
