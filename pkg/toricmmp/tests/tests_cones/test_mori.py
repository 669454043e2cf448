from fractions import Fraction

import pytest

from toricmmp.exceptions import NotNefError
from toricmmp.toric.divisor import TDivisor
from toricmmp.cones.mori import (mori_cone, nef_cone, is_nef, is_ample,
                                 is_ample_by_convexity, is_projective,
                                 ample_divisor, supporting_data,
                                 max_fiber_dimension,
                                 cone_theorem_decomposition)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_pair, _f1_pair,
                                                         _f1_fan, _f1_scaling,
                                                         _quadric_pair,
                                                         _f1xp1_pair)


@pytest.fixture(scope="function")
def f1():
    return _f1_pair()


class TestCones:
    def test_f1_mori_cone_has_two_rays(self, f1):
        ne = mori_cone(f1)
        assert ne.dim == 2
        assert len(ne.rays) == 2

    def test_nef_cone_is_dual(self, f1):
        nef = nef_cone(f1)
        assert nef.dim == 2
        assert len(nef.rays) == 2


class TestKleiman:
    def test_scaling_divisor_is_ample(self, f1):
        a = _f1_scaling()
        assert is_ample(a, f1)
        assert is_ample_by_convexity(a, f1)

    def test_fibre_class_is_nef_not_ample(self, f1):
        d = TDivisor.prime(_f1_fan(), 0)
        assert is_nef(d, f1)
        assert not is_ample(d, f1)
        assert not is_ample_by_convexity(d, f1)

    def test_log_canonical_of_quadric_is_negative_on_the_curve(self):
        p = _quadric_pair()
        assert not is_nef(p.log_canonical, p)
        assert is_nef(-p.log_canonical, p)
        crepant = p.with_boundary([0, 0, 0, 0])
        assert is_nef(crepant.log_canonical, crepant)
        assert not is_ample(crepant.log_canonical, crepant)


class TestProjectivity:
    @pytest.mark.parametrize("pair", [_p2_pair(), _f1_pair(),
                                      _quadric_pair(), _f1xp1_pair()])
    def test_examples_are_projective(self, pair):
        ok, h = is_projective(pair)
        assert ok
        assert is_ample(h, pair)
        assert ample_divisor(pair).fan is pair.fan


class TestSupportingData:
    def test_fibre_class_supports_the_fibre_ray(self, f1):
        data = supporting_data(TDivisor.prime(_f1_fan(), 0), f1)
        assert data["is_ray"]
        assert {c.wall for c in data["curves"]} == {(0,), (2,)}

    def test_throws_error_for_non_nef(self, f1):
        with pytest.raises(NotNefError):
            supporting_data(-TDivisor.prime(_f1_fan(), 0), f1)

    def test_throws_error_for_ample(self, f1):
        with pytest.raises(ValueError):
            supporting_data(_f1_scaling(), f1)


class TestMaxFiberDimension:
    @pytest.mark.parametrize("pair, b", [(_f1_pair(), 2),
                                         (_quadric_pair(), 1),
                                         (_f1xp1_pair(), 2)])
    def test_fibre_dimension(self, pair, b):
        assert max_fiber_dimension(pair) == b


class TestConeTheorem:
    def test_f1_has_two_negative_rays(self, f1):
        out = cone_theorem_decomposition(f1, ample=_f1_scaling())
        rays = sorted(out["negative_rays"], key=lambda r: r["length"])
        assert [r["length"] for r in rays] == [1, 2]
        assert rays[0]["ratio"] == -1
        assert rays[1]["ratio"] == Fraction(-3, 2)
        assert all(r["ok"] for r in rays)
        assert rays[1]["bound"] == 3

    def test_throws_error_for_non_klt(self):
        with pytest.raises(ValueError):
            cone_theorem_decomposition(_f1_pair([1, 0, 0, 0]))
