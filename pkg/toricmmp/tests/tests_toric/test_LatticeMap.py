import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.toric.lattice_map import LatticeMap
from toricmmp.tests.mocks.py_objects.fan_objects import (
    _p2_fan, _p1_fan, _f1xp1_fan, _quadrant_fan, _quadric_small_fan,
    _quadric_flipped_fan)


@pytest.fixture(scope="function")
def blowup():
    p2 = _p2_fan()
    fan, f = p2.star_subdivision((1, 1))
    return fan, f, p2


class TestInit:
    def test_throws_error_for_wrong_shape(self):
        with pytest.raises(ValueError):
            LatticeMap([[1, 0]], _p2_fan(), _p2_fan())

    def test_identity(self):
        f = LatticeMap.identity(_p2_fan())
        assert f.is_identity
        assert f.is_invertible
        assert f.apply((2, 3)) == (2, 3)


class TestFanMorphism:
    def test_projection_to_p1_is_a_morphism(self):
        f = LatticeMap([[0, 0, 1]], _f1xp1_fan(), _p1_fan())
        assert f.is_fan_morphism()
        assert not f.is_invertible

    def test_projection_of_p2_is_not_a_morphism(self):
        f = LatticeMap([[1, 0]], _p2_fan(), _p1_fan())
        assert not f.is_fan_morphism()

    def test_image_cone(self, blowup):
        fan, f, _ = blowup
        assert f.image_cone((3,)) == (0, 1)

    def test_compose_with_identity(self, blowup):
        fan, f, p2 = blowup
        g = LatticeMap.identity(p2).compose(f)
        assert g.source is fan
        assert g.matrix == f.matrix


class TestDivisors:
    def test_pullback_of_hyperplane_through_the_point(self, blowup):
        fan, f, p2 = blowup
        pulled = f.pullback_divisor(TDivisor.prime(p2, 0))
        assert pulled.coeffs == (1, 0, 0, 1)

    def test_pullback_of_hyperplane_away_from_the_point(self, blowup):
        fan, f, p2 = blowup
        pulled = f.pullback_divisor(TDivisor.prime(p2, 2))
        assert pulled.coeffs == (0, 0, 1, 0)

    def test_birational_transform_drops_exceptional(self, blowup):
        fan, f, p2 = blowup
        pushed = f.birational_transform(TDivisor(fan, [1, 2, 3, 4]))
        assert pushed.coeffs == (1, 2, 3)
        assert f.exceptional_rays() == [3]

    def test_birational_transform_needs_invertible_map(self):
        f = LatticeMap([[0, 0, 1]], _f1xp1_fan(), _p1_fan())
        with pytest.raises(ValueError):
            f.birational_transform(TDivisor.zero(_f1xp1_fan()))

    def test_birational_transform_needs_the_same_support(self):
        f = LatticeMap.identity(_p2_fan(), _quadrant_fan())
        assert f.is_invertible
        assert not f.preserves_support()
        with pytest.raises(ValueError):
            f.birational_transform(TDivisor.prime(_p2_fan(), 0))

    def test_flop_preserves_the_support(self):
        f = LatticeMap.identity(_quadric_small_fan(), _quadric_flipped_fan())
        assert f.preserves_support()
        pushed = f.birational_transform(TDivisor(f.source, [1, 2, 3, 4]))
        assert pushed.coeffs == (1, 2, 3, 4)
