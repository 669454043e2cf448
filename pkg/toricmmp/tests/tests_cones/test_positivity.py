from toricmmp.toric.divisor import TDivisor
from toricmmp.cones.mori import is_ample
from toricmmp.cones.positivity import (is_big, kodaira_decompose,
                                       is_pseudoeffective)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_pair, _p2_fan,
                                                         _f1_pair, _f1_fan,
                                                         _f1xp1_pair,
                                                         _f1xp1_scaling)


class TestIsBig:
    def test_hyperplane_is_big(self):
        assert is_big(TDivisor.prime(_p2_fan(), 0), _p2_pair())

    def test_fibre_is_not_big(self):
        assert not is_big(TDivisor.prime(_f1_fan(), 0), _f1_pair())

    def test_relative_scaling_divisor_is_big(self):
        assert is_big(_f1xp1_scaling(), _f1xp1_pair())


class TestKodairaDecompose:
    def test_ample_divisor_is_its_own_ample_part(self):
        h = TDivisor.prime(_p2_fan(), 0)
        a, e, m0 = kodaira_decompose(h, _p2_pair())
        assert a == h
        assert e.is_zero()

    def test_non_big_gives_none(self):
        assert kodaira_decompose(TDivisor.prime(_f1_fan(), 0),
                                 _f1_pair()) is None

    def test_big_non_ample_splits(self):
        fan = _f1_fan()
        d = TDivisor(fan, [1, 1, 0, 0])
        a, e, m0 = kodaira_decompose(d, _f1_pair())
        assert is_ample(a, _f1_pair())
        assert e.is_effective()
        assert (a + e).linearly_equivalent(d) is not None


class TestPseudoeffective:
    def test_exceptional_curve_is_pseudoeffective(self):
        assert is_pseudoeffective(TDivisor.prime(_f1_fan(), 1), _f1_pair())

    def test_negative_fibre_is_not(self):
        assert not is_pseudoeffective(-TDivisor.prime(_f1_fan(), 0),
                                      _f1_pair())
