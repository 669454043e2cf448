from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.mmp.threshold import (nef_threshold, threshold_face,
                                    select_extremal_ray,
                                    rationality_certificate)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_pair, _p2_fan,
                                                         _f1_pair,
                                                         _f1_scaling,
                                                         _quadric_pair)


class TestNefThreshold:
    def test_f1_threshold_is_one(self):
        assert nef_threshold(_f1_pair(), _f1_scaling()) == 1

    def test_quadric_threshold_is_one_half(self):
        a = TDivisor(_quadric_pair().fan, [0, 1, 0, 0])
        assert nef_threshold(_quadric_pair(), a) == Fraction(1, 2)

    def test_throws_error_when_k_plus_a_is_not_nef(self):
        with pytest.raises(ValueError):
            nef_threshold(_p2_pair(), TDivisor.prime(_p2_fan(), 0),
                          rescale=False)

    def test_rescale_warns_and_returns_three(self):
        with pytest.warns(UserWarning):
            lam = nef_threshold(_p2_pair(), TDivisor.prime(_p2_fan(), 0),
                                rescale=True)
        assert lam == 3

    def test_nef_log_canonical_has_threshold_zero(self):
        p = _quadric_pair()
        plus = p.with_fan(p.fan, [0, 0, 0, 0])
        a = TDivisor(plus.fan, [0, 0, 0, 0])
        assert nef_threshold(plus, a) == 0


class TestExtremalRay:
    def test_face_at_one_is_the_exceptional_curve(self):
        face = threshold_face(_f1_pair(), _f1_scaling(), 1)
        assert [c.wall for c in face] == [(1,)]

    def test_selects_the_exceptional_curve(self):
        c = select_extremal_ray(_f1_pair(), _f1_scaling(), 1)
        assert c.wall == (1,)
        assert c.vector == (1, -1, 1, 0)

    def test_throws_error_at_zero(self):
        with pytest.raises(ValueError):
            select_extremal_ray(_f1_pair(), _f1_scaling(), 0)

    def test_throws_error_without_a_ray(self):
        with pytest.raises(ValueError):
            select_extremal_ray(_f1_pair(), _f1_scaling(), Fraction(1, 3))


class TestRationalityCertificate:
    def test_f1_certificate(self):
        cert = rationality_certificate(_f1_pair(), _f1_scaling())
        assert cert["lambda"] == 1
        assert cert["r"] == 1
        assert cert["a"] == 1 and cert["b"] == 2
        assert cert["bound"] == 3
        assert cert["applicable"] and cert["ok"]

    def test_second_threshold_on_p2(self):
        a = 4 * TDivisor.prime(_p2_fan(), 0)
        cert = rationality_certificate(_p2_pair(), a)
        assert cert["lambda"] == Fraction(3, 4)
        assert cert["denominator"] == 3
        assert cert["ok"]
