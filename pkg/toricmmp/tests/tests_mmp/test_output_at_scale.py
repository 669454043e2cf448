from fractions import Fraction

import pytest

from toricmmp.mmp.scaling import (output_at_scale,
                                  verify_output_characterization,
                                  matches_output)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_fan, _f1_pair,
                                                         _f1_fan,
                                                         _f1_scaling,
                                                         _quadric_pair,
                                                         _quadric_small_fan,
                                                         _quadric_flipped_fan)
from toricmmp.toric.divisor import TDivisor


class TestOutputAtScale:
    @pytest.mark.parametrize("r", ["7/8", 1, "4/5"])
    def test_p2_between_the_thresholds(self, r):
        out = output_at_scale(_f1_pair(), _f1_scaling(), r)
        assert out.fan == _p2_fan()
        assert out.meta["thresholds"] == [1]

    @pytest.mark.parametrize("r", ["3/2", 2])
    def test_f1_above_the_first_threshold(self, r):
        out = output_at_scale(_f1_pair(), _f1_scaling(), r)
        assert out.fan == _f1_fan()
        assert out.meta["thresholds"] == []

    @pytest.mark.parametrize("r", ["3/4", "1/2", 0])
    def test_throws_error_at_the_fibration(self, r):
        with pytest.raises(ValueError):
            output_at_scale(_f1_pair(), _f1_scaling(), r)

    def test_throws_error_for_negative_scale(self):
        with pytest.raises(ValueError):
            output_at_scale(_f1_pair(), _f1_scaling(), -1)

    def test_scale_zero_is_the_minimal_model(self):
        p = _quadric_pair()
        a = TDivisor(p.fan, [0, 1, 0, 0])
        out = output_at_scale(p, a, 0)
        assert out.fan == _quadric_flipped_fan()
        assert out.meta["scale"] == 0


class TestCharacterization:
    def test_p2_is_the_output_at_seven_eighths(self):
        p, a = _f1_pair(), _f1_scaling()
        out = output_at_scale(p, a, "7/8")
        report = verify_output_characterization(p, out, a, "7/8")
        assert report["all_passed"]

    def test_f1_is_not_ample_at_seven_eighths(self):
        p, a = _f1_pair(), _f1_scaling()
        report = verify_output_characterization(p, p, a, Fraction(7, 8))
        assert report["birational_contraction"]["passed"]
        assert not report["ample"]["passed"]
        assert not report["all_passed"]

    def test_matches_output(self):
        p, a = _f1_pair(), _f1_scaling()
        out = output_at_scale(p, a, 1)
        assert matches_output(p, out, a, "7/8")
        assert not matches_output(p, p, a, "7/8")

    def test_flipped_fan_at_scale_zero(self):
        p = _quadric_pair()
        a = TDivisor(p.fan, [0, 1, 0, 0])
        plus = p.with_fan(_quadric_flipped_fan(), p.boundary.coeffs)
        assert verify_output_characterization(p, plus, a, 0)["all_passed"]
        small = p.with_fan(_quadric_small_fan(), p.boundary.coeffs)
        assert not verify_output_characterization(p, small, a, 0)[
            "all_passed"]
