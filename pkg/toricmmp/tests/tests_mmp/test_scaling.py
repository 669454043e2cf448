from fractions import Fraction

import pytest

from toricmmp.toric.divisor import TDivisor
from toricmmp.mmp.scaling import (run_mmp_with_scaling,
                                  is_good_scaling_divisor,
                                  general_member_klt, crepant_coefficient,
                                  scaled_threshold_sequence,
                                  expected_outcome, MINIMAL_MODEL,
                                  MORI_FIBRATION)
from toricmmp.mmp.contraction import DIVISORIAL, FLIP, MORI_FIBER
from toricmmp.tests.mocks.py_objects.fan_objects import (_p2_fan, _f1_pair,
                                                         _f1_fan,
                                                         _f1_scaling,
                                                         _quadric_pair,
                                                         _quadric_flipped_fan,
                                                         _f1xp1_pair,
                                                         _f1xp1_scaling)


def _quadric_scaling():
    return TDivisor(_quadric_pair().fan, [0, 1, 0, 0], name="A")


@pytest.fixture(scope="module")
def f1_trace():
    return run_mmp_with_scaling(_f1_pair(), _f1_scaling())


@pytest.fixture(scope="module")
def quadric_trace():
    return run_mmp_with_scaling(_quadric_pair(), _quadric_scaling())


class TestGoodScalingDivisor:
    def test_f1_scaling_is_good(self):
        ok, witness = is_good_scaling_divisor(_f1_pair(), _f1_scaling())
        assert ok
        assert witness["reasons"] == []
        assert witness["big"] and witness["nef"]

    def test_non_nef_scaling_fails_two_conditions(self):
        ok, witness = is_good_scaling_divisor(_f1_pair(),
                                              _f1_scaling((1, 2, 0, 0)))
        assert not ok
        assert witness["reasons"] == ["ii", "iii"]

    def test_general_member_with_reduced_boundary(self):
        p = _f1_pair([1, 0, 0, 0])
        out = general_member_klt(p, p.boundary, _f1_scaling())
        assert out["reason"] == "boundary coefficient >= 1"

    def test_quadric_scaling_is_good(self):
        ok, witness = is_good_scaling_divisor(_quadric_pair(),
                                              _quadric_scaling())
        assert ok
        assert witness["A_prime"] is not None


class TestRunOnF1:
    def test_two_steps_with_thresholds(self, f1_trace):
        assert [s.kind for s in f1_trace.steps] == [DIVISORIAL, MORI_FIBER]
        assert f1_trace.lambdas == [1, Fraction(3, 4)]
        assert f1_trace.outcome == MORI_FIBRATION

    def test_first_step_lands_on_p2(self, f1_trace):
        step = f1_trace.steps[0]
        assert step.target.fan == _p2_fan()
        assert step.scaling_after.coeffs == (0, 1, 3)
        assert step.meta["dropped"] == [1]

    def test_models_and_fibration(self, f1_trace):
        assert len(f1_trace.models) == 2
        assert f1_trace.fibration is f1_trace.steps[-1]
        assert f1_trace.fibration.target.fan.lattice_rank == 0

    def test_crepant_coefficient_drops_at_e(self, f1_trace):
        before, after = f1_trace.steps[0].deltas[(1, 1)]
        assert before == 0
        assert after == -1

    def test_scaled_sequence_matches(self, f1_trace):
        assert scaled_threshold_sequence(f1_trace) == f1_trace.lambdas

    def test_summary_table(self, f1_trace):
        tbl = f1_trace.summary()
        assert len(tbl) == 2
        assert list(tbl["kind"]) == [DIVISORIAL, MORI_FIBER]
        assert tbl.meta["outcome"] == MORI_FIBRATION


class TestRunOnQuadric:
    def test_flip_then_minimal_model(self, quadric_trace):
        assert [s.kind for s in quadric_trace.steps] == [FLIP]
        assert quadric_trace.lambdas == [Fraction(1, 2)]
        assert quadric_trace.outcome == MINIMAL_MODEL
        assert quadric_trace.final.fan == _quadric_flipped_fan()

    def test_crepant_coefficient_at_the_diagonal(self, quadric_trace):
        before, after = quadric_trace.steps[0].deltas[(1, 1, 2)]
        assert before == Fraction(-1, 2)
        assert after == -1


class TestRunErrors:
    def test_throws_error_for_bad_scaling(self):
        with pytest.raises(ValueError) as err:
            run_mmp_with_scaling(_f1_pair(), _f1_scaling((1, 2, 0, 0)))
        assert err.value.witness["reasons"] == ["ii", "iii"]

    def test_throws_error_for_non_klt(self):
        with pytest.raises(ValueError):
            run_mmp_with_scaling(_f1_pair([1, 0, 0, 0]), _f1_scaling())


class TestRelativeRun:
    def test_f1xp1_contracts_e_times_p1(self):
        trace = run_mmp_with_scaling(_f1xp1_pair(), _f1xp1_scaling())
        assert trace.steps[0].kind == DIVISORIAL
        assert trace.lambdas[0] == 1
        assert (1, 1, 0) not in trace.steps[0].target.fan.rays


class TestMisc:
    def test_crepant_coefficient_of_a_ray(self):
        p = _f1_pair(["1/2", 0, 0, 0])
        assert crepant_coefficient(p, (1, 0)) == Fraction(1, 2)

    def test_expected_outcomes(self):
        assert expected_outcome(_f1_pair()) == MORI_FIBRATION
        assert expected_outcome(_quadric_pair()) == MINIMAL_MODEL
