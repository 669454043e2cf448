from fractions import Fraction

import pytest

from toricmmp.exceptions import GlueError
from toricmmp.toric.divisor import TDivisor
from toricmmp.toric.pair import Pair
from toricmmp.mmp.scaling import output_at_scale
from toricmmp.gluing.cover import affine_cover, restrict_family
from toricmmp.gluing.glue import (LocalRun, MismatchReport, run_local_mmps,
                                  glue_outputs, base_change_check)
from toricmmp.tests.mocks.py_objects.fan_objects import (_p1_fan,
                                                         _f1xp1_fan,
                                                         _f1xp1_pair,
                                                         _f1xp1_scaling)

R = Fraction(7, 8)


@pytest.fixture(scope="module")
def local_runs():
    cover = affine_cover(_p1_fan())
    return run_local_mmps(_f1xp1_pair(), _f1xp1_scaling(), cover, ["7/8"])


class TestRunLocalMMPs:
    def test_one_run_per_patch(self, local_runs):
        assert [run.patch_id for run in local_runs] == [0, 1]
        assert all(R in run.outputs for run in local_runs)

    def test_local_outputs_pass_their_checks(self, local_runs):
        assert all(run.checks[R]["all_passed"] for run in local_runs)

    def test_local_outputs_contract_the_negative_section(self, local_runs):
        for run in local_runs:
            assert run.outputs[R].fan.n_rays == run.pair.fan.n_rays - 1
            assert (1, 1, 0) not in run.outputs[R].fan.rays

    def test_throws_error_for_bad_scaling(self):
        bad = TDivisor(_f1xp1_fan(), [1, 2, 0, 0, 0, 0])
        with pytest.raises(GlueError) as err:
            run_local_mmps(_f1xp1_pair(), bad, affine_cover(_p1_fan()),
                           [R])
        assert err.value.patch == 0
        assert err.value.witness["reasons"]


class TestGlueOutputs:
    def test_glued_model_is_the_global_output(self, local_runs):
        glued = glue_outputs(local_runs, R, affine_cover(_p1_fan()))
        assert isinstance(glued, Pair)
        assert glued.meta["scale"] == R
        expected = output_at_scale(_f1xp1_pair(), _f1xp1_scaling(), R)
        assert glued.fan == expected.fan

    def test_glued_model_restricts_to_local_outputs(self, local_runs):
        cover = affine_cover(_p1_fan())
        glued = glue_outputs(local_runs, R, cover)
        for run in local_runs:
            assert restrict_family(glued, run.patch).fan == \
                run.outputs[R].fan

    def test_disagreeing_outputs_give_a_mismatch(self):
        cover = affine_cover(_p1_fan())
        runs = []
        for k, patch in enumerate(cover.patches):
            q = restrict_family(_f1xp1_pair(), patch)
            a = q.meta["restriction"]["divisor_map"](_f1xp1_scaling())
            run = LocalRun(k, patch, q, a)
            # patch 0 keeps the negative section, patch 1 contracts it
            run.outputs[R] = q if k == 0 else output_at_scale(q, a, R)
            runs += [run]
        report = glue_outputs(runs, R, cover)
        assert isinstance(report, MismatchReport)
        assert report.patches == (0, 1)
        assert report.overlap == [()]
        assert len(report.summary()) == 2

    def test_throws_error_for_no_runs(self):
        with pytest.raises(ValueError):
            glue_outputs([], R, affine_cover(_p1_fan()))


class TestBaseChange:
    @pytest.mark.parametrize("patch", [[(0,)], [(1,)]])
    def test_output_commutes_with_restriction(self, patch):
        assert base_change_check(_f1xp1_pair(), _f1xp1_scaling(), patch, R)
