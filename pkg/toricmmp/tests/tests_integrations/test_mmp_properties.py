"""Thresholds, termination and the discrepancy ledger on random pairs"""
import warnings

import pytest

from toricmmp import rc
from toricmmp.exactla.rational import common_denominator
from toricmmp.cones.numerical import NumSpace
from toricmmp.cones.mori import ample_divisor
from toricmmp.mmp.contraction import DIVISORIAL, FLIP
from toricmmp.mmp.threshold import nef_threshold, rationality_certificate
from toricmmp.mmp.scaling import (run_mmp_with_scaling, expected_outcome,
                                  is_good_scaling_divisor)
from toricmmp.mmp.ledger import discrepancy_ledger

if rc.__config__["!SIM.tests.run_integration_tests"] is False:
    pytestmark = pytest.mark.skip("Ignoring the random instance suites")


def _scaling(p):
    """An integral ample H, multiplied so that K + Delta + A is nef"""
    h = ample_divisor(p)
    h = common_denominator(h.coeffs) * h
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lam = nef_threshold(p, h, rescale=True)
    return h if lam <= 1 else lam * h


@pytest.fixture(scope="module")
def traces(random_pairs):
    return [(p, run_mmp_with_scaling(p, _scaling(p), rescale=False))
            for p in random_pairs]


class TestRationality:
    def test_thresholds_meet_the_denominator_bound(self, random_pairs):
        for p in random_pairs:
            h = ample_divisor(p)
            h = common_denominator(h.coeffs) * h
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                lam = nef_threshold(p, h, rescale=True)
            cert = rationality_certificate(p, h, lam)
            assert cert["ok"]
            if cert["applicable"]:
                assert cert["denominator"] <= cert["bound"]


class TestTermination:
    def test_scalings_are_good(self, random_pairs):
        for p in random_pairs:
            ok, witness = is_good_scaling_divisor(p, _scaling(p))
            assert ok, witness["reasons"]

    def test_outcome_matches_pseudoeffectivity(self, traces):
        for p, trace in traces:
            assert trace.outcome == expected_outcome(p)

    def test_thresholds_never_increase(self, traces):
        for _, trace in traces:
            lams = trace.lambdas
            assert all(a >= b for a, b in zip(lams, lams[1:]))

    def test_picard_rank_drops_only_on_divisorial_steps(self, traces):
        for _, trace in traces:
            steps = trace.steps
            for s, t in zip(steps, steps[1:]):
                if s.kind == DIVISORIAL:
                    assert t.meta["rank_n1"] == s.meta["rank_n1"] - 1
                elif s.kind == FLIP:
                    assert t.meta["rank_n1"] == s.meta["rank_n1"]
            if steps and steps[-1].is_birational:
                assert NumSpace(trace.final).rank == \
                    steps[-1].meta["rank_n1"] - \
                    (1 if steps[-1].kind == DIVISORIAL else 0)


class TestLedger:
    def test_ledger_holds_along_every_trace(self, traces):
        for _, trace in traces:
            if not any(s.is_birational for s in trace.steps):
                continue
            ledger = discrepancy_ledger(trace)
            for e in ledger.entries:
                assert e["strict"]
                assert all(after <= before
                           for before, after in e["values"].values())
            pots = ledger.potentials
            assert all(a > b for a, b in zip(pots, pots[1:]))
