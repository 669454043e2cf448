"""Discrepancies and volumes against independent computations"""
import pytest

from toricmmp import rc
from toricmmp.utils import get_rng, random_int_vectors
from toricmmp.exactla.rational import primitive, common_denominator
from toricmmp.toric.singularities import (discrepancy,
                                          discrepancy_by_subdivision)
from toricmmp.toric.sections import volume
from toricmmp.cones.mori import ample_divisor

if rc.__config__["!SIM.tests.run_integration_tests"] is False:
    pytestmark = pytest.mark.skip("Ignoring the random instance suites")


class TestDiscrepancyOracle:
    def test_formula_matches_star_subdivision(self, random_pairs):
        rng = get_rng()
        n_checked = 0
        for p in random_pairs:
            vecs = random_int_vectors(rng, 4, p.fan.lattice_rank)
            for v in {primitive(v) for v in vecs}:
                assert discrepancy(p, v) == discrepancy_by_subdivision(p, v)
                n_checked += 1
        assert n_checked >= 2 * len(random_pairs)


class TestVolumeHomogeneity:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_volume_scales_with_the_dimension(self, random_free_pairs, n):
        for p in random_free_pairs:
            h = ample_divisor(p)
            h = common_denominator(h.coeffs) * h
            d = p.fan.lattice_rank
            assert volume(n * h) == n ** d * volume(h)
            assert volume(h) > 0
