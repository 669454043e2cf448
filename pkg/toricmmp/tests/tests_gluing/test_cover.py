import pytest

from toricmmp.gluing.cover import BaseCover, affine_cover, restrict_family
from toricmmp.tests.mocks.py_objects.fan_objects import (_p1_fan,
                                                         _f1xp1_pair)


class TestInit:
    def test_affine_cover_of_p1_has_two_patches(self):
        cover = affine_cover(_p1_fan())
        assert len(cover) == 2
        assert cover.patches == [[(0,)], [(1,)]]
        assert cover.meta["name"] == "affine"

    def test_throws_error_for_empty_patch(self):
        with pytest.raises(ValueError):
            BaseCover(_p1_fan(), [[(0,)], []])

    def test_throws_error_for_unknown_cone(self):
        with pytest.raises(ValueError):
            BaseCover(_p1_fan(), [[(0, 1)]])

    def test_throws_error_for_uncovered_maximal_cone(self):
        with pytest.raises(ValueError):
            BaseCover(_p1_fan(), [[(0,)]])


class TestOverlap:
    def test_closure_adds_the_vertex(self):
        cover = affine_cover(_p1_fan())
        assert cover.closure(0) == [(), (0,)]

    def test_charts_of_p1_meet_in_the_torus(self):
        cover = affine_cover(_p1_fan())
        assert cover.overlap(0, 1) == [()]
        assert cover.overlap(0, 0) == [(0,)]


class TestRestrictFamily:
    def test_meta_records_patch_and_maps(self):
        q = restrict_family(_f1xp1_pair(), [(0,)])
        assert q.meta["patch"] == [(0,)]
        assert "divisor_map" in q.meta["restriction"]
        assert q.fan.n_rays == 5

    def test_throws_error_for_empty_patch(self):
        with pytest.raises(ValueError):
            restrict_family(_f1xp1_pair(), [])
