from fractions import Fraction

import pytest

from toricmmp.exactla.polycone import cone_from_generators, Polyhedron
from toricmmp.exactla.polycone_utils import (faces_of_codim, Subdivision,
                                             common_refinement,
                                             relative_interior_point, project,
                                             regular_subdivision, box_points,
                                             lattice_points, polytope_volume,
                                             pulling_triangulation)


def _cone(*rays):
    return cone_from_generators(list(rays))


class TestFacesOfCodim:
    def test_quadrant_facets_are_the_axes(self):
        faces = faces_of_codim(_cone((1, 0), (0, 1)), 1)
        assert sorted(f.rays[0] for f in faces) == [(0, 1), (1, 0)]

    def test_quadrant_codim_two_is_the_origin(self):
        faces = faces_of_codim(_cone((1, 0), (0, 1)), 2)
        assert len(faces) == 1
        assert faces[0].dim == 0

    def test_extremal_rays_of_non_unimodular_cone(self):
        faces = faces_of_codim(_cone((1, 0), (1, 2)), 1)
        assert sorted(f.rays[0] for f in faces) == [(1, 0), (1, 2)]

    def test_codim_out_of_range_raises(self):
        with pytest.raises(ValueError):
            faces_of_codim(_cone((1, 0), (0, 1)), 3)


class TestCommonRefinement:
    def test_single_subdivision_is_unchanged(self):
        sub = Subdivision([_cone((1, 0), (1, 1)), _cone((1, 1), (0, 1))])
        assert len(common_refinement([sub])) == 2

    def test_two_splits_of_a_halfplane_give_three_cells(self):
        a = Subdivision([_cone((0, 1), (1, 0)), _cone((1, 0), (0, -1))])
        b = Subdivision([_cone((0, 1), (1, 1)), _cone((1, 1), (0, -1))])
        assert len(common_refinement([a, b])) == 3

    def test_identical_subdivisions_refine_to_themselves(self):
        cells = [_cone((1, 0), (1, 1)), _cone((1, 1), (0, 1))]
        out = common_refinement([Subdivision(cells), Subdivision(cells)])
        assert sorted(c.key for c in out) == sorted(c.key for c in cells)

    def test_different_supports_raise(self):
        a = Subdivision([_cone((1, 0), (0, 1))])
        b = Subdivision([_cone((1, 0), (1, 1))])
        with pytest.raises(ValueError):
            common_refinement([a, b])


class TestRelativeInteriorPoint:
    def test_open_segment(self):
        x = relative_interior_point(Polyhedron([((1,), 0), ((-1,), -1)]))
        assert 0 < x[0] < 1

    def test_point_is_its_own_interior(self):
        assert relative_interior_point(Polyhedron([], [((1,), 3)])) == \
            (Fraction(3),)

    def test_empty_gives_none(self):
        assert relative_interior_point(Polyhedron([((1,), 3),
                                                   ((-1,), -1)])) is None


class TestProject:
    def test_projection_of_triangle_is_a_segment(self):
        tri = Polyhedron([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])
        seg = project(tri, [0])
        assert seg.vertices == [(0,), (1,)]

    def test_projection_of_empty_set_is_empty(self):
        empty = Polyhedron([((1, 0), 3), ((-1, 0), -1)])
        assert project(empty, [1]).is_empty()

    def test_projection_keeps_the_requested_coordinate_order(self):
        # 0 <= x <= 1, y = 2x, 0 <= z <= 3
        box = Polyhedron([((1, 0, 0), 0), ((-1, 0, 0), -1),
                          ((0, 0, 1), 0), ((0, 0, -1), -3)],
                         [((2, -1, 0), 0)])
        out = project(box, [2, 1])
        assert out.vertices == [(0, 0), (0, 2), (3, 0), (3, 2)]
        assert out.meta["projected_from"] == 3

    def test_projection_rejects_bad_coordinates(self):
        tri = Polyhedron([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])
        with pytest.raises(ValueError):
            project(tri, [0, 0])
        with pytest.raises(ValueError):
            project(tri, [2])


class TestTriangulationsAndBoxes:
    def test_box_point_of_index_two_cone(self):
        assert box_points([(1, 0), (1, 2)]) == [(1, 1)]

    def test_unimodular_cone_has_no_box_points(self):
        assert box_points([(1, 0), (0, 1)]) == []

    def test_pulling_triangulation_of_a_square_cone(self):
        rays = [(0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)]
        simplices = pulling_triangulation(rays)
        assert len(simplices) == 2
        assert all(0 in s for s in simplices)

    def test_regular_subdivision_of_ample_heights_is_the_fan(self):
        rays = [(1, 0), (1, 1), (0, 1), (-1, -1)]
        cells = regular_subdivision(rays, [0, 0, 1, 3])
        assert cells == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestLatticePointsAndVolume:
    def test_unimodular_triangle(self):
        tri = Polyhedron([((1, 0), -1), ((0, 1), 0), ((-1, -1), 0)])
        assert len(lattice_points(tri)) == 3
        assert polytope_volume(tri) == Fraction(1, 2)

    def test_unbounded_polyhedron_raises(self):
        with pytest.raises(ValueError):
            lattice_points(Polyhedron([((1,), 0)]))
