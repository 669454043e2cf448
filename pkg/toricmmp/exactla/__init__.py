from .rational import Rat, to_rat, qvec, primitive
from .linalg import (rank, nullspace, solve, integer_kernel, saturate,
                     lattice_index, quotient_map, lattice_section,
                     integer_solve)
from .lp import LPResult, SimplexTableau, lp_solve, lp_optimize
from .polycone import (PolyCone, Polyhedron, cone_from_generators,
                       cone_from_inequalities, cone_dual)
from .polycone_utils import (faces_of_codim, Subdivision, common_refinement,
                             relative_interior_point, project,
                             pulling_triangulation, polytope_volume,
                             regular_subdivision, lattice_points, box_points)
