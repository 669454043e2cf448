from .numerical import (CurveClass, NumSpace, contracted_curves,
                        contracted_walls, intersection_number, cartier_degree,
                        build_n1)
from .mori import (mori_cone, nef_cone, is_nef, is_ample, is_ample_by_convexity,
                   is_projective, ample_divisor, supporting_data,
                   max_fiber_dimension, cone_theorem_decomposition)
from .positivity import is_big, kodaira_decompose, is_pseudoeffective
from .restriction import restrict_to_open
