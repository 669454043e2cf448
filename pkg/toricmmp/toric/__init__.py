from .fan import Fan
from .lattice_map import LatticeMap
from .divisor import TDivisor, CartierData, canonical_divisor
from .pair import Pair
from .singularities import (discrepancy, log_discrepancy,
                            discrepancy_by_subdivision, classify_pair,
                            singularity_report, terminalize)
from .sections import (section_polyhedron, effectivity, fixed_part, volume,
                       global_sections)
