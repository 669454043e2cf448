from .polytopes import (DivisorSpan, polytope_l, compute_eav, compute_bsav)
from .orders import (asymptotic_order, stable_fixed_part, valuation_family,
                     support_cone, chamber_decomposition, ChamberDecomposition,
                     nef_chamber, nef_preimage)
from .hilbert import (hilbert_basis, decompose, section_cone,
                      hilbert_basis_witness)
from .ample_shift import (in_ample_shifted_set, ample_shift_witness,
                          boundary_structure)
from .small_maps import transform_order_invariance, inverse_is_morphism
