from .threshold import (nef_threshold, threshold_face, select_extremal_ray,
                        rationality_certificate)
from .contraction import (Contraction, contract_face, contract_ray,
                          face_walls, DIVISORIAL, FLIP, MORI_FIBER)
from .flips import (FlipResult, bistellar_exchange, flip, check_flip_axioms,
                    negativity_check)
from .scaling import (MMPStep, MMPTrace, is_good_scaling_divisor,
                      general_member_klt, crepant_coefficient,
                      run_mmp_with_scaling, scaled_threshold_sequence,
                      expected_outcome, output_at_scale,
                      verify_output_characterization, matches_output,
                      MINIMAL_MODEL, MORI_FIBRATION)
from .ledger import Ledger, discrepancy_ledger, ledger_valuations
from .basepoint import basepoint_free_check, is_semiample
