from .cover import BaseCover, affine_cover, restrict_family
from .glue import (LocalRun, MismatchReport, run_local_mmps, glue_outputs,
                   base_change_check)
