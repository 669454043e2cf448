"""Exact toric engine for the relative minimal model program with scaling"""

################################################################################
#                               WARNINGS, LOGGING                              #
################################################################################

import logging
import warnings

warnings.simplefilter('ignore', FutureWarning)
warnings.simplefilter('ignore', DeprecationWarning)

logging.getLogger(__name__).addHandler(logging.NullHandler())

################################################################################
#                         CONFIG AND SUBPACKAGES                               #
################################################################################

from . import rc

from . import exactla
from . import toric
from . import cones
from . import mmp
from . import chambers
from . import gluing
from . import commands
from . import utils

# top level shortcuts
from .utils import bug_report
from .toric.fan import Fan
from .toric.divisor import TDivisor
from .toric.pair import Pair
from .mmp.scaling import run_mmp_with_scaling, output_at_scale

__version__ = "0.1.0"
