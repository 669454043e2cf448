from .instance import Instance, parse_instance, load_instance
from .report import TraceReport
