"""Exceptions that carry the object certifying the failure"""


class NotQCartierError(ValueError):
    """A divisor has no Cartier data on ``cone``"""
    def __init__(self, msg, cone=None):
        super().__init__(msg)
        self.cone = cone


class NotNefError(ValueError):
    """A divisor is negative on ``curve``"""
    def __init__(self, msg, curve=None):
        super().__init__(msg)
        self.curve = curve


class ContractionError(ValueError):
    pass


class FlipError(ValueError):
    pass


class LedgerViolation(RuntimeError):
    """Discrepancy monotonicity or non-cycling failed along a trace"""
    def __init__(self, msg, step=None, valuation=None):
        super().__init__(msg)
        self.step = step
        self.valuation = valuation


class InstanceError(ValueError):
    """Malformed instance file, anchored at ``line`` (1-based)"""
    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line {}: {}".format(line, msg)
        super().__init__(msg)
        self.line = line


class GlueError(RuntimeError):
    """A local computation failed on the patch ``patch``"""
    def __init__(self, msg, patch=None, witness=None):
        super().__init__("patch {}: {}".format(patch, msg))
        self.patch = patch
        self.witness = witness
