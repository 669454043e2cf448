"""
Discrepancy ledger of an MMP run

For every birational step X_i --> X_{i+1} and every toric valuation v of a
common test family, the crepant coefficient b = 1 - psi must not increase
and must drop for at least one v.
"""
import logging

from astropy.table import Table

from ..utils import from_currsys
from ..exceptions import LedgerViolation
from ..exactla.rational import primitive, rat_str
from ..exactla.polycone_utils import Subdivision, common_refinement, box_points
from .scaling import crepant_coefficient

logger = logging.getLogger(__name__)


def ledger_valuations(fans, with_box_points=None):
    """
    Test valuations for a sequence of fans with one support

    The rays of the common refinement, the primitive sums of the rays of
    its cells and, optionally, the box points of its simplicial cells.
    """
    if with_box_points is None:
        with_box_points = from_currsys("!MMP.ledger.box_points")
    fans = list(fans)
    subs = [Subdivision([f.polycone(c) for c in f.cones]) for f in fans]
    refinement = common_refinement(subs)
    vals = set()
    for f in fans:
        vals.update(f.rays)
    for cell in refinement:
        vals.update(cell.rays)
        if len(cell.rays) > 1:
            s = [0] * cell.ambient_dim
            for r in cell.rays:
                s = [a + b for a, b in zip(s, r)]
            vals.add(primitive(s))
        if with_box_points and len(cell.rays) == cell.dim:
            try:
                vals.update(primitive(b) for b in box_points(cell.rays))
            except ValueError as err:
                logger.warning("Skipping box points: %s", err)
    return sorted(v for v in vals if any(v))


class Ledger:
    """
    Crepant coefficients along a run

    Attributes
    ----------
    valuations : list of tuple
    entries : list of dict
        Per step: ``step``, ``kind``, ``values`` (v -> (before, after)) and
        ``strict`` (valuations with a strict drop)
    potentials : list of Fraction
        Sum of b over the test family for X_0, ..., X_N

    """
    def __init__(self, valuations, entries, potentials):
        self.valuations = valuations
        self.entries = entries
        self.potentials = potentials
        self.meta = {}

    def summary(self):
        names = ["step", "kind", "strict_drops", "potential_before",
                 "potential_after"]
        rows = [(e["step"], e["kind"], len(e["strict"]),
                 rat_str(self.potentials[k]), rat_str(self.potentials[k + 1]))
                for k, e in enumerate(self.entries)]
        if not rows:
            return Table(names=names, dtype=[int, str, int, str, str])
        return Table(rows=rows, names=names)


def discrepancy_ledger(trace, valuations=None):
    """
    Check that no crepant coefficient increases along the run

    Parameters
    ----------
    trace : MMPTrace
    valuations : list of tuple, optional
        Default: ``ledger_valuations`` of all birational models

    Returns
    -------
    Ledger

    Raises
    ------
    LedgerViolation
        Carrying the step and the valuation, when some b increases or a
        step changes no b

    """
    steps = [s for s in trace.steps if s.is_birational]
    models = [s.source for s in steps] + ([steps[-1].target] if steps else
                                          [trace.pair])
    if valuations is None:
        valuations = ledger_valuations([m.fan for m in models])
    entries = []
    potentials = [sum(crepant_coefficient(m, v) for v in valuations)
                  for m in models]
    for step in steps:
        values = {}
        strict = []
        for v in valuations:
            before = crepant_coefficient(step.source, v)
            after = crepant_coefficient(step.target, v)
            if after > before:
                raise LedgerViolation(
                    "Step {}: b({}) rose from {} to {}".format(
                        step.index, v, before, after),
                    step=step.index, valuation=v)
            if after < before:
                strict += [v]
            values[v] = (before, after)
        if not strict:
            raise LedgerViolation("Step {} changes no crepant coefficient"
                                  "".format(step.index), step=step.index,
                                  valuation=None)
        entries += [{"step": step.index, "kind": step.kind,
                     "values": values, "strict": strict}]
    logger.info("Ledger of %d steps on %d valuations", len(entries),
                len(valuations))
    return Ledger(valuations, entries, potentials)
