"""
Exact toric MMP with scaling.

Usage:
    mmp run FILE [--seed N] [--json OUT] [--rescale] [-q]
    mmp threshold FILE [--json OUT] [--rescale] [-q]
    mmp chambers FILE [--seed N] [--json OUT] [-q]
    mmp sing FILE [--json OUT] [-q]
    mmp glue FILE [--r RATIO] [--json OUT] [-q]
    mmp output-at-scale FILE [--r RATIO] [--json OUT] [-q]
    mmp -h | --help

Options:
    --r RATIO           Scale as an integer or p/q string
    --seed N            Random seed for sampled checks [default: 0]
    --json OUT          Write the machine report to OUT, "-" for stdout
    --rescale           Rescale A when K + Delta + A is not nef
    -q, --quiet         Only print errors
    -h, --help          Show this message

Exit codes: 0 success, 2 malformed instance, 3 failed precondition,
4 internal invariant violation.
"""
import logging
import sys

from docopt import docopt

from .. import rc
from ..utils import from_currsys
from ..exceptions import InstanceError, LedgerViolation, GlueError
from ..exactla.rational import rat_str, to_rat
from ..toric.singularities import singularity_report
from ..mmp.threshold import nef_threshold, rationality_certificate
from ..mmp.scaling import (run_mmp_with_scaling, output_at_scale,
                           verify_output_characterization)
from ..mmp.ledger import discrepancy_ledger
from ..chambers.orders import (support_cone, chamber_decomposition,
                               nef_chamber, valuation_family)
from ..gluing.cover import BaseCover, affine_cover
from ..gluing.glue import (run_local_mmps, glue_outputs, base_change_check,
                           MismatchReport)
from .instance import load_instance
from .report import TraceReport, pair_to_dict

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


def _scale(args, inst):
    if args["--r"] is not None:
        return to_rat(args["--r"])
    return inst.param("r", default=0, rational=True)


def cmd_run(inst, args):
    rescale = True if args["--rescale"] else None
    trace = run_mmp_with_scaling(inst.pair, inst.scaling, rescale=rescale)
    ledger = None
    if from_currsys("!MMP.ledger.run") and len(trace.models) > 1:
        ledger = discrepancy_ledger(trace)
    report = TraceReport.from_trace(trace, ledger, name=inst.name)
    return report, trace.summary()


def cmd_threshold(inst, args):
    rescale = True if args["--rescale"] else None
    lam = nef_threshold(inst.pair, inst.scaling, rescale=rescale)
    cert = rationality_certificate(inst.pair, inst.scaling, lam)
    data = {"instance": inst.name, "lambda": rat_str(lam),
            "rationality": {k: (rat_str(v) if v is not None and
                                not isinstance(v, bool) else v)
                            for k, v in cert.items()}}
    report = TraceReport("threshold", data)
    return report, report.summary()


def cmd_chambers(inst, args):
    names = inst.param("chamber_divisors")
    if names is None:
        names = sorted(n for n in inst.divisors if n != "Delta")
    missing = [n for n in names if n not in inst.divisors]
    if missing:
        raise InstanceError("Unknown chamber divisors {}".format(missing))
    divisors = [inst.divisors[n] for n in names]
    valuations = inst.param("valuations")
    if valuations is None:
        valuations = valuation_family(inst.pair.fan)
    sc = support_cone(divisors, inst.pair)
    cd = chamber_decomposition(sc, [tuple(v) for v in valuations], inst.pair)
    certified, _ = cd.coarseness_certificate()
    nef_cell, nef_cert = nef_chamber(cd, inst.pair, certificate=True)
    data = {"instance": inst.name, "divisors": names,
            "support": [list(r) for r in sc.rays],
            "cells": [[list(r) for r in c.rays] for c in cd.cells],
            "valuations": [list(v) for v in cd.valuations],
            "nef_cell": nef_cell,
            "nef_cell_is_nef_preimage": nef_cert["equals_nef_preimage"],
            "coarse": certified}
    return TraceReport("chambers", data), cd.summary()


def cmd_sing(inst, args):
    rep = singularity_report(inst.pair)
    data = {k: v for k, v in rep.items()
            if k not in ("min_exceptional_discrepancy", "minimizer")}
    best = rep["min_exceptional_discrepancy"]
    data["min_exceptional_discrepancy"] = None if best is None else \
        rat_str(best)
    data["minimizer"] = None if rep["minimizer"] is None else \
        list(rep["minimizer"])
    data["instance"] = inst.name
    report = TraceReport("sing", data)
    return report, report.summary()


def cmd_output_at_scale(inst, args):
    r = _scale(args, inst)
    out = output_at_scale(inst.pair, inst.scaling, r)
    check = verify_output_characterization(inst.pair, out, inst.scaling, r)
    if not check["all_passed"]:
        raise AssertionError("X^{} fails its characterisation".format(
            rat_str(r)))
    data = {"instance": inst.name, "r": rat_str(r),
            "thresholds": [rat_str(x) for x in out.meta["thresholds"]],
            "model": pair_to_dict(out, out.meta["scaling"])}
    report = TraceReport("output-at-scale", data)
    return report, report.summary()


def cmd_glue(inst, args):
    p = inst.pair
    if not p.is_relative:
        raise ValueError("Gluing needs a relative instance with a base")
    patches = inst.param("patches")
    cover = affine_cover(p.base) if patches is None else \
        BaseCover(p.base, [[tuple(c) for c in patch] for patch in patches])
    r = _scale(args, inst)
    runs = run_local_mmps(p, inst.scaling, cover, [r])
    glued = glue_outputs(runs, r, cover)
    if isinstance(glued, MismatchReport):
        raise AssertionError("Local outputs disagree: {}".format(glued))
    base_change = [base_change_check(p, inst.scaling, patch, r)
                   for patch in cover.patches]
    data = {"instance": inst.name, "r": rat_str(r),
            "patches": [[list(c) for c in patch] for patch in cover.patches],
            "model": pair_to_dict(glued),
            "base_change": base_change}
    report = TraceReport("glue", data)
    return report, report.summary()


COMMANDS = {"run": cmd_run,
            "threshold": cmd_threshold,
            "chambers": cmd_chambers,
            "sing": cmd_sing,
            "glue": cmd_glue,
            "output-at-scale": cmd_output_at_scale}


def _emit(report, target):
    text = report.to_json()
    if target == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(target, "w", encoding="utf-8") as f:
            f.write(text + "\n")


def main(args=None):
    """
    Entry point of the ``mmp`` console script

    Returns
    -------
    int
        The exit code

    """
    args = docopt(__doc__, argv=args)
    command = next(c for c in COMMANDS if args[c])
    rc.__currsys__["!SIM.random.seed"] = int(args["--seed"] or 0)
    if args["--quiet"]:
        logging.getLogger("toricmmp").setLevel(logging.ERROR)
    try:
        inst = load_instance(args["FILE"])
        report, table = COMMANDS[command](inst, args)
    except InstanceError as err:
        logger.error("%s", err)
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_PARSE
    except (LedgerViolation, AssertionError) as err:
        sys.stderr.write("internal error: {}\n".format(err))
        return EXIT_INTERNAL
    except (ValueError, GlueError) as err:
        sys.stderr.write("precondition failed: {}\n".format(err))
        witness = getattr(err, "witness", None)
        if witness is not None:
            sys.stderr.write("witness: {}\n".format(witness))
        return EXIT_PRECONDITION
    except RuntimeError as err:
        sys.stderr.write("internal error: {}\n".format(err))
        return EXIT_INTERNAL

    if not args["--quiet"]:
        print(table)
    if args["--json"]:
        _emit(report, args["--json"])
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
