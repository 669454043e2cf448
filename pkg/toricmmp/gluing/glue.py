"""
Local scaled MMPs over a cover of the base and their gluing

Each patch runs its own MMP with scaling; the outputs X^r are certified by
the characterisation checks and compared on overlaps before being assembled
into one fan over the whole base.
"""
import logging

from astropy.table import Table

from ..utils import from_currsys
from ..exceptions import GlueError
from ..exactla.rational import primitive, rat_str, to_rat
from ..toric.fan import Fan
from ..toric.pair import Pair
from ..toric.divisor import TDivisor
from ..mmp.scaling import (is_good_scaling_divisor, run_mmp_with_scaling,
                           output_at_scale, verify_output_characterization)
from .cover import restrict_family

logger = logging.getLogger(__name__)


class LocalRun:
    """
    The scaled MMP of one patch

    Attributes
    ----------
    patch_id : int
    patch : list of tuple
    pair : Pair
        The restricted family X_U -> U
    scaling : TDivisor
        A restricted to X_U
    trace : MMPTrace
    outputs : dict
        Scale r -> output Pair X_U^r
    checks : dict
        Scale r -> report of ``verify_output_characterization``

    """
    def __init__(self, patch_id, patch, pair, scaling, trace=None, **kwargs):
        self.patch_id = patch_id
        self.patch = patch
        self.pair = pair
        self.scaling = scaling
        self.trace = trace
        self.outputs = {}
        self.checks = {}
        self.meta = {}
        self.meta.update(kwargs)

    def __repr__(self):
        return "LocalRun(patch={}, scales={})".format(
            self.patch_id, [rat_str(r) for r in sorted(self.outputs)])


class MismatchReport:
    """
    Two local outputs disagree over an overlap

    Attributes
    ----------
    patches : (int, int)
    overlap : list of tuple
        Base cones of the overlap; empty for a failed glue-restrict check
    forms : (tuple, tuple)
        Canonical forms of the two disagreeing fans

    """
    def __init__(self, patches, overlap, forms, scale=None):
        self.patches = tuple(patches)
        self.overlap = overlap
        self.forms = tuple(forms)
        self.scale = scale

    def summary(self):
        rows = [(k, str(form)) for k, form in zip(self.patches, self.forms)]
        return Table(rows=rows, names=["patch", "canonical_form"])

    def __repr__(self):
        return "MismatchReport(patches={}, overlap={})".format(self.patches,
                                                             self.overlap)


def run_local_mmps(p, scaling, cover, rs, check=None):
    """
    Restrict (X, Delta) and A to each patch and compute X_U^r

    Parameters
    ----------
    p : Pair
    scaling : TDivisor
    cover : BaseCover
    rs : list of Rational
    check : bool, optional
        Verify each output. Default ``!GLUE.check_characterization``

    Returns
    -------
    list of LocalRun
        Sorted by patch id

    Raises
    ------
    GlueError
        If A is not a good scaling divisor on a patch, or a local output
        fails its characterisation

    """
    if check is None:
        check = from_currsys("!GLUE.check_characterization")
    rs = [to_rat(r) for r in rs]
    runs = []
    for k, patch in enumerate(cover.patches):
        pair = restrict_family(p, patch)
        local_a = pair.meta["restriction"]["divisor_map"](scaling)
        ok, info = is_good_scaling_divisor(pair, local_a)
        if not ok:
            raise GlueError("A is not a good scaling divisor ({})"
                            "".format(", ".join(info["reasons"])),
                            patch=k, witness=info)
        trace = run_mmp_with_scaling(pair, local_a)
        run = LocalRun(k, patch, pair, local_a, trace)
        for r in rs:
            out = output_at_scale(pair, local_a, r)
            run.outputs[r] = out
            if check:
                report = verify_output_characterization(pair, out, local_a, r)
                run.checks[r] = report
                if not report["all_passed"]:
                    raise GlueError("output at r = {} fails its "
                                    "characterisation".format(rat_str(r)),
                                    patch=k, witness=report)
        logger.info("Patch %d: %d steps, %d outputs", k, len(trace),
                    len(run.outputs))
        runs += [run]
    return runs


def _lies_over(pair, cone, tau):
    images = [pair.base_map.apply(pair.fan.rays[i]) for i in cone]
    if not tau:
        return all(not any(w) for w in images)
    target = pair.base.polycone(tau)
    return all(target.contains(w) for w in images)


def _form_over(pair, base_cones):
    """Canonical form of the cones of X lying over the given base cones"""
    fan = pair.fan
    kept = [c for c in fan.all_cones()
            if any(_lies_over(pair, c, t) for t in base_cones)]
    maximal = [c for c in kept if not any(set(c) < set(o) for o in kept)]
    return tuple(sorted(tuple(sorted(primitive(fan.rays[i]) for i in c))
                        for c in maximal))


def _base_ray_cones(cover, cones):
    """Base cones as sets of primitive base rays"""
    return [tuple(sorted(cover.base.rays[i] for i in c)) for c in cones]


def _as_local(pair, ray_cones):
    """Translate base cones given by rays into the base fan of a patch"""
    index = {r: i for i, r in enumerate(pair.base.rays)}
    return [tuple(sorted(index[r] for r in c)) for c in ray_cones]


def glue_outputs(local_runs, r, cover):
    """
    Assemble the local outputs X_U^r into one model over the base

    Returns
    -------
    Pair or MismatchReport
        The glued pair, over the base of ``cover``, with
        ``meta["local_forms"]``; or the first disagreement found, scanning
        patch pairs in sorted order

    """
    r = to_rat(r)
    runs = sorted(local_runs, key=lambda run: run.patch_id)
    if not runs:
        raise ValueError("Nothing to glue")
    for i, a in enumerate(runs):
        for b in runs[i + 1:]:
            overlap = cover.overlap(a.patch_id, b.patch_id)
            ray_cones = _base_ray_cones(cover, overlap)
            fa = _form_over(a.outputs[r], _as_local(a.outputs[r], ray_cones))
            fb = _form_over(b.outputs[r], _as_local(b.outputs[r], ray_cones))
            if fa != fb:
                logger.warning("Local outputs of patches %d and %d differ "
                               "over %s", a.patch_id, b.patch_id, overlap)
                return MismatchReport((a.patch_id, b.patch_id), overlap,
                                      (fa, fb), scale=r)

    rays, coeffs, cones = [], {}, set()
    scaling = {}
    for run in runs:
        out = run.outputs[r]
        for c in out.fan.cones:
            cones.add(tuple(sorted(primitive(out.fan.rays[i]) for i in c)))
        for i, u in enumerate(out.fan.rays):
            u = primitive(u)
            coeffs[u] = out.boundary.coeffs[i]
            if "scaling" in out.meta:
                scaling[u] = out.meta["scaling"].coeffs[i]
    rays = sorted(coeffs)
    index = {u: i for i, u in enumerate(rays)}
    maximal = [c for c in cones if not any(set(c) < set(o) for o in cones)]
    fan = Fan(rays, [tuple(index[u] for u in c) for c in maximal],
              runs[0].pair.fan.lattice_rank,
              name="glued^{}".format(rat_str(r)))
    matrix = runs[0].pair.base_map.matrix
    glued = Pair(fan, [coeffs[u] for u in rays], cover.base, matrix,
                 name=runs[0].pair.meta["name"])
    if scaling:
        glued.meta["scaling"] = TDivisor(fan, [scaling.get(u, 0)
                                               for u in rays])
    glued.meta["scale"] = r

    # restricting the glued model must give back each local output
    for run in runs:
        back = restrict_family(glued, run.patch)
        if back.fan != run.outputs[r].fan:
            return MismatchReport((run.patch_id, run.patch_id), [],
                                  (back.fan.canonical_form(),
                                   run.outputs[r].fan.canonical_form()),
                                  scale=r)
    logger.info("Glued %d local outputs at r = %s", len(runs), rat_str(r))
    return glued


def base_change_check(p, scaling, patch, r):
    """
    Does X^r restricted to U equal the output of the restricted family?
    """
    r = to_rat(r)
    restricted = restrict_family(p, patch)
    local_a = restricted.meta["restriction"]["divisor_map"](scaling)
    local = output_at_scale(restricted, local_a, r)
    global_out = output_at_scale(p, scaling, r)
    return restrict_family(global_out, patch).fan == local.fan
