"""
The MMP with scaling, its outputs at a scale r and their characterization

Starting from a Q-factorial klt pair (X, Delta) and a good scaling divisor
A, each step computes the nef threshold lambda_i, contracts an extremal ray
on which K + Delta + lambda_i A vanishes, and replaces X by the divisorial
contraction or the flip. The run stops at a minimal model (lambda = 0) or
at a Mori fiber space.
"""
import logging
import warnings
from fractions import Fraction

from astropy.table import Table

from ..base_classes import TraceBase
from ..utils import from_currsys
from ..exactla.rational import qvec, dot, to_rat, primitive, vadd
from ..exactla.lp import lp_solve
from ..exactla.polycone import Polyhedron
from ..exactla.polycone_utils import Subdivision, common_refinement
from ..toric.fan import Fan
from ..toric.pair import Pair
from ..toric.divisor import TDivisor
from ..toric.lattice_map import LatticeMap
from ..toric.fan_utils import reindex, ample_cells
from ..toric.singularities import log_discrepancy
from ..cones.numerical import NumSpace, intersection_number
from ..cones.mori import is_nef
from ..cones.positivity import is_big, is_pseudoeffective, _chart_polyhedra
from .threshold import nef_threshold, select_extremal_ray, threshold_face
from .contraction import contract_ray, contract_face, MORI_FIBER, DIVISORIAL
from .flips import flip

logger = logging.getLogger(__name__)

MINIMAL_MODEL = "MinimalModel"
MORI_FIBRATION = "MoriFibration"


def _chart_of_cone(p, cone, charts):
    if len(charts) == 1:
        return charts[0]
    images = [p.base_map.apply(p.fan.rays[i]) for i in cone]
    for tau, poly in zip(p.base.cones, charts):
        if all(p.base.polycone(tau).contains(w) for w in images):
            return poly
    raise ValueError("Cone {} does not map into a base cone".format(cone))


def general_member_klt(p, torus_boundary, general_class):
    """
    Is (X, B + G) klt for B torus invariant and G general in |general_class|?

    Checks psi_B(v) - o_v(general_class) > 0 for every nonzero v of the
    support, one LP per maximal cone over the vertices of the section
    polyhedron.

    Returns
    -------
    None or dict
        None when klt, otherwise a failure witness with the cone and the
        valuation v

    """
    fan = p.fan
    if any(b >= 1 for b in torus_boundary.coeffs):
        return {"cone": None, "v": None, "reason": "boundary coefficient >= 1"}
    kb = p.canonical + torus_boundary
    psi = kb.cartier_data()
    dd = general_class.cartier_data()
    charts = _chart_polyhedra(general_class, p)
    for cone in fan.cones:
        poly = _chart_of_cone(p, cone, charts)
        verts = poly.vertices
        if not verts:
            return {"cone": cone, "v": None, "reason": "empty linear system"}
        base = [a + b for a, b in zip(psi[cone], dd[cone])]
        # c_i >= 0, sum c_i = 1, sum c_i <m_j - base, u_i> >= 0 for all j
        k = len(cone)
        ineqs = []
        for m in verts:
            diff = [a - b for a, b in zip(m, base)]
            ineqs += [([dot(diff, qvec(fan.rays[i])) for i in cone], 0)]
        eqs = [([1] * k, 1)]
        res = lp_solve([0] * k, ineqs, eqs, nonneg=True)
        if res.is_optimal:
            v = [Fraction(0)] * fan.lattice_rank
            for c, i in zip(res.witness, cone):
                v = vadd(v, [c * x for x in fan.rays[i]])
            return {"cone": cone, "v": primitive(v),
                    "reason": "psi - o_v <= 0"}
    return None


def _torus_witness(p, scaling):
    """
    m in P_A maximising s with coeff(Delta + A + div m) <= 1 - s

    Returns (m, A') when s > 0.
    """
    fan = p.fan
    n = fan.lattice_rank
    ineqs = []
    for u, a, d in zip(fan.rays, scaling.coeffs, p.boundary.coeffs):
        u = qvec(u)
        # <m,u> + a >= 0
        ineqs += [(tuple(u) + (Fraction(0),), -a)]
        # 1 - d - a - <m,u> - s >= 0
        ineqs += [(tuple(-x for x in u) + (Fraction(-1),), d + a - 1)]
    ineqs += [(tuple([Fraction(0)] * n) + (Fraction(-1),), Fraction(-1))]
    res = lp_solve([0] * n + [1], ineqs, sense="max")
    if not res.is_optimal or res.value <= 0:
        return None, None
    m = tuple(res.witness[:n])
    return m, scaling + TDivisor.principal(fan, m)


def is_good_scaling_divisor(p, scaling):
    """
    Check that A is a good scaling divisor for (X, Delta)

    (i) A is big over the base, (ii) K + Delta + A is nef over the base,
    (iii) (X, Delta + A') is klt for a general A' ~_Q A.

    Returns
    -------
    ok : bool
    witness : dict
        ``reasons`` lists the failed conditions, ``klt_failure`` a
        valuation violating (iii), ``m`` and ``A_prime`` a torus invariant
        member A' = A + div(m) with (X, Delta + A') klt when there is one

    """
    reasons = []
    big = is_big(scaling, p)
    if not big:
        reasons += ["i"]
    nef = is_nef(p.log_canonical + scaling, p)
    if not nef:
        reasons += ["ii"]
    failure = general_member_klt(p, p.boundary, scaling) if big else \
        {"cone": None, "v": None, "reason": "not big"}
    if failure is not None:
        reasons += ["iii"]
    m, a_prime = (None, None)
    if failure is None:
        m, a_prime = _torus_witness(p, scaling)
    witness = {"reasons": reasons, "big": big, "nef": nef,
               "klt_failure": failure, "m": m, "A_prime": a_prime}
    if reasons:
        logger.info("Scaling divisor %s fails %s", scaling, reasons)
    return not reasons, witness


def _step_valuations(*fans):
    vals = set()
    for fan in fans:
        vals.update(fan.rays)
        for c in fan.all_cones():
            if len(c) > 1:
                s = [0] * fan.lattice_rank
                for i in c:
                    s = [a + b for a, b in zip(s, fan.rays[i])]
                vals.add(primitive(s))
    return sorted(vals)


def crepant_coefficient(p, v):
    """b(v) = 1 - psi(v), the coefficient of v in the crepant pullback"""
    return 1 - log_discrepancy(p, v)


class MMPStep:
    """
    One step X_i -> X_{i+1} of the MMP with scaling

    Attributes
    ----------
    index : int
    kind : str
        ``"Divisorial"``, ``"Flip"`` or ``"MoriFiber"``
    lam : Fraction
        The nef threshold lambda_i
    curve : CurveClass
        The curve spanning the contracted ray
    source, target : Pair
        For a Mori fiber step the target is the base of the fibration
    scaling_before, scaling_after : TDivisor
    lattice_map : LatticeMap
    deltas : dict
        valuation -> (b_before, b_after) with b = 1 - psi the crepant
        coefficient. Empty for a Mori fiber step.

    """
    def __init__(self, index, kind, lam, curve, source, target,
                 scaling_before, scaling_after, lattice_map, deltas,
                 **kwargs):
        self.index = index
        self.kind = kind
        self.lam = lam
        self.curve = curve
        self.source = source
        self.target = target
        self.scaling_before = scaling_before
        self.scaling_after = scaling_after
        self.lattice_map = lattice_map
        self.deltas = deltas
        self.meta = {}
        self.meta.update(kwargs)

    @property
    def is_birational(self):
        return self.kind != MORI_FIBER

    def __repr__(self):
        return "MMPStep({}, {}, lambda={})".format(self.index, self.kind,
                                                   self.lam)


class MMPTrace(TraceBase):
    """
    The full record of a run

    Attributes
    ----------
    pair : Pair
        The starting pair
    scaling : TDivisor
        The (possibly rescaled) scaling divisor
    steps : list of MMPStep
    outcome : str
        ``"MinimalModel"`` or ``"MoriFibration"``
    final : Pair
        The last model X_N
    final_scaling : TDivisor

    """
    def __init__(self, pair, scaling, steps, outcome, final, final_scaling,
                 **kwargs):
        self.pair = pair
        self.scaling = scaling
        self.steps = steps
        self.outcome = outcome
        self.final = final
        self.final_scaling = final_scaling
        self.meta = {}
        self.meta.update(kwargs)

    @property
    def lambdas(self):
        return [s.lam for s in self.steps]

    @property
    def models(self):
        """X_0, ..., X_N"""
        return [s.source for s in self.steps if s.is_birational] + \
            [self.final]

    @property
    def fibration(self):
        if self.steps and self.steps[-1].kind == MORI_FIBER:
            return self.steps[-1]
        return None

    def summary(self):
        """One row per step as an astropy Table"""
        rows = []
        for s in self.steps:
            rows += [(s.index, s.kind, str(s.lam), str(s.curve.wall),
                      s.source.fan.n_rays, s.target.fan.n_rays,
                      s.meta.get("rank_n1", -1))]
        names = ["step", "kind", "lambda", "wall", "rays_before",
                 "rays_after", "rank_n1"]
        if not rows:
            return Table(names=names, dtype=[int, str, str, str, int, int,
                                             int])
        tbl = Table(rows=rows, names=names)
        tbl.meta["outcome"] = self.outcome
        return tbl

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return "MMPTrace({} steps, {})".format(len(self.steps), self.outcome)


def _check_start(p):
    if not p.fan.is_q_factorial():
        raise ValueError("The MMP needs a Q-factorial fan")
    if any(a >= 1 for a in p.boundary.coeffs):
        raise ValueError("The MMP needs a klt pair")


def run_mmp_with_scaling(p, scaling, rescale=None):
    """
    Run the (K+Delta)-MMP with scaling of A

    Parameters
    ----------
    p : Pair
        Q-factorial klt pair
    scaling : TDivisor
        A good scaling divisor
    rescale : bool, optional
        Replace A by lambda A when K + Delta + A is not nef. Default
        ``!MMP.rescale_scaling_divisor``.

    Returns
    -------
    MMPTrace

    Raises
    ------
    ValueError
        If the pair is not Q-factorial klt or A is not a good scaling
        divisor
    RuntimeError
        If the thresholds increase or the iteration cap
        ``!MMP.iteration_cap_factor`` * n_rays^2 is reached

    """
    if rescale is None:
        rescale = from_currsys("!MMP.rescale_scaling_divisor")
    _check_start(p)
    if rescale and not is_nef(p.log_canonical + scaling, p):
        t = nef_threshold(p, scaling, rescale=True)
        if t > 1:
            warnings.warn("Rescaling the scaling divisor by {}".format(t))
            scaling = t * scaling
    ok, witness = is_good_scaling_divisor(p, scaling)
    if not ok:
        err = ValueError("Not a good scaling divisor: fails {}"
                         "".format(witness["reasons"]))
        err.witness = witness
        raise err

    cap = from_currsys("!MMP.iteration_cap_factor") * p.fan.n_rays ** 2
    current, a_cur = p, scaling
    steps = []
    prev = Fraction(1)
    for k in range(max(cap, 1)):
        ns = NumSpace(current)
        lam = nef_threshold(current, a_cur, rescale=False, ns=ns, upper=prev)
        if lam > prev:
            raise RuntimeError("Nef thresholds increased: {} > {}"
                               "".format(lam, prev))
        if lam == 0:
            outcome = MINIMAL_MODEL
            break
        curve = select_extremal_ray(current, a_cur, lam, ns)
        con = contract_ray(current, curve, ns=ns)
        if con.kind == MORI_FIBER:
            steps += [MMPStep(k, MORI_FIBER, lam, curve, current, con.target,
                              a_cur, None, con.lattice_map, {},
                              rank_n1=ns.rank, contraction=con)]
            outcome = MORI_FIBRATION
            logger.info("Step %d: Mori fiber space at lambda=%s", k, lam)
            break
        if con.kind == DIVISORIAL:
            nxt, f = con.target, con.lattice_map
            extra = {"dropped": con.dropped}
        else:
            result = flip(current, con)
            nxt, f = result.target, result.lattice_map
            extra = {"circuits": result.circuits, "flip": result}
        a_next = f.birational_transform(a_cur)
        deltas = {v: (crepant_coefficient(current, v),
                      crepant_coefficient(nxt, v))
                  for v in _step_valuations(current.fan, nxt.fan)}
        steps += [MMPStep(k, con.kind, lam, curve, current, nxt, a_cur,
                          a_next, f, deltas, rank_n1=ns.rank,
                          contraction=con, **extra)]
        logger.info("Step %d: %s at lambda=%s on wall %s", k, con.kind, lam,
                    curve.wall)
        current, a_cur, prev = nxt, a_next, lam
    else:
        raise RuntimeError("MMP did not terminate within {} steps".format(cap))

    return MMPTrace(p, scaling, steps, outcome, current, a_cur)


def scaled_threshold_sequence(trace):
    """
    lambda_i = lambda_{i-1} * lambda(X_i, Delta_i, lambda_{i-1} A_i)

    Recomputed from the models of ``trace``, with lambda_{-1} = 1.
    """
    out = []
    prev = Fraction(1)
    for step in trace.steps:
        lam = nef_threshold(step.source, prev * step.scaling_before,
                            rescale=False) * prev
        out += [lam]
        prev = lam
    return out


def expected_outcome(p):
    """A minimal model iff K + Delta is pseudoeffective over the base"""
    if is_pseudoeffective(p.log_canonical, p):
        return MINIMAL_MODEL
    return MORI_FIBRATION


def output_at_scale(p, scaling, r):
    """
    The model X^r on which K + Delta + (r - eps)A is ample for small eps

    Every face with threshold >= r is contracted and replaced by the
    regular subdivision on which -A is ample over the contraction. r = 0
    gives the minimal model.

    Returns
    -------
    Pair
        With ``meta["scaling"]`` the transform of A and ``meta["thresholds"]``

    Raises
    ------
    ValueError
        If r < 0, or if a fiber type contraction is met at a threshold >= r

    """
    r = to_rat(r)
    if r < 0:
        raise ValueError("Scale must be >= 0, got {}".format(r))
    current, h = p, scaling
    prev = Fraction(1)
    thresholds = []
    cap = from_currsys("!MMP.iteration_cap_factor") * p.fan.n_rays ** 2
    for _ in range(max(cap, 1)):
        ns = NumSpace(current)
        lam = nef_threshold(current, h, rescale=False, ns=ns, upper=prev)
        if lam == 0 or lam < r:
            break
        face = threshold_face(current, h, lam, ns)
        con = contract_face(current, face, ns=ns)
        if con.kind == MORI_FIBER:
            raise ValueError("Fiber type contraction at threshold {} >= r={}"
                             "".format(lam, r))
        fan = current.fan
        heights = (-h).coeffs
        cones = []
        for group, merged in zip(con.groups, con.merged):
            if len(group) == 1:
                cones += group
            else:
                cones += ample_cells(fan.rays, merged, heights)
        new_rays, new_cones, _ = reindex(fan.rays, cones)
        new_fan = Fan(new_rays, new_cones, fan.lattice_rank,
                      name="{}^{}".format(p.fan.meta["name"], r))
        f = LatticeMap.identity(fan, new_fan)
        current = Pair(new_fan, f.birational_transform(current.boundary),
                       p.base, p.base_map.matrix, name=p.meta["name"])
        h = f.birational_transform(h)
        thresholds += [lam]
        prev = lam
    else:
        raise RuntimeError("Output at scale {} did not stabilise".format(r))
    current.meta["scaling"] = h
    current.meta["thresholds"] = thresholds
    current.meta["scale"] = r
    return current


def _restriction_polytope(divisor, i):
    """
    Section polytope of D restricted to D_i: <m, u_i> = -a_i and
    <m, u> >= -a_u for the rays u sharing a cone with u_i
    """
    fan = divisor.fan
    nbrs = sorted({j for c in fan.cones if i in c for j in c if j != i})
    ineqs = [(qvec(fan.rays[j]), -divisor.coeffs[j]) for j in nbrs]
    eqs = [(qvec(fan.rays[i]), -divisor.coeffs[i])]
    return Polyhedron(ineqs, eqs, fan.lattice_rank)


def verify_output_characterization(p, candidate, scaling, r):
    """
    Check a candidate model against the three conditions characterising X^r

    (i) X --> candidate is a birational contraction with the same support,
    (ii) K + Delta + (r - eps)A is ample on the candidate for small eps,
    (iii) every contracted divisor E has (K + Delta + rA)|_E not big.

    Returns
    -------
    dict
        ``birational_contraction``, ``ample``, ``only_non_big_contracted``
        entries ``{"passed", "certificate"}`` and ``all_passed``

    """
    r = to_rat(r)
    fan, cfan = p.fan, candidate.fan
    report = {}

    rays_ok = set(cfan.rays) <= set(fan.rays)
    try:
        common_refinement([
            Subdivision([fan.polycone(c) for c in fan.cones]),
            Subdivision([cfan.polycone(c) for c in cfan.cones])])
        support_ok = True
    except ValueError:
        support_ok = False
    report["birational_contraction"] = {
        "passed": rays_ok and support_ok,
        "certificate": {"extra_rays": sorted(set(cfan.rays) - set(fan.rays)),
                        "same_support": support_ok}}

    d = p.log_canonical
    ample = False
    cert = None
    if rays_ok:
        f = LatticeMap.identity(fan, cfan)
        d_r = f.birational_transform(d)
        h_r = f.birational_transform(scaling)
        on_c = Pair(cfan, None, candidate.base, candidate.base_map.matrix)
        if (d_r + r * h_r).is_q_cartier() and h_r.is_q_cartier():
            ns = NumSpace(on_c)
            bad = []
            for c in ns.curves:
                top = intersection_number(d_r + r * h_r, c)
                if top < 0 or (top == 0 and intersection_number(h_r, c) >= 0):
                    bad += [c.wall]
            ample = not bad
            cert = bad
        else:
            cert = "not Q-Cartier"
    report["ample"] = {"passed": ample, "certificate": cert}

    lr = d + r * scaling
    big = []
    for i, u in enumerate(fan.rays):
        if u in cfan.rays:
            continue
        if _restriction_polytope(lr, i).dim == fan.lattice_rank - 1:
            big += [u]
    report["only_non_big_contracted"] = {"passed": not big,
                                         "certificate": big}
    report["all_passed"] = all(v["passed"] for v in report.values())
    return report


def matches_output(p, candidate, scaling, r):
    """Does the candidate fan coincide with the fan of output_at_scale?"""
    return output_at_scale(p, scaling, r).fan == candidate.fan
