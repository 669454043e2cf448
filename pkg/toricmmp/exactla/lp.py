"""
Exact two-phase simplex over the rationals

Dense tableau. The pivot rule is read from ``!LP.pivot_rule``:

* ``bland``: the entering variable is the smallest index with a negative
  reduced cost. Bland's rule cannot cycle.
* ``dantzig``: the most negative reduced cost enters, until the first
  degenerate pivot. From then on the phase continues with Bland's rule.

The leaving row is chosen by the minimum ratio test with ties broken by the
smallest basic variable index. The pivot cap only guards against runaway
input.
"""
import logging
from fractions import Fraction

from ..utils import from_currsys

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

PIVOT_RULES = ("bland", "dantzig")


class LPResult:
    """
    Outcome of a linear program

    Parameters
    ----------
    status : str
        One of "optimal", "infeasible", "unbounded"
    value : Fraction, None
        Optimal objective value (in the requested sense)
    witness : tuple of Fraction, None
        A point attaining ``value``

    """
    def __init__(self, status, value=None, witness=None):
        self.status = status
        self.value = value
        self.witness = witness

    @property
    def is_optimal(self):
        return self.status == OPTIMAL

    @property
    def is_feasible(self):
        return self.status != INFEASIBLE

    def __repr__(self):
        return "LPResult({}, value={})".format(self.status, self.value)


class SimplexTableau:
    """
    Minimise c.x subject to A x = b, x >= 0 with exact arithmetic

    Parameters
    ----------
    a_rows : list of lists
    b : list
    c : list

    """
    def __init__(self, a_rows, b, c):
        self.m = len(a_rows)
        self.n = len(c)
        self.rows = []
        for row, rhs in zip(a_rows, b):
            row = [Fraction(x) for x in row]
            rhs = Fraction(rhs)
            if rhs < 0:
                row = [-x for x in row]
                rhs = -rhs
            self.rows += [row + [rhs]]
        self.c = [Fraction(x) for x in c]
        self.basis = []
        self.obj = []
        self.n_pivots = 0
        self.max_pivots = from_currsys("!LP.max_pivots")
        self.pivot_rule = from_currsys("!LP.pivot_rule")
        if self.pivot_rule not in PIVOT_RULES:
            raise ValueError("Unknown pivot rule {}, use one of {}"
                             "".format(self.pivot_rule, PIVOT_RULES))
        self._bland = self.pivot_rule == "bland"

    def pivot(self, i, j):
        self.n_pivots += 1
        if self.n_pivots > self.max_pivots:
            raise RuntimeError("Simplex exceeded {} pivots"
                               "".format(self.max_pivots))
        piv = self.rows[i][j]
        self.rows[i] = [x / piv for x in self.rows[i]]
        for k, row in enumerate(self.rows):
            if k != i and row[j] != 0:
                f = row[j]
                self.rows[k] = [a - f * b for a, b in zip(row, self.rows[i])]
        if self.obj[j] != 0:
            f = self.obj[j]
            self.obj = [a - f * b for a, b in zip(self.obj, self.rows[i])]
        self.basis[i] = j

    def primal_step(self, allowed):
        enter = [j for j in allowed if self.obj[j] < 0]
        if not enter:
            return OPTIMAL
        if self._bland:
            j = min(enter)
        else:
            j = min(enter, key=lambda k: (self.obj[k], k))
        ratios = [(row[-1] / row[j], self.basis[i], i)
                  for i, row in enumerate(self.rows) if row[j] > 0]
        if not ratios:
            return UNBOUNDED
        ratio, _, i = min(ratios)
        if ratio == 0 and not self._bland:
            logger.debug("degenerate pivot, switching to Bland's rule")
            self._bland = True
        self.pivot(i, j)
        return "go_on"

    def primal(self, allowed):
        self._bland = self.pivot_rule == "bland"
        while True:
            ret = self.primal_step(allowed)
            if ret in (OPTIMAL, UNBOUNDED):
                return ret

    def _set_objective(self, cost):
        # reduced costs d = cost - c_B B^-1 A, last entry is -value
        width = len(self.rows[0]) if self.rows else len(cost) + 1
        self.obj = list(cost) + [Fraction(0)] * (width - len(cost))
        for i, j in enumerate(self.basis):
            f = self.obj[j]
            if f != 0:
                self.obj = [a - f * b for a, b in zip(self.obj, self.rows[i])]

    def solve(self):
        """
        Run both phases and return an ``LPResult`` for min c.x
        """
        n, m = self.n, self.m
        if m == 0:
            if any(cj < 0 for cj in self.c):
                return LPResult(UNBOUNDED)
            return LPResult(OPTIMAL, Fraction(0), tuple([Fraction(0)] * n))

        # phase one: artificials n .. n+m-1
        for i, row in enumerate(self.rows):
            art = [Fraction(int(k == i)) for k in range(m)]
            self.rows[i] = row[:-1] + art + [row[-1]]
        self.basis = list(range(n, n + m))
        self._set_objective([Fraction(0)] * n + [Fraction(1)] * m)
        self.primal(range(n + m))
        if -self.obj[-1] > 0:
            return LPResult(INFEASIBLE)

        # drive artificials out of the basis, drop redundant rows
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= n:
                cols = [j for j in range(n) if self.rows[i][j] != 0]
                if cols:
                    self.pivot(i, cols[0])
                else:
                    del self.rows[i]
                    del self.basis[i]
                    continue
            i += 1
        self.rows = [row[:n] + [row[-1]] for row in self.rows]
        self.m = len(self.rows)

        if self.m == 0:
            if any(cj < 0 for cj in self.c):
                return LPResult(UNBOUNDED)
            return LPResult(OPTIMAL, Fraction(0), tuple([Fraction(0)] * n))

        self._set_objective(self.c)
        status = self.primal(range(n))
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED)
        x = [Fraction(0)] * n
        for i, j in enumerate(self.basis):
            x[j] = self.rows[i][-1]
        value = sum((cj * xj for cj, xj in zip(self.c, x)), Fraction(0))
        return LPResult(OPTIMAL, value, tuple(x))


def lp_solve(objective, ineqs=(), eqs=(), nonneg=False, sense="min"):
    """
    Optimise a linear objective over {a.x >= b} and {a.x = b}

    Parameters
    ----------
    objective : list
        Coefficients of the objective
    ineqs, eqs : list of (a, b) pairs
    nonneg : bool
        If False the variables are free and split as x = x+ - x-
    sense : str
        "min" or "max"

    Returns
    -------
    LPResult

    """
    if sense not in ("min", "max"):
        raise ValueError("sense must be 'min' or 'max', not {}".format(sense))
    n = len(objective)
    obj = [Fraction(c) for c in objective]
    if sense == "max":
        obj = [-c for c in obj]
    ineqs, eqs = list(ineqs), list(eqs)
    n_split = n if nonneg else 2 * n
    n_slack = len(ineqs)

    def expand(a):
        a = [Fraction(x) for x in a]
        if len(a) != n:
            raise ValueError("Constraint of length {} for {} variables"
                             "".format(len(a), n))
        return a if nonneg else a + [-x for x in a]

    rows, rhs = [], []
    for k, (a, b) in enumerate(ineqs):
        slack = [Fraction(-int(k == s)) for s in range(n_slack)]
        rows += [expand(a) + slack]
        rhs += [Fraction(b)]
    for a, b in eqs:
        rows += [expand(a) + [Fraction(0)] * n_slack]
        rhs += [Fraction(b)]
    cost = (obj if nonneg else obj + [-c for c in obj]) + \
        [Fraction(0)] * n_slack

    tableau = SimplexTableau(rows, rhs, cost)
    res = tableau.solve()
    logger.debug("LP with %d variables, %d rows: %s after %d pivots",
                 n, len(rows), res.status, tableau.n_pivots)
    if not res.is_optimal:
        return res
    y = res.witness
    x = tuple(y[:n]) if nonneg else tuple(y[i] - y[n + i] for i in range(n))
    value = sum((Fraction(c) * xi for c, xi in zip(objective, x)), Fraction(0))
    return LPResult(OPTIMAL, value, x)


def lp_optimize(objective, polyhedron, sense="min"):
    """
    Optimise over anything exposing ``inequalities`` and ``equalities``
    """
    return lp_solve(objective, polyhedron.inequalities, polyhedron.equalities,
                    sense=sense)


def lp_feasible_point(ineqs=(), eqs=(), dim=None):
    """A point of {a.x >= b, a.x = b} or None"""
    ineqs, eqs = list(ineqs), list(eqs)
    if dim is None:
        dim = len((ineqs + eqs)[0][0])
    res = lp_solve([0] * dim, ineqs, eqs)
    return res.witness if res.is_optimal else None
