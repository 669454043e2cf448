"""
Machine readable reports of runs, thresholds, chambers and gluing

Rationals are written as "p/q" strings, so ``from_json(to_json())`` gives
back the same data.
"""
import json

from astropy.table import Table

from ..utils import from_currsys
from ..exactla.rational import rat_str


def fan_to_dict(fan):
    return {"rank": fan.lattice_rank,
            "rays": [list(r) for r in fan.rays],
            "cones": [list(c) for c in fan.cones]}


def pair_to_dict(p, scaling=None):
    out = {"fan": fan_to_dict(p.fan),
           "boundary": [rat_str(a) for a in p.boundary.coeffs]}
    if p.is_relative:
        out["base"] = fan_to_dict(p.base)
        out["base_matrix"] = [list(row) for row in p.base_map.matrix]
    if scaling is not None:
        out["scaling"] = [rat_str(a) for a in scaling.coeffs]
    return out


def _step_to_dict(step):
    out = {"index": step.index,
           "kind": step.kind,
           "lambda": rat_str(step.lam),
           "wall": list(step.curve.wall),
           "rays_before": step.source.fan.n_rays,
           "rays_after": step.target.fan.n_rays}
    if "dropped" in step.meta:
        out["dropped"] = list(step.meta["dropped"])
    return out


def _ledger_to_dict(ledger):
    entries = []
    for e in ledger.entries:
        values = {",".join(str(x) for x in v): [rat_str(a), rat_str(b)]
                  for v, (a, b) in sorted(e["values"].items())}
        entries += [{"step": e["step"], "kind": e["kind"],
                     "strict": [list(v) for v in sorted(e["strict"])],
                     "values": values}]
    return {"valuations": [list(v) for v in ledger.valuations],
            "entries": entries,
            "potentials": [rat_str(x) for x in ledger.potentials]}


class TraceReport:
    """
    A report of one command

    Parameters
    ----------
    command : str
    data : dict
        JSON-native content only

    """
    def __init__(self, command, data, **kwargs):
        self.command = command
        self.data = data
        self.meta = {"format": from_currsys("!SIM.reports.json_format")}
        self.meta.update(kwargs)

    @classmethod
    def from_trace(cls, trace, ledger=None, name=None):
        data = {"instance": name,
                "outcome": trace.outcome,
                "lambdas": [rat_str(x) for x in trace.lambdas],
                "steps": [_step_to_dict(s) for s in trace.steps],
                "final": pair_to_dict(trace.final, trace.final_scaling)}
        if ledger is not None:
            data["ledger"] = _ledger_to_dict(ledger)
        return cls("run", data)

    def to_dict(self):
        return {"format": self.meta["format"], "command": self.command,
                "data": self.data}

    def to_json(self, indent=None):
        if indent is None:
            indent = from_currsys("!SIM.reports.json_indent")
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        if obj.get("format") != from_currsys("!SIM.reports.json_format"):
            raise ValueError("Unsupported report format {}"
                             "".format(obj.get("format")))
        return cls(obj["command"], obj["data"])

    def summary(self):
        """Steps of a run, or the top level scalar entries otherwise"""
        if "steps" in self.data:
            names = ["step", "kind", "lambda", "wall"]
            rows = [(s["index"], s["kind"], s["lambda"], str(s["wall"]))
                    for s in self.data["steps"]]
            if not rows:
                return Table(names=names, dtype=[int, str, str, str])
            return Table(rows=rows, names=names)
        rows = [(k, json.dumps(v)) for k, v in sorted(self.data.items())]
        return Table(rows=rows, names=["key", "value"]) if rows else \
            Table(names=["key", "value"], dtype=[str, str])

    def __eq__(self, other):
        return isinstance(other, TraceReport) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "TraceReport('{}')".format(self.command)
