"""
Instance files: a fan, an optional base, named divisors and parameters

Format 1 is UTF-8 JSON. Rationals are integers or "p/q" strings::

    {"format": 1,
     "name": "f1",
     "rays": [[1, 0], [1, 1], [0, 1], [-1, -1]],
     "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
     "divisors": {"Delta": [0, 0, 0, 0], "A": [0, 0, 1, 3]},
     "params": {"r": "7/8"}}

An optional ``"base"`` holds ``rays``, ``cones``, ``rank`` and the
``matrix`` of N -> N_Z. Every error names the line of the offending key.
"""
import json
import logging

from ..utils import find_file
from ..exceptions import InstanceError
from ..exactla.rational import to_rat
from ..toric.fan import Fan
from ..toric.divisor import TDivisor
from ..toric.pair import Pair

logger = logging.getLogger(__name__)

FORMAT = 1


def _line_of(text, key):
    """1-based line of the first occurrence of "key", None if absent"""
    needle = '"{}"'.format(key)
    for i, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return i
    return None


class Instance:
    """
    A parsed instance file

    Attributes
    ----------
    pair : Pair
    divisors : dict
        name -> TDivisor; ``"Delta"`` is always present
    params : dict
        Raw parameters; rationals stay strings until ``param`` is called
    name : str

    """
    def __init__(self, pair, divisors, params, **kwargs):
        self.pair = pair
        self.divisors = divisors
        self.params = params
        self.meta = {"name": kwargs.get("name", "instance"),
                     "filename": kwargs.get("filename")}

    @property
    def name(self):
        return self.meta["name"]

    @property
    def scaling(self):
        if "A" not in self.divisors:
            raise InstanceError("The instance has no scaling divisor 'A'")
        return self.divisors["A"]

    def param(self, key, default=None, rational=False):
        value = self.params.get(key, default)
        if rational and value is not None:
            return to_rat(value)
        return value

    def __repr__(self):
        return "Instance('{}', divisors={})".format(self.name,
                                                    sorted(self.divisors))


def _int_rows(rows, key, text, width=None):
    if not isinstance(rows, list):
        raise InstanceError("'{}' must be a list".format(key),
                            _line_of(text, key))
    out = []
    for row in rows:
        if not isinstance(row, list) or \
                not all(isinstance(x, int) and not isinstance(x, bool)
                        for x in row):
            raise InstanceError("'{}' must hold lists of integers, got {}"
                                "".format(key, row), _line_of(text, key))
        if width is not None and len(row) != width:
            raise InstanceError("'{}' entry {} does not have length {}"
                                "".format(key, row, width),
                                _line_of(text, key))
        out += [tuple(row)]
    return out


def _fan(data, key, text, rank=None):
    rays = _int_rows(data.get("rays", []), "rays", text)
    if rank is None:
        rank = data.get("rank", len(rays[0]) if rays else None)
    if rank is None:
        raise InstanceError("'{}' needs 'rank' when it has no rays"
                            "".format(key), _line_of(text, key))
    rays = _int_rows(data.get("rays", []), "rays", text, width=rank)
    cones = data.get("cones", [list(range(len(rays)))] if rays else [[]])
    if not isinstance(cones, list) or \
            any(not isinstance(c, list) for c in cones):
        raise InstanceError("'cones' must be a list of index lists",
                            _line_of(text, "cones"))
    try:
        fan = Fan(rays, cones, rank, name=key)
    except ValueError as err:
        raise InstanceError(str(err), _line_of(text, "cones"))
    errors = fan.validate()["errors"]
    if errors:
        raise InstanceError("Invalid fan '{}': {}".format(key,
                                                          "; ".join(errors)),
                            _line_of(text, "rays"))
    return fan


def _divisor(fan, name, coeffs, text):
    if not isinstance(coeffs, list) or len(coeffs) != fan.n_rays:
        raise InstanceError("Divisor '{}' needs {} coefficients"
                            "".format(name, fan.n_rays), _line_of(text, name))
    try:
        return TDivisor(fan, [to_rat(a) for a in coeffs], name=name)
    except ValueError as err:
        raise InstanceError("Divisor '{}': {}".format(name, err),
                            _line_of(text, name))


def parse_instance(text, filename=None):
    """
    Build an ``Instance`` from the text of an instance file

    Raises
    ------
    InstanceError
        With the line of the offending key

    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceError("Invalid JSON: {}".format(err.msg), err.lineno)
    if not isinstance(data, dict):
        raise InstanceError("An instance must be a JSON object", 1)
    if data.get("format") != FORMAT:
        raise InstanceError("Unsupported format {}, expected {}"
                            "".format(data.get("format"), FORMAT),
                            _line_of(text, "format"))
    for key in ("rays", "cones"):
        if key not in data:
            raise InstanceError("Missing '{}'".format(key), 1)

    fan = _fan(data, data.get("name", "X"), text)
    base, matrix = None, None
    if "base" in data:
        bdata = data["base"]
        base = _fan(bdata, "base", text, rank=bdata.get("rank"))
        matrix = _int_rows(bdata.get("matrix", []), "matrix", text,
                           width=fan.lattice_rank)
        if len(matrix) != base.lattice_rank:
            raise InstanceError("'matrix' needs {} rows"
                                "".format(base.lattice_rank),
                                _line_of(text, "matrix"))

    raw = data.get("divisors", {})
    if not isinstance(raw, dict):
        raise InstanceError("'divisors' must map names to coefficients",
                            _line_of(text, "divisors"))
    divisors = {name: _divisor(fan, name, coeffs, text)
                for name, coeffs in raw.items()}
    divisors.setdefault("Delta", TDivisor.zero(fan))
    try:
        pair = Pair(fan, divisors["Delta"], base, matrix,
                    name=data.get("name", "X"))
    except ValueError as err:
        raise InstanceError(str(err), _line_of(text, "Delta") or
                            _line_of(text, "base"))
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise InstanceError("'params' must be an object",
                            _line_of(text, "params"))
    for key in ("r",):
        if key in params:
            try:
                to_rat(params[key])
            except ValueError as err:
                raise InstanceError("Parameter '{}': {}".format(key, err),
                                    _line_of(text, key))
    logger.debug("Parsed instance %s with %d rays", data.get("name"),
                 fan.n_rays)
    return Instance(pair, divisors, params, name=data.get("name", "X"),
                    filename=filename)


def load_instance(filename):
    """
    Read an instance file, also looking in the bundled instance directory
    """
    path = find_file(filename, silent=True)
    if path is None:
        raise InstanceError("Instance file not found: {}".format(filename))
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read(), filename=path)
