"""
Helper functions for toricmmp
"""
import os
import platform
import sys
import warnings
from importlib import import_module

import numpy as np

from . import rc

_BUG_REPORT_PACKAGES = ["toricmmp", "numpy", "scipy", "sympy", "astropy",
                        "yaml", "docopt"]


def from_currsys(item):
    """
    Resolves bang-strings against ``rc.__currsys__``

    Dicts are resolved value by value, in place. The string ``"none"`` maps to
    None and anything else is passed through.
    """
    if isinstance(item, dict):
        item.update({key: from_currsys(val) for key, val in item.items()})
        return item

    if not isinstance(item, str):
        return item

    if item.startswith("!"):
        if item not in rc.__currsys__:
            raise ValueError("Config key {} is not set in rc.__currsys__"
                             "".format(item))
        return rc.__currsys__[item]

    return None if item.lower() == "none" else item


def find_file(filename, path=None, silent=False):
    """
    Looks up an instance or data file

    Parameters
    ----------
    filename : str
        Absolute path, path relative to a search directory, or a bang-string
    path : list, optional
        Directories to search. Default: ``rc.__search_path__``.
        None entries are skipped.
    silent : bool
        Return None without a warning when nothing is found

    Returns
    -------
    fname : str, None

    """
    if filename is None or filename.lower() == "none":
        return None
    if filename.startswith("!"):
        filename = from_currsys(filename)

    if os.path.isabs(filename):
        candidates = [filename]
    else:
        dirs = rc.__search_path__ if path is None else path
        candidates = [os.path.join(d, filename) for d in dirs if d is not None]

    for fname in candidates:
        if os.path.exists(fname):
            return os.path.normpath(fname)

    if not silent:
        warnings.warn("Could not find {} in {}".format(filename, path or
                                                       rc.__search_path__))
    return None


def bug_report():
    """Prints python, dependency and OS versions for an issue report"""
    lines = ["Python:", sys.version, ""]
    for name in _BUG_REPORT_PACKAGES:
        try:
            version = getattr(import_module(name), "__version__", "unknown")
            lines += ["{:>10}: {}".format(name, version)]
        except ImportError:
            lines += ["{:>10}: not installed".format(name)]

    uname = platform.uname()
    lines += ["", "OS: {} {} ({})".format(uname.system, uname.release,
                                          uname.machine)]
    print("\n".join(lines))


def get_rng(seed=None):
    """
    Returns a numpy Generator seeded from ``seed`` or ``!SIM.random.seed``
    """
    if seed is None:
        seed = from_currsys("!SIM.random.seed")
    return np.random.default_rng(seed)


def random_int_vectors(rng, n, dim, low=-3, high=3, nonzero=True):
    """
    Draws ``n`` integer vectors with entries in [low, high] as int tuples
    """
    vecs = []
    while len(vecs) < n:
        vec = tuple(int(x) for x in rng.integers(low, high + 1, size=dim))
        if nonzero and not any(vec):
            continue
        vecs += [vec]
    return vecs


def random_rationals(rng, n, max_num=6, max_den=6, nonneg=False):
    """
    Draws ``n`` Fractions with bounded numerators and denominators
    """
    from fractions import Fraction
    low = 0 if nonneg else -max_num
    nums = rng.integers(low, max_num + 1, size=n)
    dens = rng.integers(1, max_den + 1, size=n)
    return [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]
