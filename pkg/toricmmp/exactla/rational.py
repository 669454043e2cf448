"""
Exact rational scalars and vectors

Scalars are ``fractions.Fraction``. Vectors (``QVec``) are plain tuples of
Fractions, so they hash, compare and sort like any other tuple.
"""
import numbers
from fractions import Fraction
from functools import reduce
from math import gcd, floor, ceil

Rat = Fraction


def to_rat(x):
    """
    Convert an exact scalar to a Fraction

    Accepts ints, Fractions, sympy Rationals and strings of the form "p/q" or
    "p". Floats and decimal strings are rejected: every coefficient must be
    exact on input.

    Examples
    --------
    ::

        >>> to_rat("3/2")
        Fraction(3, 2)

    """
    if isinstance(x, bool):
        raise ValueError("Booleans are not rationals: {}".format(x))
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        txt = x.strip()
        if any(c in txt for c in ".eE") or txt == "":
            raise ValueError("Not an exact rational string: '{}'".format(x))
        try:
            return Fraction(txt)
        except (ValueError, ZeroDivisionError):
            raise ValueError("Not an exact rational string: '{}'".format(x))
    if hasattr(x, "p") and hasattr(x, "q") and getattr(x, "is_Rational", False):
        return Fraction(int(x.p), int(x.q))
    if hasattr(x, "numerator") and hasattr(x, "denominator") \
            and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise ValueError("Irrational or inexact value rejected: {} ({})"
                     "".format(x, type(x).__name__))


def int_vec(entries):
    """
    Exact integer vector as a tuple of ints

    Raises
    ------
    ValueError
        If an entry is not an exact integer, e.g. ``Fraction(3, 2)`` or 1.0

    """
    entries = list(entries)
    out = []
    for x in entries:
        if isinstance(x, numbers.Integral) and not isinstance(x, bool):
            out += [int(x)]
            continue
        q = to_rat(x)
        if q.denominator != 1:
            raise ValueError("Entry {} of {} is not an integer"
                             "".format(rat_str(q), tuple(entries)))
        out += [q.numerator]
    return tuple(out)


def qvec(entries):
    return tuple(to_rat(x) for x in entries)


def zero_vec(dim):
    return tuple(Fraction(0) for _ in range(dim))


def unit_vec(dim, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("Dimension mismatch: {} vs {}".format(len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def vneg(v):
    return tuple(-a for a in v)


def vsum(vecs, dim):
    out = zero_vec(dim)
    for v in vecs:
        out = vadd(out, v)
    return out


def is_zero(v):
    return all(a == 0 for a in v)


def lcm(a, b):
    return a * b // gcd(a, b) if a and b else max(a, b)


def common_denominator(values):
    return reduce(lcm, (Fraction(x).denominator for x in values), 1)


def primitive(v):
    """
    Scale a rational vector by a positive factor to a primitive integer vector

    Returns a tuple of ints. The zero vector is returned unchanged.
    """
    v = [Fraction(x) for x in v]
    den = common_denominator(v)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(a) for a in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def is_primitive(v):
    if any(Fraction(x).denominator != 1 for x in v):
        return False
    return reduce(gcd, (abs(int(x)) for x in v), 0) == 1


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def rfloor(x):
    return Fraction(floor(x))


def rceil(x):
    return Fraction(ceil(x))


def rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else \
        "{}/{}".format(x.numerator, x.denominator)


def vec_str(v):
    return "(" + ", ".join(rat_str(a) for a in v) + ")"
