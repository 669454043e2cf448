"""
Exact linear algebra over Q and Z

Rational work (rank, kernels, solving) is delegated to ``sympy.Matrix``.
Lattice work (integer kernels, saturations, sections of quotient maps) uses
unimodular row reduction on plain integer lists.
"""
from fractions import Fraction

import sympy

from .rational import primitive, to_rat


def _to_sympy(rows, ncols=None):
    rows = [list(r) for r in rows]
    if len(rows) == 0:
        return sympy.zeros(0, ncols or 0)
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator,
                                         Fraction(x).denominator)
                          for x in r] for r in rows])


def _from_sympy(x):
    return Fraction(int(x.p), int(x.q))


def rank(rows, ncols=None):
    rows = [list(r) for r in rows]
    if len(rows) == 0:
        return 0
    return _to_sympy(rows).rank()


def nullspace(rows, ncols):
    """
    Rational basis of {x : rows . x = 0} as tuples of Fractions
    """
    rows = [list(r) for r in rows if any(Fraction(a) != 0 for a in r)]
    if len(rows) == 0:
        return [tuple(Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)]
    mat = _to_sympy(rows)
    return [tuple(_from_sympy(x) for x in vec) for vec in mat.nullspace()]


def solve(rows, rhs, ncols):
    """
    One rational solution of rows . x = rhs, or None if inconsistent

    Free variables are set to zero.
    """
    rows = [list(r) for r in rows]
    if len(rows) == 0:
        return tuple(Fraction(0) for _ in range(ncols))
    aug = _to_sympy([r + [b] for r, b in zip(rows, rhs)])
    rref, pivots = aug.rref()
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = _from_sympy(rref[i, ncols])
    return tuple(sol)


def independent_rows(rows):
    """
    Indices of a maximal linearly independent subset, greedy in input order
    """
    rows = [list(r) for r in rows]
    if len(rows) == 0:
        return []
    _, pivots = _to_sympy(rows).T.rref()
    return list(pivots)


def det(rows):
    if len(rows) == 0:
        return Fraction(1)
    return _from_sympy(sympy.nsimplify(_to_sympy(rows).det()))


def inverse(rows):
    inv = _to_sympy(rows).inv()
    return [tuple(_from_sympy(inv[i, j]) for j in range(inv.cols))
            for i in range(inv.rows)]


def mat_vec(rows, v):
    return tuple(sum((Fraction(a) * Fraction(b) for a, b in zip(r, v)),
                     Fraction(0)) for r in rows)


def mat_mul(a_rows, b_rows):
    b_cols = list(zip(*b_rows)) if b_rows else []
    return [tuple(sum((Fraction(x) * Fraction(y) for x, y in zip(r, c)),
                      Fraction(0)) for c in b_cols) for r in a_rows]


def transpose(rows, ncols=None):
    if len(rows) == 0:
        return [tuple() for _ in range(ncols or 0)]
    return [tuple(col) for col in zip(*rows)]


def _integer_rows(rows):
    return [list(primitive_row_scale(r)) for r in rows]


def primitive_row_scale(row):
    """Clear denominators of a rational row (no gcd reduction)"""
    from .rational import common_denominator
    den = common_denominator(row)
    return tuple(int(Fraction(x) * den) for x in row)


def echelon_with_transform(mat, ncols):
    """
    Unimodular row reduction of an integer matrix

    Returns ``(H, T, r)`` with ``T . mat = H``, ``T`` unimodular and the first
    ``r`` rows of ``H`` in echelon form, the remaining rows zero.
    """
    nrows = len(mat)
    hmat = [list(int(x) for x in row) for row in mat]
    tmat = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    piv_row = 0
    for col in range(ncols):
        if piv_row >= nrows:
            break
        while True:
            nonzero = [i for i in range(piv_row, nrows) if hmat[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(hmat[i][col]))
            hmat[piv_row], hmat[best] = hmat[best], hmat[piv_row]
            tmat[piv_row], tmat[best] = tmat[best], tmat[piv_row]
            done = True
            for i in range(piv_row + 1, nrows):
                if hmat[i][col] != 0:
                    q = hmat[i][col] // hmat[piv_row][col]
                    hmat[i] = [a - q * b for a, b in zip(hmat[i],
                                                         hmat[piv_row])]
                    tmat[i] = [a - q * b for a, b in zip(tmat[i],
                                                         tmat[piv_row])]
                    if hmat[i][col] != 0:
                        done = False
            if done:
                break
        if any(hmat[i][col] != 0 for i in range(piv_row, nrows)):
            piv_row += 1
    return hmat, tmat, piv_row


def integer_kernel(rows, ncols):
    """
    Lattice basis of {x in Z^n : rows . x = 0}

    ``rows`` may be rational; they are scaled to integers first.
    """
    rows = [primitive_row_scale(r) for r in rows]
    if len(rows) == 0 or all(not any(r) for r in rows):
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    # reduce the transpose: rows of T beyond the rank annihilate rows
    mat_t = [[rows[j][i] for j in range(len(rows))] for i in range(ncols)]
    _, tmat, r = echelon_with_transform(mat_t, len(rows))
    return [tuple(tmat[i]) for i in range(r, ncols)]


def saturate(vectors, dim):
    """
    Lattice basis of span_Q(vectors) intersected with Z^n
    """
    vectors = [v for v in vectors if any(Fraction(a) != 0 for a in v)]
    if len(vectors) == 0:
        return []
    perp = nullspace(vectors, dim)
    if len(perp) == 0:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    return integer_kernel(perp, dim)


def lattice_index(vectors, dim):
    """
    Index of the sublattice spanned by independent integer ``vectors`` in its
    saturation, i.e. the multiplicity of the simplicial cone they span
    """
    if len(vectors) == 0:
        return 1
    sat = saturate(vectors, dim)
    if len(sat) != len(vectors):
        raise ValueError("Vectors are not linearly independent: {}"
                         "".format(vectors))
    coords = []
    sat_t = transpose(sat)
    for v in vectors:
        c = solve(sat_t, v, len(sat))
        coords += [c]
    return abs(det(coords))


def quotient_map(kernel_vectors, dim):
    """
    Integer matrix P with Z^n -> Z^(n-k) surjective and ker P = saturation

    Returns the rows of P as int tuples.
    """
    sat = saturate(kernel_vectors, dim)
    if len(sat) == 0:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    return integer_kernel(sat, dim)


def lattice_section(pmat, dim):
    """
    Integer matrix S (dim x k) with P . S = identity for a surjective P
    """
    k = len(pmat)
    if k == 0:
        return [tuple() for _ in range(dim)]
    mat_t = [[pmat[j][i] for j in range(k)] for i in range(dim)]
    hmat, tmat, r = echelon_with_transform(mat_t, k)
    # T . P^T = H, so P . T^T = H^T; the top k x k block of H is unimodular
    top = [[Fraction(hmat[i][j]) for j in range(k)] for i in range(k)]
    top_inv_t = transpose(inverse(top))
    t_top = [[Fraction(tmat[i][j]) for j in range(dim)] for i in range(k)]
    # S = T_top^T . (H_top^T)^-1
    smat = mat_mul(transpose(t_top), top_inv_t)
    for row in smat:
        if any(x.denominator != 1 for x in row):
            raise ValueError("Quotient map is not surjective on the lattice")
    return [tuple(int(x) for x in row) for row in smat]


def integer_solve(rows, rhs, ncols):
    """
    One integer solution of rows . x = rhs, or None

    ``rows`` must be integral.
    """
    nrows = len(rows)
    if nrows == 0:
        return tuple(0 for _ in range(ncols))
    rhs = [to_rat(b) for b in rhs]
    mat_t = [[int(rows[j][i]) for j in range(nrows)] for i in range(ncols)]
    hmat, tmat, r = echelon_with_transform(mat_t, nrows)
    # A . T^T = H^T, column-echelon; solve H^T y = rhs by forward substitution
    ht = [[hmat[j][i] for j in range(ncols)] for i in range(nrows)]
    y = [Fraction(0)] * ncols
    row = 0
    for j in range(r):
        while row < nrows and ht[row][j] == 0:
            row += 1
        if row >= nrows:
            return None
        acc = rhs[row] - sum((ht[row][i] * y[i] for i in range(j)),
                             Fraction(0))
        y[j] = acc / ht[row][j]
        if y[j].denominator != 1:
            return None
        row += 1
    for i in range(nrows):
        val = sum((ht[i][j] * y[j] for j in range(ncols)), Fraction(0))
        if val != rhs[i]:
            return None
    x = [sum((tmat[j][i] * y[j] for j in range(ncols)), Fraction(0))
         for i in range(ncols)]
    return tuple(int(a) for a in x)
