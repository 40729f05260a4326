"""Exact linear algebra over the rationals.

Matrices are lists of rows, vectors are flat lists, all entries
``fractions.Fraction``.  Everything here is deterministic: pivoting is
always leftmost-first, so echelon forms are canonical representatives.
"""

from fractions import Fraction
from math import isqrt

Q0 = Fraction(0)
Q1 = Fraction(1)


class LinAlgError(Exception):
    pass


def frac(x) -> Fraction:
    """Coerce an int, 'p/q' string or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise LinAlgError("refusing to coerce a float to an exact rational")
    return Fraction(x)


def zeros(m, n):
    return [[Q0] * n for _ in range(m)]


def identity(n):
    return [[Q1 if i == j else Q0 for j in range(n)] for i in range(n)]


def zero_vector(n):
    return [Q0] * n


def copy_matrix(a):
    return [row[:] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def is_zero_vector(v):
    return all(x == 0 for x in v)


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def rref(a):
    """Reduced row echelon form with leftmost pivots.

    Returns (rows, pivot_columns); zero rows are dropped, so the result
    is the canonical basis of the row space.
    """
    rows = copy_matrix(a)
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Q1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def rank(a):
    return len(rref(a)[0])


def nullspace(a):
    """Canonical basis (RREF rows) of {x : a x = 0}."""
    if not a:
        return []
    n = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = zero_vector(n)
        v[f] = Q1
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(v)
    return rref(basis)[0] if basis else []


def solve(a, b):
    """One exact solution of a x = b, or None if inconsistent."""
    if not a:
        return [] if is_zero_vector(b) else None
    n = len(a[0])
    aug = [row[:] + [bi] for row, bi in zip(a, b)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = zero_vector(n)
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return x


def inverse(a):
    n = len(a)
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise LinAlgError("matrix is singular")
    return [row[n:] for row in rows]


def det(a):
    n = len(a)
    rows = copy_matrix(a)
    result = Q1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Q0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = Q1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def charpoly(a):
    """Coefficients [1, c1, ..., cn] of det(tI - a), Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Q1]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        ck = -trace(am) / k
        coeffs.append(ck)
        m = am
        for i in range(n):
            m[i][i] += ck
    return coeffs


def congruence_diagonal(g):
    """Symmetric congruence diagonalization: returns (p, d) with p g p^T = d.

    d is a diagonal matrix (as a full matrix).  Uses symmetric row+column
    elimination; an isotropic pivot with a nonzero off-diagonal partner is
    repaired by adding the partner row (a hyperbolic-pair rotation).
    """
    n = len(g)
    work = copy_matrix(g)
    p = identity(n)

    def add_row(i, j, f):
        # row_i += f*row_j, col_i += f*col_j  (congruence by elementary E)
        work[i] = [x + f * y for x, y in zip(work[i], work[j])]
        for row in work:
            row[i] += f * row[j]
        p[i] = [x + f * y for x, y in zip(p[i], p[j])]

    def swap(i, j):
        work[i], work[j] = work[j], work[i]
        for row in work:
            row[i], row[j] = row[j], row[i]
        p[i], p[j] = p[j], p[i]

    for k in range(n):
        if work[k][k] == 0:
            j = next((i for i in range(k + 1, n) if work[i][i] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((i for i in range(k + 1, n) if work[k][i] != 0), None)
                if j is None:
                    continue  # row is in the radical from here on
                add_row(k, j, Q1)
        piv = work[k][k]
        for i in range(k + 1, n):
            if work[i][k] != 0:
                add_row(i, k, -work[i][k] / piv)
    return p, work


def signature_of(g):
    """(n_minus, n_plus, n_zero) of a symmetric rational matrix."""
    _, d = congruence_diagonal(g)
    n_minus = sum(1 for i in range(len(g)) if d[i][i] < 0)
    n_plus = sum(1 for i in range(len(g)) if d[i][i] > 0)
    return (n_minus, n_plus, len(g) - n_minus - n_plus)


def _rational_sqrt(x):
    """sqrt of a nonnegative Fraction if exact, else None."""
    if x < 0:
        return None
    pn, qn = x.numerator, x.denominator
    rp, rq = isqrt(pn), isqrt(qn)
    if rp * rp == pn and rq * rq == qn:
        return Fraction(rp, rq)
    return None


def epsilon_frame(g):
    """Exact orthonormal-with-signs frame for a symmetric form.

    Returns (rows, signs) with rows[i] . g . rows[j] = signs[i] delta_ij,
    signs in {+1, -1}, or None when no such frame exists over Q (isotropic
    pivots are resolved through hyperbolic pairs; anisotropic pivots must
    have square norms, possibly after combining two basis directions).
    """
    n = len(g)

    def pair(u, v):
        return dot(u, mat_vec(g, v))

    remaining = [row[:] for row in identity(n)]
    frame, signs = [], []

    def deflate(u, eps):
        nonlocal remaining
        remaining = [vec_sub(v, vec_scale(eps * pair(v, u), u)) for v in remaining]
        remaining = rref(remaining)[0]

    while remaining:
        found = None
        candidates = list(remaining)
        for i, u in enumerate(remaining):
            for v in remaining[i + 1:]:
                candidates.append(vec_add(u, v))
                candidates.append(vec_sub(u, v))
        for v in candidates:
            norm = pair(v, v)
            if norm == 0:
                continue
            root = _rational_sqrt(abs(norm))
            if root is not None:
                found = (vec_scale(Q1 / root, v), Q1 if norm > 0 else -Q1)
                break
        if found is not None:
            u, eps = found
            frame.append(u)
            signs.append(eps)
            deflate(u, eps)
            continue
        # All candidate norms are zero or non-square; try a hyperbolic pair.
        hyper = None
        for i, u in enumerate(remaining):
            if pair(u, u) != 0:
                continue
            for v in remaining:
                c = pair(u, v)
                if c != 0:
                    hyper = (u, v, c)
                    break
            if hyper:
                break
        if hyper is None:
            return None
        u, v, c = hyper
        w = vec_sub(v, vec_scale(pair(v, v) / (2 * c), u))  # isotropic partner
        up = vec_add(u, vec_scale(Q1 / (2 * c), w))
        um = vec_sub(u, vec_scale(Q1 / (2 * c), w))
        frame.append(up)
        signs.append(Q1)
        deflate(up, Q1)
        frame.append(um)
        signs.append(-Q1)
        deflate(um, -Q1)
    return frame, signs
