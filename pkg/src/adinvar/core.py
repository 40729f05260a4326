"""Lie algebras, symmetric bilinear forms and subspaces over exact rationals.

Structure constants are stored sparsely for i < j only; the i > j values
follow by antisymmetry.  Subspaces are kept in reduced row echelon form so
equality of subspaces is plain data equality.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import linalg
from .linalg import Q0, Q1, frac


class AlgebraError(Exception):
    pass


def _freeze_table(table):
    out = {}
    for (i, j), comps in table.items():
        if i >= j:
            raise AlgebraError(f"bracket key ({i},{j}) must have i < j")
        cleaned = {k: frac(v) for k, v in comps.items() if frac(v) != 0}
        if cleaned:
            out[(i, j)] = cleaned
    return out


@dataclass(frozen=True)
class LieAlgebra:
    """Anticommutative algebra given by sparse structure constants.

    table[(i, j)][k] is the e_k coefficient of [e_i, e_j], for i < j.
    Antisymmetry is built in; the Jacobi identity is *not* implied and is
    checked by ``check_jacobi`` (builders call it, raw loaders may not).
    """

    dim: int
    names: tuple
    table: dict = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "table", _freeze_table(self.table))
        if len(self.names) != self.dim:
            raise AlgebraError("names length does not match dim")
        for (i, j), comps in self.table.items():
            if not (0 <= i < j < self.dim):
                raise AlgebraError(f"bracket index ({i},{j}) out of range")
            if any(not 0 <= k < self.dim for k in comps):
                raise AlgebraError("bracket component index out of range")

    @classmethod
    def from_brackets(cls, dim, brackets, names=None, check=True):
        """Build from {(i, j): {k: coeff}}; check=True asserts Jacobi."""
        names = tuple(names) if names else tuple(f"e{i+1}" for i in range(dim))
        alg = cls(dim, names, dict(brackets))
        if check:
            bad = check_jacobi(alg)
            if bad:
                i, j, k, _ = bad[0]
                raise AlgebraError(f"Jacobi identity fails at triple ({i},{j},{k})")
        return alg

    @classmethod
    def abelian(cls, dim, names=None):
        return cls.from_brackets(dim, {}, names, check=False)

    def basis_bracket(self, i, j):
        """[e_i, e_j] as a coefficient vector."""
        v = linalg.zero_vector(self.dim)
        if i == j:
            return v
        sign, key = (Q1, (i, j)) if i < j else (-Q1, (j, i))
        for k, c in self.table.get(key, {}).items():
            v[k] = sign * c
        return v

    def bracket(self, x, y):
        """Bilinear extension of the basis brackets."""
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError("vector length does not match algebra dimension")
        out = linalg.zero_vector(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0 or i == j:
                    continue
                c = xi * yj
                for k, s in self._basis_table(i, j):
                    out[k] += c * s
        return out

    def _basis_table(self, i, j):
        sign, key = (Q1, (i, j)) if i < j else (-Q1, (j, i))
        return [(k, sign * c) for k, c in self.table.get(key, {}).items()]

    def ad(self, i):
        """Matrix of ad(e_i): columns are [e_i, e_j]."""
        cols = [self.basis_bracket(i, j) for j in range(self.dim)]
        return linalg.transpose(cols)

    def ad_vector(self, x):
        cols = [self.bracket(x, v) for v in linalg.identity(self.dim)]
        return linalg.transpose(cols)


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form; signature cached from congruence diagonalization."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(frac(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise AlgebraError("form matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise AlgebraError(f"form is not symmetric at ({i},{j})")

    @classmethod
    def diagonal(cls, entries):
        entries = [frac(e) for e in entries]
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else Q0 for j in range(n))
                         for i in range(n)))

    @property
    def dim(self):
        return len(self.matrix)

    def rows(self):
        return [list(row) for row in self.matrix]

    def apply(self, x, y):
        return linalg.dot(x, linalg.mat_vec(self.rows(), y))

    @cached_property
    def signature(self):
        return linalg.signature_of(self.rows())

    @property
    def nondegenerate(self):
        return self.signature[2] == 0


@dataclass(frozen=True)
class Subspace:
    """Row space in reduced echelon form; equality is data equality."""

    ambient_dim: int
    rows: tuple

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [list(map(frac, v)) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise AlgebraError("spanning vector has wrong length")
        reduced = linalg.rref(vectors)[0] if vectors else []
        return cls(ambient_dim, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim):
        return cls.span(linalg.identity(ambient_dim), ambient_dim)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def contains(self, v):
        stacked = self.basis() + [list(map(frac, v))]
        return linalg.rank(stacked) == self.dim

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def coordinates(self, v):
        """Coefficients of v in this basis, or None if v is outside."""
        if self.dim == 0:
            return [] if linalg.is_zero_vector(list(v)) else None
        return linalg.solve(linalg.transpose(self.basis()), list(map(frac, v)))

    def add(self, other):
        return Subspace.span(self.basis() + other.basis(), self.ambient_dim)

    def intersect(self, other):
        """Zassenhaus-free intersection via nullspace of stacked coordinates."""
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # x = sum a_i u_i = sum b_j v_j  <=>  [U^T | -V^T] (a,b)^T = 0
        ut = linalg.transpose(self.basis())
        vt = linalg.transpose(other.basis())
        stacked = [ru + [-x for x in rv] for ru, rv in zip(ut, vt)]
        sols = linalg.nullspace(stacked)
        vecs = []
        for s in sols:
            a = s[:self.dim]
            vec = linalg.zero_vector(self.ambient_dim)
            for coeff, row in zip(a, self.basis()):
                vec = linalg.vec_add(vec, linalg.vec_scale(coeff, row))
            vecs.append(vec)
        return Subspace.span(vecs, self.ambient_dim)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def bracket(alg, x, y):
    return alg.bracket(x, y)


def check_jacobi(alg):
    """All triples i<j<k whose cyclic bracket sum is nonzero.

    Returns a list of (i, j, k, sum_vector); empty iff alg is a Lie algebra.
    """
    violations = []
    basis = linalg.identity(alg.dim)
    for i, j, k in combinations(range(alg.dim), 3):
        s = alg.bracket(alg.basis_bracket(i, j), basis[k])
        s = linalg.vec_add(s, alg.bracket(alg.basis_bracket(j, k), basis[i]))
        s = linalg.vec_add(s, alg.bracket(alg.basis_bracket(k, i), basis[j]))
        if not linalg.is_zero_vector(s):
            violations.append((i, j, k, s))
    return violations


def ad_invariant(alg, form):
    """True iff B([x,y],z) = -B(y,[x,z]) on all basis triples."""
    if form.dim != alg.dim:
        raise AlgebraError("form and algebra dimensions differ")
    basis = linalg.identity(alg.dim)
    for i in range(alg.dim):
        for j in range(alg.dim):
            bij = alg.basis_bracket(i, j)
            for k in range(alg.dim):
                lhs = form.apply(bij, basis[k])
                rhs = form.apply(basis[j], alg.basis_bracket(i, k))
                if lhs + rhs != 0:
                    return False
    return True


def signature(form):
    """(n_minus, n_plus, n_zero); R^{p,q} carries p negative squares."""
    return form.signature


def kernel_of(matrix):
    rows = [list(map(frac, r)) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    return Subspace.span(linalg.nullspace(rows), ncols)


def center(alg):
    """Solutions of [e_i, x] = 0 for every basis e_i."""
    rows = []
    for i in range(alg.dim):
        adi = alg.ad(i)
        rows.extend(adi)
    if not rows:
        return Subspace.full(alg.dim)
    return Subspace.span(linalg.nullspace(rows), alg.dim)


def orthogonal_complement(sub, form):
    """{x : B(s, x) = 0 for all s in sub}."""
    if sub.dim == 0:
        return Subspace.full(sub.ambient_dim)
    rows = [linalg.mat_vec(form.rows(), list(r)) for r in sub.rows]
    return Subspace.span(linalg.nullspace(rows), sub.ambient_dim)


def is_subalgebra(alg, sub):
    base = sub.basis()
    return all(sub.contains(alg.bracket(u, v))
               for a, u in enumerate(base) for v in base[a + 1:])


def is_ideal(alg, sub):
    basis = linalg.identity(alg.dim)
    return all(sub.contains(alg.bracket(b, u)) for b in basis for u in sub.basis())


def totally_isotropic(sub, form):
    base = sub.basis()
    return all(form.apply(u, v) == 0
               for a, u in enumerate(base) for v in base[a:])


@dataclass(frozen=True)
class SeriesResult:
    chain: tuple      # Subspaces, starting at the full algebra
    step: int | None  # k with term_k = 0 != term_{k-1}; None if not reached

    @property
    def dims(self):
        return tuple(s.dim for s in self.chain)


def _bracket_span(alg, left, right):
    vecs = [alg.bracket(u, v) for u in left.basis() for v in right.basis()]
    return Subspace.span(vecs, alg.dim)


def _series(alg, next_term):
    chain = [Subspace.full(alg.dim)]
    while True:
        nxt = next_term(chain[-1])
        if nxt == chain[-1]:
            return SeriesResult(tuple(chain), None)
        chain.append(nxt)
        if nxt.dim == 0:
            return SeriesResult(tuple(chain), len(chain) - 1)


def derived_series(alg):
    """C^0 = g, C^i = [C^{i-1}, C^{i-1}]; step k means k-step solvable."""
    return _series(alg, lambda s: _bracket_span(alg, s, s))


def lower_central_series(alg):
    """D^0 = g, D^i = [g, D^{i-1}]; step k means k-step nilpotent."""
    full = Subspace.full(alg.dim)
    return _series(alg, lambda s: _bracket_span(alg, full, s))


def invariant_forms(alg):
    """Basis of symmetric forms with B([x,y],z) + B(y,[x,z]) = 0."""
    n = alg.dim
    pairs = [(p, q) for p in range(n) for q in range(p, n)]
    index = {pq: a for a, pq in enumerate(pairs)}

    def entry_coeff(row, p, q, c):
        row[index[(p, q) if p <= q else (q, p)]] += c

    rows = []
    for i in range(n):
        adi = alg.ad(i)
        for j in range(n):
            for k in range(j, n):
                row = [Q0] * len(pairs)
                for p in range(n):
                    if adi[p][j] != 0:
                        entry_coeff(row, p, k, adi[p][j])
                    if adi[p][k] != 0:
                        entry_coeff(row, j, p, adi[p][k])
                if any(x != 0 for x in row):
                    rows.append(row)
    sols = linalg.nullspace(rows) if rows else linalg.identity(len(pairs))
    forms = []
    for s in sols:
        m = linalg.zeros(n, n)
        for (p, q), a in index.items():
            m[p][q] = s[a]
            m[q][p] = s[a]
        forms.append(BilinearForm(tuple(tuple(r) for r in m)))
    return forms


def restrict_to_subalgebra(alg, sub, names=None):
    """Lie algebra on sub's basis; raises if sub is not closed under brackets."""
    base = sub.basis()
    table = {}
    for a in range(sub.dim):
        for b in range(a + 1, sub.dim):
            w = alg.bracket(base[a], base[b])
            coords = sub.coordinates(w)
            if coords is None:
                raise AlgebraError("subspace is not a subalgebra")
            comps = {k: c for k, c in enumerate(coords) if c != 0}
            if comps:
                table[(a, b)] = comps
    return LieAlgebra.from_brackets(sub.dim, table, names, check=False)


def killing_form(alg):
    ads = [alg.ad(i) for i in range(alg.dim)]
    m = [[linalg.trace(linalg.mat_mul(ads[i], ads[j])) for j in range(alg.dim)]
         for i in range(alg.dim)]
    return BilinearForm(tuple(tuple(r) for r in m))
