"""Left-invariant Levi-Civita geometry: connection, curvature, sectional
curvature, Ricci tensor and geodesic criteria.

Everything is computed twice where the construction admits a closed form:
once from the Koszul formula / curvature definition (ground truth) and once
from the block formulas of the d + h* algebras; tests pin exact equality.
"""

from dataclasses import dataclass

from . import linalg
from .core import BilinearForm, is_subalgebra
from .linalg import Q0, Q1


class GeometryError(Exception):
    pass


@dataclass(frozen=True)
class Tensor3:
    """Coefficients G[i][j] = Op(e_i) e_j as vectors over the basis."""

    dim: int
    data: tuple

    @classmethod
    def from_function(cls, dim, fn):
        return cls(dim, tuple(tuple(tuple(fn(i, j)) for j in range(dim))
                              for i in range(dim)))

    def entry(self, i, j):
        return list(self.data[i][j])

    def apply(self, x, y):
        out = linalg.zero_vector(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                out = [o + c * t for o, t in zip(out, self.data[i][j])]
        return out

    def apply_left(self, i, v):
        """Op(e_i) applied to a vector."""
        out = linalg.zero_vector(self.dim)
        for j, vj in enumerate(v):
            if vj != 0:
                out = [o + vj * t for o, t in zip(out, self.data[i][j])]
        return out

    def __sub__(self, other):
        return Tensor3(self.dim, tuple(
            tuple(tuple(a - b for a, b in zip(self.data[i][j], other.data[i][j]))
                  for j in range(self.dim)) for i in range(self.dim)))


@dataclass(frozen=True)
class Tensor4:
    """Coefficients R[i][j][k] = R(e_i, e_j) e_k as vectors over the basis."""

    dim: int
    data: tuple

    @classmethod
    def from_function(cls, dim, fn):
        return cls(dim, tuple(tuple(tuple(tuple(fn(i, j, k)) for k in range(dim))
                                    for j in range(dim)) for i in range(dim)))

    def entry(self, i, j, k):
        return list(self.data[i][j][k])

    def apply(self, x, y, z):
        out = linalg.zero_vector(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, zk in enumerate(z):
                    if zk == 0:
                        continue
                    c = xi * yj * zk
                    out = [o + c * t for o, t in zip(out, self.data[i][j][k])]
        return out


def levi_civita(alg, form):
    """Koszul formula: 2<D_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>."""
    if not form.nondegenerate:
        raise GeometryError("metric is degenerate")
    n = alg.dim
    binv = linalg.inverse(form.rows())
    basis = linalg.identity(n)

    def nabla(i, j):
        rhs = []
        bij = alg.basis_bracket(i, j)
        for k in range(n):
            t = form.apply(bij, basis[k])
            t -= form.apply(alg.basis_bracket(j, k), basis[i])
            t += form.apply(alg.basis_bracket(k, i), basis[j])
            rhs.append(t / 2)
        return linalg.mat_vec(binv, rhs)

    return Tensor3.from_function(n, nabla)


def levi_civita_gd(gd):
    """Closed form on d + h*: D_(x1+h1*)(x2+h2*) = ([x1,x2] - pi(h1)x2 - pi(h2)x1)/2.

    [x1,x2] is the full algebra bracket of the d parts (it carries the
    cocycle component), so the connection has an h* output as well.
    """
    alg = gd.L
    n = alg.dim
    basis = linalg.identity(n)

    def nabla(i, j):
        x1, h1 = gd.split(basis[i])
        x2, h2 = gd.split(basis[j])
        out = alg.bracket(gd.embed_d(x1), gd.embed_d(x2))
        out = linalg.vec_sub(out, gd.embed_d(
            linalg.mat_vec(gd.rep.pi_of(h1), x2)))
        out = linalg.vec_sub(out, gd.embed_d(
            linalg.mat_vec(gd.rep.pi_of(h2), x1)))
        return linalg.vec_scale(Q1 / 2, out)

    return Tensor3.from_function(n, nabla)


def curvature(gamma, alg):
    """R(x,y)z = D_x D_y z - D_y D_x z - D_[x,y] z from a connection tensor."""
    n = alg.dim
    basis = linalg.identity(n)

    def r(i, j, k):
        out = gamma.apply_left(i, gamma.entry(j, k))
        out = linalg.vec_sub(out, gamma.apply_left(j, gamma.entry(i, k)))
        out = linalg.vec_sub(out, gamma.apply(alg.basis_bracket(i, j), basis[k]))
        return out

    return Tensor4.from_function(n, r)


def curvature_gd(gd):
    """Block formulas for the curvature of the d + h* algebra."""
    alg = gd.L
    nd, nh = gd.nd, gd.nh
    n = nd + nh
    ellinv = gd.ell_inv()
    unit_d = linalg.identity(nd)

    def pi_of(hc):
        return gd.rep.pi_of(hc)

    def beta_star(x, y):
        # h vector with ell(beta_star) = beta
        return linalg.mat_vec(ellinv, gd.rep.beta(x, y))

    def beta_vec(x, y):
        return gd.embed_h(linalg.mat_vec(ellinv, gd.rep.beta(x, y)))

    def r(i, j, k):
        xi, hi = gd.split(linalg.identity(n)[i])
        xj, hj = gd.split(linalg.identity(n)[j])
        xk, hk = gd.split(linalg.identity(n)[k])
        di, dj, dk = i < nd, j < nd, k < nd
        if di and dj and dk:
            out = gd.embed_d(linalg.mat_vec(pi_of(beta_star(xi, xj)),
                                            linalg.vec_scale(Q1 / 2, xk)))
            out = linalg.vec_sub(out, gd.embed_d(
                linalg.mat_vec(pi_of(beta_star(xj, xk)),
                               linalg.vec_scale(Q1 / 4, xi))))
            out = linalg.vec_sub(out, gd.embed_d(
                linalg.mat_vec(pi_of(beta_star(xk, xi)),
                               linalg.vec_scale(Q1 / 4, xj))))
            inner = gd.rep.d.bracket(xi, xj)
            out = linalg.vec_sub(out, linalg.vec_scale(
                Q1 / 4, alg.bracket(gd.embed_d(inner), gd.embed_d(xk))))
            return out
        if di and dj:  # z in h*; ell-basis index k - nd names the h vector
            h = [Q0] * nh
            h[k - nd] = Q1
            pih = pi_of(h)
            out = linalg.vec_scale(-Q1 / 4, beta_vec(xi, linalg.mat_vec(pih, xj)))
            out = linalg.vec_sub(out, linalg.vec_scale(
                Q1 / 4, beta_vec(linalg.mat_vec(pih, xi), xj)))
            out = linalg.vec_add(out, gd.embed_d(linalg.mat_vec(
                pih, linalg.vec_scale(Q1 / 4, gd.rep.d.bracket(xi, xj)))))
            return out
        if di and not dj and dk:  # R(x, h*) y
            h = [Q0] * nh
            h[j - nd] = Q1
            pih = pi_of(h)
            out = linalg.vec_scale(-Q1 / 4, alg.bracket(
                gd.embed_d(xi), gd.embed_d(linalg.mat_vec(pih, xk))))
            out = linalg.vec_add(out, gd.embed_d(linalg.mat_vec(
                pih, linalg.vec_scale(Q1 / 4, gd.rep.d.bracket(xi, xk)))))
            return out
        if not di and dj and dk:  # R(h*, x) y = -R(x, h*) y
            return linalg.vec_scale(-Q1, r(j, i, k))
        if di and not dj and not dk:  # R(x, h1*) h2*
            h1 = [Q0] * nh
            h1[j - nd] = Q1
            h2 = [Q0] * nh
            h2[k - nd] = Q1
            out = linalg.mat_vec(pi_of(h1), linalg.mat_vec(pi_of(h2), xi))
            return gd.embed_d(linalg.vec_scale(-Q1 / 4, out))
        if not di and dj and not dk:
            return linalg.vec_scale(-Q1, r(j, i, k))
        if not di and not dj and dk:  # R(h1*, h2*) x
            h1 = [Q0] * nh
            h1[i - nd] = Q1
            h2 = [Q0] * nh
            h2[j - nd] = Q1
            hb = gd.rep.h.bracket(h1, h2)
            return gd.embed_d(linalg.vec_scale(
                Q1 / 4, linalg.mat_vec(pi_of(hb), xk)))
        return linalg.zero_vector(n)

    return Tensor4.from_function(n, r)


def plane_discriminant(form, x, y):
    return form.apply(x, x) * form.apply(y, y) - form.apply(x, y) ** 2


def sectional(r_tensor, form, x, y):
    """K = <R(x,y)y, x> / (<x,x><y,y> - <x,y>^2) on a nondegenerate plane."""
    qp = plane_discriminant(form, x, y)
    if qp == 0:
        raise GeometryError("degenerate plane")
    return form.apply(r_tensor.apply(x, y, y), x) / qp


def sectional_gd_closed(gd, x, y):
    """Case form of the sectional curvature on d + h*.

    Needs an orthonormal pair with each vector purely in d or purely in h*:
      both in d:   e1 e2 (<[x,y],[x,y]>/4 - 3 <beta(x,y),beta(x,y)>/4)
      d and h*:    e1 e2 <pi(y*)x, pi(y*)x>/4
      both in h*:  0
    """
    xd, xh = gd.split(x)
    yd, yh = gd.split(y)
    if _mixed_block(xd, xh) or _mixed_block(yd, yh):
        raise GeometryError("closed form needs pure d or pure h* arguments")
    metric = gd.metric
    e1, e2 = metric.apply(x, x), metric.apply(y, y)
    if abs(e1) != 1 or abs(e2) != 1 or metric.apply(x, y) != 0:
        raise GeometryError("closed form needs an orthonormal pair")
    x_in_d = any(c != 0 for c in xd)
    y_in_d = any(c != 0 for c in yd)
    if x_in_d and y_in_d:
        bxy = gd.rep.d.bracket(xd, yd)
        beta = gd.rep.beta(xd, yd)
        winv = gd.ell_inv()
        beta_norm = linalg.dot(beta, linalg.mat_vec(winv, beta))
        inner = gd.rep.d_form.apply(bxy, bxy)
        return e1 * e2 * (inner / 4 - 3 * beta_norm / 4)
    if not x_in_d and not y_in_d:
        return linalg.Q0
    if not x_in_d:
        xd, yh = yd, xh
        e1, e2 = e2, e1
    pix = linalg.mat_vec(gd.rep.pi_of(yh), xd)
    return e1 * e2 * gd.rep.d_form.apply(pix, pix) / 4


def _mixed_block(d_part, h_part):
    return any(c != 0 for c in d_part) and any(c != 0 for c in h_part)


def ricci(r_tensor, form):
    """Ric(x, y) = trace(z -> R(z, x) y); symmetric for a metric connection."""
    if not form.nondegenerate:
        raise GeometryError("metric is degenerate")
    n = r_tensor.dim
    m = [[sum(r_tensor.data[a][i][j][a] for a in range(n)) for j in range(n)]
         for i in range(n)]
    return BilinearForm(tuple(tuple(row) for row in m))


def ricci_operator(r_tensor, form):
    """The metric-self-adjoint T with Ric(x,y) = <Tx, y>."""
    ric = ricci(r_tensor, form)
    return linalg.mat_mul(linalg.inverse(form.rows()), ric.rows())


def ricci_gd_closed(gd):
    """Block closed forms of the Ricci tensor on d + h*.

    The d-d block needs the signed sum over an orthonormal h* basis; it is
    evaluated through an exact epsilon-frame when one exists over Q and
    through the equivalent inverse-Gram contraction otherwise.
    """
    nd, nh = gd.nd, gd.nh
    w = [list(r) for r in gd.ell]
    frame = linalg.epsilon_frame(w)
    if frame is not None:
        vecs, signs = frame
        s = linalg.zeros(nd, nd)
        for v, eps in zip(vecs, signs):
            p = gd.rep.pi_of(v)
            s = linalg.mat_add(s, linalg.mat_scale(eps, linalg.mat_mul(p, p)))
    else:
        winv = linalg.inverse(w)
        s = linalg.zeros(nd, nd)
        for a in range(nh):
            for b in range(nh):
                if winv[a][b] != 0:
                    pa = gd.rep.mat(a)
                    pb = gd.rep.mat(b)
                    s = linalg.mat_add(
                        s, linalg.mat_scale(winv[a][b], linalg.mat_mul(pa, pb)))
    ads = [gd.rep.d.ad(a) for a in range(nd)]
    gd_rows = gd.rep.d_form.rows()
    n = nd + nh
    m = linalg.zeros(n, n)
    unit = linalg.identity(nd)
    for a in range(nd):
        sa = linalg.mat_vec(s, unit[a])
        for b in range(nd):
            m[a][b] = (linalg.dot(linalg.mat_vec(gd_rows, sa), unit[b]) / 2
                       - linalg.trace(linalg.mat_mul(ads[a], ads[b])) / 4)
    for a in range(nd):
        for k in range(nh):
            val = -linalg.trace(linalg.mat_mul(gd.rep.mat(k), ads[a])) / 4
            m[a][nd + k] = val
            m[nd + k][a] = val
    for j in range(nh):
        for k in range(nh):
            m[nd + j][nd + k] = -linalg.trace(
                linalg.mat_mul(gd.rep.mat(j), gd.rep.mat(k))) / 4
    return BilinearForm(tuple(tuple(row) for row in m))


def geodesic_one_param(gd, xi):
    """exp(t xi) is a geodesic iff pi(h)x = 0 for xi = x + h*."""
    x, hc = gd.split(xi)
    return linalg.is_zero_vector(linalg.mat_vec(gd.rep.pi_of(hc), x))


def totally_geodesic(alg, form, sub):
    """True iff the subalgebra is closed under the Levi-Civita connection."""
    if not is_subalgebra(alg, sub):
        raise GeometryError("subspace is not a subalgebra")
    gamma = levi_civita(alg, form)
    return all(sub.contains(gamma.apply(u, v))
               for u in sub.basis() for v in sub.basis())


def check_pair_symmetry(r_tensor, form):
    """<R(x,y)z, w> = <R(z,w)x, y> on all basis tuples."""
    n = r_tensor.dim
    basis = linalg.identity(n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                rij = r_tensor.entry(i, j, k)
                for l in range(n):
                    lhs = form.apply(rij, basis[l])
                    rhs = form.apply(r_tensor.entry(k, l, i), basis[j])
                    if lhs != rhs:
                        return False
    return True


def bi_invariant_connection_check(alg, gamma):
    """For ad-invariant metrics the connection is half the bracket."""
    n = alg.dim
    for i in range(n):
        for j in range(n):
            want = linalg.vec_scale(Q1 / 2, alg.basis_bracket(i, j))
            if gamma.entry(i, j) != want:
                return False
    return True


def bi_invariant_curvature_check(alg, r_tensor):
    """R(x,y)z = -[[x,y],z]/4 on all basis triples."""
    n = alg.dim
    basis = linalg.identity(n)
    for i in range(n):
        for j in range(n):
            bij = alg.basis_bracket(i, j)
            for k in range(n):
                want = linalg.vec_scale(-Q1 / 4, alg.bracket(bij, basis[k]))
                if r_tensor.entry(i, j, k) != want:
                    return False
    return True


def curvature_relation_check(gd, r_tensor):
    """d-d-d curvature against the pi/beta expansion plus the inner curvature.

    R(x,y)z = pi(b*(x,y))z/2 - pi(b*(y,z))x/4 - pi(b*(z,x))y/4
              + beta(z, [x,y]_d)/4 + R^d(x,y)z with R^d = -ad([x,y]_d)/4.
    """
    nd = gd.nd
    ellinv = gd.ell_inv()
    unit = linalg.identity(nd)
    for i in range(nd):
        for j in range(nd):
            for k in range(nd):
                x, y, z = unit[i], unit[j], unit[k]
                bxy = gd.rep.d.bracket(x, y)
                out = gd.embed_d(linalg.mat_vec(
                    gd.rep.pi_of(linalg.mat_vec(ellinv, gd.rep.beta(x, y))),
                    linalg.vec_scale(Q1 / 2, z)))
                out = linalg.vec_sub(out, gd.embed_d(linalg.mat_vec(
                    gd.rep.pi_of(linalg.mat_vec(ellinv, gd.rep.beta(y, z))),
                    linalg.vec_scale(Q1 / 4, x))))
                out = linalg.vec_sub(out, gd.embed_d(linalg.mat_vec(
                    gd.rep.pi_of(linalg.mat_vec(ellinv, gd.rep.beta(z, x))),
                    linalg.vec_scale(Q1 / 4, y))))
                out = linalg.vec_add(out, linalg.vec_scale(
                    Q1 / 4,
                    gd.embed_h(linalg.mat_vec(ellinv, gd.rep.beta(z, bxy)))))
                out = linalg.vec_sub(out, gd.embed_d(linalg.vec_scale(
                    Q1 / 4, gd.rep.d.bracket(bxy, z))))
                if r_tensor.entry(i, j, k) != out:
                    return False
    return True
