from fractions import Fraction as F

import pytest

from adinvar import (BilinearForm, ExtensionError, KostantError, LieAlgebra,
                     Representation, Subspace, build_gd,
                     canonical_connection, check_jacobi, double_extend,
                     kostant_form, lambda_map, lambda_matrix, reductive_split)
from adinvar import linalg
from conftest import T_MINUS, T_PLUS, a12_rep, h3_rep, so3_rep


def test_double_extend_a12_golden():
    dbl = double_extend(a12_rep())
    table = {k: dict(v) for k, v in dbl.g.table.items()}
    assert table == {
        (0, 1): {2: F(1)},
        (0, 2): {1: F(1), 3: F(-1)},
        (0, 3): {2: F(1)},
        (1, 2): {4: F(1)},
        (2, 3): {4: F(-1)},
    }
    assert dbl.Q.matrix == (
        (F(1), F(0), F(0), F(0), F(1)),
        (F(0), F(-1), F(0), F(0), F(0)),
        (F(0), F(0), F(1), F(0), F(0)),
        (F(0), F(0), F(0), F(1), F(0)),
        (F(1), F(0), F(0), F(0), F(0)))


def test_double_extend_oscillator_by_hand():
    dbl = double_extend(h3_rep([1, 1], T_PLUS, 1))
    table = {k: dict(v) for k, v in dbl.g.table.items()}
    assert table == {(0, 1): {2: F(1)}, (0, 2): {1: F(-1)}, (1, 2): {3: F(1)}}
    assert dbl.Q.signature == (1, 3, 0)


def test_double_extend_trivial_action():
    rep = Representation(
        LieAlgebra.abelian(2), BilinearForm.diagonal([0, 0]),
        LieAlgebra.abelian(2), BilinearForm.diagonal([1, 1]),
        (tuple(map(tuple, linalg.zeros(2, 2))),) * 2)
    dbl = double_extend(rep)
    assert not dbl.g.table  # abelian
    # hyperbolic pairing between h and h*
    assert dbl.Q.apply(dbl.embed_h([F(1), F(0)]), dbl.embed_dual([F(1), F(0)])) == 1
    assert dbl.Q.signature == (2, 4, 0)


def test_double_extend_rejects_bad_pi():
    not_skew = ((1, 0), (0, 1))
    rep = Representation(
        LieAlgebra.abelian(1), BilinearForm.diagonal([1]),
        LieAlgebra.abelian(2), BilinearForm.diagonal([1, 1]), (not_skew,))
    with pytest.raises(ExtensionError) as exc:
        double_extend(rep)
    assert any("not_skew" in v for v in exc.value.violations)

    h3 = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})
    not_derivation = ((0, 0, 0), (0, 0, -1), (0, 1, 0))
    rep = Representation(
        LieAlgebra.abelian(1), BilinearForm.diagonal([1]),
        h3, BilinearForm.diagonal([1, 1, 1]), (not_derivation,))
    with pytest.raises(ExtensionError) as exc:
        double_extend(rep)
    assert any("not_derivation" in v or "not_ad_invariant" in v
               for v in exc.value.violations)

    # pi(h1), pi(h2) failing the homomorphism property on abelian h
    rep = Representation(
        LieAlgebra.abelian(2), BilinearForm.diagonal([1, 1]),
        LieAlgebra.abelian(3), BilinearForm.diagonal([1, 1, 1]),
        (((0, -1, 0), (1, 0, 0), (0, 0, 0)),
         ((0, 0, 0), (0, 0, -1), (0, 1, 0))))
    with pytest.raises(ExtensionError) as exc:
        double_extend(rep)
    assert any("homomorphism" in v for v in exc.value.violations)


def test_double_extend_allows_degenerate_h_form():
    rep = Representation(
        LieAlgebra.abelian(1), BilinearForm.diagonal([0]),
        LieAlgebra.abelian(2), BilinearForm.diagonal([1, 1]), (T_PLUS,))
    dbl = double_extend(rep)
    assert check_jacobi(dbl.g) == []
    with pytest.raises(ExtensionError):
        build_gd(rep)


def test_build_gd_heisenberg_both_signs():
    for sign in (1, -1):
        gd = build_gd(h3_rep([1, 1], T_PLUS, sign))
        assert gd.L.dim == 3
        assert {k: dict(v) for k, v in gd.L.table.items()} == \
            {(0, 1): {2: F(sign)}}
        assert gd.metric == BilinearForm.diagonal([1, 1, sign])
        gd2 = build_gd(h3_rep([-1, 1], T_MINUS, sign))
        assert gd2.metric == BilinearForm.diagonal([-1, 1, sign])


def test_mu_examples(oscillator_rep):
    gd = build_gd(oscillator_rep)
    mu = gd.mu([F(1)])
    assert mu == [[F(0), F(-1), F(0)], [F(1), F(0), F(0)], [F(0), F(0), F(0)]]
    assert gd.mu([F(0)]) == linalg.zeros(3, 3)


def test_mu_coadjoint_nonabelian():
    gd = build_gd(so3_rep())
    mu = gd.mu([F(1), F(0), F(0)])
    # lower-right block is ad(L1) acting through the ell identification
    adl1 = gd.rep.h.ad(0)
    for p in range(3):
        for q in range(3):
            assert mu[3 + p][3 + q] == adl1[p][q]


def test_lambda_is_isometry(oscillator_rep):
    gd = build_gd(oscillator_rep)
    lam = lambda_map(gd)
    basis = linalg.identity(3)
    for u in basis:
        for v in basis:
            lu, lv = linalg.mat_vec(lam, u), linalg.mat_vec(lam, v)
            assert gd.double.Q_minus.apply(lu, lv) == gd.metric.apply(u, v)
    # the h* basis vector maps to (z, 0, z*) with Q_minus norm -1+1+1 = 1
    image = linalg.mat_vec(lam, basis[2])
    assert image == [F(1), F(0), F(0), F(1)]
    assert gd.double.Q_minus.apply(image, image) == 1


def test_lambda_negative_z_sign():
    gd = build_gd(h3_rep([1, 1], T_PLUS, -1))
    lam = lambda_matrix(gd)
    image = linalg.mat_vec(lam, linalg.identity(3)[2])
    assert image == [F(1), F(0), F(0), F(-1)]
    assert gd.double.Q_minus.apply(image, image) == -1 == gd.metric.apply(
        linalg.identity(3)[2], linalg.identity(3)[2])


def test_reductive_split_oscillator(oscillator_rep):
    dbl = build_gd(oscillator_rep).double
    res = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    assert res.all_pass
    assert res.m.dim == 3
    for row in res.m.basis():
        h_part, _, dual = dbl.split(row)
        assert dual == h_part  # ell is the identity for <z,z> = 1


def test_reductive_split_trivial_h():
    dbl = double_extend(a12_rep())
    res = reductive_split(dbl.g, dbl.Q, Subspace.zero(5))
    assert res.all_pass  # reduces to ad-invariance of Q
    assert res.m.dim == 5


def test_reductive_split_rejects_degenerate_h():
    dbl = double_extend(a12_rep())
    # e1 is isotropic for Q restricted to span{e1}? <e1,e1> = -1, fine;
    # take the null vector e0* instead: Q(e0*, e0*) = 0
    null_line = Subspace.span([linalg.identity(5)[4]], 5)
    with pytest.raises(ExtensionError):
        reductive_split(dbl.g, dbl.Q, null_line)


def test_kostant_trivial_h():
    dbl = double_extend(a12_rep())
    m = Subspace.full(5)
    inner = dbl.Q
    res = kostant_form(dbl.g, Subspace.zero(5), m, inner)
    assert res.all_pass
    assert res.gbar.dim == 5
    assert res.form.matrix == dbl.Q.matrix


def test_kostant_oscillator_recovers_q_minus(oscillator_rep):
    dbl = build_gd(oscillator_rep).double
    split = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    inner = BilinearForm(tuple(
        tuple(dbl.Q_minus.apply(u, v) for v in split.m.basis())
        for u in split.m.basis()))
    res = kostant_form(dbl.g, dbl.h_sub, split.m, inner)
    assert res.all_pass
    assert res.gbar.dim == 4
    assert res.hbar.dim == 1
    for u in res.basis:
        for v in res.basis:
            assert res.pair(list(u), list(v)) == dbl.Q_minus.apply(list(u), list(v))


def test_kostant_inconsistent_data_rejected():
    # needs several bracket representatives of the same h element, so use
    # the nonabelian isotropy example
    dbl = build_gd(so3_rep()).double
    split = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    rows = [[dbl.Q_minus.apply(u, v) for v in split.m.basis()]
            for u in split.m.basis()]
    rows[1][1] += 7  # breaks the naturally reductive condition
    inner = BilinearForm(tuple(tuple(r) for r in rows))
    with pytest.raises(KostantError, match="not naturally reductive"):
        kostant_form(dbl.g, dbl.h_sub, split.m, inner)


def test_kostant_so3_reconstruction():
    dbl = build_gd(so3_rep()).double
    split = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    inner = BilinearForm(tuple(
        tuple(dbl.Q_minus.apply(u, v) for v in split.m.basis())
        for u in split.m.basis()))
    res = kostant_form(dbl.g, dbl.h_sub, split.m, inner)
    assert res.all_pass
    assert res.gbar.dim == 9 and res.hbar.dim == 3
    for u in res.basis:
        for v in res.basis:
            assert res.pair(list(u), list(v)) == dbl.Q_minus.apply(list(u), list(v))


def test_canonical_connection_abelian():
    g = LieAlgebra.abelian(3)
    tor, cur = canonical_connection(g, Subspace.zero(3), Subspace.full(3))
    assert all(tor.entry(i, j) == [F(0)] * 3 for i in range(3) for j in range(3))
    assert all(cur.entry(i, j, k) == [F(0)] * 3
               for i in range(3) for j in range(3) for k in range(3))


def test_canonical_connection_oscillator(oscillator_rep):
    dbl = build_gd(oscillator_rep).double
    split = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    tor, _ = canonical_connection(dbl.g, dbl.h_sub, split.m)
    mb = split.m.basis()
    for a in range(3):
        for b in range(3):
            w = dbl.g.bracket(mb[a], mb[b])
            # recombine: torsion entry should be minus the m part of w
            got = [F(0)] * 5
            for c, row in zip(tor.entry(a, b), mb):
                got = [x + c * y for x, y in zip(got, row)]
            h_rest = [x + y for x, y in zip(got, w)]
            assert split.m.contains(got)
            assert dbl.h_sub.contains(h_rest)


def test_canonical_connection_symmetric_pair():
    # so(3) with h = span{L3}: [m, m] lands in h, so the torsion vanishes
    so3 = LieAlgebra.from_brackets(
        3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
    h = Subspace.span([[0, 0, 1]], 3)
    m = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    tor, cur = canonical_connection(so3, h, m)
    assert all(tor.entry(a, b) == [F(0), F(0)] for a in range(2) for b in range(2))
    # R(L1, L2) L1 = -[[L1,L2], L1] = -L2
    assert cur.entry(0, 1, 0) == [F(0), F(-1)]


def test_cocycle_transfer_identity_nonabelian():
    # [h1, b*(x,y)]* = b(pi(h1)x, y) + b(x, pi(h1)y) as covectors on h
    rep = so3_rep()
    gd = build_gd(rep)
    ellinv = gd.ell_inv()
    unit_d = linalg.identity(3)
    unit_h = linalg.identity(3)
    for t in range(3):
        pih = rep.mat(t)
        for a in range(3):
            for b in range(3):
                beta_star = linalg.mat_vec(ellinv, rep.beta(unit_d[a], unit_d[b]))
                lhs_h = rep.h.bracket(unit_h[t], beta_star)
                lhs = linalg.mat_vec([list(r) for r in gd.ell], lhs_h)
                rhs = linalg.vec_add(
                    rep.beta(linalg.mat_vec(pih, unit_d[a]), unit_d[b]),
                    rep.beta(unit_d[a], linalg.mat_vec(pih, unit_d[b])))
                assert lhs == rhs


def test_cm_relation_all_basis_tuples():
    for rep in (a12_rep(), so3_rep(), h3_rep([-1, 1], T_MINUS, -1)):
        gd = build_gd(rep)
        basis = linalg.identity(gd.L.dim)
        unit_d = linalg.identity(gd.nd)
        g = gd.rep.d_form.rows()
        for k in range(gd.nh):
            fk = basis[gd.nd + k]
            for a in range(gd.nd):
                for b in range(gd.nd):
                    br = gd.L.bracket(basis[a], basis[b])
                    want = linalg.dot(
                        linalg.mat_vec(gd.rep.mat(k), unit_d[a]),
                        linalg.mat_vec(g, unit_d[b]))
                    assert gd.metric.apply(fk, br) == want


def test_mu_is_homomorphism_of_nonabelian_h():
    gd = build_gd(so3_rep())
    for i in range(3):
        for j in range(3):
            lhs = gd.mu(gd.rep.h.basis_bracket(i, j))
            rhs = linalg.commutator([list(r) for r in gd.mu_mats[i]],
                                    [list(r) for r in gd.mu_mats[j]])
            assert lhs == rhs


def test_mu_block_for_lemma_extension():
    from corpus_help import lemma_rep
    rep = lemma_rep("H")
    gd = build_gd(rep)
    mu = gd.mu([F(1)])
    h = rep.mat(0)
    for p in range(5):
        for q in range(5):
            assert mu[p][q] == h[p][q]
    assert mu[5][5] == 0  # trivial coadjoint part for abelian h


def test_reductive_split_a12_h_block():
    dbl = double_extend(a12_rep())
    res = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    assert res.all_pass
    assert res.m.dim == 4


def test_kostant_a12_reconstruction():
    dbl = double_extend(a12_rep())
    split = reductive_split(dbl.g, dbl.Q_minus, dbl.h_sub)
    inner = BilinearForm(tuple(
        tuple(dbl.Q_minus.apply(u, v) for v in split.m.basis())
        for u in split.m.basis()))
    res = kostant_form(dbl.g, dbl.h_sub, split.m, inner)
    assert res.all_pass  # consistency with zero residual, ad-invariant output
    for u in res.basis:
        for v in res.basis:
            assert res.pair(list(u), list(v)) == dbl.Q_minus.apply(list(u), list(v))
