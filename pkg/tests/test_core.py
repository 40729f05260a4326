from fractions import Fraction as F

import pytest

from adinvar import (AlgebraError, BilinearForm, LieAlgebra, Subspace,
                     ad_invariant, center, check_jacobi, derived_series,
                     invariant_forms, is_ideal, is_subalgebra, kernel_of,
                     lower_central_series, orthogonal_complement,
                     restrict_to_subalgebra, totally_isotropic)
from adinvar import build_gd, double_extend
from adinvar import linalg
from conftest import a12_rep, h3_rep, T_PLUS


def test_bracket_heisenberg(h3):
    e = linalg.identity(3)
    assert h3.bracket(e[0], e[1]) == e[2]
    assert h3.bracket(e[1], e[0]) == [F(0), F(0), F(-1)]
    assert h3.bracket(e[0], e[0]) == [F(0)] * 3


def test_bracket_vector_linearity(h3):
    x = [F(2), F(3), F(0)]
    y = [F(-1), F(1), F(5)]
    assert h3.bracket(x, y) == [F(0), F(0), F(5)]  # (2*1 - 3*(-1)) e3
    assert h3.bracket(x, x) == [F(0)] * 3


def test_bracket_abelian():
    a = LieAlgebra.abelian(2)
    e = linalg.identity(2)
    assert a.bracket(e[0], e[1]) == [F(0), F(0)]


def test_bracket_dimension_mismatch(h3):
    with pytest.raises(AlgebraError):
        h3.bracket([F(1), F(0)], [F(0), F(1), F(0)])


def test_jacobi_clean(h3):
    assert check_jacobi(h3) == []
    assert check_jacobi(LieAlgebra.abelian(4)) == []


def test_jacobi_violation_located():
    bad = LieAlgebra(3, ("e1", "e2", "e3"), {(0, 1): {2: 1}, (0, 2): {0: 1}})
    report = check_jacobi(bad)
    assert len(report) == 1
    i, j, k, s = report[0]
    assert (i, j, k) == (0, 1, 2)
    assert s == [F(0), F(0), F(-1)]  # cyclic sum is -e3
    with pytest.raises(AlgebraError):
        LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})


def test_antisymmetric_storage_enforced():
    with pytest.raises(AlgebraError):
        LieAlgebra(2, ("a", "b"), {(1, 0): {0: 1}})


def test_ad_invariant():
    assert ad_invariant(LieAlgebra.abelian(3), BilinearForm.diagonal([1, 1, -1]))
    h3 = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})
    flat = BilinearForm.diagonal([1, 1, 1])
    # <[e1,e2],e3> = 1 while -<e2,[e1,e3]> = 0
    e = linalg.identity(3)
    assert flat.apply(h3.bracket(e[0], e[1]), e[2]) == 1
    assert flat.apply(e[1], h3.bracket(e[0], e[2])) == 0
    assert not ad_invariant(h3, flat)
    dbl = double_extend(a12_rep())
    assert ad_invariant(dbl.g, dbl.Q)


def test_signature_examples():
    assert BilinearForm.diagonal([1, 1]).signature == (0, 2, 0)
    assert BilinearForm.diagonal([-1, 1, 1]).signature == (1, 2, 0)
    dbl = double_extend(a12_rep())
    assert dbl.Q.signature == (2, 3, 0)


def test_center(h3):
    z = center(h3)
    assert z == Subspace.span([[0, 0, 1]], 3)
    gd = build_gd(h3_rep([1, 1], T_PLUS, 1))
    assert center(gd.L) == Subspace.span([[0, 0, 1]], 3)


def test_orthogonal_complement_oscillator_split():
    gd = build_gd(h3_rep([1, 1], T_PLUS, 1))
    dbl = gd.double
    m = orthogonal_complement(dbl.h_sub, dbl.Q_minus)
    assert m.dim == 3
    # every member has the shape (h, x, ell h)
    for row in m.basis():
        h_part, _, dual = dbl.split(row)
        assert dual == linalg.mat_vec(gd.rep.h_form.rows(), h_part)


def test_orthogonal_complement_involutive():
    dbl = double_extend(a12_rep())
    s = Subspace.span([linalg.identity(5)[0], linalg.identity(5)[2]], 5)
    assert orthogonal_complement(orthogonal_complement(s, dbl.Q), dbl.Q) == s


def test_ideal_and_subalgebra(h3):
    zspan = Subspace.span([[0, 0, 1]], 3)
    assert is_ideal(h3, zspan)
    assert is_subalgebra(h3, zspan)
    line = Subspace.span([[1, 0, 0]], 3)
    assert is_subalgebra(h3, line)
    assert not is_ideal(h3, line)
    gd = build_gd(h3_rep([1, 1], T_PLUS, 1))
    dbl = gd.double
    assert is_subalgebra(dbl.g, dbl.h_sub)
    assert is_ideal(dbl.g, dbl.d_sub.add(dbl.hstar_sub))


def test_totally_isotropic():
    form = BilinearForm.diagonal([-1, 1, 1])
    assert totally_isotropic(Subspace.span([[1, 0, 1]], 3), form)
    assert not totally_isotropic(Subspace.span([[1, 0, 0]], 3), form)
    assert totally_isotropic(Subspace.zero(3), form)


def test_series_steps(h3):
    assert lower_central_series(h3).step == 2
    dbl = double_extend(a12_rep())
    ser = lower_central_series(dbl.g)
    assert ser.step == 3
    assert ser.dims == (5, 3, 2, 0)
    assert derived_series(dbl.g).step == 2


def test_series_contains_each_other():
    for rep in (a12_rep(), h3_rep([1, 1], T_PLUS, 1)):
        alg = double_extend(rep).g
        ds = derived_series(alg).chain
        ls = lower_central_series(alg).chain
        for i in range(min(len(ds), len(ls))):
            assert ls[i].contains_subspace(ds[i])


def test_series_stops_on_non_nilpotent():
    so3 = LieAlgebra.from_brackets(
        3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
    ser = lower_central_series(so3)
    assert ser.step is None
    assert ser.dims == (3,)


def test_invariant_forms_abelian_full():
    forms = invariant_forms(LieAlgebra.abelian(3))
    assert len(forms) == 6


def test_invariant_forms_h3_degenerate(h3):
    forms = invariant_forms(h3)
    assert len(forms) == 3
    e3 = [F(0), F(0), F(1)]
    for f in forms:
        assert ad_invariant(h3, f)
        assert not f.nondegenerate
        assert linalg.mat_vec(f.rows(), e3) == [F(0)] * 3


def test_invariant_forms_a12_contains_source_form():
    dbl = double_extend(a12_rep())
    forms = invariant_forms(dbl.g)
    assert len(forms) == 4
    flat = [x for row in dbl.Q.matrix for x in row]
    span = [[x for row in f.matrix for x in row] for f in forms]
    assert linalg.rank(span + [flat]) == len(span)
    for f in forms:
        assert ad_invariant(dbl.g, f)


def test_kernel_of():
    ker = kernel_of([[F(0), F(1), F(0)], [F(1), F(0), F(1)], [F(0), F(-1), F(0)]])
    assert ker == Subspace.span([[1, 0, -1]], 3)


def test_restrict_to_subalgebra(h3):
    sub = Subspace.span([[1, 0, 0], [0, 0, 1]], 3)
    small = restrict_to_subalgebra(h3, sub)
    assert small.dim == 2 and not small.table
    with pytest.raises(AlgebraError):
        restrict_to_subalgebra(h3, Subspace.span([[1, 0, 0], [0, 1, 0]], 3))


def test_subspace_equality_is_canonical():
    a = Subspace.span([[2, 0, 2], [0, 3, 0]], 3)
    b = Subspace.span([[1, 3, 1], [1, 0, 1]], 3)
    assert a == b
    assert a.contains([F(3), F(3), F(3)])
    assert not a.contains([F(1), F(0), F(0)])
