"""Nilpotency and solvability of d + h* predicted from (d, pi) and checked
against the directly computed series.

The nilpotency test uses the obstruction space beta(d, D^{k-1}(d)): the
k-th lower central term upstairs equals exactly that space.  A D^k
containment test is vacuous when d is exactly k-step nilpotent, so the
effective criterion reads off D^{k-1}; both index readings are reported.
"""

from dataclasses import dataclass

from . import linalg
from .core import (Subspace, center, derived_series, kernel_of,
                   lower_central_series, totally_isotropic)
from .extension import build_gd


class SeriesError(Exception):
    pass


@dataclass(frozen=True)
class StepReport:
    kind: str                 # "solvable" | "nilpotent"
    step_d: int
    step_gd_predicted: int
    step_gd_computed: int
    witness: Subspace         # beta-obstruction space inside d + h*
    naive_index_test: bool    # containment test with index k (vacuous)
    corrected_index_test: bool  # the test with index k-1 actually used

    @property
    def consistent(self):
        return self.step_gd_predicted == self.step_gd_computed


def _beta_obstruction(gd, left, right):
    """Span of beta(u, v) for u in left, v in right, inside d + h*."""
    vecs = []
    for u in left.basis():
        for v in right.basis():
            vecs.append(gd.beta_vec(u[:gd.nd], v[:gd.nd]))
    return Subspace.span(vecs, gd.L.dim)


def predict_solvable_step(rep, k=None):
    """d k-step solvable: the extension is k-step iff beta vanishes on
    C^{k-1}(d), else (k+1)-step."""
    dser = derived_series(rep.d)
    if dser.step is None:
        raise SeriesError("d is not solvable")
    if k is not None and k != dser.step:
        raise SeriesError(f"d is {dser.step}-step solvable, not {k}")
    k = dser.step
    gd = build_gd(rep)
    ck1 = dser.chain[k - 1]
    obstruction = _beta_obstruction(gd, ck1, ck1)
    predicted = k if obstruction.dim == 0 else k + 1
    computed = derived_series(gd.L).step
    report = StepReport("solvable", k, predicted, computed, obstruction,
                        obstruction.dim == 0, obstruction.dim == 0)
    if not report.consistent:
        raise AssertionError("predicted and computed solvable steps disagree")
    return report


def predict_nilpotent_step(rep, k=None):
    """d k-step nilpotent: the extension is k-step iff D^{k-1}(d) lies in
    every ker pi(h); the vacuous D^k variant is evaluated alongside."""
    dser = lower_central_series(rep.d)
    if dser.step is None:
        raise SeriesError("d is not nilpotent")
    if k is not None and k != dser.step:
        raise SeriesError(f"d is {dser.step}-step nilpotent, not {k}")
    k = dser.step
    gd = build_gd(rep)
    full_d = Subspace.full(rep.d.dim)
    dk1 = dser.chain[k - 1]
    obstruction = _beta_obstruction(gd, full_d, dk1)
    kernels = None
    for m in gd.rep.mats:
        ker = kernel_of([list(r) for r in m])
        kernels = ker if kernels is None else kernels.intersect(ker)
    kernels = kernels if kernels is not None else full_d
    corrected = kernels.contains_subspace(dk1)
    naive_test = kernels.contains_subspace(dser.chain[k]) if k < len(dser.chain) \
        else True
    predicted = k if corrected else k + 1
    computed = lower_central_series(gd.L).step
    report = StepReport("nilpotent", k, predicted, computed, obstruction,
                        naive_test, corrected)
    if not report.consistent:
        raise AssertionError("predicted and computed nilpotent steps disagree")
    return report


@dataclass(frozen=True)
class HeisenbergReport:
    kind: str              # "heisenberg" | "central_extension" | "abelian"
    heisenberg_dim: int    # 2s + 1 from rank(A) = 2s
    indecomposable: bool   # sufficient condition: ker A totally isotropic
    center_matches: bool   # center(G) = Rz + ker A


def heisenberg_recognizer(gd):
    """Classify d + h* for abelian d and one-dimensional h."""
    rep = gd.rep
    if rep.d.table or rep.h.dim != 1:
        raise SeriesError("recognizer needs abelian d and dim h = 1")
    a = rep.mat(0)
    ker = kernel_of(a)
    rk = rep.d.dim - ker.dim
    if rk == rep.d.dim:
        kind = "heisenberg"
    elif rk == 0:
        kind = "abelian"
    else:
        kind = "central_extension"
    indecomposable = kind == "central_extension" and totally_isotropic(
        ker, rep.d_form)
    expected = Subspace.span(
        [gd.embed_d(v) for v in ker.basis()] + [gd.embed_h([linalg.Q1])],
        gd.L.dim)
    center_matches = center(gd.L) == expected
    return HeisenbergReport(kind, rk + 1, indecomposable, center_matches)
