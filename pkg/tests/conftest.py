import pytest

from adinvar import BilinearForm, LieAlgebra, Representation

T_PLUS = ((0, -1), (1, 0))
T_MINUS = ((0, 1), (1, 0))
A_F3 = ((0, 1, 0), (1, 0, 1), (0, -1, 0))


def h3_algebra():
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})


def h3_rep(d_diag, mat, zsign):
    return Representation(
        LieAlgebra.abelian(1, names=("z",)), BilinearForm.diagonal([zsign]),
        LieAlgebra.abelian(2), BilinearForm.diagonal(d_diag), (mat,))


def a12_rep():
    return Representation(
        LieAlgebra.abelian(1, names=("e4",)), BilinearForm.diagonal([1]),
        LieAlgebra.abelian(3), BilinearForm.diagonal([-1, 1, 1]), (A_F3,))


def so3_rep():
    so3 = LieAlgebra.from_brackets(
        3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        names=("L1", "L2", "L3"))
    l1 = ((0, 0, 0), (0, 0, -1), (0, 1, 0))
    l2 = ((0, 0, 1), (0, 0, 0), (-1, 0, 0))
    l3 = ((0, -1, 0), (1, 0, 0), (0, 0, 0))
    return Representation(so3, BilinearForm.diagonal([1, 1, 1]),
                          LieAlgebra.abelian(3), BilinearForm.diagonal([1, 1, 1]),
                          (l1, l2, l3))


def two_torus_rep():
    """Abelian h of dimension two acting on R^4 by commuting rotations."""
    zero = [[0] * 2 for _ in range(2)]
    m1 = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    m2 = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    return Representation(
        LieAlgebra.abelian(2, names=("k1", "k2")), BilinearForm.diagonal([1, 1]),
        LieAlgebra.abelian(4), BilinearForm.diagonal([1, 1, 1, 1]),
        (tuple(map(tuple, m1)), tuple(map(tuple, m2))))


@pytest.fixture
def h3():
    return h3_algebra()


@pytest.fixture
def oscillator_rep():
    return h3_rep([1, 1], T_PLUS, 1)
