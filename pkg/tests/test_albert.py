import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from excdom.albert import (
    DIM,
    AlbertElement,
    F,
    adjoint,
    complex_conjugate,
    cross,
    determinant,
    diag,
    e,
    hermitian_product,
    adjoint_identity_residuals,
    scalar_product,
    trilinear_T,
)
from conftest import cgauss


def rand(rng, s=1.0):
    return AlbertElement(s * cgauss(rng, DIM))


def test_diagonal_adjoint_and_det():
    x = diag(1, 2, 3)
    assert adjoint(x).allclose(diag(6, 3, 2), 0)
    assert determinant(x) == 6


def test_cross_of_diagonal_units():
    assert cross(e(1), e(2)).allclose(e(3), 0)
    assert cross(e(1), e(1)).allclose(AlbertElement.zero(), 0)


def test_offdiagonal_adjoint():
    # F1(a)# = -n(a) e1 for a single off-diagonal entry
    a = np.zeros(8, dtype=complex)
    a[0], a[3] = 2.0, 1j
    x = F(1, a)
    n = 4.0 - 1.0
    assert adjoint(x).allclose(diag(-n, 0, 0), 1e-14)
    assert determinant(x) == 0


def test_products_and_conjugation(rng):
    x, y = rand(rng), rand(rng)
    assert np.isclose(hermitian_product(x, y), scalar_product(x, complex_conjugate(y)))
    assert hermitian_product(x, x).real > 0
    assert np.isclose(hermitian_product(y, x), np.conj(hermitian_product(x, y)))


def test_det_via_trilinear_form(rng):
    x = rand(rng)
    d = determinant(x)
    assert np.isclose(trilinear_T(x, x, x) / 6, d)
    assert np.isclose(scalar_product(adjoint(x), x) / 3, d)


def test_det_derivative_by_finite_differences(rng):
    # d/dt det(a + t h) at t = 0 equals (a# : h)
    a, h = rand(rng, 0.5), rand(rng, 0.5)
    t = 1e-5
    fd = (determinant(a + h * t) - determinant(a - h * t)) / (2 * t)
    assert abs(fd - scalar_product(adjoint(a), h)) < 1e-8


def test_cross_is_polarised_adjoint(rng):
    a, b = rand(rng), rand(rng)
    want = adjoint(a + b) - adjoint(a) - adjoint(b)
    assert cross(a, b).allclose(want, 1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.1, 3.0))
def test_adjoint_identity_family(seed, scale):
    rng = np.random.default_rng(seed)
    a, b, c = (rand(rng, scale) for _ in range(3))
    res = adjoint_identity_residuals(a, b, c, relative=True)
    assert max(res.values()) < 1e-9, res


def test_identity_family_batched(rng):
    a, b, c = (cgauss(rng, 50, DIM) for _ in range(3))
    res = adjoint_identity_residuals(a, b, c, relative=True)
    assert len(res) == 9 and {"(a#)#=det(a)a", "det(a#)=det(a)^2"} <= set(res)
    assert max(res.values()) < 1e-12


def test_element_validation():
    with pytest.raises(ValueError):
        AlbertElement(np.zeros(26))
    with pytest.raises(ValueError):
        AlbertElement(np.full(27, np.inf))
    x = e(1)
    with pytest.raises(ValueError):
        x.v[0] = 5


def test_matrix_view_is_hermitian_pattern():
    a = np.zeros(8)
    a[1] = 1.0
    m = F(3, a).matrix()
    # a3 sits at (1,2) and its Cayley conjugate at (2,1)
    assert np.array_equal(m[0][1], a) and np.array_equal(m[1][0], -a)
