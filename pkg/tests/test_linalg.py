import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from excdom.linalg import (
    DegenerateSystemError,
    DimensionError,
    det_dense,
    roots_monic_cubic,
    roots_monic_quadratic,
    solve_vandermonde,
)
from conftest import cgauss


def cofactor_det(m):
    # Laplace expansion along the first row; independent of any factorisation
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_det_matches_cofactor_expansion(rng, n):
    m = cgauss(rng, n, n)
    want = cofactor_det(m.tolist())
    assert abs(det_dense(m) - want) <= 1e-12 * (1 + abs(want)) * 10 ** n


def test_det_small_cases():
    assert det_dense(np.zeros((0, 0))) == 1
    assert det_dense([[2.0]]) == 2
    assert det_dense([[0, 1], [1, 0]]) == -1
    assert det_dense(np.diag([1, 2, 3, 4])) == 24
    assert det_dense([[1, 2], [2, 4]]) == 0


def test_det_rejects_bad_input():
    with pytest.raises(DimensionError):
        det_dense(np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        det_dense(np.eye(65))
    with pytest.raises(ValueError):
        det_dense([[np.nan, 0], [0, 1]])


def coeffs_from_roots(r):
    # ascending coefficients of prod (T - r_i)
    return np.polynomial.polynomial.polyfromroots(r)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-5, 5), min_size=3, max_size=3))
def test_cubic_roots_forward_synthesis(r):
    c = coeffs_from_roots(r)
    got = np.sort(roots_monic_cubic(c).real)
    # multiple roots are ill-conditioned: accuracy ~ eps^(1/m)
    assert np.allclose(got, np.sort(r), atol=1e-5 * (1 + max(map(abs, r))))


def test_cubic_clustered_roots_are_polished():
    # e1 + e2 + e3 has minimal polynomial (T - 1)^3
    got = roots_monic_cubic([-1, 3, -3, 1])
    assert np.max(np.abs(got - 1)) < 1e-12
    got = roots_monic_cubic(coeffs_from_roots([4, 4, 1]))
    assert np.allclose(got, [4, 4, 1], atol=1e-10)
    got = roots_monic_cubic(coeffs_from_roots([1, 0, 0]))
    assert np.allclose(got, [1, 0, 0], atol=1e-12)


def test_cubic_complex_roots(rng):
    r = cgauss(rng, 3)
    got = roots_monic_cubic(coeffs_from_roots(r))
    for z in r:
        assert np.min(np.abs(got - z)) < 1e-10


def test_cubic_input_validation():
    with pytest.raises(ValueError):
        roots_monic_cubic([1, 2, 3, 2])
    with pytest.raises(ValueError):
        roots_monic_cubic([1, 2])


def test_quadratic_roots():
    assert np.allclose(roots_monic_quadratic([0, -1, 1]), [1, 0])
    assert np.allclose(roots_monic_quadratic([1, -2, 1]), [1, 1])
    big = roots_monic_quadratic([1, -1e8, 1])
    assert abs(big[1] - 1e-8) < 1e-20


def test_vandermonde_forward_synthesis(rng):
    lam = np.array([1.7, 0.9, 0.3])
    x = cgauss(rng, 3, 27)
    rhs = np.array([sum(lam[i] ** (2 * k + 1) * x[i] for i in range(3)) for k in range(3)])
    assert np.allclose(solve_vandermonde(lam, rhs), x, atol=1e-12)


def test_vandermonde_collision():
    with pytest.raises(DegenerateSystemError):
        solve_vandermonde([1.0, 1.0], np.ones((2, 4)))
    with pytest.raises(DimensionError):
        solve_vandermonde([1.0, 2.0], np.ones((3, 4)))
