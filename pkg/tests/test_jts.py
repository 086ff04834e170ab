import numpy as np
import pytest

from excdom.albert import DIM, AlbertElement, adjoint, cross, diag, e, hermitian_product
from excdom.jts import (
    bergman_operator,
    d_operator,
    jordan_axiom_residuals,
    minimal_polynomial,
    odd_power,
    power,
    q_apply,
    q_operator,
    rank,
    spectral_decompose,
    triple,
)
from excdom.linalg import det_dense
from excdom.verify import generic_norm_V
from conftest import cgauss


def rand(rng, s=1.0):
    return AlbertElement(s * cgauss(rng, DIM))


def test_quadratic_representation_basics(rng):
    assert q_apply(e(1), e(1)).allclose(e(1), 1e-15)
    x = rand(rng)
    assert q_apply(x, AlbertElement.zero()).allclose(AlbertElement.zero(), 0)
    y = rand(rng)
    # real scalars: Q(t x) y = t^2 Q(x) y ; antilinear in y
    assert q_apply(x * 1.5, y).allclose(q_apply(x, y) * 2.25, 1e-10)
    assert q_apply(x, y * 1j).allclose(q_apply(x, y) * -1j, 1e-10)
    # {x y x} = 2 Q(x) y
    assert triple(x, y, x).allclose(q_apply(x, y) * 2, 1e-10)


def test_triple_product_symmetry(rng):
    x, y, z = rand(rng), rand(rng), rand(rng)
    assert triple(x, y, z).allclose(triple(z, y, x), 1e-11)
    assert triple(x, y * 1j, z).allclose(triple(x, y, z) * -1j, 1e-11)


def test_diagonal_units_triple():
    assert triple(e(1), e(1), e(1)).allclose(e(1) * 2, 0)
    assert np.allclose(d_operator(e(1), e(1)) @ e(2).v, 0)


def test_operators_match_products(rng):
    x, y, z = rand(rng), rand(rng), rand(rng)
    assert np.allclose(d_operator(x, y) @ z.v, triple(x, y, z).v)
    assert np.allclose(q_operator(x) @ np.conj(y.v), q_apply(x, y).v)


def test_jordan_axioms(rng):
    x, y, z = (cgauss(rng, 100, DIM) for _ in range(3))
    res = jordan_axiom_residuals(x, y, z, relative=True)
    assert res["J1"] < 1e-12 and res["J2"] < 1e-12


def test_trace_of_d(rng):
    x, y = rand(rng), rand(rng)
    assert abs(np.trace(d_operator(x, y)) - 18 * hermitian_product(x, y)) < 1e-9 * 18 * x.norm() * y.norm()


def test_bergman_operator(rng):
    assert np.allclose(bergman_operator(AlbertElement.zero(), AlbertElement.zero()), np.eye(DIM))
    t = 0.6
    b = bergman_operator(e(1) * t, e(1) * t)
    assert np.isclose((b @ e(1).v)[0], (1 - t * t) ** 2)
    x, y = rand(rng, 0.08), rand(rng, 0.08)
    n = generic_norm_V(x.v, y.v)
    assert abs(det_dense(b := bergman_operator(x, y)) - n**18) < 1e-6 * abs(n**18)
    assert b.shape == (DIM, DIM)


def test_powers(rng):
    x, y = rand(rng), rand(rng)
    assert power(x, 1, y).allclose(x, 0)
    want = x * hermitian_product(x, y) - cross(adjoint(x), y.conj())
    assert power(x, 2, y).allclose(want, 1e-10)
    assert odd_power(diag(1.0, -2.0, 0.5), 3).allclose(diag(1.0, -8.0, 0.125), 1e-14)
    with pytest.raises(ValueError):
        odd_power(x, 2)
    with pytest.raises(ValueError):
        power(x, 0, y)


def test_power_recursion_follows_minimal_polynomial(rng):
    x, y = rand(rng, 0.5), rand(rng, 0.5)
    c1, c2, c3 = minimal_polynomial(x, y).invariants
    p = [None] + [power(x, k, y) for k in range(1, 5)]
    want = p[3] * c1 - p[2] * c2 + p[1] * c3
    assert p[4].allclose(want, 1e-12)


def test_minimal_polynomial_examples():
    m = minimal_polynomial(diag(1, 2, 3), diag(1, 2, 3))
    # (T - 1)(T - 4)(T - 9)
    assert np.allclose(m.coefficients(), [-36, 49, -14, 1], atol=1e-12)
    assert np.allclose(minimal_polynomial(AlbertElement.zero(), AlbertElement.zero()).coefficients(), [0, 0, 0, 1])
    assert np.allclose(minimal_polynomial(e(1), e(1)).coefficients(), [0, 0, -1, 1])
    assert np.allclose(np.sort(m.roots().real), [1, 4, 9])


def test_spectral_decomposition_diagonal():
    dec = spectral_decompose(diag(3, 2, 1))
    assert np.allclose(dec.values, [3, 2, 1])
    for t, i in zip(dec.tripotents, (1, 2, 3)):
        assert t.allclose(e(i), 1e-10)


def test_spectral_decomposition_merged():
    dec = spectral_decompose(e(1) * 2 + e(2) * 2)
    assert len(dec) == 1 and np.isclose(dec.values[0], 2) and dec.multiplicities == (2,)
    assert dec.tripotents[0].allclose(e(1) + e(2), 1e-10)
    assert len(spectral_decompose(AlbertElement.zero())) == 0


def test_spectral_decomposition_random(rng):
    for _ in range(10):
        x = rand(rng)
        dec = spectral_decompose(x)
        cert = dec.certify(x)
        assert cert["ok"], cert
        assert list(dec.values) == sorted(dec.values, reverse=True)


def test_rank():
    assert rank(e(1)) == 1
    assert rank(e(1) + e(2)) == 2
    assert rank(diag(1, 2, 3)) == 3
    assert rank(AlbertElement.zero()) == 0
