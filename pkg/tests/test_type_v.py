import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from excdom.albert import AlbertElement, adjoint, determinant, diag, e
from excdom.cayley import conj as oconj
from excdom.cayley import left_mult_operator, null_unit_octonion, oherm, omul, onorm, random_null_unit_octonion
from excdom.jts import minimal_polynomial
from excdom.linalg import det_dense
from excdom.tripotents import NotATripotent, are_orthogonal, classify_tripotent, peirce
from excdom.type_v import (
    F2,
    F3,
    OutsideSubsystem,
    WElement,
    ambient_triple,
    bergman_operator_W,
    classify_tripotent_W,
    d_operator_W,
    embed,
    frame_invariants_W,
    hermitian_product_W,
    is_minimal_by_null_conditions,
    kernel_split,
    minimal_peirce_one_census,
    minimal_polynomial_W,
    null_orthogonal_to,
    peirce_W,
    q_apply_W,
    restrict,
    sharp_W,
    spectral_decompose_W,
    triple_W,
)
from conftest import cgauss

BETA = null_unit_octonion()
C_UNIT = np.eye(8)[0]


def rand(rng, s=1.0):
    return WElement(s * cgauss(rng, 16))


def test_embed_restrict(rng):
    b = cgauss(rng, 8)
    v = embed(F2(b)).v
    assert np.array_equal(v[11:19], b) and not np.any(v[:11]) and not np.any(v[19:])
    x = rand(rng)
    assert np.array_equal(restrict(embed(x)).v, x.v)
    with pytest.raises(OutsideSubsystem):
        restrict(e(1))


def test_sharp(rng):
    b = cgauss(rng, 8)
    assert sharp_W(F2(b)).allclose(diag(0, -onorm(b), 0), 1e-13)
    x = rand(rng)
    assert sharp_W(x).allclose(adjoint(embed(x)), 1e-13)
    assert abs(determinant(embed(x))) < 1e-10
    # x# lies in V0(e1)
    p0 = peirce(e(1)).projectors[0]
    assert np.allclose(p0 @ sharp_W(x).v, sharp_W(x).v)
    assert sharp_W(WElement.zero()).allclose(AlbertElement.zero(), 0)


def test_sharp_vanishes_on_null_pairs(rng):
    beta = random_null_unit_octonion(rng)
    gamma = omul(oconj(beta), cgauss(rng, 8))  # beta gamma = n(beta) y = 0
    x = WElement.from_pair(beta, gamma)
    assert np.linalg.norm(sharp_W(x).v) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_closed_form_matches_ambient(seed):
    rng = np.random.default_rng(seed)
    x, y, z = rand(rng), rand(rng), rand(rng)
    scale = (1 + max(x.norm(), y.norm(), z.norm())) ** 3
    assert np.linalg.norm(triple_W(x, y, z).v - ambient_triple(x, y, z).v) < 1e-9 * scale
    assert np.linalg.norm(triple_W(x, y, x).v - 2 * q_apply_W(x, y).v) < 1e-9 * scale


def test_triple_at_zero(rng):
    x, y = rand(rng), rand(rng)
    z = WElement.zero()
    assert np.allclose(triple_W(x, y, z).v, ambient_triple(x, y, z).v)
    assert np.allclose(triple_W(x, y, z).v, 0)


def test_minimal_tripotent_triple():
    u = F2(BETA)
    assert np.allclose(triple_W(u, u, u).v, 2 * u.v)


def test_minimal_polynomial_examples():
    w = F2(C_UNIT)
    assert np.allclose(minimal_polynomial_W(w, w).coefficients(), [1, -2, 1])
    z = WElement.zero()
    assert np.allclose(minimal_polynomial_W(z, z).coefficients(), [0, 0, 1])
    u = F2(BETA)
    assert np.allclose(minimal_polynomial_W(u, u).coefficients(), [0, -1, 1])


def test_minimal_polynomial_agrees_with_ambient(rng):
    x, y = rand(rng), rand(rng)
    amb = minimal_polynomial(embed(x), embed(y)).coefficients()
    # the ambient cubic is T times the quadratic of W
    assert abs(amb[0]) < 1e-9
    assert np.allclose(amb[1:], minimal_polynomial_W(x, y).coefficients())


def test_trace_and_bergman(rng):
    x, y = rand(rng), rand(rng)
    assert np.isclose(np.trace(d_operator_W(x, y)), 12 * hermitian_product_W(x, y))
    x, y = rand(rng, 0.1), rand(rng, 0.1)
    n = minimal_polynomial_W(x, y)(1.0)
    assert abs(det_dense(bergman_operator_W(x, y)) - n**12) < 1e-6 * abs(n**12)


def test_kernel_split(rng):
    for beta in (BETA, random_null_unit_octonion(rng)):
        kb, kbb = kernel_split(beta)
        assert kb.shape == (8, 4) and kbb.shape == (8, 4)
        assert np.linalg.norm(left_mult_operator(beta) @ kb) < 1e-12
        assert np.linalg.norm(left_mult_operator(np.conj(beta)) @ kbb) < 1e-12
        assert np.linalg.matrix_rank(np.hstack([kb, kbb])) == 8
        x = cgauss(rng, 8)
        bb = np.conj(beta)
        rec = omul(oconj(beta), omul(bb, x)) + omul(oconj(bb), omul(beta, x))
        assert np.allclose(rec, x)
        assert np.allclose(omul(beta, omul(oconj(beta), x)), 0)
    with pytest.raises(ValueError):
        kernel_split(C_UNIT)


def test_classify_tripotents_W():
    assert classify_tripotent_W(F2(BETA)).rank == 1
    cert = classify_tripotent_W(F2(C_UNIT))
    assert cert.rank == 2 and np.isclose(cert.invariants[1], 1)
    assert classify_tripotent_W(WElement.zero()).rank == 0
    with pytest.raises(NotATripotent):
        classify_tripotent_W(F2(C_UNIT) * 0.5)
    # consistent with the ambient classification
    assert classify_tripotent(embed(F2(C_UNIT))).rank == 2


def test_null_characterisation_of_minimal_tripotents(rng):
    for _ in range(200):
        beta = random_null_unit_octonion(rng)
        gamma = omul(oconj(beta), cgauss(rng, 8))
        gamma = gamma / np.sqrt(oherm(gamma, gamma).real)
        th = rng.uniform(0, np.pi / 2)
        x = WElement.from_pair(np.cos(th) * beta, np.sin(th) * gamma)
        assert is_minimal_by_null_conditions(x)
        assert classify_tripotent_W(x).rank == 1
    x = rand(rng)
    assert not is_minimal_by_null_conditions(x)


def test_peirce_W():
    assert peirce_W(F2(BETA)).dims == (5, 10, 1)
    dec = peirce_W(F2(C_UNIT))
    assert dec.dims == (0, 8, 8)
    assert dec.plus_minus == (8, 8)
    assert max(dec.residuals().values()) < 1e-12


def test_frame_census_W():
    u, v = F2(BETA), F2(np.conj(BETA))
    assert are_orthogonal(embed(u), embed(v))
    inv = frame_invariants_W([u, v])
    assert (inv["a"], inv["b"], inv["r"], inv["g"]) == (6, 4, 2, 12)
    assert inv["dims"][(1, 1)] == inv["dims"][(2, 2)] == 1
    assert inv["dims"][(0, 2)] == 4


def test_exercise_frame_census():
    # (F2(beta), F3(~bar beta)): bar beta ~bar beta = n(bar beta) = 0, so the two are orthogonal
    u, v = F2(BETA), F3(oconj(np.conj(BETA)))
    assert are_orthogonal(embed(u), embed(v))
    inv = frame_invariants_W([u, v])
    assert inv["dims"] == {(0, 0): 0, (0, 1): 4, (0, 2): 4, (1, 1): 1, (1, 2): 6, (2, 2): 1}


def test_peirce_one_subsystem_census(rng):
    gamma = null_orthogonal_to(BETA, rng)
    assert abs(oherm(gamma, BETA)) < 1e-12 and abs(oherm(gamma, np.conj(BETA))) < 1e-12
    c = minimal_peirce_one_census(BETA, gamma)
    assert (c["dim"], c["r"], c["a"], c["b"]) == (10, 2, 4, 2)


def test_spectral_decomposition_W(rng):
    x = rand(rng)
    pairs = spectral_decompose_W(x)
    assert len(pairs) == 2
    recon = sum(lam * t.v for lam, t in pairs)
    assert np.allclose(recon, x.v)
    for _, t in pairs:
        assert classify_tripotent_W(t).rank == 1
