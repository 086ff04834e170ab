import numpy as np
import pytest

from excdom import tripotents
from excdom.albert import AlbertElement, diag, e
from excdom.cayley import null_unit_octonion
from excdom.sampling import random_frame
from excdom.tripotents import (
    CorruptedInvariants,
    NotATripotent,
    are_orthogonal,
    classify_tripotent,
    frame_invariants,
    is_maximal_frame_element,
    peirce,
    q_involution_split,
)
from excdom.type_v import F2, embed

E123 = e(1) + e(2) + e(3)


@pytest.mark.parametrize(
    "x,k,inv",
    [(e(1), 1, (1, 0, 0)), (e(1) + e(2), 2, (2, 1, 0)), (E123, 3, (3, 3, 1)), (AlbertElement.zero(), 0, (0, 0, 0))],
)
def test_classification(x, k, inv):
    cert = classify_tripotent(x)
    assert cert.rank == k
    assert np.allclose(cert.invariants, inv, atol=1e-12)


def test_non_tripotent_rejected():
    with pytest.raises(NotATripotent):
        classify_tripotent(e(1) * 0.5)
    with pytest.raises(NotATripotent):
        classify_tripotent(diag(1, 2, 0))


def test_inconsistent_invariants_diagnostic(monkeypatch):
    monkeypatch.setattr(tripotents, "invariant_triple", lambda x: (2.0, 0.3, 0.0))
    with pytest.raises(CorruptedInvariants):
        classify_tripotent(e(1) + e(2))


@pytest.mark.parametrize(
    "x,dims", [(e(1), (10, 16, 1)), (e(1) + e(2), (1, 16, 10)), (E123, (0, 0, 27)), (AlbertElement.zero(), (27, 0, 0))]
)
def test_peirce_dimensions(x, dims):
    dec = peirce(x)
    assert dec.dims == dims
    assert sum(dec.dims) == 27
    assert max(dec.residuals().values()) < 1e-12


def test_peirce_spaces_of_e1():
    dec = peirce(e(1))
    p0, p1, p2 = dec.projectors
    assert np.allclose(p2 @ e(1).v, e(1).v)
    assert np.allclose(p0 @ e(2).v, e(2).v)
    b = np.eye(8)[3]
    assert np.allclose(p1 @ embed(F2(b)).v, embed(F2(b)).v)


def test_peirce_random_tripotents(rng):
    for _ in range(5):
        f = random_frame(rng)
        for k in (1, 2, 3):
            t = AlbertElement(sum(x.v for x in f[:k]))
            dec = peirce(t)
            assert dec.dims[2] == {1: 1, 2: 10, 3: 27}[k]
            assert max(dec.residuals().values()) < 1e-7


def test_q_involution_split():
    assert q_involution_split(e(1)) == (1, 1)
    assert q_involution_split(E123) == (27, 27)
    assert q_involution_split(AlbertElement.zero()) == (0, 0)
    assert q_involution_split(e(1) + e(2)) == (10, 10)


def test_orthogonality():
    assert are_orthogonal(e(1), e(2))
    assert not are_orthogonal(e(1), e(1))
    beta = null_unit_octonion()
    assert are_orthogonal(embed(F2(beta)), embed(F2(np.conj(beta))))


def test_orthogonal_sum_adds_rank(rng):
    f = random_frame(rng)
    assert are_orthogonal(f[0], f[1])
    assert classify_tripotent(f[0] + f[1]).rank == 2
    assert classify_tripotent(f[0] + f[1] + f[2]).rank == 3


def test_maximal_frame_element(rng):
    assert is_maximal_frame_element(E123)
    assert not is_maximal_frame_element(e(1))
    u = np.exp(1j * np.array([0.3, 1.1, -2.0]))
    assert is_maximal_frame_element(diag(*u))
    assert classify_tripotent(diag(*u)).rank == 3
    f = random_frame(rng)
    assert is_maximal_frame_element(f[0] + f[1] + f[2])
    assert not is_maximal_frame_element(f[0] + f[1])
    assert not is_maximal_frame_element(AlbertElement.zero())


def test_frame_census_diagonal():
    inv = frame_invariants([e(1), e(2), e(3)])
    assert (inv["a"], inv["b"], inv["r"], inv["g"]) == (8, 0, 3, 18)
    d = inv["dims"]
    assert [d[(i, i)] for i in (1, 2, 3)] == [1, 1, 1]
    assert [d[(1, 2)], d[(1, 3)], d[(2, 3)]] == [8, 8, 8]


def test_frame_census_random(rng):
    inv = frame_invariants(random_frame(rng))
    assert (inv["a"], inv["b"], inv["g"]) == (8, 0, 18)
