"""The 16-dimensional exceptional triple system W = F2 + F3 inside H3(O).

A ``WElement`` is the pair (b, c) standing for F2(b) + F3(c). The quadratic
representation and triple product are evaluated directly on the octonion
pairs:

    Q(x)y   = F2( x2 ~y2' x2 + (x2 y3') ~x3 ) + F3( ~x2 (y2' x3) + x3 ~y3' x3 )
    {x y z} = F2( (x2 ~y2') z2 + (z2 ~y2') x2 + (x2 y3') ~z3 + (z2 y3') ~x3 )
            + F3( ~x2 (y2' z3) + ~z2 (y2' x3) + x3 (~y3' z3) + z3 (~y3' x3) )

where y' is the complex conjugate and ~ the Cayley conjugation. The ambient
formulas of ``jts`` serve as the oracle for these (see ``ambient_triple``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .albert import DIM, AlbertElement, _herm, _sharp
from .cayley import conj as oconj
from .cayley import left_mult_operator, oherm, omul, onorm
from .jts import MinimalPolynomial, _triple
from .linalg import TAU_CLS
from .tripotents import (
    CorruptedInvariants,
    NotATripotent,
    PeirceDecomposition,
    TripotentCertificate,
    _dims,
    involution_split,
    numerical_invariants,
    projectors_from_d,
)

WDIM = 16
_OFF = 11  # W occupies coordinates 11..26 of the flat Albert vector

W_RANK_INVARIANTS = {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (2.0, 1.0)}


class OutsideSubsystem(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WElement:
    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.v, dtype=complex)
        if v.shape != (WDIM,):
            raise ValueError(f"a W element has 16 coordinates, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("coordinates must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_pair(cls, b=None, c=None) -> "WElement":
        b = np.zeros(8, dtype=complex) if b is None else np.asarray(b, dtype=complex)
        c = np.zeros(8, dtype=complex) if c is None else np.asarray(c, dtype=complex)
        return cls(np.concatenate([b, c]))

    @classmethod
    def zero(cls) -> "WElement":
        return cls(np.zeros(WDIM, dtype=complex))

    @property
    def b(self) -> np.ndarray:
        return self.v[:8]

    @property
    def c(self) -> np.ndarray:
        return self.v[8:]

    def __add__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return WElement(self.v + other.v)

    def __sub__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return WElement(self.v - other.v)

    def __neg__(self):
        return WElement(-self.v)

    def __mul__(self, scalar):
        if isinstance(scalar, WElement):
            return NotImplemented
        return WElement(self.v * scalar)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.v))

    def conj(self) -> "WElement":
        return WElement(np.conj(self.v))

    def __repr__(self):
        return f"WElement(|b|={np.linalg.norm(self.b):.6g}, |c|={np.linalg.norm(self.c):.6g})"


def F2(b) -> WElement:
    return WElement.from_pair(b, None)


def F3(c) -> WElement:
    return WElement.from_pair(None, c)


def embed(x: WElement) -> AlbertElement:
    v = np.zeros(DIM, dtype=complex)
    v[_OFF:] = x.v
    return AlbertElement(v)


def restrict(a: AlbertElement, tol: float = TAU_CLS) -> WElement:
    outside = float(np.linalg.norm(a.v[:_OFF]))
    if outside > tol * (1.0 + a.norm()):
        raise OutsideSubsystem(f"element has mass {outside:.3e} outside F2 + F3")
    return WElement(a.v[_OFF:])


# -- closed-form structure ------------------------------------------------------


def _sharp_w(v):
    b, c = v[..., :8], v[..., 8:]
    out = np.zeros(v.shape[:-1] + (DIM,), dtype=complex)
    out[..., 1] = -onorm(b)
    out[..., 2] = -onorm(c)
    out[..., 3:11] = oconj(omul(b, c))
    return out


def _herm_w(u, w):
    return oherm(u[..., :8], w[..., :8]) + oherm(u[..., 8:], w[..., 8:])


def _q_w(x, y):
    x2, x3 = x[..., :8], x[..., 8:]
    y2, y3 = np.conj(y[..., :8]), np.conj(y[..., 8:])
    f2 = omul(x2, omul(oconj(y2), x2)) + omul(omul(x2, y3), oconj(x3))
    f3 = omul(oconj(x2), omul(y2, x3)) + omul(x3, omul(oconj(y3), x3))
    return np.concatenate([f2, f3], axis=-1)


def _triple_w(x, y, z):
    x2, x3 = x[..., :8], x[..., 8:]
    z2, z3 = z[..., :8], z[..., 8:]
    y2, y3 = np.conj(y[..., :8]), np.conj(y[..., 8:])
    ty2, ty3 = oconj(y2), oconj(y3)
    f2 = (
        omul(omul(x2, ty2), z2)
        + omul(omul(z2, ty2), x2)
        + omul(omul(x2, y3), oconj(z3))
        + omul(omul(z2, y3), oconj(x3))
    )
    f3 = (
        omul(oconj(x2), omul(y2, z3))
        + omul(oconj(z2), omul(y2, x3))
        + omul(x3, omul(ty3, z3))
        + omul(z3, omul(ty3, x3))
    )
    return np.concatenate([f2, f3], axis=-1)


def sharp_W(x: WElement) -> AlbertElement:
    """x# = -n(b) e2 - n(c) e3 + ~F1(bc), an element of V0(e1)."""
    return AlbertElement(_sharp_w(x.v))


def hermitian_product_W(x: WElement, y: WElement) -> complex:
    return complex(_herm_w(x.v, y.v))


def q_apply_W(x: WElement, y: WElement) -> WElement:
    return WElement(_q_w(x.v, y.v))


def triple_W(x: WElement, y: WElement, z: WElement) -> WElement:
    return WElement(_triple_w(x.v, y.v, z.v))


def ambient_triple(x: WElement, y: WElement, z: WElement) -> WElement:
    """{xyz} computed in H3(O) and restricted back; the oracle for ``triple_W``."""
    return restrict(AlbertElement(_triple(embed(x).v, embed(y).v, embed(z).v)))


# -- operators on W -------------------------------------------------------------


def d_operator_W(x, y) -> np.ndarray:
    basis = np.eye(WDIM, dtype=complex)
    return _triple_w(_arr(x)[None, :], _arr(y)[None, :], basis).T


def q_operator_W(x) -> np.ndarray:
    """M with Q(x)y = M @ conj(y)."""
    basis = np.eye(WDIM, dtype=complex)
    return _q_w(_arr(x)[None, :], basis).T


def bergman_operator_W(x, y) -> np.ndarray:
    return np.eye(WDIM) - d_operator_W(x, y) + q_operator_W(x) @ np.conj(q_operator_W(y))


def _arr(x):
    return x.v if isinstance(x, WElement) else np.asarray(x, dtype=complex)


def minimal_polynomial_W(x: WElement, y: WElement) -> MinimalPolynomial:
    c1 = complex(_herm_w(x.v, y.v))
    c2 = complex(_herm(_sharp_w(x.v), _sharp_w(y.v)))
    return MinimalPolynomial((c1, c2))


def spectral_values_W(x: WElement) -> np.ndarray:
    r = minimal_polynomial_W(x, x).roots().real
    return np.sqrt(np.sort(np.maximum(r, 0.0))[::-1])


def spectral_decompose_W(x: WElement, merge_tol: float = 1e-6, zero_tol: float = TAU_CLS):
    """x = sum lambda_i e_i in W; returns list of (lambda, WElement tripotent)."""
    from .linalg import solve_vandermonde

    lam2 = np.sort(np.maximum(minimal_polynomial_W(x, x).roots().real, 0.0))[::-1]
    cut = zero_tol * (1.0 + lam2[0])
    lams = [float(np.sqrt(r)) for r in lam2 if r > cut]
    if not lams:
        return []
    scale = 1.0 + lams[0]
    if len(lams) == 2 and lams[0] - lams[1] < merge_tol * scale:
        lams = [0.5 * (lams[0] + lams[1])]
    powers = [x.v]
    if len(lams) == 2:
        powers.append(0.5 * _triple_w(x.v, x.v, x.v))
    tris = solve_vandermonde(lams, np.array(powers))
    return [(lam, WElement(t)) for lam, t in zip(lams, tris)]


# -- null octonions -------------------------------------------------------------


def _column_space(m: np.ndarray, tol: float) -> np.ndarray:
    q, r, _ = scipy.linalg.qr(m, pivoting=True)
    diag = np.abs(np.diag(r))
    k = int(np.sum(diag > tol * max(1.0, diag[0] if diag.size else 1.0)))
    return q[:, :k]


def kernel_split(beta, tol: float = TAU_CLS) -> tuple:
    """Orthonormal bases of ker L(beta) and ker L(bar beta), columns of 8 x 4 arrays.

    ker L(beta) is the image of L(~beta), which is what gets reduced here.
    """
    beta = np.asarray(getattr(beta, "coords", beta), dtype=complex)
    h = float(oherm(beta, beta).real)
    nb = complex(onorm(beta))
    if abs(h - 1.0) > tol or abs(nb) > tol:
        raise ValueError(f"beta must satisfy (beta|beta)=1 and n(beta)=0, got {h:.3e}, {abs(nb):.3e}")
    k_beta = _column_space(left_mult_operator(oconj(beta)), 1e-8)
    k_bar = _column_space(left_mult_operator(oconj(np.conj(beta))), 1e-8)
    return k_beta, k_bar


# -- tripotents and Peirce in W -------------------------------------------------


def w_invariants(x: WElement) -> tuple:
    sx = _sharp_w(x.v)
    return float(_herm_w(x.v, x.v).real), float(_herm(sx, sx).real)


def classify_tripotent_W(x: WElement, tol: float = TAU_CLS) -> TripotentCertificate:
    res = float(np.linalg.norm(_triple_w(x.v, x.v, x.v) - 2 * x.v))
    if res >= tol * (1.0 + x.norm() ** 3):
        raise NotATripotent(f"{{xxx}} - 2x has norm {res:.3e}")
    s, p = w_invariants(x)
    k = int(round(s))
    if k not in W_RANK_INVARIANTS:
        raise CorruptedInvariants(f"(x|x) = {s:.6g} is not a tripotent rank in W")
    exp = W_RANK_INVARIANTS[k]
    if max(abs(s - exp[0]), abs(p - exp[1])) > 10 * tol * (1 + k) ** 3:
        raise CorruptedInvariants(f"invariants ({s}, {p}) inconsistent with rank {k}")
    return TripotentCertificate(x, k, res, (s, p, 0.0))


def peirce_W(e: WElement, tol: float = TAU_CLS) -> PeirceDecomposition:
    classify_tripotent_W(e, tol)
    proj = projectors_from_d(d_operator_W(e, e))
    split = involution_split(q_operator_W(e), proj[2], tol)
    return PeirceDecomposition(proj, _dims(proj), split)


def frame_invariants_W(frame) -> dict:
    return numerical_invariants([peirce_W(t).projectors for t in frame])


def is_minimal_by_null_conditions(x: WElement, tol: float = TAU_CLS) -> bool:
    """n(b) = n(c) = 0, bc = 0, (b|b) + (c|c) = 1."""
    b, c = x.b, x.c
    checks = (
        abs(onorm(b)),
        abs(onorm(c)),
        float(np.linalg.norm(omul(b, c))),
        abs(oherm(b, b) + oherm(c, c) - 1.0),
    )
    return max(checks) < tol


def subspace_census(basis: np.ndarray, frame, tol: float = TAU_CLS) -> dict:
    """Rank, dimension and (a, b) of the subsystem spanned by ``basis`` columns.

    ``frame`` is a list of tripotents of the subsystem forming a frame. The
    Peirce projectors of W are compressed onto the subspace, which must be
    invariant under each D(e, e).
    """
    q, _ = np.linalg.qr(basis)
    projs = []
    for t in frame:
        d = d_operator_W(t, t)
        leak = float(np.linalg.norm(d @ q - q @ (q.conj().T @ d @ q)))
        if leak > 1e3 * tol:
            raise OutsideSubsystem(f"subspace is not D(e,e)-invariant (leak {leak:.2e})")
        projs.append(projectors_from_d(q.conj().T @ d @ q))
    inv = numerical_invariants(projs)
    inv["dim"] = q.shape[1]
    return inv


def minimal_peirce_one_census(beta, gamma) -> dict:
    """Census of W1(u) for u = F2(beta), with frame (F2(gamma), F2(bar gamma))."""
    u = F2(beta)
    p1 = peirce_W(u).projectors[1]
    basis = _column_space(p1, 1e-8)
    census = subspace_census(basis, [F2(gamma), F2(np.conj(gamma))])
    return census


def null_orthogonal_to(beta, rng) -> np.ndarray:
    """Random gamma in <beta, bar beta>^perp with (gamma|gamma) = 1, n(gamma) = 0.

    Real and imaginary parts of beta span a real 2-plane; gamma is built from
    two orthonormal real vectors orthogonal to it.
    """
    b1, b2 = np.real(beta), np.imag(beta)
    m = np.column_stack([b1, b2, rng.standard_normal((8, 2))])
    q, _ = np.linalg.qr(m)
    return (q[:, 2] + 1j * q[:, 3]) / 2.0
