"""Tripotents of H3(O): rank classification, Peirce projectors, frames.

For a tripotent e the operator D(e, e) has spectrum in {0, 1, 2}, so the
Peirce projectors are the Lagrange interpolation polynomials in D(e, e)
at those three nodes. The same code serves the 16-dimensional subsystem W
once it is handed W's own D and Q operators (see ``type_v``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .albert import AlbertElement, _det, _herm, _sharp, adjoint, complex_conjugate, determinant
from .jts import _triple, d_operator, q_operator
from .linalg import TAU_CLS

# (x|x), (x#|x#), |det x|^2 for the canonical tripotent of each rank
RANK_INVARIANTS = {0: (0.0, 0.0, 0.0), 1: (1.0, 0.0, 0.0), 2: (2.0, 1.0, 0.0), 3: (3.0, 3.0, 1.0)}


class NotATripotent(ValueError):
    pass


class CorruptedInvariants(ValueError):
    pass


@dataclass(frozen=True)
class TripotentCertificate:
    element: AlbertElement = field(repr=False)
    rank: int
    residual: float
    invariants: tuple


def invariant_triple(x: AlbertElement) -> tuple:
    sx = _sharp(x.v)
    return (
        float(_herm(x.v, x.v).real),
        float(_herm(sx, sx).real),
        float(abs(_det(x.v)) ** 2),
    )


def tripotent_residual(x: AlbertElement) -> float:
    return float(np.linalg.norm(_triple(x.v, x.v, x.v) - 2 * x.v))


def is_tripotent(x: AlbertElement, tol: float = TAU_CLS) -> bool:
    return tripotent_residual(x) < tol * (1.0 + x.norm() ** 3)


def classify_tripotent(x: AlbertElement, tol: float = TAU_CLS) -> TripotentCertificate:
    """Certify x as a tripotent and read off its rank.

    Raises ``NotATripotent`` if {xxx} != 2x, and ``CorruptedInvariants`` if
    the invariant triple disagrees with the rank suggested by (x|x).
    """
    res = tripotent_residual(x)
    if res >= tol * (1.0 + x.norm() ** 3):
        raise NotATripotent(f"{{xxx}} - 2x has norm {res:.3e}")
    inv = invariant_triple(x)
    k = int(round(inv[0]))
    if k not in RANK_INVARIANTS:
        raise CorruptedInvariants(f"(x|x) = {inv[0]:.6g} is not a tripotent rank")
    expected = RANK_INVARIANTS[k]
    bad = max(abs(a - b) for a, b in zip(inv, expected))
    if bad > 10 * tol * (1 + k) ** 3:
        raise CorruptedInvariants(f"invariants {inv} inconsistent with rank {k} (expected {expected})")
    return TripotentCertificate(x, k, res, inv)


@dataclass(frozen=True)
class PeirceDecomposition:
    """Projectors onto V2, V1, V0 and their dimensions (index = eigenvalue)."""

    projectors: tuple = field(repr=False)
    dims: tuple
    plus_minus: tuple = None

    @property
    def d0(self) -> int:
        return self.dims[0]

    @property
    def d1(self) -> int:
        return self.dims[1]

    @property
    def d2(self) -> int:
        return self.dims[2]

    def residuals(self) -> dict:
        p = self.projectors
        n = p[0].shape[0]
        idem = max(float(np.linalg.norm(q @ q - q)) for q in p)
        orth = max(float(np.linalg.norm(p[i] @ p[j])) for i in range(3) for j in range(3) if i != j)
        total = float(np.linalg.norm(p[0] + p[1] + p[2] - np.eye(n)))
        return {"idempotent": idem, "orthogonal": orth, "sum": total}


def projectors_from_d(d: np.ndarray) -> tuple:
    """(P0, P1, P2) from D = D(e, e) by interpolation at the nodes 0, 1, 2."""
    n = d.shape[0]
    eye = np.eye(n)
    p0 = 0.5 * (d - eye) @ (d - 2 * eye)
    p1 = -d @ (d - 2 * eye)
    p2 = 0.5 * d @ (d - eye)
    return p0, p1, p2


def _dims(projectors) -> tuple:
    dims = []
    for p in projectors:
        tr = np.trace(p).real
        d = int(round(tr))
        if abs(tr - d) > 0.01:
            raise NotATripotent(f"projector trace {tr:.4f} is not an integer")
        dims.append(d)
    return tuple(dims)


def peirce_from_operator(d: np.ndarray) -> PeirceDecomposition:
    proj = projectors_from_d(d)
    return PeirceDecomposition(proj, _dims(proj))


def peirce(e: AlbertElement, tol: float = TAU_CLS) -> PeirceDecomposition:
    classify_tripotent(e, tol)
    return peirce_from_operator(d_operator(e, e))


# -- antilinear maps as real matrices ------------------------------------------


def realify_linear(m: np.ndarray) -> np.ndarray:
    return np.block([[m.real, -m.imag], [m.imag, m.real]])


def realify_antilinear(m: np.ndarray) -> np.ndarray:
    """Real matrix of z -> m conj(z) in (Re z, Im z) coordinates."""
    return np.block([[m.real, m.imag], [m.imag, -m.real]])


def involution_split(q: np.ndarray, p2: np.ndarray, tol: float = TAU_CLS) -> tuple:
    """Real dimensions of the +1/-1 eigenspaces of the antilinear Q on V2.

    ``q`` is the matrix with Q(y) = q conj(y); ``p2`` the complex projector on V2.
    Also checks Q^2 = Id on V2 and Q = 0 on the complement.
    """
    qr = realify_antilinear(q)
    pr = realify_linear(p2)
    n = pr.shape[0]
    on_v2 = qr @ pr
    sq = float(np.linalg.norm(qr @ on_v2 - pr))
    off = float(np.linalg.norm(qr @ (np.eye(n) - pr)))
    if sq > 1e3 * tol or off > 1e3 * tol:
        raise NotATripotent(f"Q(e) is not an involution on V2 (residuals {sq:.2e}, {off:.2e})")
    plus = 0.5 * (pr + on_v2)
    minus = 0.5 * (pr - on_v2)
    return int(round(np.trace(plus))), int(round(np.trace(minus)))


def q_involution_split(e: AlbertElement, tol: float = TAU_CLS) -> tuple:
    """(dim_R V2+, dim_R V2-) for Q(e) restricted to V2(e)."""
    dec = peirce(e, tol)
    return involution_split(q_operator(e), dec.projectors[2], tol)


def are_orthogonal(e: AlbertElement, f: AlbertElement, tol: float = TAU_CLS) -> bool:
    """True iff D(e, f) = 0; orthogonal tripotents are also (|)-orthogonal."""
    for t in (e, f):
        classify_tripotent(t, tol)
    norm_d = float(np.linalg.norm(d_operator(e, f), 2))
    if norm_d >= tol * (1.0 + e.norm() * f.norm()):
        return False
    hp = abs(_herm(e.v, f.v))
    if hp > 10 * tol:
        raise CorruptedInvariants(f"D(e,f) = 0 but (e|f) = {hp:.3e}")
    return True


def is_maximal_frame_element(x: AlbertElement, tol: float = TAU_CLS) -> bool:
    """Algebraic test x = det(x) * adjoint(bar x) for maximal tripotents."""
    if x.norm() == 0:
        return False
    rhs = determinant(x) * adjoint(complex_conjugate(x)).v
    return float(np.linalg.norm(x.v - rhs)) < tol * (1.0 + x.norm())


# -- frames and numerical invariants -------------------------------------------


def joint_peirce_dims(frame_projectors: list) -> dict:
    """Dimensions of V_ij for a frame, given each member's (P0, P1, P2).

    Keys are (i, j) with 0 <= i <= j <= r, where index 0 stands for "outside
    the frame": V_00 = common zero space, V_0i, V_ii, V_ij (1 <= i < j).
    """
    r = len(frame_projectors)
    out = {}
    for i in range(r + 1):
        for j in range(i, r + 1):
            eig = [0] * r
            for idx in (i, j):
                if idx > 0:
                    eig[idx - 1] += 1
            prod = np.eye(frame_projectors[0][0].shape[0], dtype=complex)
            for m in range(r):
                prod = prod @ frame_projectors[m][eig[m]]
            out[(i, j)] = int(round(np.trace(prod).real))
    return out


def numerical_invariants(frame_projectors: list) -> dict:
    """(a, b, r, g) from a frame's simultaneous Peirce decomposition."""
    dims = joint_peirce_dims(frame_projectors)
    r = len(frame_projectors)
    a = dims[(1, 2)] if r >= 2 else 0
    b = dims[(0, 1)]
    return {"a": a, "b": b, "r": r, "g": 2 + a * (r - 1) + b, "dims": dims}


def frame_invariants(frame) -> dict:
    """Numerical invariants of H3(O) recomputed from a frame of tripotents."""
    return numerical_invariants([peirce(t).projectors for t in frame])
