"""Hermitian Jordan triple structure on H3(O).

    Q(x)y   = (x|y) x - x# x bar(y)
    {x y z} = (x|y) z + (z|y) x - (x x z) x bar(y)

Operators are returned as dense complex numpy arrays acting on the flat
27-vector coordinates of ``AlbertElement``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .albert import DIM, AlbertElement, _cross, _det, _herm, _sharp
from .linalg import TAU_CLS, solve_vandermonde

MERGE_TOL = 1e-6
"""Relative gap below which two singular values are treated as one."""


def _q(x, y):
    return _herm(x, y)[..., None] * x - _cross(_sharp(x), np.conj(y))


def _triple(x, y, z):
    return (
        _herm(x, y)[..., None] * z
        + _herm(z, y)[..., None] * x
        - _cross(_cross(x, z), np.conj(y))
    )


def _as_arr(x):
    return x.v if isinstance(x, AlbertElement) else np.asarray(x, dtype=complex)


def q_apply(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    return AlbertElement(_q(x.v, y.v))


def triple(x: AlbertElement, y: AlbertElement, z: AlbertElement) -> AlbertElement:
    return AlbertElement(_triple(x.v, y.v, z.v))


def d_operator(x, y) -> np.ndarray:
    """Matrix of z -> {x y z}."""
    basis = np.eye(DIM, dtype=complex)
    return _triple(_as_arr(x)[None, :], _as_arr(y)[None, :], basis).T


def q_operator(x) -> np.ndarray:
    """Matrix M with Q(x)y = M @ conj(y) (Q(x) is antilinear)."""
    basis = np.eye(DIM, dtype=complex)
    return _q(_as_arr(x)[None, :], basis).T


def bergman_operator(x, y) -> np.ndarray:
    """B(x, y) = Id - D(x, y) + Q(x) Q(y), a complex-linear 27x27 matrix."""
    qx = q_operator(x)
    qy = q_operator(y)
    return np.eye(DIM) - d_operator(x, y) + qx @ np.conj(qy)


def jordan_axiom_residuals(x, y, z, relative: bool = False) -> dict:
    """Residual norms of the two triple-system axioms, applied to a vector z.

    J1: D(x,y) Q(x) z = Q(x) D(y,x) z
    J2: D(Q(x)y, y) z = D(x, Q(y)x) z
    Batched raw arrays are accepted; the maximum over the batch is returned.
    With ``relative=True`` residuals are divided by (1 + max operand norm)^5.
    """
    x, y, z = (_as_arr(t) for t in (x, y, z))
    j1 = _triple(x, y, _q(x, z)) - _q(x, _triple(y, x, z))
    j2 = _triple(_q(x, y), y, z) - _triple(x, _q(y, x), z)
    out = {"J1": np.linalg.norm(j1, axis=-1), "J2": np.linalg.norm(j2, axis=-1)}
    if relative:
        scale = 1.0 + np.max([np.linalg.norm(t, axis=-1) for t in (x, y, z)], axis=0)
        out = {k: v / scale ** 5 for k, v in out.items()}
    return {k: float(np.max(v)) for k, v in out.items()}


def power(x: AlbertElement, k: int, y: AlbertElement) -> AlbertElement:
    """x^(k, y): x^(1,y) = x, x^(k+1,y) = 1/2 {x y x^(k,y)}."""
    if int(k) != k or k < 1:
        raise ValueError(f"exponent must be a positive integer, got {k}")
    cur = x.v
    for _ in range(int(k) - 1):
        cur = 0.5 * _triple(x.v, y.v, cur)
    return AlbertElement(cur)


def odd_power(x: AlbertElement, m: int) -> AlbertElement:
    """x^(m) for odd m, defined as x^((m+1)/2, x)."""
    if int(m) != m or m < 1 or m % 2 == 0:
        raise ValueError(f"odd_power needs an odd positive exponent, got {m}")
    return power(x, (int(m) + 1) // 2, x)


@dataclass(frozen=True)
class MinimalPolynomial:
    """m(T) = T^r - c1 T^(r-1) + c2 T^(r-2) [- c3] with the invariants c_i."""

    invariants: tuple

    @property
    def degree(self) -> int:
        return len(self.invariants)

    def coefficients(self) -> np.ndarray:
        """Ascending coefficients of the monic polynomial."""
        signed = [(-1) ** (i + 1) * c for i, c in enumerate(self.invariants)]
        return np.array(list(reversed(signed)) + [1.0], dtype=complex)

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coefficients())

    def roots(self) -> np.ndarray:
        from .linalg import roots_monic_cubic, roots_monic_quadratic

        c = self.coefficients()
        if self.degree == 3:
            return roots_monic_cubic(c)
        if self.degree == 2:
            return roots_monic_quadratic(c)
        raise ValueError("only degrees 2 and 3 occur")


def minimal_polynomial(x: AlbertElement, y: AlbertElement) -> MinimalPolynomial:
    sx, sy = _sharp(x.v), _sharp(y.v)
    c1 = complex(_herm(x.v, y.v))
    c2 = complex(_herm(sx, sy))
    c3 = complex(_det(x.v) * np.conj(_det(y.v)))
    return MinimalPolynomial((c1, c2, c3))


def squared_singular_values(x: AlbertElement) -> np.ndarray:
    """Roots of m(T; x, x), real, clamped at zero, descending."""
    r = minimal_polynomial(x, x).roots().real
    return np.sort(np.maximum(r, 0.0))[::-1]


@dataclass(frozen=True)
class SpectralDecomposition:
    values: tuple
    tripotents: tuple = field(repr=False)
    multiplicities: tuple
    merge_tol: float
    low_confidence: bool = False

    def reconstruct(self) -> AlbertElement:
        acc = np.zeros(DIM, dtype=complex)
        for lam, t in zip(self.values, self.tripotents):
            acc = acc + lam * t.v
        return AlbertElement(acc)

    def __len__(self):
        return len(self.values)

    def pairs(self):
        return list(zip(self.values, self.tripotents))

    def certify(self, x: AlbertElement, tol: float = TAU_CLS) -> dict:
        """Residuals behind the decomposition's invariants."""
        tri = [float(np.linalg.norm(_triple(t.v, t.v, t.v) - 2 * t.v)) for t in self.tripotents]
        orth = 0.0
        for i, s in enumerate(self.tripotents):
            for t in self.tripotents[i + 1:]:
                orth = max(orth, float(np.linalg.norm(d_operator(s, t), 2)))
        recon = float(np.linalg.norm(self.reconstruct().v - x.v))
        scale = 1.0 + float(np.linalg.norm(x.v))
        return {
            "tripotent": max(tri, default=0.0),
            "orthogonality": orth,
            "reconstruction": recon,
            "ok": max(tri, default=0.0) < tol * scale and orth < tol * scale and recon < tol * scale,
        }


def spectral_decompose(x: AlbertElement, merge_tol: float = MERGE_TOL, zero_tol: float = TAU_CLS) -> SpectralDecomposition:
    """Write x = sum lambda_i e_i with lambda_1 > lambda_2 > ... > 0.

    The lambda_i^2 are the roots of m(T; x, x). Equal values are merged, so
    each e_i is a tripotent whose rank is the multiplicity of lambda_i; the
    e_i come out of the odd powers x^(2k+1) = sum lambda_i^(2k+1) e_i.
    """
    roots = squared_singular_values(x)
    cut = zero_tol * (1.0 + roots[0])
    lams = [float(np.sqrt(r)) for r in roots if r > cut]
    if not lams:
        return SpectralDecomposition((), (), (), merge_tol)
    scale = 1.0 + lams[0]
    values, mults = [lams[0]], [1]
    low = False
    for lam in lams[1:]:
        gap = values[-1] - lam
        if gap < merge_tol * scale:
            # running mean keeps the merged node centred
            n = mults[-1]
            values[-1] = (values[-1] * n + lam) / (n + 1)
            mults[-1] = n + 1
        else:
            if gap < 10 * merge_tol * scale:
                low = True
            values.append(lam)
            mults.append(1)
    p = len(values)
    # x^(2k+3) = 1/2 {x x x^(2k+1)}
    powers = [x.v]
    for _ in range(p - 1):
        powers.append(0.5 * _triple(x.v, x.v, powers[-1]))
    tris = solve_vandermonde(values, np.array(powers))
    return SpectralDecomposition(
        tuple(values),
        tuple(AlbertElement(t) for t in tris),
        tuple(mults),
        merge_tol,
        low,
    )


def rank(x: AlbertElement, tol: float = TAU_CLS) -> int:
    roots = squared_singular_values(x)
    return int(np.sum(roots > tol * (1.0 + roots[0])))
