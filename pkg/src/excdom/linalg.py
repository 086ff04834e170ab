"""Small dense numerics: determinants, cubic roots, odd-power Vandermonde solves.

Everything here works on plain numpy arrays of complex128. Tolerances used
throughout the package live in this module as well.
"""

from __future__ import annotations

import numpy as np

TAU_ALG = 1e-9
"""Residual bound for algebraic identities, measured at unit operand scale."""

TAU_CLS = 1e-7
"""Decision tolerance for classifications (ranks, strata, tripotency)."""


class DimensionError(ValueError):
    pass


class DegenerateSystemError(ValueError):
    pass


def _check_finite(arr: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains NaN or Inf")


def det_dense(m) -> complex:
    """Determinant by LU factorisation with partial pivoting."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"determinant needs a square matrix, got shape {a.shape}")
    if a.shape[0] > 64:
        raise DimensionError("det_dense is meant for matrices of size <= 64")
    _check_finite(a, "matrix")
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n == 1:
        return complex(a[0, 0])
    det = 1.0 + 0j
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0:
            return 0j
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        below = a[col + 1:, col] / a[col, col]
        a[col + 1:, col + 1:] -= np.outer(below, a[col, col + 1:])
    return complex(det)


def poly_eval(coeffs, t):
    """Evaluate sum(coeffs[i] * t**i), coefficients in ascending order."""
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _newton(coeffs, t, steps=3):
    d = _derivative(coeffs)
    for _ in range(steps):
        dv = poly_eval(d, t)
        if dv == 0:
            break
        step = poly_eval(coeffs, t) / dv
        t = t - step
        if abs(step) <= 1e-17 * (1 + abs(t)):
            break
    return t


def _cardano(a2, a1, a0):
    # depressed form T = t - a2/3 : t^3 + p t + q
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    sq = np.sqrt(complex(disc))
    w1 = -q / 2.0 + sq
    w2 = -q / 2.0 - sq
    w = w1 if abs(w1) >= abs(w2) else w2
    u = complex(w) ** (1.0 / 3.0) if w != 0 else 0j
    omega = complex(-0.5, np.sqrt(3.0) / 2.0)
    roots = []
    for k in range(3):
        uk = u * omega ** k
        vk = -p / (3.0 * uk) if uk != 0 else 0j
        roots.append(uk + vk - shift)
    return roots, disc, p, q


def _polish_clusters(coeffs, roots, scale):
    """Re-seat clustered roots on the zero of the matching derivative.

    A multiple root of order m is a simple root of the (m-1)-th derivative,
    which is far better conditioned than the polynomial itself.
    """
    roots = sorted(roots, key=lambda r: (-r.real, -r.imag))
    a2 = coeffs[2]
    centre = -a2 / 3.0
    spread = max(abs(r - centre) for r in roots)
    d1 = _derivative(coeffs)
    if spread <= 2e-4 * scale:
        t = _newton(_derivative(d1), centre)
        # at a genuine triple root p' and p vanish to rounding; a real spread d
        # leaves p' ~ d^2, so the bound must sit near machine precision
        if abs(poly_eval(d1, t)) <= 1e-13 * scale ** 2 and abs(poly_eval(coeffs, t)) <= 1e-13 * scale ** 3:
            return [t, t, t]
    best = None
    for i in range(3):
        for j in range(i + 1, 3):
            gap = abs(roots[i] - roots[j])
            if gap <= 1e-5 * scale and (best is None or gap < best[0]):
                best = (gap, i, j)
    if best is not None:
        _, i, j = best
        t = _newton(d1, 0.5 * (roots[i] + roots[j]))
        if abs(poly_eval(coeffs, t)) <= 1e-13 * scale ** 3:
            # the remaining root follows from the trace
            other = -coeffs[2] - 2 * t
            return [t, t, _newton(coeffs, other)]
    return [_newton(coeffs, r) for r in roots]


def roots_monic_cubic(coeffs) -> np.ndarray:
    """Roots of T^3 + c2 T^2 + c1 T + c0.

    ``coeffs`` is ascending ``(c0, c1, c2, c3)`` with ``c3 == 1``, or just
    ``(c0, c1, c2)``. Returns three complex roots sorted by descending real part.
    """
    c = [complex(v) for v in coeffs]
    if len(c) == 4:
        if abs(c[3] - 1) > 1e-12:
            raise ValueError("polynomial must be monic")
        c = c[:3]
    if len(c) != 3:
        raise ValueError("expected 3 or 4 coefficients")
    _check_finite(np.array(c), "coefficients")
    full = c + [1.0 + 0j]
    scale = 1.0 + max(abs(c[2]), abs(c[1]) ** 0.5, abs(c[0]) ** (1.0 / 3.0))
    roots, disc, p, q = _cardano(c[2], c[1], c[0])
    if abs(disc) < 1e-12 * scale ** 6:
        comp = np.zeros((3, 3), dtype=complex)
        comp[1, 0] = comp[2, 1] = 1.0
        comp[:, 2] = [-c[0], -c[1], -c[2]]
        roots = list(np.linalg.eigvals(comp))
    roots = _polish_clusters(full, roots, scale)
    out = np.array(sorted(roots, key=lambda r: (-r.real, -r.imag)), dtype=complex)
    return out


def roots_monic_quadratic(coeffs) -> np.ndarray:
    """Roots of T^2 + c1 T + c0 given ascending ``(c0, c1[, 1])``."""
    c = [complex(v) for v in coeffs]
    if len(c) == 3:
        c = c[:2]
    c0, c1 = c
    scale = 1.0 + max(abs(c1), abs(c0) ** 0.5)
    disc = c1 * c1 / 4.0 - c0
    if abs(disc) <= 1e-14 * scale ** 2:
        r = -c1 / 2.0
        return np.array([r, r], dtype=complex)
    s = np.sqrt(complex(disc))
    r1 = -c1 / 2.0 + (s if (np.conj(-c1) * s).real >= 0 else -s)
    r2 = c0 / r1 if r1 != 0 else -c1 - r1
    out = sorted([r1, r2], key=lambda r: (-r.real, -r.imag))
    return np.array(out, dtype=complex)


def solve_vandermonde(nodes, rhs) -> np.ndarray:
    """Solve sum_i nodes[i]**(2k+1) * x_i = rhs[k] for k = 0..len(nodes)-1.

    ``rhs`` has shape (p, ...) where p = len(nodes); the solution has the
    same shape with the leading axis indexing nodes.
    """
    lam = np.asarray(nodes, dtype=float)
    b = np.asarray(rhs, dtype=complex)
    p = lam.shape[0]
    if b.shape[0] != p:
        raise DimensionError("need one right-hand side per node")
    if p == 0:
        return b.copy()
    sep = np.inf
    for i in range(p):
        for j in range(i + 1, p):
            sep = min(sep, abs(lam[i] - lam[j]))
    if sep <= 1e-12 * (1 + np.max(np.abs(lam))):
        raise DegenerateSystemError("Vandermonde nodes collide")
    k = np.arange(p)
    mat = lam[None, :] ** (2 * k[:, None] + 1)
    flat = b.reshape(p, -1)
    sol = np.linalg.solve(mat.astype(complex), flat)
    return sol.reshape(b.shape)
