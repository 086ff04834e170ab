"""The bounded symmetric domains of H3(O) and W, and their boundary strata.

With m(T; x, x) the minimal polynomial, the domain is cut out by

    f_{k+1}(x) = (1/k!) d^k/dT^k m(T; x, x) at T = 1 > 0,   k = 0 .. r-1.

For V these are 1 - s + p - q, 3 - 2s + p and 3 - s, with s = (x|x),
p = (x#|x#) and q = |det x|^2; for W they are 1 - s + p and 2 - s.

Points are classified twice: by counting roots of m(T; x, x) at 1, and by
the sign pattern of the f_k. The two must agree away from decision surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .albert import AlbertElement, _det, _herm, _sharp
from .jts import minimal_polynomial, rank, spectral_decompose, squared_singular_values
from .linalg import TAU_CLS
from .tripotents import classify_tripotent, is_maximal_frame_element, peirce
from .type_v import (
    WElement,
    _herm_w,
    _sharp_w,
    classify_tripotent_W,
    minimal_polynomial_W,
    peirce_W,
    spectral_values_W,
)

RANK = {"V": 3, "W": 2}
COMPLEX_DIM = {"V": 27, "W": 16}


def _system(x) -> str:
    if isinstance(x, WElement):
        return "W"
    if isinstance(x, AlbertElement):
        return "V"
    raise TypeError(f"expected AlbertElement or WElement, got {type(x).__name__}")


def invariants_V(x: AlbertElement) -> tuple:
    sx = _sharp(x.v)
    return float(_herm(x.v, x.v).real), float(_herm(sx, sx).real), float(abs(_det(x.v)) ** 2)


def invariants_W(x: WElement) -> tuple:
    sx = _sharp_w(x.v)
    return float(_herm_w(x.v, x.v).real), float(_herm(sx, sx).real)


def inequality_values_V(x: AlbertElement) -> tuple:
    s, p, q = invariants_V(x)
    return (1 - s + p - q, 3 - 2 * s + p, 3 - s)


def inequality_values_W(x: WElement) -> tuple:
    s, p = invariants_W(x)
    return (1 - s + p, 2 - s)


def inequality_values_from_polynomial(coeffs) -> tuple:
    """(1/k!) m^(k)(1) for k = 0 .. r-1, from ascending real coefficients."""
    c = np.polynomial.polynomial.Polynomial(np.real(coeffs))
    r = len(coeffs) - 1
    return tuple(float(c.deriv(k)(1.0)) / factorial(k) for k in range(r))


def inequality_values(x) -> tuple:
    return inequality_values_W(x) if _system(x) == "W" else inequality_values_V(x)


def minpoly_roots(x) -> np.ndarray:
    """Real roots of m(T; x, x) (the squared singular values), descending."""
    if _system(x) == "W":
        return np.sort(np.maximum(minimal_polynomial_W(x, x).roots().real, 0.0))[::-1]
    return squared_singular_values(x)


@dataclass(frozen=True)
class DomainVerdict:
    system: str
    location: str  # "interior", "boundary" or "exterior"
    stratum: object  # int for boundary points, else None
    f: tuple
    roots: tuple
    margin: float
    confidence: str  # "high" or "low"
    agreement: bool = True
    by_inequalities: tuple = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "location": self.location,
            "stratum": self.stratum,
            "f": list(self.f),
            "roots": list(self.roots),
            # no root off 1 (e.g. a point of the Shilov boundary): no margin
            "margin": self.margin if np.isfinite(self.margin) else None,
            "confidence": self.confidence,
        }


def _by_roots(roots, tol):
    at_one = int(np.sum(np.abs(roots - 1.0) < tol))
    if np.any(roots > 1.0 + tol):
        return "exterior", None
    if at_one == 0:
        return "interior", None
    return "boundary", at_one


def _by_inequalities(f, ftol):
    f = np.asarray(f)
    zero = np.abs(f) <= ftol
    pos = f > ftol
    if np.all(pos):
        return "interior", None
    r = len(f)
    for k in range(1, r + 1):
        if np.all(zero[:k]) and np.all(pos[k:]):
            return "boundary", k
    return "exterior", None


def classify(x, tol: float = TAU_CLS) -> DomainVerdict:
    """Locate x relative to the domain of its system (V or W)."""
    system = _system(x)
    roots = minpoly_roots(x)
    f = inequality_values(x)
    inv = invariants_W(x) if system == "W" else invariants_V(x)
    ftol = tol * (1.0 + sum(inv))
    loc, k = _by_roots(roots, tol)
    loc2, k2 = _by_inequalities(f, ftol)
    off = np.abs(roots - 1.0)
    off = off[off >= tol]
    margin = float(np.min(off)) if off.size else float("inf")
    agree = (loc, k) == (loc2, k2)
    low = margin < 10 * tol or not agree
    return DomainVerdict(
        system,
        loc,
        k,
        tuple(float(v) for v in f),
        tuple(float(r) for r in roots),
        margin,
        "low" if low else "high",
        agree,
        (loc2, k2),
    )


def classify_V(x: AlbertElement, tol: float = TAU_CLS) -> DomainVerdict:
    if not isinstance(x, AlbertElement):
        raise TypeError("classify_V expects an AlbertElement")
    return classify(x, tol)


def classify_W(x: WElement, tol: float = TAU_CLS) -> DomainVerdict:
    if not isinstance(x, WElement):
        raise TypeError("classify_W expects a WElement")
    return classify(x, tol)


# -- the maps p_k ---------------------------------------------------------------


class NotOnBoundary(ValueError):
    pass


@dataclass(frozen=True)
class StratumProjection:
    tripotent: AlbertElement = field(repr=False)
    residual: AlbertElement = field(repr=False)
    rank: int
    v0_residual: float
    residual_roots: tuple
    low_confidence: bool

    @property
    def ok(self) -> bool:
        return self.v0_residual < TAU_CLS * 10 and all(r < 1.0 for r in self.residual_roots)


def project_to_stratum_frame(x: AlbertElement, tol: float = TAU_CLS) -> StratumProjection:
    """Split a boundary point x of stratum k as x = e + y, e in E_k, y in Omega(e) of V0(e).

    e collects the spectral tripotents of x whose singular value is 1.
    """
    verdict = classify_V(x, tol)
    if verdict.location != "boundary":
        raise NotOnBoundary(f"point is {verdict.location}")
    dec = spectral_decompose(x)
    e = np.zeros(27, dtype=complex)
    k = 0
    low = dec.low_confidence or verdict.confidence == "low"
    for lam, t, m in zip(dec.values, dec.tripotents, dec.multiplicities):
        d = abs(lam * lam - 1.0)
        if d < tol:
            e = e + t.v
            k += m
        elif d < 10 * tol:
            low = True
    e = AlbertElement(e)
    if k != verdict.stratum:
        low = True
    y = x - e
    p = peirce(e)
    v0 = float(np.linalg.norm((p.projectors[1] + p.projectors[2]) @ y.v))
    yroots = tuple(float(r) for r in squared_singular_values(y) if r > tol * (1 + x.norm() ** 2))
    return StratumProjection(e, y, k, v0, yroots, low)


# -- Shilov boundary -------------------------------------------------------------


def shilov_test_V(x: AlbertElement, tol: float = TAU_CLS) -> bool:
    return is_maximal_frame_element(x, tol)


def shilov_test_W(x: WElement, tol: float = TAU_CLS) -> bool:
    s, p = invariants_W(x)
    return abs(s - 2.0) < tol and abs(p - 1.0) < tol


def shilov_test(x, tol: float = TAU_CLS) -> bool:
    return shilov_test_W(x, tol) if _system(x) == "W" else shilov_test_V(x, tol)


# -- geometry of the strata ------------------------------------------------------


def _affine_rank(system, p0, rng) -> int:
    """Rank of the Peirce-zero subsystem, from a random element of it."""
    n = p0.shape[0]
    if int(round(np.trace(p0).real)) == 0:
        return 0
    v = p0 @ (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    if system == "W":
        vals = spectral_values_W(WElement(v))
        return int(np.sum(vals ** 2 > TAU_CLS * (1 + vals[0] ** 2)))
    return rank(AlbertElement(v))


def boundary_report(e, tol: float = TAU_CLS, seed: int = 0) -> dict:
    """Dimension data for the stratum through a tripotent e of rank k.

    Boundary part d_k Omega at e: normal direction V2+(e) (real dimension
    dim V2), complex tangent V1 + V0, CR type (d1 + d0, d2).
    Tripotent manifold E_k: complex tangent V1, CR type (d1, d2), real
    dimension 2 d1 + d2.
    """
    system = _system(e)
    if system == "W":
        k = classify_tripotent_W(e, tol).rank
        dec = peirce_W(e, tol)
    else:
        k = classify_tripotent(e, tol).rank
        dec = peirce(e, tol)
    d0, d1, d2 = dec.dims
    n = COMPLEX_DIM[system]
    r = RANK[system]
    aff = _affine_rank(system, dec.projectors[0], np.random.default_rng(seed))
    return {
        "system": system,
        "rank": k,
        "peirce_dims": [d0, d1, d2],
        "normal_real_dim": d2,
        "boundary_part": {
            "real_dim": 2 * n - d2,
            "codim": d2,
            "complex_tangent_dim": d1 + d0,
            "cr_type": [d1 + d0, d2],
        },
        "tripotent_manifold": {
            "real_dim": 2 * d1 + d2,
            "complex_tangent_dim": d1,
            "cr_type": [d1, d2],
        },
        "affine_component": {"dim": d0, "rank": aff, "expected_rank": r - k},
    }
