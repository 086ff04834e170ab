"""Projective compactifications of H3(O) and of W.

V sits in P(C + V + V + C) through x -> [1, x, x#, det x]; the closure of
the image is the Freudenthal manifold M, cut out by the degree-2 equations

    y# = mu x,   x# = lambda y,   (x:y) = 3 lambda mu.

W sits in P(V) through x -> [e1 + x - e1 x x#], landing on the cone of
rank-one elements z# = 0, and the image is the chart (z:e1) != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .albert import DIM, AlbertElement, _cross, _det, _scalar, _sharp
from .linalg import TAU_CLS
from .type_v import WElement, _sharp_w, embed, restrict

_E1 = np.zeros(DIM, dtype=complex)
_E1[0] = 1.0


class NotOnManifold(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FreudenthalPoint:
    lam: complex
    x: AlbertElement = field(repr=False)
    y: AlbertElement = field(repr=False)
    mu: complex

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", complex(self.mu))
        if self.lam == 0 and self.mu == 0 and not np.any(self.x.v) and not np.any(self.y.v):
            raise ValueError("homogeneous coordinates cannot all vanish")

    def flat(self) -> np.ndarray:
        return np.concatenate([[self.lam], self.x.v, self.y.v, [self.mu]])

    def scale(self) -> float:
        return max(abs(self.lam), self.x.norm(), self.y.norm(), abs(self.mu))

    def scaled(self, s) -> "FreudenthalPoint":
        return FreudenthalPoint(s * self.lam, self.x * s, self.y * s, s * self.mu)


def embed_V(x: AlbertElement) -> FreudenthalPoint:
    return FreudenthalPoint(1.0, x, AlbertElement(_sharp(x.v)), complex(_det(x.v)))


def membership_residuals(p: FreudenthalPoint, relative: bool = False) -> dict:
    """Norms of y# - mu x, x# - lambda y and (x:y) - 3 lambda mu.

    With ``relative=True`` each is divided by scale^2, scale being the largest
    coordinate norm; the equations are homogeneous of degree 2.
    """
    x, y = p.x.v, p.y.v
    out = {
        "y#=mu x": float(np.linalg.norm(_sharp(y) - p.mu * x)),
        "x#=lambda y": float(np.linalg.norm(_sharp(x) - p.lam * y)),
        "(x:y)=3 lambda mu": float(abs(_scalar(x, y) - 3 * p.lam * p.mu)),
    }
    if relative:
        s2 = p.scale() ** 2
        out = {k: v / s2 for k, v in out.items()}
    return out


def is_on_manifold(p: FreudenthalPoint, tol: float = TAU_CLS) -> bool:
    return max(membership_residuals(p, relative=True).values()) < tol


def projective_equal(p: FreudenthalPoint, q: FreudenthalPoint, tol: float = TAU_CLS) -> bool:
    """Compare after normalising both by p's largest-magnitude coordinate."""
    a, b = p.flat(), q.flat()
    i = int(np.argmax(np.abs(a)))
    if abs(b[i]) <= tol * np.max(np.abs(b)):
        return False
    return float(np.max(np.abs(a / a[i] - b / b[i]))) < tol


@dataclass(frozen=True)
class ChartValue:
    """Result of dehomogenising: an element of V, or a point at infinity."""

    element: object = field(repr=False)  # AlbertElement or None
    at_infinity: bool

    def to_json(self):
        from .serialize import albert_to_json

        if self.at_infinity:
            return {"at_infinity": True}
        return {"at_infinity": False, "x": albert_to_json(self.element)}


def dehomogenize(p: FreudenthalPoint, tol: float = TAU_CLS) -> ChartValue:
    if not is_on_manifold(p, tol):
        res = membership_residuals(p, relative=True)
        raise NotOnManifold(f"point is not on M (relative residuals {res})")
    if abs(p.lam) <= tol * p.scale():
        return ChartValue(None, True)
    x = p.x / p.lam
    if not projective_equal(p, embed_V(x), 10 * tol):
        raise NotOnManifold("dehomogenised point does not map back to p")
    return ChartValue(x, False)


# -- the rank-one cone -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RankOnePoint:
    z: AlbertElement = field(repr=False)

    def __post_init__(self):
        if not np.any(self.z.v):
            raise ValueError("the zero element is not a projective point")

    def residual(self) -> float:
        return float(np.linalg.norm(_sharp(self.z.v)))


def embed_W(x: WElement) -> RankOnePoint:
    ex = embed(x).v
    z = _E1 + ex - _cross(_E1, _sharp_w(x.v))
    return RankOnePoint(AlbertElement(z))


@dataclass(frozen=True)
class ConeMembership:
    residual: float
    on_cone: bool
    in_chart: bool
    element: object = field(default=None, repr=False)  # WElement when in chart
    chart_mismatch: float = 0.0


def p_membership(z, tol: float = TAU_CLS) -> ConeMembership:
    """Check z# = 0 and, in the chart (z:e1) != 0, recover x with j(x) = [z]."""
    if isinstance(z, RankOnePoint):
        z = z.z
    n = z.norm()
    if n == 0:
        raise ValueError("z must be nonzero")
    res = float(np.linalg.norm(_sharp(z.v)))
    on_cone = res < tol * (1.0 + n * n)
    t = complex(_scalar(z.v, _E1))
    in_chart = abs(t) > tol * n
    if not (on_cone and in_chart):
        return ConeMembership(res, on_cone, in_chart)
    zn = z.v / t
    x = restrict(AlbertElement(np.concatenate([np.zeros(11), zn[11:]])))
    expected = _E1 + embed(x).v - _cross(_E1, _sharp_w(x.v))
    mismatch = float(np.linalg.norm(zn - expected))
    if mismatch > tol * (1.0 + float(np.linalg.norm(zn)) ** 2):
        raise NotOnManifold(f"V0(e1) part inconsistent with -e1 x x# (mismatch {mismatch:.3e})")
    return ConeMembership(res, on_cone, in_chart, x, mismatch)
