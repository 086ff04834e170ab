"""The 27-dimensional space H3(O) of Hermitian 3x3 complex-octonion matrices.

An element is stored as the flat vector (alpha1, alpha2, alpha3, a1, a2, a3)
of length 27: three diagonal scalars followed by the three off-diagonal
octonions, so that  a = sum_j alpha_j e_j + sum_j F_j(a_j). The matrix view

    [[alpha1,  a3,    ~a2  ],
     [~a3,     alpha2, a1  ],
     [a2,      ~a1,    alpha3]]

is only used for display. Index triples (i, j, k) always run over the even
permutations (1,2,3), (2,3,1), (3,1,2).

Functions with a leading underscore act on raw arrays of shape (..., 27) and
broadcast; the public functions take and return ``AlbertElement``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cayley import conj as oconj
from .cayley import obil, omul, onorm

DIM = 27
_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def _split(v):
    v = np.asarray(v)
    return v[..., 0:3], v[..., 3:27].reshape(v.shape[:-1] + (3, 8))


def _join(alpha, a):
    return np.concatenate([alpha, a.reshape(a.shape[:-2] + (24,))], axis=-1)


def _sharp(v):
    al, a = _split(v)
    out_al = np.empty_like(al, dtype=complex)
    out_a = np.empty_like(a, dtype=complex)
    for i, j, k in _EVEN:
        out_al[..., i] = al[..., j] * al[..., k] - onorm(a[..., i, :])
        out_a[..., i, :] = oconj(omul(a[..., j, :], a[..., k, :])) - al[..., i, None] * a[..., i, :]
    return _join(out_al, out_a)


def _cross(u, w):
    al, a = _split(u)
    be, b = _split(w)
    shape = np.broadcast_shapes(al.shape, be.shape)
    out_al = np.empty(shape, dtype=complex)
    out_a = np.empty(shape + (8,), dtype=complex)
    for i, j, k in _EVEN:
        out_al[..., i] = al[..., j] * be[..., k] + al[..., k] * be[..., j] - obil(a[..., i, :], b[..., i, :])
        mixed = omul(a[..., j, :], b[..., k, :]) + omul(b[..., j, :], a[..., k, :])
        out_a[..., i, :] = oconj(mixed) - al[..., i, None] * b[..., i, :] - be[..., i, None] * a[..., i, :]
    return _join(out_al, out_a)


def _scalar(u, w):
    """(u:w): bilinear, with (a_j:b_j) = 2 * sum of coordinate products."""
    al, a = _split(u)
    be, b = _split(w)
    return np.sum(al * be, axis=-1) + 2.0 * np.sum(a * b, axis=(-2, -1))


def _herm(u, w):
    return _scalar(u, np.conj(w))


def _det(v):
    al, a = _split(v)
    d = al[..., 0] * al[..., 1] * al[..., 2]
    for i in range(3):
        d = d - al[..., i] * onorm(a[..., i, :])
    prod = omul(a[..., 0, :], omul(a[..., 1, :], a[..., 2, :]))
    # a1(a2 a3) + (~a3 ~a2) ~a1 is the trace of a1(a2 a3)
    return d + 2.0 * prod[..., 0]


@dataclass(frozen=True, eq=False)
class AlbertElement:
    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.v, dtype=complex)
        if v.shape != (DIM,):
            raise ValueError(f"an Albert element has 27 coordinates, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("coordinates must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_parts(cls, alpha=(0, 0, 0), a=None) -> "AlbertElement":
        a = np.zeros((3, 8), dtype=complex) if a is None else np.asarray(a, dtype=complex)
        return cls(_join(np.asarray(alpha, dtype=complex), a))

    @classmethod
    def zero(cls) -> "AlbertElement":
        return cls(np.zeros(DIM, dtype=complex))

    @classmethod
    def basis(cls, n: int) -> "AlbertElement":
        v = np.zeros(DIM, dtype=complex)
        v[n] = 1.0
        return cls(v)

    @property
    def alpha(self) -> np.ndarray:
        return self.v[0:3]

    @property
    def a(self) -> np.ndarray:
        return self.v[3:27].reshape(3, 8)

    def __add__(self, other):
        if not isinstance(other, AlbertElement):
            return NotImplemented
        return AlbertElement(self.v + other.v)

    def __sub__(self, other):
        if not isinstance(other, AlbertElement):
            return NotImplemented
        return AlbertElement(self.v - other.v)

    def __neg__(self):
        return AlbertElement(-self.v)

    def __mul__(self, scalar):
        if isinstance(scalar, AlbertElement):
            return NotImplemented
        return AlbertElement(self.v * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return AlbertElement(self.v / scalar)

    def norm(self) -> float:
        """Euclidean norm of the coordinate vector, sqrt((x|x)) up to the octonion factor 2."""
        return float(np.linalg.norm(self.v))

    def hnorm(self) -> float:
        """sqrt((x|x)) for the Hermitian product."""
        return float(np.sqrt(max(hermitian_product(self, self).real, 0.0)))

    def conj(self) -> "AlbertElement":
        return complex_conjugate(self)

    def allclose(self, other, tol: float) -> bool:
        return float(np.max(np.abs(self.v - other.v))) <= tol

    def matrix(self) -> list:
        """3x3 nested list of octonion coordinate arrays (display only)."""
        al, a = self.alpha, self.a
        unit = np.eye(8, dtype=complex)[0]
        return [
            [al[0] * unit, a[2], oconj(a[1])],
            [oconj(a[2]), al[1] * unit, a[0]],
            [a[1], oconj(a[0]), al[2] * unit],
        ]

    def __repr__(self):
        return f"AlbertElement(alpha={np.round(self.alpha, 6).tolist()}, |a|={np.round(np.linalg.norm(self.a, axis=1), 6).tolist()})"


def e(i: int) -> AlbertElement:
    """Diagonal unit e_i, i in {1, 2, 3}."""
    alpha = np.zeros(3)
    alpha[i - 1] = 1.0
    return AlbertElement.from_parts(alpha)


def F(i: int, octonion) -> AlbertElement:
    """F_i(octonion), i in {1, 2, 3}."""
    a = np.zeros((3, 8), dtype=complex)
    a[i - 1] = np.asarray(octonion, dtype=complex)
    return AlbertElement.from_parts((0, 0, 0), a)


def diag(a1, a2, a3) -> AlbertElement:
    return AlbertElement.from_parts((a1, a2, a3))


def scalar_product(a: AlbertElement, b: AlbertElement) -> complex:
    return complex(_scalar(a.v, b.v))


def hermitian_product(a: AlbertElement, b: AlbertElement) -> complex:
    """(a|b) = (a : bar b); linear in a, antilinear in b."""
    return complex(_herm(a.v, b.v))


def complex_conjugate(a: AlbertElement) -> AlbertElement:
    return AlbertElement(np.conj(a.v))


def adjoint(a: AlbertElement) -> AlbertElement:
    return AlbertElement(_sharp(a.v))


def cross(a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """Freudenthal product, the polarisation of the adjoint: a x a = 2 a#."""
    return AlbertElement(_cross(a.v, b.v))


def determinant(a: AlbertElement) -> complex:
    return complex(_det(a.v))


def trilinear_T(a, b, c) -> complex:
    return complex(_scalar(_cross(a.v, b.v), c.v))


def _adjoint_identity_pairs(a, b, c):
    sa = _sharp(a)
    da = _det(a)
    ab = _cross(a, b)
    sb = _sharp(b)
    db = _det(b)
    t_abc = _scalar(_cross(a, b), c)
    sc = lambda x, y: _scalar(x, y)[..., None]  # noqa: E731
    return {
        "(a#)#=det(a)a": (_sharp(sa), da[..., None] * a),
        "det(a#)=det(a)^2": (_det(sa)[..., None], (da ** 2)[..., None]),
        "a# x (a x b)=det(a)b+(a#:b)a": (_cross(sa, ab), da[..., None] * b + sc(sa, b) * a),
        "(a x b:a# x c)=det(a)(b:c)+(a#:b)(a:c)": (_scalar(ab, _cross(sa, c))[..., None], (da * _scalar(b, c))[..., None] + sc(sa, b) * sc(a, c)),
        "a x (a# x c)=det(a)c+(a:c)a#": (_cross(a, _cross(sa, c)), da[..., None] * c + sc(a, c) * sa),
        "(a x b) x (a x c)+a# x (b x c)=(a#:b)c+(a#:c)b+T(a,b,c)a": (
            _cross(ab, _cross(a, c)) + _cross(sa, _cross(b, c)),
            sc(sa, b) * c + sc(sa, c) * b + t_abc[..., None] * a,
        ),
        "a x ((a x b) x c)+b x (a# x c)=(a#:b)c+(b:c)a#+(a:c)(a x b)": (
            _cross(a, _cross(ab, c)) + _cross(b, _cross(sa, c)),
            sc(sa, b) * c + sc(b, c) * sa + sc(a, c) * ab,
        ),
        "a# x b#+(a x b)#=(a#:b)b+(b#:a)a": (_cross(sa, sb) + _sharp(ab), sc(sa, b) * b + sc(sb, a) * a),
        "(a x b#:a# x b)=3det(a)det(b)+(a:b)(a#:b#)": (
            _scalar(_cross(a, sb), _cross(sa, b))[..., None],
            (3 * da * db + _scalar(a, b) * _scalar(sa, sb))[..., None],
        ),
    }


_DEGREES = {
    "(a#)#=det(a)a": 4,
    "det(a#)=det(a)^2": 6,
    "a# x (a x b)=det(a)b+(a#:b)a": 4,
    "(a x b:a# x c)=det(a)(b:c)+(a#:b)(a:c)": 5,
    "a x (a# x c)=det(a)c+(a:c)a#": 4,
    "(a x b) x (a x c)+a# x (b x c)=(a#:b)c+(a#:c)b+T(a,b,c)a": 4,
    "a x ((a x b) x c)+b x (a# x c)=(a#:b)c+(b:c)a#+(a:c)(a x b)": 4,
    "a# x b#+(a x b)#=(a#:b)b+(b#:a)a": 4,
    "(a x b#:a# x b)=3det(a)det(b)+(a:b)(a#:b#)": 6,
}


def adjoint_identity_residuals(a, b, c, relative: bool = False) -> dict:
    """Residual norm of each identity in the adjoint/determinant family.

    Keys are the identities themselves: (a#)# = det(a) a, det(a#) = det(a)^2
    and their polarised consequences.
    With ``relative=True`` each residual is divided by (1 + max operand
    norm) to the identity's degree. Accepts elements or batched raw arrays.
    """
    arrs = [x.v if isinstance(x, AlbertElement) else np.asarray(x, dtype=complex) for x in (a, b, c)]
    pairs = _adjoint_identity_pairs(*arrs)
    scale = 1.0 + np.max([np.linalg.norm(x, axis=-1) for x in arrs], axis=0)
    out = {}
    for key, (lhs, rhs) in pairs.items():
        r = np.linalg.norm(lhs - rhs, axis=-1)
        if relative:
            r = r / scale ** _DEGREES[key]
        out[key] = float(np.max(r))
    return out
