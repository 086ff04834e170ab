"""Cayley-Dickson algebras k, k(mu1), k(mu1, mu2), k(mu1, mu2, mu3) over R or C.

Elements are coordinate vectors in the recursive doubling basis: the basis
of A(mu) is the basis of A followed by v times the basis of A, so index 0 is
always the unit. The product is

    (a1 + v b1)(a2 + v b2) = a1 a2 + mu b2 ~b1 + v(~a1 b2 + a2 b1)

and everything else (norm, trace, conjugation) follows from the signature.

Array-level functions (``multiply``, ``conj``, ``norm`` ...) broadcast over
leading axes, which is what the identity suites use. ``CompositionElement``
is the value-type wrapper around them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .linalg import TAU_ALG


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    field: str = "C"
    mu: tuple = (-1.0, -1.0, -1.0)

    def __post_init__(self):
        if self.field not in ("R", "C"):
            raise ValueError("field must be 'R' or 'C'")
        mu = tuple(float(m) for m in self.mu)
        if any(m == 0 for m in mu):
            raise ValueError("extension parameters must be nonzero")
        if len(mu) > 4:
            raise ValueError("levels above 4 are not supported")
        object.__setattr__(self, "mu", mu)

    @property
    def level(self) -> int:
        return len(self.mu)

    @property
    def dim(self) -> int:
        return 2 ** len(self.mu)

    @property
    def dtype(self):
        return complex if self.field == "C" else float

    @property
    def is_composition(self) -> bool:
        return self.level <= 3

    def to_json(self) -> dict:
        return {"field": self.field, "mu": list(self.mu)}

    @classmethod
    def from_json(cls, obj) -> "Signature":
        return cls(obj["field"], tuple(obj["mu"]))


COMPLEX_OCTONIONS = Signature("C", (-1.0, -1.0, -1.0))
COMPACT_OCTONIONS = Signature("R", (-1.0, -1.0, -1.0))
SPLIT_OCTONIONS = Signature("R", (1.0, 1.0, 1.0))

REAL_MODELS = (
    Signature("R", ()),
    Signature("R", (-1.0,)),
    Signature("R", (1.0,)),
    Signature("R", (-1.0, -1.0)),
    Signature("R", (1.0, 1.0)),
    Signature("R", (-1.0, -1.0, -1.0)),
    Signature("R", (1.0, 1.0, 1.0)),
)
COMPLEX_MODELS = tuple(Signature("C", (-1.0,) * n) for n in range(4))


def cd_multiply_recursive(a, b, mu):
    """Literal recursive doubling product; broadcasts over leading axes."""
    if len(mu) == 0:
        return a * b
    h = a.shape[-1] // 2
    inner = mu[:-1]
    a1, b1 = a[..., :h], a[..., h:]
    a2, b2 = b[..., :h], b[..., h:]
    first = cd_multiply_recursive(a1, a2, inner) + mu[-1] * cd_multiply_recursive(b2, _conj_flat(b1), inner)
    second = cd_multiply_recursive(_conj_flat(a1), b2, inner) + cd_multiply_recursive(a2, b1, inner)
    return np.concatenate([first, second], axis=-1)


def _conj_flat(a):
    out = -a
    out[..., 0] = a[..., 0]
    return out


@lru_cache(maxsize=None)
def structure_constants(mu: tuple) -> np.ndarray:
    """Tensor C with (ab)_k = sum_ij a_i b_j C[i, j, k], built from the recursion."""
    d = 2 ** len(mu)
    eye = np.eye(d)
    tab = cd_multiply_recursive(eye[:, None, :], eye[None, :, :], mu)
    tab.setflags(write=False)
    return tab


@lru_cache(maxsize=None)
def norm_weights(mu: tuple) -> np.ndarray:
    """Diagonal of the norm form in the doubling basis: n(a + vb) = n(a) - mu n(b)."""
    w = np.ones(1)
    for m in mu:
        w = np.concatenate([w, -m * w])
    w.setflags(write=False)
    return w


def multiply(sig: Signature, a, b):
    return np.einsum("...i,...j,ijk->...k", a, b, structure_constants(sig.mu))


def conj(a):
    """Cayley conjugation ~a = (a:e)e - a."""
    return _conj_flat(np.asarray(a))


def norm(sig: Signature, a):
    a = np.asarray(a)
    return np.sum(norm_weights(sig.mu) * a * a, axis=-1)


def bilinear(sig: Signature, a, b):
    """(a:b) = n(a+b) - n(a) - n(b); note (a:a) = 2 n(a)."""
    return 2.0 * np.sum(norm_weights(sig.mu) * np.asarray(a) * np.asarray(b), axis=-1)


def trace(a):
    """t(a) = (a:e); the unit has norm 1 in every signature."""
    return 2.0 * np.asarray(a)[..., 0]


def unit(sig: Signature):
    e = np.zeros(sig.dim, dtype=sig.dtype)
    e[0] = 1.0
    return e


def associator_arr(sig, x, y, z):
    return multiply(sig, x, multiply(sig, y, z)) - multiply(sig, multiply(sig, x, y), z)


def commutator_arr(sig, x, y):
    return multiply(sig, x, y) - multiply(sig, y, x)


def moufang_arr(sig, a, x, y):
    """Raw residual vectors of the left, right and central Moufang identities."""
    m = lambda p, q: multiply(sig, p, q)  # noqa: E731
    axa = m(a, m(x, a))
    aya = m(a, m(y, a))
    left = m(a, m(x, m(a, y))) - m(axa, y)
    right = m(m(m(x, a), y), a) - m(x, aya)
    central = m(m(a, x), m(y, a)) - m(m(a, m(x, y)), a)
    return left, right, central


@dataclass(frozen=True, eq=False)
class CompositionElement:
    signature: Signature
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coords, dtype=self.signature.dtype)
        if c.shape != (self.signature.dim,):
            raise ValueError(f"expected {self.signature.dim} coordinates, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coordinates must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    @classmethod
    def unit(cls, sig: Signature) -> "CompositionElement":
        return cls(sig, unit(sig))

    @classmethod
    def basis(cls, sig: Signature, i: int) -> "CompositionElement":
        c = np.zeros(sig.dim)
        c[i] = 1.0
        return cls(sig, c)

    def _same(self, other):
        if not isinstance(other, CompositionElement):
            return NotImplemented
        if other.signature != self.signature:
            raise SignatureMismatch(f"{self.signature} vs {other.signature}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return CompositionElement(self.signature, self.coords + other.coords)

    def __sub__(self, other):
        other = self._same(other)
        return CompositionElement(self.signature, self.coords - other.coords)

    def __neg__(self):
        return CompositionElement(self.signature, -self.coords)

    def __mul__(self, other):
        if isinstance(other, CompositionElement):
            return cd_multiply(self, other)
        return CompositionElement(self.signature, self.coords * other)

    def __rmul__(self, scalar):
        return CompositionElement(self.signature, self.coords * scalar)

    def __repr__(self):
        return f"CompositionElement({self.signature.field}{self.signature.mu}, {np.round(self.coords, 6).tolist()})"

    def allclose(self, other, tol=TAU_ALG) -> bool:
        other = self._same(other)
        return bool(np.max(np.abs(self.coords - other.coords), initial=0.0) <= tol)


def cd_multiply(a: CompositionElement, b: CompositionElement) -> CompositionElement:
    if a.signature != b.signature:
        raise SignatureMismatch(f"{a.signature} vs {b.signature}")
    return CompositionElement(a.signature, multiply(a.signature, a.coords, b.coords))


def conjugate(a: CompositionElement) -> CompositionElement:
    return CompositionElement(a.signature, conj(a.coords))


def element_norm(a: CompositionElement):
    return norm(a.signature, a.coords)[()]


def element_trace(a: CompositionElement):
    return trace(a.coords)[()]


def element_bilinear(a: CompositionElement, b: CompositionElement):
    if a.signature != b.signature:
        raise SignatureMismatch(f"{a.signature} vs {b.signature}")
    return bilinear(a.signature, a.coords, b.coords)[()]


def associator(x, y, z) -> CompositionElement:
    return x * (y * z) - (x * y) * z


def commutator(x, y) -> CompositionElement:
    return x * y - y * x


def moufang_residuals(a, x, y) -> tuple:
    """Coordinate norms of the left, right and central Moufang residuals."""
    sig = a.signature
    for other in (x, y):
        if other.signature != sig:
            raise SignatureMismatch(f"{sig} vs {other.signature}")
    res = moufang_arr(sig, a.coords, x.coords, y.coords)
    return tuple(float(np.linalg.norm(r)) for r in res)


def alternativity_witness(sig: Signature, rng=None, tries: int = 200):
    """Search for x, y with a large [x, ~x, y]; returns (x, y, residual norm).

    In a Cayley-Dickson algebra A(mu) the algebra is alternative exactly when
    [x, ~x, y] vanishes identically, so a large value certifies failure.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    best = (None, None, 0.0)
    for _ in range(tries):
        x = rng.standard_normal(sig.dim)
        y = rng.standard_normal(sig.dim)
        r = float(np.linalg.norm(associator_arr(sig, x, conj(x), y)))
        if r > best[2]:
            best = (CompositionElement(sig, x), CompositionElement(sig, y), r)
        if r > 1.0:
            break
    return best


# -- complex octonions ---------------------------------------------------------
# A complex octonion is an array of 8 complex numbers over the compact basis
# mu = (-1, -1, -1). Complex conjugation ("bar") acts on the scalars only.

_OCT_TABLE = structure_constants(COMPLEX_OCTONIONS.mu)


def omul(a, b):
    return np.einsum("...i,...j,ijk->...k", a, b, _OCT_TABLE)


def onorm(a):
    return np.sum(a * a, axis=-1)


def obil(a, b):
    return 2.0 * np.sum(a * b, axis=-1)


def oherm(a, b):
    """(a|b) = (a : bar b)."""
    return 2.0 * np.sum(a * np.conj(b), axis=-1)


def left_mult_operator(beta) -> np.ndarray:
    """8x8 complex matrix of x -> beta x in the standard basis."""
    beta = np.asarray(getattr(beta, "coords", beta), dtype=complex)
    return np.einsum("i,ijk->kj", beta, _OCT_TABLE)


def null_unit_octonion(b1=None, b2=None) -> np.ndarray:
    """beta = b1 + i b2 with b1, b2 real, orthogonal, of norm 1/4.

    Then (beta|beta) = 1 and n(beta) = 0. The default is (e0 + i e1)/2.
    """
    if b1 is None:
        b1 = np.eye(8)[0] / 2.0
    if b2 is None:
        b2 = np.eye(8)[1] / 2.0
    return np.asarray(b1, dtype=float) + 1j * np.asarray(b2, dtype=float)


def random_null_unit_octonion(rng) -> np.ndarray:
    """Random beta with (beta|beta) = 1, n(beta) = 0."""
    q, _ = np.linalg.qr(rng.standard_normal((8, 2)))
    return null_unit_octonion(q[:, 0] / 2.0, q[:, 1] / 2.0)
