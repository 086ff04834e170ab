"""Seeded samplers for octonions, Albert elements, W elements and frames."""

from __future__ import annotations

import numpy as np

from .albert import DIM, AlbertElement
from .jts import spectral_decompose, squared_singular_values
from .type_v import WDIM, WElement, spectral_values_W


def rng_from_seed(seed) -> np.random.Generator:
    return np.random.default_rng(None if seed is None else int(seed))


def complex_gaussian(rng, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_albert(rng, scale: float = 1.0) -> AlbertElement:
    return AlbertElement(scale * complex_gaussian(rng, DIM))


def random_w(rng, scale: float = 1.0) -> WElement:
    return WElement(scale * complex_gaussian(rng, WDIM))


def spectral_norm(x) -> float:
    """Largest singular value lambda_1, i.e. sqrt of the top root of m(T; x, x)."""
    if isinstance(x, WElement):
        vals = spectral_values_W(x)
        return float(vals[0])
    return float(np.sqrt(squared_singular_values(x)[0]))


def rescale_to(x, target: float):
    """x scaled so that its spectral norm equals ``target`` (x must be nonzero)."""
    s = spectral_norm(x)
    if s == 0:
        raise ValueError("cannot rescale the zero element")
    return x * (target / s)


def sample_albert(rng, n: int, target_norm=None) -> list:
    out = []
    for _ in range(n):
        x = random_albert(rng)
        out.append(x if target_norm is None else rescale_to(x, target_norm))
    return out


def sample_w(rng, n: int, target_norm=None) -> list:
    out = []
    for _ in range(n):
        x = random_w(rng)
        out.append(x if target_norm is None else rescale_to(x, target_norm))
    return out


def random_frame(rng) -> tuple:
    """A frame (f1, f2, f3) of H3(O): the spectral tripotents of a generic element.

    A Gaussian element has three distinct singular values almost surely, so
    its spectral decomposition consists of three orthogonal minimal tripotents.
    """
    for _ in range(20):
        dec = spectral_decompose(random_albert(rng))
        if len(dec) == 3 and not dec.low_confidence:
            return dec.tripotents
    raise RuntimeError("failed to draw a generic element")
