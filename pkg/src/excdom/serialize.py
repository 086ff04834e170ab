"""JSON encodings.

A complex number is [re, im]; an octonion is a list of 8 such pairs; an
Albert element is {"alpha": [c, c, c], "a": [oct, oct, oct]}; a W element is
{"b": oct, "c": oct}; a Freudenthal point is {"lambda", "x", "y", "mu"}.
Floats are written with ``repr`` so that they round-trip exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .albert import AlbertElement
from .cayley import Signature
from .compactify import FreudenthalPoint
from .type_v import WElement


class FormatError(ValueError):
    pass


def complex_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(obj) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if not (isinstance(obj, list) and len(obj) == 2):
        raise FormatError(f"a complex number is [re, im], got {obj!r}")
    return complex(float(obj[0]), float(obj[1]))


def octonion_to_json(a) -> list:
    a = np.asarray(a, dtype=complex)
    return [complex_to_json(v) for v in a]


def octonion_from_json(obj) -> np.ndarray:
    if not (isinstance(obj, list) and len(obj) == 8):
        raise FormatError("an octonion is a list of 8 [re, im] pairs")
    return np.array([complex_from_json(v) for v in obj])


def albert_to_json(x: AlbertElement) -> dict:
    return {"alpha": [complex_to_json(v) for v in x.alpha], "a": [octonion_to_json(o) for o in x.a]}


def albert_from_json(obj) -> AlbertElement:
    try:
        alpha = [complex_from_json(v) for v in obj["alpha"]]
        a = [octonion_from_json(o) for o in obj["a"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed Albert element: {exc}") from exc
    if len(alpha) != 3 or len(a) != 3:
        raise FormatError("an Albert element has 3 scalars and 3 octonions")
    return AlbertElement.from_parts(alpha, np.array(a))


def w_to_json(x: WElement) -> dict:
    return {"b": octonion_to_json(x.b), "c": octonion_to_json(x.c)}


def w_from_json(obj) -> WElement:
    try:
        return WElement.from_pair(octonion_from_json(obj["b"]), octonion_from_json(obj["c"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed W element: {exc}") from exc


def element_to_json(x) -> dict:
    return w_to_json(x) if isinstance(x, WElement) else albert_to_json(x)


def element_from_json(obj, system: str = None):
    """Decode an element; the system is inferred from the keys unless given."""
    if not isinstance(obj, dict):
        raise FormatError("an element is a JSON object")
    kind = "W" if "b" in obj else "V"
    if system is not None and system != kind:
        raise FormatError(f"expected a {system} element, got a {kind} element")
    return w_from_json(obj) if kind == "W" else albert_from_json(obj)


def signature_to_json(sig: Signature) -> dict:
    return sig.to_json()


def signature_from_json(obj) -> Signature:
    return Signature.from_json(obj)


def freudenthal_to_json(p: FreudenthalPoint) -> dict:
    return {
        "lambda": complex_to_json(p.lam),
        "x": albert_to_json(p.x),
        "y": albert_to_json(p.y),
        "mu": complex_to_json(p.mu),
    }


def freudenthal_from_json(obj) -> FreudenthalPoint:
    return FreudenthalPoint(
        complex_from_json(obj["lambda"]),
        albert_from_json(obj["x"]),
        albert_from_json(obj["y"]),
        complex_from_json(obj["mu"]),
    )


def dumps(obj) -> str:
    """Compact, key-ordered JSON; Python floats serialise via repr (17 significant digits at most)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_default)


def _default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, (complex, np.complexfloating)):
        return complex_to_json(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialise {type(o).__name__}")
