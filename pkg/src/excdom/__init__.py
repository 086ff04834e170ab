"""Octonions, the exceptional Jordan triple systems H3(O) and W, and their bounded symmetric domains."""

__version__ = "0.1.0"

from .albert import AlbertElement, adjoint, cross, determinant, diag, e, hermitian_product, scalar_product
from .cayley import COMPLEX_OCTONIONS, CompositionElement, Signature, cd_multiply
from .compactify import FreudenthalPoint, RankOnePoint, dehomogenize, embed_V, embed_W, p_membership
from .domains import DomainVerdict, boundary_report, classify, classify_V, classify_W, project_to_stratum_frame
from .jts import d_operator, minimal_polynomial, q_apply, spectral_decompose, triple
from .linalg import TAU_ALG, TAU_CLS
from .tripotents import PeirceDecomposition, TripotentCertificate, classify_tripotent, peirce
from .type_v import WElement, classify_tripotent_W, peirce_W, triple_W

__all__ = [
    "AlbertElement",
    "COMPLEX_OCTONIONS",
    "CompositionElement",
    "DomainVerdict",
    "FreudenthalPoint",
    "PeirceDecomposition",
    "RankOnePoint",
    "Signature",
    "TAU_ALG",
    "TAU_CLS",
    "TripotentCertificate",
    "WElement",
    "adjoint",
    "boundary_report",
    "cd_multiply",
    "classify",
    "classify_V",
    "classify_W",
    "classify_tripotent",
    "classify_tripotent_W",
    "cross",
    "d_operator",
    "dehomogenize",
    "determinant",
    "diag",
    "e",
    "embed_V",
    "embed_W",
    "hermitian_product",
    "minimal_polynomial",
    "p_membership",
    "peirce",
    "peirce_W",
    "project_to_stratum_frame",
    "q_apply",
    "scalar_product",
    "spectral_decompose",
    "triple",
    "triple_W",
]
