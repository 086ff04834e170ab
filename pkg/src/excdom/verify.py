"""Identity suites: every algebraic identity as a max-residual check over random samples.

Each suite returns a dict family -> Check(residual, tol). Residuals are
relative: the absolute residual divided by (1 + max operand norm) raised to
the degree of the identity, except where noted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cayley
from .albert import DIM, AlbertElement, _cross, _det, _herm, _scalar, _sharp, adjoint_identity_residuals
from .cayley import COMPLEX_MODELS, REAL_MODELS, Signature, left_mult_operator, omul
from .cayley import conj as oconj_arr
from .compactify import embed_V, embed_W, membership_residuals, p_membership
from .jts import _triple, bergman_operator, d_operator, jordan_axiom_residuals
from .linalg import TAU_ALG, TAU_CLS, det_dense
from .type_v import (
    WDIM,
    WElement,
    _herm_w,
    _sharp_w,
    _triple_w,
    bergman_operator_W,
    d_operator_W,
    kernel_split,
)


@dataclass(frozen=True)
class Check:
    residual: float
    tol: float

    @property
    def ok(self) -> bool:
        return bool(self.residual < self.tol)


def _rel(abs_res, operands, degree):
    scale = 1.0 + np.max([np.linalg.norm(o, axis=-1) for o in operands], axis=0)
    return float(np.max(abs_res / scale ** degree))


def _sample(rng, sig: Signature, n: int):
    shape = (n, sig.dim)
    if sig.field == "C":
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return rng.standard_normal(shape)


# -- composition algebras -----------------------------------------------------------


def composition_suite(sig: Signature, rng, n: int, tol: float = TAU_ALG, perturb: float = 0.0) -> dict:
    """Identities of a composition algebra (multiplicativity through Moufang)."""
    table = cayley.structure_constants(sig.mu)
    if perturb:
        table = table + perturb * rng.standard_normal(table.shape)
    w = cayley.norm_weights(sig.mu)
    m = lambda p, q: np.einsum("...i,...j,ijk->...k", p, q, table)  # noqa: E731
    nrm = lambda p: np.sum(w * p * p, axis=-1)  # noqa: E731
    bil = lambda p, q: 2.0 * np.sum(w * p * q, axis=-1)  # noqa: E731
    tr = lambda p: 2.0 * p[..., 0]  # noqa: E731
    cj = cayley.conj
    one = cayley.unit(sig)

    a, b, c, d = (_sample(rng, sig, n) for _ in range(4))
    ab = m(a, b)
    ta, tb = cj(a), cj(b)
    col = lambda s: s[..., None]  # noqa: E731
    fam = {}

    def add(name, res, ops, deg):
        fam[name] = Check(_rel(np.abs(res) if np.ndim(res) == 1 else np.linalg.norm(res, axis=-1), ops, deg), tol)

    add("n(ab)=n(a)n(b)", nrm(ab) - nrm(a) * nrm(b), (a, b), 4)
    add("(ac:ad)=n(a)(c:d)", bil(m(a, c), m(a, d)) - nrm(a) * bil(c, d), (a, c, d), 4)
    add("(ac:bc)=(a:b)n(c)", bil(m(a, c), m(b, c)) - bil(a, b) * nrm(c), (a, b, c), 4)
    add(
        "(ac:bd)+(ad:bc)=(a:b)(c:d)",
        bil(m(a, c), m(b, d)) + bil(m(a, d), m(b, c)) - bil(a, b) * bil(c, d),
        (a, b, c, d),
        4,
    )
    add("a^2-t(a)a+n(a)=0", m(a, a) - col(tr(a)) * a + col(nrm(a)) * one, (a,), 2)
    add("~~a=a", cj(ta) - a, (a,), 1)
    add("n(~a)=n(a)", nrm(ta) - nrm(a), (a,), 2)
    add("a~a=~aa=n(a)", np.concatenate([m(a, ta) - col(nrm(a)) * one, m(ta, a) - col(nrm(a)) * one], axis=-1), (a,), 2)
    add("(a:b)=(~a:~b)", bil(a, b) - bil(ta, tb), (a, b), 2)
    add("(ax:y)=(x:~ay)", bil(m(a, c), d) - bil(c, m(ta, d)), (a, c, d), 3)
    add("(xa:y)=(x:y~a)", bil(m(c, a), d) - bil(c, m(d, ta)), (a, c, d), 3)
    add("t(ab)=t(ba)", tr(ab) - tr(m(b, a)), (a, b), 2)
    add("t((ab)c)=t(a(bc))", tr(m(ab, c)) - tr(m(a, m(b, c))), (a, b, c), 3)
    add("(ab)~=~b~a", cj(ab) - m(tb, ta), (a, b), 2)
    add("(a:b)c=~b(ac)+~a(bc)", col(bil(a, b)) * c - m(tb, m(a, c)) - m(ta, m(b, c)), (a, b, c), 3)
    add("(a:b)c=(ca)~b+(cb)~a", col(bil(a, b)) * c - m(m(c, a), tb) - m(m(c, b), ta), (a, b, c), 3)
    add(
        "n(a)c=~a(ac)=(ca)~a",
        np.concatenate([col(nrm(a)) * c - m(ta, m(a, c)), col(nrm(a)) * c - m(m(c, a), ta)], axis=-1),
        (a, c),
        3,
    )
    add(
        "a^2c=a(ac),(ca)a=ca^2",
        np.concatenate([m(m(a, a), c) - m(a, m(a, c)), m(m(c, a), a) - m(c, m(a, a))], axis=-1),
        (a, c),
        3,
    )
    add("a(ba)=(ab)a", m(a, m(b, a)) - m(ab, a), (a, b), 3)
    add("~a(ba)=(~ab)a", m(ta, m(b, a)) - m(m(ta, b), a), (a, b), 3)
    x, y = c, d
    axa = m(a, m(x, a))
    aya = m(a, m(y, a))
    add("a(x(ay))=(axa)y", m(a, m(x, m(a, y))) - m(axa, y), (a, x, y), 4)
    add("((xa)y)a=x(aya)", m(m(m(x, a), y), a) - m(x, aya), (a, x, y), 4)
    add("(ax)(ya)=a(xy)a", m(m(a, x), m(y, a)) - m(m(a, m(x, y)), a), (a, x, y), 4)
    return fam


def all_models():
    return REAL_MODELS + COMPLEX_MODELS


def _model_name(sig: Signature) -> str:
    return f"{sig.field}{tuple(int(v) for v in sig.mu)}"


def composition_suites(rng, n: int, tol: float = TAU_ALG, perturb: float = 0.0) -> dict:
    return {_model_name(s): composition_suite(s, rng, n, tol, perturb) for s in all_models()}


def alternativity_suite(rng, n: int, tol: float = TAU_ALG) -> dict:
    """[x,~x,y] and [x,x,y] vanish on levels <= 3; level 4 shows a violation > 0.1."""
    out = {}
    for sig in COMPLEX_MODELS + REAL_MODELS:
        x, y = _sample(rng, sig, n), _sample(rng, sig, n)
        r1 = np.linalg.norm(cayley.associator_arr(sig, x, cayley.conj(x), y), axis=-1)
        r2 = np.linalg.norm(cayley.associator_arr(sig, x, x, y), axis=-1)
        out[f"alternative {_model_name(sig)}"] = Check(_rel(np.maximum(r1, r2), (x, y), 3), tol)
    sig16 = Signature("R", (-1.0, -1.0, -1.0, -1.0))
    _, _, res = cayley.alternativity_witness(sig16, rng)
    # a violation certificate: the check passes when the residual is large
    out["level-4 violation"] = Check(-res, -0.1)
    return out


# -- H3(O) ---------------------------------------------------------------------------


def _albert_batch(rng, n, scale=1.0):
    return scale * (rng.standard_normal((n, DIM)) + 1j * rng.standard_normal((n, DIM)))


def albert_suite(rng, n: int, tol: float = TAU_ALG) -> dict:
    a, b, c = (_albert_batch(rng, n) for _ in range(3))
    out = {k: Check(v, tol) for k, v in adjoint_identity_residuals(a, b, c, relative=True).items()}
    t = lambda p, q, r: _scalar(_cross(p, q), r)  # noqa: E731
    tabc = t(a, b, c)
    sym = np.max([np.abs(tabc - t(*perm)) for perm in ((b, c, a), (c, a, b), (b, a, c), (a, c, b), (c, b, a))], axis=0)
    out["T symmetric"] = Check(_rel(sym, (a, b, c), 3), tol)
    d = _det(a)
    out["det=T(a,a,a)/6=(a#:a)/3"] = Check(
        _rel(np.abs(d - t(a, a, a) / 6) + np.abs(d - _scalar(_sharp(a), a) / 3), (a,), 3), tol
    )
    out["a x a=2a#"] = Check(_rel(np.linalg.norm(_cross(a, a) - 2 * _sharp(a), axis=-1), (a,), 2), tol)
    return out


def jts_suite(rng, n: int, n_det: int = 5, tol: float = TAU_ALG, det_tol: float = 1e-6) -> dict:
    x, y, z = (_albert_batch(rng, n) for _ in range(3))
    out = {k: Check(v, tol) for k, v in jordan_axiom_residuals(x, y, z, relative=True).items()}
    tr = []
    for i in range(min(n, 50)):
        tr.append(abs(np.trace(d_operator(x[i], y[i])) - 18 * _herm(x[i], y[i])) / (1 + max(np.linalg.norm(x[i]), np.linalg.norm(y[i]))) ** 2)
    out["Tr D=18(x|y)"] = Check(max(tr), tol)
    out["Det B=N^18"] = Check(det_bergman_residual_V(rng, n_det), det_tol)
    return out


def generic_norm_V(x, y) -> complex:
    sx, sy = _sharp(x), _sharp(y)
    return 1 - _herm(x, y) + _herm(sx, sy) - _det(x) * np.conj(_det(y))


def det_bergman_residual_V(rng, n: int, radius: float = 0.5) -> float:
    worst = 0.0
    for _ in range(n):
        x, y = (_ball(rng, DIM, radius) for _ in range(2))
        lhs = det_dense(bergman_operator(x, y))
        rhs = generic_norm_V(x, y) ** 18
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst


def _ball(rng, dim, radius):
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v * (radius * rng.uniform(0.2, 1.0) / np.linalg.norm(v))


# -- W --------------------------------------------------------------------------------


def w_suite(rng, n: int, n_det: int = 5, tol: float = TAU_ALG, det_tol: float = 1e-6) -> dict:
    sh = (n, WDIM)
    g = lambda: rng.standard_normal(sh) + 1j * rng.standard_normal(sh)  # noqa: E731
    x, y, z = g(), g(), g()
    emb = lambda v: np.concatenate([np.zeros(v.shape[:-1] + (11,)), v], axis=-1)  # noqa: E731
    amb = _triple(emb(x), emb(y), emb(z))
    out = {
        "closed form = ambient": Check(
            _rel(np.linalg.norm(_triple_w(x, y, z) - amb[..., 11:], axis=-1), (x, y, z), 3), tol
        ),
        "closure in W": Check(_rel(np.linalg.norm(amb[..., :11], axis=-1), (x, y, z), 3), tol),
        "x# in V0(e1), det=0": Check(
            _rel(np.linalg.norm(_sharp_w(x) - _sharp(emb(x)), axis=-1) + np.abs(_det(emb(x))), (x,), 3), tol
        ),
    }
    tr = []
    for i in range(min(n, 50)):
        tr.append(abs(np.trace(d_operator_W(x[i], y[i])) - 12 * _herm_w(x[i], y[i])) / (1 + max(np.linalg.norm(x[i]), np.linalg.norm(y[i]))) ** 2)
    out["Tr D=12(x|y)"] = Check(max(tr), tol)
    worst = 0.0
    for _ in range(n_det):
        a, b = _ball(rng, WDIM, 0.5), _ball(rng, WDIM, 0.5)
        lhs = det_dense(bergman_operator_W(a, b))
        rhs = (1 - _herm_w(a, b) + _herm(_sharp_w(a), _sharp_w(b))) ** 12
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    out["Det B=N^12"] = Check(worst, det_tol)
    return out


def kernel_suite(rng, n: int, tol: float = TAU_ALG) -> dict:
    """ker L(beta) + ker L(bar beta) = O, each of dimension 4, and x = ~b(b'x) + ~b'(bx)."""
    dims, recon, annihil = 0, 0.0, 0.0
    for _ in range(n):
        beta = cayley.random_null_unit_octonion(rng)
        kb, kbb = kernel_split(beta)
        dims = max(dims, abs(kb.shape[1] - 4) + abs(kbb.shape[1] - 4) + abs(np.linalg.matrix_rank(np.hstack([kb, kbb])) - 8))
        x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        bb = np.conj(beta)
        r = oconj_arr(beta)
        rec = omul(r, omul(bb, x)) + omul(oconj_arr(bb), omul(beta, x))
        recon = max(recon, float(np.linalg.norm(rec - x)) / (1 + np.linalg.norm(x)))
        annihil = max(annihil, float(np.linalg.norm(left_mult_operator(beta) @ kb)))
        annihil = max(annihil, float(np.linalg.norm(omul(beta, omul(r, x)))) / (1 + np.linalg.norm(x)))
    return {
        "dim ker = 4": Check(float(dims), 0.5),
        "x=~b(b'x)+~b'(bx)": Check(recon, tol),
        "beta ker L(beta) = 0": Check(annihil, tol),
    }


def compactify_suite(rng, n: int, tol: float = TAU_ALG, chart_tol: float = TAU_CLS) -> dict:
    m_res, z_res, trip = 0.0, 0.0, 0.0
    for _ in range(n):
        x = AlbertElement(rng.standard_normal(DIM) + 1j * rng.standard_normal(DIM))
        m_res = max(m_res, max(membership_residuals(embed_V(x), relative=True).values()))
        w = WElement(rng.standard_normal(WDIM) + 1j * rng.standard_normal(WDIM))
        p = embed_W(w)
        z_res = max(z_res, p.residual() / (1 + p.z.norm()) ** 2)
        back = p_membership(p).element
        trip = max(trip, float(np.linalg.norm(back.v - w.v)) / (1 + w.norm()))
    return {
        "M membership": Check(m_res, tol),
        "z#=0": Check(z_res, tol),
        "W round trip": Check(trip, chart_tol),
    }


# -- driver ----------------------------------------------------------------------------


def run_all(rng, n: int = 100, tol_alg: float = TAU_ALG, tol_cls: float = TAU_CLS, perturb: float = 0.0) -> dict:
    """All suites; ``perturb`` corrupts the multiplication tables (negative control)."""
    n = max(int(n), 1)
    report = {}
    for name, fam in composition_suites(rng, n, tol_alg, perturb).items():
        report[f"composition {name}"] = fam
    report["alternativity"] = alternativity_suite(rng, n, tol_alg)
    report["albert"] = albert_suite(rng, n, tol_alg)
    report["jts"] = jts_suite(rng, n, min(n, 3), tol_alg)
    report["W"] = w_suite(rng, n, min(n, 3), tol_alg)
    report["kernel"] = kernel_suite(rng, min(n, 100), tol_alg)
    report["compactify"] = compactify_suite(rng, min(n, 100), tol_alg, tol_cls)
    return report


def report_to_json(report: dict) -> dict:
    return {
        suite: {fam: {"residual": c.residual, "tol": c.tol, "ok": c.ok} for fam, c in fams.items()}
        for suite, fams in report.items()
    }


def all_ok(report: dict) -> bool:
    return all(c.ok for fams in report.values() for c in fams.values())
