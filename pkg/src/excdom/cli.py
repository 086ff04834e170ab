"""Command line: excdom {gen, eval, classify, peirce, embed, verify}.

Element streams are JSON lines; reports are one JSON document per input
element. ``classify`` exits 0 for interior, 1 for boundary, 2 for exterior
points (the largest code over the stream); errors exit with 3 or more.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .albert import AlbertElement, adjoint, determinant
from .compactify import embed_V, embed_W, membership_residuals
from .domains import boundary_report, classify
from .jts import minimal_polynomial, rank
from .linalg import TAU_ALG, TAU_CLS
from .sampling import rng_from_seed, sample_albert, sample_w
from .serialize import (
    FormatError,
    albert_to_json,
    complex_to_json,
    dumps,
    element_from_json,
    element_to_json,
    freudenthal_to_json,
)
from .tripotents import CorruptedInvariants, NotATripotent, classify_tripotent, peirce
from .type_v import WElement, classify_tripotent_W, embed, minimal_polynomial_W, peirce_W, sharp_W, spectral_values_W
from .verify import all_ok, report_to_json, run_all

EXIT_CODES = {"interior": 0, "boundary": 1, "exterior": 2}
EXIT_ERROR = 3
EXIT_INPUT = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_ERROR):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # usage errors must not collide with the "exterior" exit code 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("EXCDOM_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise CliError(f"EXCDOM_SEED must be an integer, got {env!r}")


def _read_elements(args):
    if args.inp in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.inp) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.inp}: {exc}", EXIT_INPUT)
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CliError(f"parse error at line {lineno}, column {exc.colno}: {exc.msg}", EXIT_INPUT)
        try:
            out.append(element_from_json(obj, getattr(args, "system", None)))
        except (FormatError, ValueError) as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_INPUT)
    return out


class _Output:
    def __init__(self, path):
        self.path = path
        self.lines = []

    def write(self, obj):
        self.lines.append(dumps(obj))

    def flush(self):
        text = "".join(line + "\n" for line in self.lines)
        if self.path in (None, "-"):
            sys.stdout.write(text)
            return
        try:
            with open(self.path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {self.path}: {exc}", EXIT_INPUT)


def _cplx_list(values):
    return [complex_to_json(v) for v in values]


# -- commands ----------------------------------------------------------------------


def cmd_gen(args, out):
    rng = rng_from_seed(_seed(args))
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    sampler = sample_w if args.system == "W" else sample_albert
    for x in sampler(rng, args.n, args.target_norm):
        out.write(element_to_json(x))
    return 0


def eval_report(x) -> dict:
    if isinstance(x, WElement):
        mp = minimal_polynomial_W(x, x)
        vals = spectral_values_W(x)
        return {
            "adjoint": albert_to_json(sharp_W(x)),
            "det": complex_to_json(0.0),
            "minpoly": _cplx_list(mp.coefficients()),
            "roots": _cplx_list(mp.roots()),
            "rank": int(sum(v * v > TAU_CLS * (1 + vals[0] ** 2) for v in vals)),
        }
    mp = minimal_polynomial(x, x)
    return {
        "adjoint": albert_to_json(adjoint(x)),
        "det": complex_to_json(determinant(x)),
        "minpoly": _cplx_list(mp.coefficients()),
        "roots": _cplx_list(mp.roots()),
        "rank": rank(x),
    }


def cmd_eval(args, out):
    for x in _read_elements(args):
        out.write(eval_report(x))
    return 0


def cmd_classify(args, out):
    code = 0
    for x in _read_elements(args):
        v = classify(x, args.tol_cls)
        out.write(v.to_json())
        code = max(code, EXIT_CODES[v.location])
    return code


def cmd_peirce(args, out):
    for x in _read_elements(args):
        try:
            if isinstance(x, WElement):
                cert = classify_tripotent_W(x, args.tol_cls)
                dec = peirce_W(x, args.tol_cls)
            else:
                cert = classify_tripotent(x, args.tol_cls)
                dec = peirce(x, args.tol_cls)
        except (NotATripotent, CorruptedInvariants) as exc:
            raise CliError(f"not a tripotent: {exc}")
        rep = boundary_report(x, args.tol_cls)
        out.write(
            {
                "rank": cert.rank,
                "invariants": list(cert.invariants),
                "tripotent_residual": cert.residual,
                "dims": list(dec.dims),
                "projector_residuals": dec.residuals(),
                "geometry": rep,
            }
        )
    return 0


def cmd_embed(args, out):
    for x in _read_elements(args):
        if isinstance(x, WElement):
            p = embed_W(x)
            out.write({"z": albert_to_json(p.z), "residual": p.residual()})
        else:
            p = embed_V(x)
            doc = freudenthal_to_json(p)
            doc["residuals"] = membership_residuals(p, relative=True)
            out.write(doc)
    return 0


def cmd_verify(args, out):
    rng = rng_from_seed(_seed(args))
    report = run_all(rng, args.n, args.tol_alg, args.tol_cls, perturb=args.perturb)
    ok = all_ok(report)
    out.write({"ok": ok, "n": max(args.n, 1), "suites": report_to_json(report)})
    return 0 if ok else 1


COMMANDS = {
    "gen": cmd_gen,
    "eval": cmd_eval,
    "classify": cmd_classify,
    "peirce": cmd_peirce,
    "embed": cmd_embed,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed (falls back to $EXCDOM_SEED, then 0)")
    common.add_argument("--n", type=int, default=None, help="number of samples")
    common.add_argument("--system", choices=["V", "W"], default=None, help="H3(O) (V, dim 27) or F2+F3 (W, dim 16)")
    common.add_argument("--tol-alg", type=float, default=TAU_ALG)
    common.add_argument("--tol-cls", type=float, default=TAU_CLS)
    common.add_argument("--target-norm", type=float, default=None, help="rescale samples to this spectral norm")
    common.add_argument("--in", dest="inp", default=None, help="input file of JSON lines (default stdin)")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    parser = _Parser(prog="excdom", description="Exceptional Jordan triple systems and their symmetric domains.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("gen", parents=[common], help="sample random elements")
    sub.add_parser("eval", parents=[common], help="adjoint, determinant, minimal polynomial, rank")
    sub.add_parser("classify", parents=[common], help="interior / boundary stratum / exterior")
    sub.add_parser("peirce", parents=[common], help="Peirce decomposition of a tripotent")
    sub.add_parser("embed", parents=[common], help="embed into the projective compactification")
    v = sub.add_parser("verify", parents=[common], help="run the identity suites")
    v.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.n is None:
        args.n = 100 if args.command == "verify" else 1
    out = _Output(args.out)
    try:
        code = COMMANDS[args.command](args, out)
        out.flush()
    except CliError as exc:
        print(f"excdom: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, ArithmeticError) as exc:
        print(f"excdom: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
