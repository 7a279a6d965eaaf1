"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 invariant or precondition
violation, 4 an exhaustive oracle disagreed with a computed result.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from typing import Optional

from .algebra import null_space, rank, same_row_span
from .bundle import Bundle, bundle_from_params, override, parse_bundle
from .codes import TGRS, LinearCode, grs_generator, tgrs_generator
from .distance import DistanceReport, classify_distance, grs_report
from .dual import DualWitness, dual_as_tgrs, dual_witness
from .errors import InvalidParams, ParseError, TgrsError, TooLarge
from .example import run_example
from .oracles import (
    COLUMN_TEST_LIMIT,
    guard_bits,
    inclusion_chain_check,
    mds_column_test,
    min_distance_bruteforce,
    weight_distribution,
    within_guard,
)
from .selfdual import LENGTH_NOT_TWICE_DIM, is_self_dual_direct, self_dual_build_char2, self_dual_check

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_ORACLE = 0, 2, 3, 4


class OracleMismatch(Exception):
    pass


class Output:
    """Collects one record per line (text) or key/value pairs (json)."""

    def __init__(self, fmt: str, bundle: Optional[Bundle] = None):
        self.fmt = fmt
        self.data: dict = {}
        if bundle is not None:
            self.data["bundle"] = bundle.to_json()
        self.lines: list[str] = []

    def put(self, key: str, value, text: Optional[str] = None) -> None:
        self.data[key] = value
        if text is None:
            text = json.dumps(value) if isinstance(value, (bool, type(None))) else str(value)
        self.lines.append(f"{key}: {text}")

    def line(self, text: str) -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.fmt == "json":
            print(json.dumps(self.data, indent=2))
        else:
            print("\n".join(self.lines))


def _fmt_list(field, xs) -> str:
    return "[" + ", ".join(field.format_element(x) for x in xs) + "]"


def _load(args) -> Bundle:
    bundle = None
    if args.bundle:
        try:
            text = sys.stdin.read() if args.bundle == "-" else open(args.bundle, encoding="ascii").read()
        except OSError as exc:
            raise ParseError(f"cannot read bundle: {exc}") from None
        bundle = parse_bundle(text)
    return override(bundle, args.field, args.D, args.k, args.l, args.eta, args.v)


def _oracle_distance(code: LinearCode) -> tuple[str, Optional[int]]:
    if within_guard(code.field.q, code.k):
        return "bruteforce", min_distance_bruteforce(code)
    if math.comb(code.n, code.k) <= COLUMN_TEST_LIMIT and code.provenance == TGRS:
        return "columns", code.n - code.k + 1 if mds_column_test(code) else code.n - code.k
    return "skipped", None


def _put_matrix(out: Output, key: str, M) -> None:
    out.data[key] = M.to_json()
    out.lines.append(f"{key}:")
    out.lines.extend(M.format().splitlines())


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    bundle = _load(args)
    code = bundle.code()
    out = Output(args.format, bundle)
    out.put("field", str(code.field))
    out.put("type", code.provenance)
    out.put("n", code.n)
    out.put("k", code.k)
    _put_matrix(out, "generator", code.G)
    if args.verify == "oracle":
        out.put("rank", rank(code.G))
        if bundle.is_twisted:
            out.put("inclusion_chain", inclusion_chain_check(bundle.params()))
    out.emit()
    return EXIT_OK


def _witness_out(out: Output, field, w: DualWitness) -> None:
    out.put("b", [field.element_json(x) for x in w.b], _fmt_list(field, w.b))
    out.put("b_const", field.element_json(w.b_const), field.format_element(w.b_const))
    out.put("f", [field.element_json(x) for x in w.f.coeffs], w.f.format())
    _put_matrix(out, "H", w.H)
    if w.boundary:
        out.put("warning", "k = n-1: parity-check matrix is the f-row alone")


def cmd_dual(args) -> int:
    bundle = _load(args)
    out = Output(args.format, bundle)
    if not bundle.is_twisted:
        D = bundle.evaluation_set()
        F = D.field
        code = bundle.code()
        w = tuple(F.div(ui, vi) for ui, vi in zip(D.u, bundle.scaling))
        H = grs_generator(D, D.n - code.k, w).G
        _put_matrix(out, "H", H)
        if args.verify == "oracle":
            out.put("span-match", same_row_span(H, null_space(code.G)))
        out.emit()
        return EXIT_OK
    params = bundle.params()
    F = params.field
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        w = dual_witness(params, allow_boundary=args.allow_boundary)
    _witness_out(out, F, w)
    if params.l == params.k - 1 and params.n - params.k >= 2:
        dual, _ = dual_as_tgrs(params)
        out.put("eta_dual", F.element_json(dual.eta), F.format_element(dual.eta))
        out.put("v_dual", [F.element_json(x) for x in dual.v], _fmt_list(F, dual.v))
        out.put("dual_bundle", bundle_from_params(dual).to_json(), bundle_from_params(dual).to_text().strip().replace("\n", "; "))
    if args.verify == "oracle":
        match = same_row_span(w.H, null_space(tgrs_generator(params).G))
        out.put("span-match", match)
        if not match:
            out.emit()
            raise OracleMismatch("parity-check span differs from the null space")
    out.emit()
    return EXIT_OK


def cmd_selfdual(args) -> int:
    bundle = _load(args)
    if args.mode == "build":
        if not args.char2:
            raise ParseError("selfdual build requires --char2")
        params = self_dual_build_char2(bundle.evaluation_set())
        built = bundle_from_params(params)
        if args.out:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(built.to_text())
        if args.format == "json":
            out = Output("json", built)
            out.put("holds", self_dual_check(params).holds)
            out.emit()
        else:
            sys.stdout.write(built.to_text())
        return EXIT_OK

    params = bundle.params()
    F = params.field
    if params.n != 2 * params.k:
        raise InvalidParams(f"{LENGTH_NOT_TWICE_DIM}: self-duality needs n = 2k, got n={params.n}, k={params.k}")
    cert = self_dual_check(params)
    out = Output(args.format, bundle)
    out.put("holds", cert.holds)
    out.put("lambda", None if cert.lam is None else F.element_json(cert.lam),
            "none" if cert.lam is None else F.format_element(cert.lam))
    out.put("eta_sq_required", F.element_json(cert.eta_sq_required), F.format_element(cert.eta_sq_required))
    out.put("eta_sq", F.element_json(F.mul(params.eta, params.eta)), F.format_element(F.mul(params.eta, params.eta)))
    out.put("failure_reason", cert.failure_reason, cert.failure_reason or "none")
    out.put("complete", cert.complete)
    if args.verify == "oracle":
        direct = is_self_dual_direct(params)
        out.put("oracle_self_dual", direct)
        if direct != cert.holds:
            out.emit()
            raise OracleMismatch("G G^T oracle disagrees with the certificate")
    out.emit()
    return EXIT_OK


def _report_out(out: Output, D, r: DistanceReport) -> None:
    F = D.field
    out.put("n", r.n)
    out.put("k", r.k)
    out.put("d", r.d)
    out.put("class", r.cls)
    js = r.to_json(D)
    for key, pos in (("witness", r.witness), ("dual_witness", r.dual_witness)):
        text = "none" if pos is None else _fmt_list(F, [D.points[i] for i in pos])
        out.put(key, js[key], text)
        out.data[key + "_positions"] = js[key + "_positions"]


def cmd_classify(args) -> int:
    bundle = _load(args)
    code = bundle.code()
    D = bundle.evaluation_set()
    out = Output(args.format, bundle)
    report = classify_distance(bundle.params()) if bundle.is_twisted else grs_report(code.n, code.k)
    _report_out(out, D, report)
    if args.verify == "oracle":
        kind, d = _oracle_distance(code)
        out.put("oracle", kind)
        if d is not None:
            out.put("oracle_d", d)
            if d != report.d:
                out.emit()
                raise OracleMismatch(f"brute-force distance {d} != classified distance {report.d}")
    out.emit()
    return EXIT_OK


def cmd_mindist(args) -> int:
    bundle = _load(args)
    code = bundle.code()
    out = Output(args.format, bundle)
    out.put("n", code.n)
    out.put("k", code.k)
    out.put("d", min_distance_bruteforce(code))
    out.emit()
    return EXIT_OK


def cmd_weights(args) -> int:
    bundle = _load(args)
    code = bundle.code()
    out = Output(args.format, bundle)
    A = weight_distribution(code)
    out.put("weights", A, " ".join(map(str, A)))
    out.put("total", sum(A))
    out.emit()
    return EXIT_OK


def cmd_example(args) -> int:
    r = run_example(args.q, oracle=args.verify != "none")
    F, P = r.field, r.params
    out = Output(args.format, bundle_from_params(P))
    out.put("q", r.q)
    out.put("field", str(F))
    out.put("l", P.l)
    out.put("eta", F.element_json(P.eta), F.format_element(P.eta))
    out.put("power_sums_equal", r.power_sums_equal)
    out.put("self_dual", r.certificate.holds)
    out.put("self_orthogonal", r.self_orthogonal)
    _report_out(out, P.D, r.report)
    out.put("expected_class", r.expected_class)
    if r.exponent_witness is not None:
        out.put("exponent_witness", list(r.exponent_witness), " ".join(map(str, r.exponent_witness)))
        out.put("exponent_sum", sum(r.exponent_witness) % (r.q - 1))
        out.put("exponent_sum_ok", r.exponent_sum_ok)
        out.put("exponent_witness_valid", r.exponent_witness_valid)
    out.put("oracle", r.oracle)
    if r.oracle_d is not None:
        out.put("oracle_d", r.oracle_d)
    out.put("verdict_ok", r.ok)
    out.emit()
    if r.oracle_d is not None and r.oracle_d != r.report.d:
        raise OracleMismatch(f"oracle distance {r.oracle_d} != {r.report.d}")
    if not r.ok:
        return EXIT_INVARIANT
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

GLOBAL_DEFAULTS = {"format": "text", "verify": "none", "allow_boundary": False, "seed": None}


def _common() -> argparse.ArgumentParser:
    # defaults are filled in after parsing so the flags work on either side
    # of the subcommand
    d = argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default=d)
    p.add_argument("--verify", choices=("none", "oracle"), default=d)
    p.add_argument("--allow-boundary", action="store_true", default=d)
    p.add_argument("--seed", type=int, default=d, help="seed for randomized test generation")
    return p


def _bundle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("bundle", nargs="?", help="bundle file ('-' for stdin)")
    p.add_argument("--field", help="field spec, e.g. 'GF(2^3; modulus=1,1,0,1)'")
    p.add_argument("--D", help="evaluation set, comma separated, or 'all'")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--eta")
    p.add_argument("--v")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tgrs", description="Twisted generalized Reed-Solomon codes",
                                     parents=[_common()])
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    for name, func, hlp in (
        ("construct", cmd_construct, "print the generator matrix"),
        ("dual", cmd_dual, "explicit parity-check matrix"),
        ("classify", cmd_classify, "MDS / almost-MDS / near-MDS classification"),
        ("mindist", cmd_mindist, "brute-force minimum distance"),
        ("weights", cmd_weights, "brute-force weight distribution"),
    ):
        p = sub.add_parser(name, help=hlp, parents=[common])
        _bundle_args(p)
        p.set_defaults(func=func)
    p = sub.add_parser("selfdual", help="self-duality check or char-2 synthesis", parents=[common])
    modes = p.add_subparsers(dest="mode", required=True)
    p = modes.add_parser("check", help="test the self-duality conditions", parents=[common])
    _bundle_args(p)
    p.set_defaults(func=cmd_selfdual, char2=False, out=None)
    p = modes.add_parser("build", help="synthesize a self-dual code", parents=[common])
    _bundle_args(p)
    p.add_argument("--char2", action="store_true", help="characteristic-2 synthesis (the only method)")
    p.add_argument("--out", help="write the synthesized bundle here")
    p.set_defaults(func=cmd_selfdual)
    p = sub.add_parser("example", help="D = F_q^* inside GF(q^2)", parents=[common])
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, val in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except TooLarge as exc:
        print(f"error: {exc} (guard 2^{guard_bits()})", file=sys.stderr)
        return EXIT_INVARIANT
    except TgrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
