"""Command-line front end.

Exit status: 0 all certificates valid, 1 validation failure, 2 usage or parse
error, 3 size-cap refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coloring import Witness, certify, validate_certificate
from .errors import FormatError, HypothesisFailure, SizeCapExceeded
from .fuzz import fuzz_run
from .generate import MODELS, generate
from .io import emit_certificate, emit_instance, export_dot, parse_certificate, parse_instance
from .witness.extract import ExtractionStats
from .witness.subdivision import oracle_find_subdivision

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _k_list(text: str) -> list[int]:
    try:
        ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not ks or any(k < 1 for k in ks):
        raise argparse.ArgumentTypeError("k values must be positive")
    return ks


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def cmd_certify(args) -> int:
    D = parse_instance(_read(args.instance))
    stats = ExtractionStats()
    cert = certify(D, args.k, stats)
    ok, diag = validate_certificate(D, args.k, cert)
    sys.stdout.write(emit_certificate(cert))
    if args.dot:
        Path(args.dot).write_text(export_dot(D, cert))
    if stats.fallbacks:
        print(f"note: oracle fallback used {stats.fallbacks} time(s)", file=sys.stderr)
    if not ok:
        print(f"invalid certificate: {diag}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_oracle(args) -> int:
    D = parse_instance(_read(args.instance))
    w = oracle_find_subdivision(D, args.k)
    if w is None:
        print("NONE")
    else:
        sys.stdout.write(emit_certificate(Witness(w)))
    return EXIT_OK


def cmd_validate(args) -> int:
    D = parse_instance(_read(args.instance))
    cert = parse_certificate(_read(args.certificate))
    ok, diag = validate_certificate(D, args.k, cert)
    print("OK" if ok else f"INVALID: {diag}")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_gen(args) -> int:
    D = generate(args.model, args.n, args.seed, args.p)
    sys.stdout.write(emit_instance(D))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = fuzz_run(args.trials, args.n, args.k, args.seed)
    if args.out:
        for path in report.write(args.out, figure=not args.no_figure):
            print(f"wrote {path}", file=sys.stderr)
    print(report.summary())
    for r in report.failures:
        print(f"FAIL trial {r.index}: {r.diagnostic}")
    return EXIT_INVALID if report.failures else EXIT_OK


def cmd_export_dot(args) -> int:
    D = parse_instance(_read(args.instance))
    cert = parse_certificate(_read(args.certificate)) if args.certificate else None
    sys.stdout.write(export_dot(D, cert))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fourblocks",
                                 description="Certify 18k-colorings of C(k,1,1,1)-subdivision-free digraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="coloring, witness or no-root evidence for an instance")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--dot", help="also write a dot rendering here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="exhaustive subdivision search")
    p.add_argument("instance")
    p.add_argument("-k", type=_positive, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", help="check a certificate against an instance")
    p.add_argument("instance")
    p.add_argument("certificate")
    p.add_argument("-k", type=_positive, required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="random instance")
    p.add_argument("--model", choices=MODELS, default="tree-plus")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="seeded trials cross-checked against the oracle")
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--n", type=_positive, default=9, help="maximum vertex count")
    p.add_argument("-k", type=_k_list, default=[1, 2, 3], help="comma-separated k values")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for the CSV, figure and counterexamples")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("export-dot", help="dot rendering, optionally with a certificate")
    p.add_argument("instance")
    p.add_argument("--cert", dest="certificate")
    p.set_defaults(func=cmd_export_dot)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HypothesisFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
