"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
The last line on standard output is always ``RESULT: ...``, except for
``gen`` without ``--out``, whose standard output is the graph document
itself.  Diagnostics and timings go to standard error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import kernels
from .classify import classify_hamiltonian, classify_triangles, is_balanced
from .core import MAX_WIDTH, SignParseError, ms_from_text
from .gen import GenSpec, SpaceTooLargeError, generate
from .io import ParseError, read_graph, serialize_graph
from .oracle import (
    HAMILTONIAN_CAP,
    EnumerationCapError,
    enumerate_hamiltonian,
    exhaustive_agreement,
    verdict_matches,
)
from .props import run_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        print("RESULT: ERROR")
        sys.exit(EXIT_USAGE)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str, cap: int | None = None):
    try:
        graph = read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if cap is not None and graph.n > cap:
        raise UsageError(
            f"{path}: n={graph.n} exceeds the enumeration cap {cap}; use 'classify' instead"
        )
    return graph


def _oracle_verdict(survey) -> str:
    if len(survey.distinct_multisigns) == 1:
        (g,) = survey.distinct_multisigns
        return f"ALL_SAME {g}"
    return "MIXED"


def cmd_classify(args) -> int:
    graph = _load(args.file)
    tri = classify_triangles(graph)
    ham = classify_hamiltonian(graph)
    bal = is_balanced(graph)
    print(f"graph: n={graph.n} m={graph.m}")
    print(f"triangles: {tri.kind.value}" + (f" {tri.value}" if tri.value is not None else ""))
    if tri.witness is not None:
        for t, g in tri.witness:
            print(f"  witness triangle {t[0]} {t[1]} {t[2]}: {g}")
    print(f"hamiltonian: {ham} (basis {ham.basis.value})")
    if bal:
        print("balanced: yes")
    else:
        a, b, c = bal.certificate
        print(f"balanced: no (certificate triangle {a} {b} {c})")
    verdict = str(ham)
    print(f"RESULT: {verdict}")
    if args.expect is not None and args.expect.split() != verdict.split():
        _err(f"expected {args.expect!r}, got {verdict!r}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph = _load(args.file, HAMILTONIAN_CAP)
    started = time.perf_counter()
    survey = enumerate_hamiltonian(graph)
    _err(f"enumeration took {time.perf_counter() - started:.3f}s ({kernels.BACKEND} kernels)")
    print(f"graph: n={graph.n} m={graph.m}")
    print(f"hamiltonian cycles: {survey.total}")
    for g, count in sorted(survey.counts.items()):
        print(f"  {g} {count}")
    print(f"RESULT: {len(survey.distinct_multisigns)} distinct")
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = _load(args.file, HAMILTONIAN_CAP)
    verdict = classify_hamiltonian(graph)
    survey = enumerate_hamiltonian(graph)
    ok = verdict_matches(verdict, survey)
    print(f"graph: n={graph.n} m={graph.m}")
    print(f"theorem: {verdict} (basis {verdict.basis.value})")
    print(
        f"oracle: {_oracle_verdict(survey)} "
        f"({len(survey.distinct_multisigns)} distinct over {survey.total} cycles)"
    )
    print(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen(args) -> int:
    model = args.model
    if args.sign is not None and model != "constant":
        raise UsageError("--sign is only valid with --model constant")
    if args.p is not None and model != "random":
        raise UsageError("--p is only valid with --model random")
    if args.seed is not None and model == "constant":
        raise UsageError("--seed is not used by --model constant")
    sign = None
    if model == "constant":
        if args.sign is None:
            raise UsageError("--model constant requires --sign")
        try:
            sign = ms_from_text(args.sign)
        except SignParseError as exc:
            raise UsageError(f"--sign: {exc}") from exc
    m = args.m if args.m is not None else (sign.width if sign is not None else 1)
    if sign is not None and sign.width != m:
        raise UsageError(f"--sign has width {sign.width} but --m is {m}")
    try:
        spec = GenSpec(
            args.n,
            m,
            model=model,
            sign=sign,
            seed=args.seed if args.seed is not None else 0,
            neg_prob=args.p if args.p is not None else 0.5,
        )
        graph = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = serialize_graph(graph)
    if args.out is None:
        sys.stdout.write(doc)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc)
    print(f"wrote {args.out} (n={graph.n} m={graph.m} model={model})")
    print("RESULT: PASS")
    return EXIT_OK


def cmd_exhaust(args) -> int:
    try:
        report = exhaustive_agreement(args.n, args.m, workers=args.workers)
    except SpaceTooLargeError as exc:
        raise UsageError(f"space too large: {exc}") from exc
    except (EnumerationCapError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _err(f"elapsed {report.elapsed:.3f}s ({kernels.BACKEND} kernels)")
    print(f"space: {report.describe()}")
    print(f"instances: {report.instances}")
    print(f"mismatches: {len(report.mismatches)}")
    for k, doc in enumerate(report.mismatches):
        path = Path.cwd() / f"counterexample-n{args.n}-m{args.m}-{k:04d}.msgraph"
        path.write_text(doc, encoding="utf-8")
        print(f"  counterexample written to {path.name}")
    print(f"RESULT: {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_props(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.nmax < 4:
        raise UsageError("--nmax must be >= 4")
    if not 1 <= args.mmax <= MAX_WIDTH:
        raise UsageError(f"--mmax must be in [1, {MAX_WIDTH}]")
    started = time.perf_counter()
    results = run_all(args.trials, args.seed, args.nmax, args.mmax)
    _err(f"elapsed {time.perf_counter() - started:.3f}s ({kernels.BACKEND} kernels)")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name}: {status} ({r.trials} trials, {r.failures} failures)")
        if r.first_failure is not None:
            _err(f"first {r.name} failure:\n{r.first_failure}")
    ok = all(r.passed for r in results)
    print(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify Hamiltonian multisigns via triangles")
    p.add_argument("file")
    p.add_argument("--expect", help="expected verdict, e.g. 'MIXED' or 'ALL_SAME -+'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", help="enumerate all Hamiltonian cycles")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare classification against enumeration")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph document")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--model", choices=("constant", "random", "planted-mixed"), default="random")
    p.add_argument("--sign")
    p.add_argument("--seed", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exhaust", help="check every graph of a small space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_exhaust)

    p = sub.add_parser("props", help="run the randomized property suites")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--mmax", type=int, default=8)
    p.set_defaults(func=cmd_props)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(f"msgraph {args.command}: {exc}")
        print("RESULT: ERROR")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
