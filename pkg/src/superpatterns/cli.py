"""Command-line interface.

Exit codes: 0 verified or passed, 1 counterexample, 2 search budget
exhausted, 64 usage error. ``--json`` switches every command to a single
JSON document on stdout.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import reporting
from .constructions import bounds, circular_from_linear, ev_linear_superpattern, zzc_permutation
from .perm import Permutation, format_line, parse_line, read_objects
from .plotting import save_image, text_grid
from .verify import (
    Budget,
    check_circular_construction,
    check_embedding_theorems,
    check_identities,
    check_zzc_claim,
    default_workers,
    min_superpattern_length,
    verify_circular_superpattern,
    verify_superpattern,
)
from .zigzag import break_ties, circular_score, score, shifted_score, zz

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, report, plain: str) -> None:
    if args.json:
        print(reporting.dumps(report))
    else:
        print(plain)


def _values(args) -> tuple[int, ...]:
    if getattr(args, "input", None):
        objects = read_objects(Path(args.input).read_text())
        if len(objects) != 1:
            raise UsageError(f"{args.input}: expected exactly one object, found {len(objects)}")
        return objects[0]
    if not args.values:
        raise UsageError("no sequence given (positional integers or --input)")
    return parse_line(" ".join(args.values))


def cmd_gen(args) -> int:
    word = zz(args.m, args.q)
    _emit(args, {"type": "word", "m": args.m, "q": args.q, "word": format_line(word)}, format_line(word))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.method == "ev":
        result = ev_linear_superpattern(args.k)
    elif args.method == "zzc":
        result = zzc_permutation(args.k)
    else:
        base = Permutation((1,)) if args.k == 2 else ev_linear_superpattern(args.k - 1).permutation
        result = circular_from_linear(base, args.k)
    lines = [
        f"method:      {result.method}",
        f"claimed k:   {result.claimed_k}",
        f"length:      {result.length}",
        f"permutation: {format_line(result.permutation)}",
    ]
    if result.source_word is not None:
        lines.append(f"word:        {format_line(result.source_word)}")
    if args.bounds:
        b = bounds(result.claimed_k)
        lines.append("bounds:      " + ", ".join(f"{k}={v}" for k, v in b.items() if k != "k"))
    doc = result.to_dict()
    if args.bounds:
        doc["bounds"] = bounds(result.claimed_k)
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_score(args) -> int:
    seq = _values(args)
    fn = {"linear": score, "circular": circular_score, "shifted": shifted_score}[args.kind]
    report = fn(seq)
    lines = [f"{args.kind} score of {format_line(seq)}"]
    if report.initial is not None:
        lines.append(f"  initial      {report.initial:+d}")
    lines += [f"  C({x},{y})".ljust(15) + f"{c:+d}" for x, y, c in report.steps]
    lines.append(f"  total        {report.total:+d}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    host = Permutation(_values(args))
    fn = verify_circular_superpattern if args.mode == "circular" else verify_superpattern
    report = fn(host, args.k, workers=args.workers, keep_witnesses=not args.no_witnesses)
    if report.verified:
        plain = (
            f"verified: {format_line(host)} is a {args.mode} {args.k}-superpattern "
            f"({report.total_classes or report.total_patterns} "
            f"{'classes' if args.mode == 'circular' else 'patterns'} checked)"
        )
    else:
        plain = "counterexample: " + "; ".join(format_line(p) for p in report.failures[:20])
        if len(report.failures) > 20:
            plain += f"; ... ({len(report.failures)} in total)"
    _emit(args, report, plain)
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLE


def cmd_search(args) -> int:
    budget = Budget.from_env(args.max_seconds, args.max_nodes)
    result = min_superpattern_length(args.k, args.mode, args.n_limit, budget, args.workers)
    lines = [f"n={n}: refuted ({count} candidates)" for n, count in result.lengths_refuted]
    if result.status == "found":
        lines.append(f"minimal length {result.minimal_length}: {format_line(result.example)}")
    elif result.status == "budget_exhausted":
        lines.append("budget exhausted; partial result")
    else:
        lines.append("no superpattern up to the length limit")
    _emit(args, result, "\n".join(lines))
    return {"found": EXIT_OK, "budget_exhausted": EXIT_BUDGET}.get(result.status, EXIT_COUNTEREXAMPLE)


def cmd_check(args) -> int:
    if args.suite == "identities":
        report = check_identities(args.k)
    elif args.suite == "embeddings":
        report = check_embedding_theorems(args.k)
    elif args.suite == "claim-zzc":
        report = check_zzc_claim(args.k, workers=args.workers)
    else:
        report = check_circular_construction(args.k, workers=args.workers)
    lines = []
    for name, fam in report.families.items():
        state = "ok" if not fam["violations"] else f"{len(fam['violations'])} violations"
        tag = "" if fam["asserted"] else " (reported only)"
        lines.append(f"{name:<34} {fam['checked']:>6} checked  {state}{tag}")
    verdict = report.to_dict()["verdict"]
    lines.append(f"{report.suite} k={report.k} [{report.kind}]: {verdict}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_plot(args) -> int:
    if args.zzc is not None:
        construction = zzc_permutation(args.zzc)
        word = tuple(construction.source_word)
    elif args.m is not None:
        word = tuple(zz(args.m, args.q))
    else:
        word = _values(args)
    labels = tuple(break_ties(word)) if args.ties else None
    highlight = parse_line(args.highlight) if args.highlight else ()
    if args.output and Path(args.output).suffix.lower() in {".png", ".svg", ".pdf"}:
        try:
            path = save_image(word, args.output, labels, highlight, title=format_line(word))
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
        print(path)
        return EXIT_OK
    grid = text_grid(word, labels, highlight)
    if args.output:
        try:
            Path(args.output).write_text(grid + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
        print(args.output)
    else:
        print(grid)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $SUPERPATTERNS_WORKERS or 1)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="superpatterns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="print the zigzag word zz(m, q)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", parents=[common], help="build a superpattern")
    p.add_argument("--method", choices=["ev", "zzc", "circ-from-linear"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bounds", action="store_true", help="also print the length bounds for k")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("score", parents=[common], help="score a sequence")
    p.add_argument("--kind", choices=["linear", "circular", "shifted"], default="linear")
    p.add_argument("--input", help="file holding one sequence")
    p.add_argument("values", nargs="*")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("verify", parents=[common], help="verify a superpattern")
    p.add_argument("--mode", choices=["linear", "circular"], default="linear")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", help="file holding one permutation")
    p.add_argument("--no-witnesses", action="store_true")
    p.add_argument("values", nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exhaustive minimal-length search")
    p.add_argument("--mode", choices=["linear", "circular"], default="circular")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-limit", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", parents=[common], help="run a theorem or claim suite")
    p.add_argument("--suite", choices=["identities", "embeddings", "claim-zzc", "circ-from-linear"],
                   required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plot", parents=[common], help="draw a word as a point cloud")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--m", type=int)
    src.add_argument("--zzc", type=int, metavar="K", help="plot the zzc(K) word")
    p.add_argument("--q", type=int)
    p.add_argument("--ties", action="store_true", help="label points with tie-broken ranks")
    p.add_argument("--highlight", help="1-based positions to mark, e.g. '2,3,4'")
    p.add_argument("--output", help=".png/.svg/.pdf for an image, anything else for text")
    p.add_argument("--input", help="file holding one word")
    p.add_argument("values", nargs="*")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers is None:
        args.workers = default_workers()
    if args.command == "plot" and args.m is not None and args.q is None:
        parser.error("plot --m needs --q")
    try:
        return args.func(args)
    except (UsageError, ValueError, FileNotFoundError) as exc:
        print(f"superpatterns: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
