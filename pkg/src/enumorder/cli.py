"""Command-line front end.

Exit codes: 0 affirmative result, 1 negative result, 2 usage or input error.
JSON reports go to standard output (or ``--output``); diagnostics and
``--verbose`` summaries go to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumerator import dovetail_union, parse_program
from .errors import DuplicateValue, EnumOrderError
from .listing import parse_listing
from .tobst import export_dot, shape_encode, spine_kind, tobst_at
from .uniformity import classify_corpus, type2_search, uniform_prefix

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path):
    p = Path(path)
    if not p.is_file():
        raise InputError(f"{path}: no such file")
    return p.read_text(encoding="utf-8")


def _load_listing(path):
    try:
        return parse_listing(_read(path), name=Path(path).name)
    except DuplicateValue as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(args, msg):
    if args.verbose:
        print(msg, file=sys.stderr)


def cmd_uniform(args) -> int:
    h = _load_listing(args.file_a)
    g = _load_listing(args.file_b)
    verdict = uniform_prefix(h, g)
    report = {"file_a": h.name, "file_b": g.name, "verdict": verdict.to_json()}
    if args.type2:
        if args.min_overlap is None:
            raise InputError("--type2 requires --min-overlap")
        max_m = len(h) if args.max_m is None else args.max_m
        max_n = len(g) if args.max_n is None else args.max_n
        if min(max_m, max_n) < 0 or args.min_overlap < 1:
            raise InputError("--max-m/--max-n must be >= 0 and --min-overlap >= 1")
        witness = type2_search(h, g, max_m, max_n, args.min_overlap)
        report["type2"] = witness.to_json() if witness else None
        ok = witness is not None
    else:
        ok = verdict.uniform
    _emit(args, dump_json(report))
    _note(args, f"{h.name} vs {g.name}: {verdict.kind.value} on {verdict.compared_length} positions")
    return EXIT_YES if ok else EXIT_NO


def cmd_tobst(args) -> int:
    h = _load_listing(args.file)
    step = len(h) if args.step is None else args.step
    if not 0 <= step <= len(h):
        raise InputError(f"--step {step} outside 0..{len(h)} for {h.name}")
    t = tobst_at(h, step)
    if args.emit == "dot":
        text = export_dot(t)
    elif args.emit == "shape":
        text = shape_encode(t).encoding + "\n"
    else:
        text = dump_json({
            "file": h.name,
            "step": step,
            "size": t.size,
            "spine_kind": spine_kind(t).value,
            "shape": shape_encode(t).encoding,
        })
    _emit(args, text)
    return EXIT_YES


def cmd_classify(args) -> int:
    d = Path(args.dir)
    if not d.is_dir():
        raise InputError(f"{args.dir}: not a directory")
    files = sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))
    if not files:
        raise InputError(f"{args.dir}: no listing files")
    if args.prefix_len < 0:
        raise InputError("--prefix-len must be >= 0")
    listings = [_load_listing(p) for p in files]
    groups = classify_corpus(listings, args.prefix_len)
    _emit(args, dump_json(groups))
    _note(args, f"{len(listings)} listings in {len(groups)} groups at prefix {args.prefix_len}")
    return EXIT_YES


def cmd_enumerate(args) -> int:
    paths = [args.program] + list(args.dovetail or [])
    programs = [parse_program(_read(p), name=Path(p).stem) for p in paths]
    if args.steps < 0 or args.cap < 0 or args.slice < 1:
        raise InputError("--steps and --cap must be >= 0, --slice >= 1")
    run = dovetail_union(programs, args.slice, args.steps, args.cap)
    _emit(args, run.listing.to_text())
    if args.verbose:
        sys.stderr.write(dump_json(run.to_json()))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--output", metavar="PATH", help="write output here instead of stdout")
    shared.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="enumorder", description="Analyze enumeration orders of listings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("uniform", parents=[shared], help="compare two listings")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--type2", action="store_true", help="search prefix shifts")
    p.add_argument("--max-m", type=int, help="largest shift of the first listing (default: its length)")
    p.add_argument("--max-n", type=int, help="largest shift of the second listing (default: its length)")
    p.add_argument("--min-overlap", type=int)
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("tobst", parents=[shared], help="build and render a TOBST")
    p.add_argument("file")
    p.add_argument("--step", type=int)
    p.add_argument("--emit", choices=("dot", "shape", "report"), default="report")
    p.set_defaults(func=cmd_tobst)

    p = sub.add_parser("classify", parents=[shared], help="group listings by order pattern")
    p.add_argument("dir")
    p.add_argument("--prefix-len", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[shared], help="run counter-machine programs")
    p.add_argument("program")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--dovetail", nargs="+", metavar="FILE")
    p.add_argument("--slice", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args)
    except (InputError, EnumOrderError, OSError, UnicodeDecodeError) as exc:
        print(f"enumorder {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
