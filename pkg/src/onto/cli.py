"""Command line for the ONTO format and its token benchmarks.

Exit codes: 0 success, 1 runtime or I/O failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .baselines import JSON_STYLES, to_json, to_yaml
from .bench import analyze, bench, bench_specs, crossover, prompt_pack, summarize
from .datagen import KINDS, DatasetSpec, generate
from .errors import MalformedRankFile, OntoError, ParseError
from .model import records_of
from .parser import loads
from .serializer import dumps_records
from .tokenizer import RANK_FILE_ENV, default_rank_file, load_model

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_INPUT = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _reject_constant(name: str):
    raise CliError(f"JSON constant {name} has no ONTO form")


def _load_json(text: str, source: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise CliError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _rank_model(args):
    path = args.rank_file or default_rank_file()
    if not path:
        raise CliError(f"no rank file: pass --rank-file or set {RANK_FILE_ENV}", EXIT_RUNTIME)
    return load_model(path)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("values must be positive integers")
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _kind_list(text: str) -> list[str]:
    kinds = [k.strip() for k in text.split(",") if k.strip()]
    bad = [k for k in kinds if k not in KINDS]
    if bad or not kinds:
        raise argparse.ArgumentTypeError(f"unknown dataset kind(s) {bad}; choose from {KINDS}")
    return kinds


# ------------------------------------------------------------------ commands

def cmd_convert(args) -> int:
    text = _read(args.input)
    if args.src == args.dst:
        raise CliError("--from and --to are the same format")
    if args.src == "json":
        data = _load_json(text, args.input)
        if not isinstance(data, list):
            raise CliError("JSON input must be an array of objects")
        _write(dumps_records(args.entity or "Data", data), args.output)
    else:
        doc = loads(text)
        if args.entity:
            payload = records_of(doc[args.entity])
        elif len(doc.entities) == 1:
            payload = records_of(doc.entities[0])
        else:
            payload = {e.name: records_of(e) for e in doc.entities}
        _write(to_json(payload, args.json_style, args.json_indent) + "\n", args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    status = EXIT_OK
    for path in args.inputs:
        try:
            doc = loads(_read(path))
        except ParseError as exc:
            print(f"{path}:{exc.line}:{exc.column}: {exc.kind}: {exc.message}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        summary = ", ".join(f"{e.name}[{e.count}]" for e in doc.entities) or "no entities"
        print(f"{path}: ok ({summary})")
    return status


def cmd_generate(args) -> int:
    spec = DatasetSpec(args.kind, args.records, args.seed)
    records = generate(spec)
    if args.format == "json":
        text = to_json(records, args.json_style, args.json_indent) + "\n"
    elif args.format == "yaml":
        text = to_yaml(records)
    else:
        text = dumps_records(spec.entity, records)
    _write(text, args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    rank_path = args.rank_file or default_rank_file()
    model = _rank_model(args)
    specs = bench_specs(args.kinds, args.scales, args.runs, args.seed)
    reports = bench(rank_path, specs, args.json_style, args.json_indent,
                    workers=args.workers, model=model)
    lines = "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in reports)
    _write(lines, args.output)
    print(summarize(reports), file=sys.stderr)
    return EXIT_OK


def cmd_crossover(args) -> int:
    model = _rank_model(args)
    rows, first = crossover(model, args.kind, args.seed, args.max_n, args.json_style,
                            args.json_indent)
    print(f"{'N':>4}{'JSON':>8}{'ONTO':>8}")
    for n, j, o in rows:
        print(f"{n:>4}{j:>8}{o:>8}")
    if first is None:
        print(f"no crossover up to N={args.max_n}")
    else:
        print(f"crossover: N={first}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    model = _rank_model(args)
    reports = analyze(model, DatasetSpec(args.kind, args.records, args.seed),
                      args.json_style, args.json_indent)
    if args.json:
        print(json.dumps({f: r.as_dict() for f, r in reports.items()}, sort_keys=True))
        return EXIT_OK
    cats = ("keys", "punctuation", "values", "structure_indent", "whitespace", "total")
    print(f"{'category':<18}" + "".join(f"{f.upper():>10}" for f in reports))
    for cat in cats:
        row = "".join(f"{r.as_dict()[cat]:>10}" for r in reports.values())
        print(f"{cat:<18}{row}")
    return EXIT_OK


def cmd_prompt_pack(args) -> int:
    spec = DatasetSpec(args.kind, args.records, args.seed)
    for path in prompt_pack(spec, args.out_dir, args.warm, args.json_style, args.json_indent):
        print(path)
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="onto", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"onto {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def json_opts(p):
        p.add_argument("--json-style", choices=JSON_STYLES, default="spaced",
                       help="JSON baseline layout (default spaced)")
        p.add_argument("--json-indent", type=int, default=2, metavar="W",
                       help="indent width for --json-style indented")

    def rank_opt(p):
        p.add_argument("--rank-file", help=f"cl100k_base rank file (default ${RANK_FILE_ENV})")

    def data_opts(p, records_default=1000):
        p.add_argument("--kind", choices=KINDS, default="iot", help="dataset (default iot)")
        p.add_argument("-n", "--records", type=int, default=records_default,
                       help=f"records to generate (default {records_default})")
        p.add_argument("--seed", type=int, default=1000, help="generator seed (default 1000)")

    p = sub.add_parser("convert", help="convert between JSON and ONTO")
    p.add_argument("input", help="input file, or - for stdin")
    p.add_argument("--from", dest="src", choices=("json", "onto"), required=True,
                   help="input format")
    p.add_argument("--to", dest="dst", choices=("json", "onto"), required=True,
                   help="output format")
    p.add_argument("--entity", help="entity to write (json->onto, default Data) or read (onto->json)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    json_opts(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("validate", help="parse ONTO files and report the first error in each")
    p.add_argument("inputs", nargs="+", help="ONTO files, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("generate", help="emit a synthetic dataset")
    data_opts(p)
    p.add_argument("--format", choices=("json", "yaml", "onto"), default="json",
                   help="output format (default json)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    json_opts(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="token counts per format (JSON-lines reports)")
    p.add_argument("--kinds", type=_kind_list, default=list(KINDS),
                   help="comma-separated datasets (default iot,metrics,logs)")
    p.add_argument("--scales", type=_int_list, default=[100, 500, 1000],
                   help="comma-separated record counts (default 100,500,1000)")
    p.add_argument("--runs", type=_positive_int, default=5, help="seeds per cell (default 5)")
    p.add_argument("--seed", type=int, default=1000, help="base seed; run r uses seed+r")
    p.add_argument("--workers", type=_positive_int, default=1, help="worker processes (default 1)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    rank_opt(p)
    json_opts(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("crossover", help="smallest N where ONTO beats JSON")
    p.add_argument("--kind", choices=KINDS, default="iot", help="dataset (default iot)")
    p.add_argument("--seed", type=int, default=1000, help="generator seed (default 1000)")
    p.add_argument("--max-n", type=_positive_int, default=10, help="largest N to try (default 10)")
    rank_opt(p)
    json_opts(p)
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("analyze", help="token composition by category")
    data_opts(p)
    p.add_argument("--json", action="store_true", help="print one JSON object instead of a table")
    rank_opt(p)
    json_opts(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("prompt-pack", help="write ready-to-send prompt files")
    data_opts(p)
    p.add_argument("--warm", action="store_true", help="prepend the format primer to the ONTO prompt")
    p.add_argument("--out-dir", default="prompts", help="directory for the files (default prompts)")
    json_opts(p)
    p.set_defaults(func=cmd_prompt_pack)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        source = getattr(args, "input", "<input>")
        print(f"{source}:{exc.line}:{exc.column}: {exc.kind}: {exc.message}", file=sys.stderr)
        return EXIT_INPUT
    except CliError as exc:
        print(f"onto: {exc}", file=sys.stderr)
        return exc.code
    except KeyError as exc:
        print(f"onto: no entity named {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MalformedRankFile, OntoError, ValueError) as exc:
        print(f"onto: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"onto: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
