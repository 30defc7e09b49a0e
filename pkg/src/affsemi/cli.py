"""Command-line front end.

    affsemi analyze --gens "3,1;0,4;2,2" [--format json|text]
    affsemi check gr-gorenstein --gens "0,2;2,1;0,3;1,2"
    affsemi batch --input semigroups.txt

``--input PATH`` (``-`` for stdin) can replace ``--gens`` everywhere. Exit
codes: 0 success / property holds, 1 property fails, 2 input error or property
not applicable, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import DimensionMismatch, ParseError, SemigroupError
from .invariants import (
    DEFAULT_HILBERT_CAP,
    analyze,
    gr_is_cohen_macaulay,
    gr_is_gorenstein,
    is_cohen_macaulay,
    is_gorenstein,
)
from .lattice import Vector
from .reduction import has_monomial_reduction, is_minimal_multiplicity
from .report import to_json, to_text
from .semigroup import build

EXIT_OK, EXIT_FALSE, EXIT_ERROR, EXIT_USAGE = 0, 1, 2, 64

PROPERTIES = {
    "monomial-reduction": has_monomial_reduction,
    "cm": is_cohen_macaulay,
    "gorenstein": is_gorenstein,
    "gr-cm": gr_is_cohen_macaulay,
    "gr-gorenstein": gr_is_gorenstein,
    "homogeneous": lambda S: S.is_homogeneous(),
    "minimal-multiplicity": is_minimal_multiplicity,
}

_INT = re.compile(r"\s*([+-]?\d+)\s*")


@dataclass
class CliConfig:
    command: str
    gens_inline: Optional[str] = None
    input_path: Optional[str] = None
    output_format: str = "json"
    check_property: Optional[str] = None
    hilbert_cap: int = DEFAULT_HILBERT_CAP


def _vectors_from_json(doc) -> List[Vector]:
    if isinstance(doc, dict):
        if "generators" not in doc:
            raise ParseError('JSON object needs a "generators" key', 0)
        doc = doc["generators"]
    if not isinstance(doc, list) or not doc:
        raise ParseError("expected a non-empty list of generators", 0)
    out = []
    for i, g in enumerate(doc):
        if not isinstance(g, list) or not g or not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            raise ParseError(f"generator #{i} is not a list of integers: {g!r}", 0)
        out.append(tuple(g))
    return out


def parse_generators(text: str) -> List[Vector]:
    """Parse ``"c1,c2;c1,c2;..."`` or a JSON document ``{"generators": [[...], ...]}``.

    >>> parse_generators("3,1; 0,4; 2,2")
    [(3, 1), (0, 4), (2, 2)]
    """
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        vectors = _vectors_from_json(doc)
    else:
        vectors = []
        pos = 0
        segments = text.split(";")
        if segments and not segments[-1].strip() and len(segments) > 1:
            segments = segments[:-1]  # tolerate one trailing semicolon
        for seg in segments:
            coords = []
            cpos = pos
            for piece in seg.split(","):
                m = _INT.fullmatch(piece)
                if not m:
                    raise ParseError(f"expected an integer, got {piece.strip()!r}", cpos)
                coords.append(int(m.group(1)))
                cpos += len(piece) + 1
            vectors.append(tuple(coords))
            pos += len(seg) + 1
    d = len(vectors[0])
    for v in vectors:
        if len(v) != d:
            raise DimensionMismatch(f"generator {v} has {len(v)} coordinates, expected {d}")
    return vectors


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="affsemi", description="Invariants of simplicial affine semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_source(p):
        p.add_argument("--gens", dest="gens_inline", help='generators, e.g. "3,1;0,4;2,2"')
        p.add_argument("--input", dest="input_path", help="file with generators ('-' for stdin)")
        p.add_argument("--hilbert-cap", type=int, default=DEFAULT_HILBERT_CAP,
                       help="largest n for the Hilbert-Samuel estimate (default %(default)s)")

    p = sub.add_parser("analyze", help="print the full report")
    add_source(p)
    p.add_argument("--format", dest="output_format", choices=["json", "text"], default="json")

    p = sub.add_parser("check", help="exit 0/1 according to one property")
    p.add_argument("check_property", choices=sorted(PROPERTIES))
    add_source(p)

    p = sub.add_parser("batch", help="one JSON report per input line")
    add_source(p)
    return parser


def _read_source(config: CliConfig, stdin) -> str:
    if config.input_path == "-":
        return stdin.read()
    with open(config.input_path, encoding="utf-8") as fh:
        return fh.read()


def _batch_records(text: str):
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        for item in items:
            yield item, (lambda item=item: _vectors_from_json(item))
    else:
        for line in text.splitlines():
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line.strip(), (lambda line=line: parse_generators(line))


def _error_record(exc: Exception) -> dict:
    return {"type": type(exc).__name__, "message": str(exc)}


def run(config: CliConfig, stdout=None, stderr=None, stdin=None) -> int:
    """Execute a parsed command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin

    if config.command == "batch":
        if config.input_path is None and config.gens_inline is None:
            print("affsemi: error: batch needs --input or --gens", file=stderr)
            return EXIT_USAGE
        try:
            text = config.gens_inline if config.input_path is None else _read_source(config, stdin)
            records = list(_batch_records(text))
        except (OSError, SemigroupError) as exc:
            print(f"affsemi: {exc}", file=stderr)
            return EXIT_ERROR
        for source, parse in records:
            try:
                data = analyze(build(parse()), hilbert_cap=config.hilbert_cap).to_dict()
            except SemigroupError as exc:
                data = {"input": source, "error": _error_record(exc)}
            stdout.write(json.dumps(data, ensure_ascii=False) + "\n")
        return EXIT_OK

    if (config.gens_inline is None) == (config.input_path is None):
        print("affsemi: error: give exactly one of --gens or --input", file=stderr)
        return EXIT_USAGE
    try:
        text = config.gens_inline if config.gens_inline is not None else _read_source(config, stdin)
        S = build(parse_generators(text))
        if config.command == "check":
            holds = PROPERTIES[config.check_property](S)
            word = "holds" if holds else "does not hold"
            print(f"{config.check_property} {word} for {S!r}", file=stderr)
            return EXIT_OK if holds else EXIT_FALSE
        data = analyze(S, hilbert_cap=config.hilbert_cap).to_dict()
    except (OSError, SemigroupError) as exc:
        print(f"affsemi: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ERROR
    stdout.write(to_text(data) if config.output_format == "text" else to_json(data) + "\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    config = CliConfig(
        command=args.command,
        gens_inline=args.gens_inline,
        input_path=args.input_path,
        output_format=getattr(args, "output_format", "json"),
        check_property=getattr(args, "check_property", None),
        hilbert_cap=args.hilbert_cap,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
