"""Command-line entry points: align, encode, allocate, simulate.

Exit codes: 0 success, 1 usage or parse error, 2 domain error.
"""
from __future__ import annotations

import argparse
import sys

from .alignment import ScoringScheme, build_matrix, traceback
from .allocator import allocate
from .codec import ChannelSnapshot, encode_snapshot, parse_sequence
from .errors import PowerRangeError, ScenarioParseError, SequenceParseError, SpectralignError
from .simulator import emit_csv, emit_text, format_assignments, load_scenario, run

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_scoring(p: argparse.ArgumentParser) -> None:
    p.add_argument("--match", type=int, default=5)
    p.add_argument("--mismatch", type=int, default=-3)
    p.add_argument("--gap", type=int, default=-4)


def _scoring(args) -> ScoringScheme:
    return ScoringScheme(args.match, args.mismatch, args.gap)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectralign", description="Channel allocation for secondary users by global sequence alignment")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("align", help="align two nucleotide strings")
    p.add_argument("--seq1", required=True)
    p.add_argument("--seq2", required=True)
    _add_scoring(p)
    p.add_argument("--show-matrix", action="store_true")

    p = sub.add_parser("encode", help="map comma-separated powers to a nucleotide string")
    p.add_argument("--powers", required=True)

    p = sub.add_parser("allocate", help="assign PU channels to SUs")
    p.add_argument("--pu", required=True)
    p.add_argument("--su", required=True)
    _add_scoring(p)

    p = sub.add_parser("simulate", help="run a scenario file or bundled fixture")
    p.add_argument("--scenario", required=True, help="path, or paper_t123 / paper_scarcity")
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    return parser


def _cmd_align(args) -> None:
    matrix = build_matrix(parse_sequence(args.seq1), parse_sequence(args.seq2), _scoring(args))
    al = traceback(matrix)
    if args.show_matrix:
        print(matrix.render())
        print()
    print(al.render())
    print(f"score: {al.score}")


def _cmd_encode(args) -> None:
    print(encode_snapshot(ChannelSnapshot.from_csv(args.powers)))


def _cmd_allocate(args) -> None:
    result = allocate(parse_sequence(args.pu), parse_sequence(args.su), _scoring(args))
    print(f"idle channels: {', '.join(map(str, sorted(result.idle_set))) or 'none'}")
    print("\n".join(format_assignments(result.assignments)))
    print(f"{result.allocated_count} allocated, {result.waiting_count} waiting; score {result.score}")


def _cmd_simulate(args) -> None:
    records = run(load_scenario(args.scenario))
    out = emit_csv(records) if args.format == "csv" else emit_text(records)
    sys.stdout.write(out)


COMMANDS = {"align": _cmd_align, "encode": _cmd_encode, "allocate": _cmd_allocate, "simulate": _cmd_simulate}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ScenarioParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SequenceParseError, PowerRangeError, SpectralignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
