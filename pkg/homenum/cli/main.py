import argparse
import logging
import sys
from typing import List

from enforce_typing import enforce_types

from homenum.cli import commands
from homenum.util.constants import (
    CAND_BENCH_MODES,
    CAND_FAMILIES,
    EXIT_NOT_HOM,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SEQUENCE,
    EXIT_SIZE_GUARD,
    EXIT_USAGE,
    EXIT_WIDTH,
)
from homenum.util.env import log_level
from homenum.util.errors import (
    InvalidSequenceError,
    NotAHomomorphismError,
    SizeGuardError,
    StructureError,
    WidthExceededError,
)

HELP = """Homomorphism enumeration.

Usage: homenum COMMAND ARGS

  decide A B [--k K | --td FILE]      is there a homomorphism A -> B? yes/no
  solve A B [--k K | --td FILE]       the least homomorphism, or no
  enum A B (--endoseq FILE [--k K] | --kcore K | --tw K) [--limit L]
                                      every homomorphism, one per line
  cqe A B --project Y1,Y2.. [--k K | --td FILE] [--limit L]
                                      distinct restrictions to Y, one per line
  kcore A --k K                       the k-core, then its retraction chain
                                      in sequence file format
  gen FAMILY N [--pad]                a family member, in structure format
  oracle A B [--project Y1,..]        brute force; small inputs only
  bench --family F --n N --target B [--mode M] [--k K] [--limit L]
                                      delay report of enum, as JSON
  sweep --family F --ns N1,N2.. --target B [--mode M] [--k K] [--limit L]
        [--csv FILE]                  bench over sizes, with log-log slopes
  help                                this message

  enum, bench and sweep also take --ppss FILE; flags override its sections.
  Families: {families}

Exit status: 0 ok (including 'no'), 1 usage, 2 parse, 3 width exceeded,
4 invalid sequence, 5 size guard, 6 not a homomorphism.
Envvars: HOMENUM_LOGLEVEL, HOMENUM_DEBUG, HOMENUM_ORACLE_MAX_MAPS,
HOMENUM_TW_MAX_EXACT.
""".format(
    families=", ".join(CAND_FAMILIES)
)

# most specific first
EXIT_CODES = [
    (StructureError, EXIT_PARSE),
    (WidthExceededError, EXIT_WIDTH),
    (InvalidSequenceError, EXIT_SEQUENCE),
    (SizeGuardError, EXIT_SIZE_GUARD),
    (NotAHomomorphismError, EXIT_NOT_HOM),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting, so bad flags share run()'s exit path"""

    def error(self, message):
        raise UsageError(message)


@enforce_types
def do_help():
    print(HELP)
    sys.exit()


def _add_width_flags(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, default=None, help="width bound")
    group.add_argument("--td", default=None, help="tree decomposition file")


def _add_bench_flags(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=CAND_FAMILIES, default=None)
    p.add_argument("--target", default=None, help="target structure file")
    p.add_argument("--mode", choices=CAND_BENCH_MODES, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--ppss", default=None, help="yaml with a bench_ss section")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homenum", add_help=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    for name, func in [("decide", commands.do_decide), ("solve", commands.do_solve)]:
        p = sub.add_parser(name)
        p.add_argument("source")
        p.add_argument("target")
        _add_width_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("enum")
    p.add_argument("source")
    p.add_argument("target")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--endoseq", default=None, help="sequence file")
    mode.add_argument("--kcore", type=int, default=None, metavar="K")
    mode.add_argument("--tw", type=int, default=None, metavar="K")
    p.add_argument("--k", type=int, default=None, help="width of the --endoseq file")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--ppss", default=None, help="yaml with an enum_ss section")
    p.add_argument("--report", action="store_true", help="delay report on stderr")
    p.set_defaults(func=commands.do_enum)

    p = sub.add_parser("cqe")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--project", required=True)
    _add_width_flags(p)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=commands.do_cqe)

    p = sub.add_parser("kcore")
    p.add_argument("source")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=commands.do_kcore)

    p = sub.add_parser("gen")
    p.add_argument("family", choices=CAND_FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--pad", action="store_true", help="add |A| isolated elements")
    p.set_defaults(func=commands.do_gen)

    p = sub.add_parser("oracle")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--project", default=None)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=commands.do_oracle)

    p = sub.add_parser("bench")
    p.add_argument("--n", type=int, default=None)
    _add_bench_flags(p)
    p.set_defaults(func=commands.do_bench)

    p = sub.add_parser("sweep")
    p.add_argument("--ns", default=None, help="comma-separated sizes")
    p.add_argument("--csv", default=None, help="write the table here")
    _add_bench_flags(p)
    p.set_defaults(func=commands.do_sweep)

    return parser


def error_exit_code(e: Exception) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(e, cls):
            return code
    return EXIT_USAGE


def run(argv: List[str]) -> int:
    """Run one command line (without the program name); return the exit status"""
    if not argv or argv[0] in ["help", "-h", "--help"]:
        print(HELP)
        return EXIT_OK
    try:
        logging.basicConfig(
            stream=sys.stderr,
            level=log_level(),
            format="%(asctime)s %(name)s %(levelname)s: %(message)s",
        )
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given")
        return args.func(args)
    except (UsageError, OSError, ValueError) as e:
        print(f"error: {e.__class__.__name__}: {e}", file=sys.stderr, flush=True)
        return error_exit_code(e)


def do_main():
    if len(sys.argv) <= 1:
        do_help()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    do_main()
