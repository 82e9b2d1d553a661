"""
Subcommand bodies. Each do_* takes the parsed argparse namespace and
returns an exit status; errors propagate to main.run(), which maps them.

stdout carries results only, one solution per line, flushed per line.
A run with no solutions prints "no"; a solution on an empty domain
prints "yes".
"""
import logging
import sys
from typing import Iterable, List, Optional, Tuple

from homenum.cli.bench import run_bench, run_sweep, sweep_slopes
from homenum.cli.bench_ss import BenchSS, bench_ss_from_dict
from homenum.cli.delay import measure_delay
from homenum.cli.enum_ss import EnumSS, enum_ss_from_dict, iter_homs
from homenum.cli.ppss import merged_section
from homenum.cqe.cqe_enum import CqeInstance, iter_cqe
from homenum.endoseq.seqio import serialize_sequence
from homenum.extension.ext_query import full_query
from homenum.extension.ext_solver import ExtensionSolver
from homenum.extension.hom_ext import first_extension, homomorphism_ext
from homenum.kcore.retraction import k_core, sequence_from_retractions
from homenum.oracle.brute import brute_projections, iter_brute_homs
from homenum.structures.assignment import PartialAssignment, from_index_dict
from homenum.structures.families import generate_family, independent_padding
from homenum.structures.structio import (
    format_assignment,
    read_structure_file,
    serialize_structure,
)
from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.treewidth.decompose import treewidth
from homenum.treewidth.tree_decomp import (
    TreeDecomposition,
    parse_decomposition,
    sort_bags,
    validate,
)
from homenum.util.errors import StructureError
from homenum.util.strutil import read_utf8_file, split_csv_arg

logger = logging.getLogger(__name__)


def emit(line: str):
    print(line, flush=True)


def emit_solution(f: PartialAssignment, order: Iterable[str]):
    emit(format_assignment(f, list(order)) or "yes")


def echo_config(label: str, ss):
    """Human-readable strategy params, on stderr so stdout stays parseable"""
    print(f"{label}={ss}", file=sys.stderr, flush=True)


def read_pair(args) -> Tuple[Structure, Structure]:
    A = read_structure_file(args.source)
    B = read_structure_file(args.target)
    check_same_vocabulary(A, B)
    return A, B


def load_td(A: Structure, path: str) -> Tuple[int, TreeDecomposition]:
    """Width of a decomposition file for A, and the decomposition itself with
    bags in universe order, relabelled to element indices"""
    d = parse_decomposition(read_utf8_file(path))
    if not validate(A, d):
        raise StructureError(f"{path} is not a tree decomposition of {A.name}")
    return max(d.width, 0), sort_bags(d, A.universe).relabel(A.index)


def width_and_td(A: Structure, args) -> Tuple[int, Optional[TreeDecomposition]]:
    """--td wins, then --k, then the exact tree width of A"""
    if args.td is not None:
        return load_td(A, args.td)
    if args.k is not None:
        return args.k, None
    k = max(treewidth(A), 0)
    logger.info("no width given; tw(%s) = %d", A.name, k)
    return k, None


def do_decide(args) -> int:
    A, B = read_pair(args)
    k, td = width_and_td(A, args)
    if td is None:
        verdict = homomorphism_ext(full_query(A, B), k)
    else:
        verdict = ExtensionSolver(A, B, range(len(A))).decide({}, k, td)
    emit("yes" if verdict else "no")
    return 0


def do_solve(args) -> int:
    A, B = read_pair(args)
    k, td = width_and_td(A, args)
    if td is None:
        found = first_extension(full_query(A, B), k)
    else:
        g = ExtensionSolver(A, B, range(len(A))).first({}, k, td)
        found = None if g is None else from_index_dict(g, A, B)
    if found is None:
        emit("no")
    else:
        emit_solution(found, A.universe)
    return 0


def enum_ss_of(args) -> EnumSS:
    """EnumSS from --ppss's enum_ss section, overridden by the mode flags"""
    overrides: dict = {"limit": args.limit}
    if args.endoseq is not None:
        overrides.update({"mode": "endoseq", "endoseq": args.endoseq, "k": args.k})
    elif args.kcore is not None:
        overrides.update({"mode": "kcore", "k": args.kcore})
    elif args.tw is not None:
        overrides.update({"mode": "tw", "k": args.tw})
    d = merged_section(args.ppss, "enum_ss", overrides)
    if "mode" not in d:
        raise ValueError("pick a mode: --endoseq FILE, --kcore K or --tw K")
    if d["mode"] != "endoseq":
        d.pop("endoseq", None)
    return enum_ss_from_dict(d)


def do_enum(args) -> int:
    A, B = read_pair(args)
    ss = enum_ss_of(args)
    echo_config("enum_ss", ss)
    report = measure_delay(
        iter_homs(A, B, ss),
        sink=lambda h: emit_solution(h, A.universe),
        limit=ss.limit,
    )
    if report.count == 0:
        emit("no")
    if args.report:
        print(report.to_json(), file=sys.stderr, flush=True)
    return 0


def do_cqe(args) -> int:
    A, B = read_pair(args)
    inst = CqeInstance(A, B, split_csv_arg(args.project))
    k, td = width_and_td(A, args)
    count = 0
    for answer in iter_cqe(inst, k, td=td):
        emit_solution(answer, inst.projection)
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    if count == 0:
        emit("no")
    return 0


def do_kcore(args) -> int:
    A = read_structure_file(args.source)
    core, steps = k_core(A, args.k)
    for line in serialize_structure(core).splitlines():
        emit(f"# {line}")
    seq = sequence_from_retractions(A, steps, args.k)
    print(serialize_sequence(seq), end="", flush=True)
    return 0


def do_gen(args) -> int:
    A = generate_family(args.family, args.n)
    if args.pad:
        A = independent_padding(A)
    print(serialize_structure(A), end="", flush=True)
    return 0


def do_oracle(args) -> int:
    A, B = read_pair(args)
    if args.project is None:
        order: List[str] = list(A.universe)
        answers: Iterable[PartialAssignment] = iter_brute_homs(A, B)
    else:
        order = split_csv_arg(args.project)
        CqeInstance(A, B, order)  # same checks as cqe
        pos = {b: i for i, b in enumerate(B.universe)}
        answers = sorted(
            brute_projections(A, B, order),
            key=lambda f: tuple(pos[f[y]] for y in order),
        )
    count = 0
    for answer in answers:
        emit_solution(answer, order)
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    if count == 0:
        emit("no")
    return 0


def bench_ss_of(args, ns: Optional[List[int]]) -> BenchSS:
    overrides = {
        "family": args.family,
        "ns": ns,
        "target": args.target,
        "mode": args.mode,
        "k": args.k,
        "limit": args.limit,
        "csv": getattr(args, "csv", None),
    }
    d = merged_section(args.ppss, "bench_ss", overrides)
    missing = [key for key in ["family", "ns", "target"] if key not in d]
    if missing:
        raise ValueError(f"bench needs {missing}, from flags or --ppss")
    return bench_ss_from_dict(d)


def do_bench(args) -> int:
    ss = bench_ss_of(args, None if args.n is None else [args.n])
    echo_config("bench_ss", ss)
    for n in ss.ns:
        emit(run_bench(ss, n).to_json())
    return 0


def do_sweep(args) -> int:
    ns = None if args.ns is None else [int(n) for n in split_csv_arg(args.ns)]
    ss = bench_ss_of(args, ns)
    echo_config("bench_ss", ss)
    df = run_sweep(ss)
    emit(df.to_string(index=False))
    if df.shape[0] >= 2:
        slopes = sweep_slopes(df)
        emit(
            f"loglog slope: first_ms={slopes['first_ms']:.2f} "
            f"max_gap_ms={slopes['max_gap_ms']:.2f}"
        )
    return 0
