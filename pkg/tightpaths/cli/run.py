"""Algorithm runners: `paths`, `pairs`, `tighten`, `mine` and `antecedents`."""
import argparse
import sys
from pathlib import Path

from tightpaths.cli.common import (
    ExitCode,
    common_options,
    emit,
    load_edge_weighted,
    load_vertex_weighted,
    positive_int,
    threshold_options,
    thresholds,
)
from tightpaths.closure import (
    TransactionalDataset,
    basic_antecedents,
    mine_closures,
    parse_transactions,
    render_antecedents,
    render_lattice,
    to_log_weighted_dag,
)
from tightpaths.correspondence import Correspondence
from tightpaths.exceptions import GraphParseError, LatticeError, UnknownVertexError
from tightpaths.graph.io import read_lines, render_edge_list, render_vertex_weighted
from tightpaths.models import TightPairSet
from tightpaths.tighten import tight_pairs_via_tightening
from tightpaths.tightpair import (
    PAIR_ALGORITHMS,
    ROOT_VARIANTS,
    TIGHTEN,
    WEIGHTS,
    get_tight_pairs_algorithm,
    render_pairs,
    sort_pairs,
)
from tightpaths.tightpath import all_tight_paths, render_paths, tight_paths_from_root

EMIT_VWG = "vwg"
EMIT_LATTICE = "lattice"


def _section(gamma: float, text: str, several: bool) -> str:
    return f"# gamma={gamma:.10g}\n{text}" if several else text


def paths_command(args: argparse.Namespace) -> int:
    if args.convert:
        emit(render_edge_list(load_edge_weighted(args.graph)), args.out)
        return ExitCode.SUCCESS
    graph = load_edge_weighted(args.graph)
    gammas = thresholds(args)
    output = []
    for gamma in gammas:
        if args.root is None:
            found = all_tight_paths(graph, gamma, tolerance=args.tolerance)
        else:
            found = tight_paths_from_root(
                graph, args.root, gamma, tolerance=args.tolerance
            )
        output.append(_section(gamma, render_paths(found), len(gammas) > 1))
    emit("".join(output), args.out)
    return ExitCode.SUCCESS


def pairs_command(args: argparse.Namespace) -> int:
    dag = load_vertex_weighted(args.graph)
    if args.root is not None and args.root not in dag:
        raise UnknownVertexError(args.root)
    gammas = thresholds(args)
    output = []
    for gamma in gammas:
        if args.root is not None and args.algo in ROOT_VARIANTS:
            found = ROOT_VARIANTS[args.algo](
                dag, args.root, gamma, tolerance=args.tolerance
            )
        else:
            found = get_tight_pairs_algorithm(args.algo)(
                dag, gamma, tolerance=args.tolerance
            )
            if args.root is not None:
                found = TightPairSet(pair for pair in found if pair[0] == args.root)
        text = render_pairs(sort_pairs(dag, found))
        output.append(_section(gamma, text, len(gammas) > 1))
    emit("".join(output), args.out)
    return ExitCode.SUCCESS


def tighten_command(args: argparse.Namespace) -> int:
    dag = load_vertex_weighted(args.graph)
    gammas = thresholds(args)

    def trace(phase: str, relation: Correspondence) -> None:
        sys.stderr.write(f"## phase {phase}: {relation.size()} pairs\n")
        sys.stderr.write(relation.render())

    output = []
    for gamma in gammas:
        found = tight_pairs_via_tightening(
            dag,
            gamma,
            tolerance=args.tolerance,
            trace=trace if args.debug else None,
        )
        text = render_pairs(sort_pairs(dag, found))
        output.append(_section(gamma, text, len(gammas) > 1))
    emit("".join(output), args.out)
    return ExitCode.SUCCESS


def _read_dataset(path: Path) -> TransactionalDataset:
    try:
        lines = read_lines(path)
    except GraphParseError as e:
        raise LatticeError(str(e))
    return parse_transactions(lines)


def mine_command(args: argparse.Namespace) -> int:
    lattice = mine_closures(_read_dataset(args.dataset), args.minsupp)
    if args.emit == EMIT_LATTICE:
        emit(render_lattice(lattice), args.out)
    else:
        dag = to_log_weighted_dag(lattice, contract=args.contract)
        emit(render_vertex_weighted(dag), args.out)
    return ExitCode.SUCCESS


def antecedents_command(args: argparse.Namespace) -> int:
    lattice = mine_closures(_read_dataset(args.dataset), args.minsupp)
    pairs = basic_antecedents(lattice, args.conf)
    emit(render_antecedents(lattice, pairs), args.out)
    return ExitCode.SUCCESS


def add_run_parsers(subparsers) -> None:
    common, threshold = common_options(), threshold_options()

    paths = subparsers.add_parser(
        "paths",
        parents=[common, threshold],
        help="Tight paths of an edge-weighted graph.",
    )
    paths.add_argument("graph", type=Path, help=".elist or .vwg file")
    paths.add_argument("--root", help="Only paths starting at this vertex.")
    paths.add_argument(
        "--convert",
        action="store_true",
        help="Print the graph as an edge list instead of searching it.",
    )
    paths.set_defaults(func=paths_command)

    pairs = subparsers.add_parser(
        "pairs",
        parents=[common, threshold],
        help="Tight pairs of a vertex-weighted acyclic graph.",
    )
    pairs.add_argument("graph", type=Path, help=".vwg file")
    pairs.add_argument("--algo", choices=PAIR_ALGORITHMS, default=WEIGHTS)
    pairs.add_argument("--root", help="Only pairs starting at this vertex.")
    pairs.set_defaults(func=pairs_command)

    tighten = subparsers.add_parser(
        TIGHTEN,
        parents=[common, threshold],
        help="Tight pairs by correspondence tightening.",
    )
    tighten.add_argument("graph", type=Path, help=".vwg file")
    tighten.add_argument(
        "--debug",
        action="store_true",
        help="Print the relation after each phase to stderr.",
    )
    tighten.set_defaults(func=tighten_command)

    mine = subparsers.add_parser(
        "mine", parents=[common], help="Closed item sets of a transaction file."
    )
    mine.add_argument("dataset", type=Path, help=".td file")
    mine.add_argument("--minsupp", type=positive_int, default=1)
    mine.add_argument("--emit", choices=(EMIT_VWG, EMIT_LATTICE), default=EMIT_VWG)
    mine.add_argument(
        "--contract",
        action="store_true",
        help="Merge closed sets joined by an equal-support cover.",
    )
    mine.set_defaults(func=mine_command)

    antecedents = subparsers.add_parser(
        "antecedents",
        parents=[common],
        help="Basic antecedents of a transaction file.",
    )
    antecedents.add_argument("dataset", type=Path, help=".td file")
    antecedents.add_argument("--conf", required=True, help="Confidence in (0, 1].")
    antecedents.add_argument("--minsupp", type=positive_int, default=1)
    antecedents.set_defaults(func=antecedents_command)
