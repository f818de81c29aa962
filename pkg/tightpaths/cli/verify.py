"""Differential checks of every applicable algorithm against the brute-force oracle."""
import argparse
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Set, Tuple

from pydantic import BaseModel

from tightpaths.cli.common import (
    ExitCode,
    common_options,
    emit,
    positive_int,
    threshold_options,
    thresholds,
)
from tightpaths.exceptions import PathCapExceeded
from tightpaths.graph.base import VertexWeightedDag
from tightpaths.graph.io import Graph, load_graph
from tightpaths.oracle import oracle_tight_pairs, oracle_tight_paths
from tightpaths.tightpair import PAIR_ALGORITHMS, get_tight_pairs_algorithm
from tightpaths.tightpath import all_tight_paths, is_tight_path

logger = logging.getLogger(__name__)

MATCH = "match"
MISMATCH = "mismatch"
UNVERIFIABLE = "unverifiable"


class Difference(BaseModel):
    """
    Disagreement between one algorithm and the oracle.

    :param algorithm: Name of the algorithm checked.
    :param missing: Oracle results the algorithm did not return.
    :param extra: Algorithm results the oracle does not have.
    """

    algorithm: str
    missing: List[Tuple[str, ...]] = []
    extra: List[Tuple[str, ...]] = []


class VerifyReport(BaseModel):
    gamma: float
    status: str
    checked: List[str] = []
    differences: List[Difference] = []
    reason: Optional[str] = None

    def render(self) -> str:
        head = f"gamma={self.gamma:.10g} {self.status}"
        if self.status == UNVERIFIABLE:
            return f"{head}: {self.reason}\n"
        lines = [f"{head} ({', '.join(self.checked)})"]
        for difference in self.differences:
            lines.append(
                f"  {difference.algorithm}: missing {_show(difference.missing)}; "
                f"extra {_show(difference.extra)}"
            )
        return "".join(line + "\n" for line in lines)


def _show(items: List[Tuple[str, ...]]) -> str:
    if not items:
        return "none"
    return " ".join("(" + ",".join(item) + ")" for item in items)


def _compare(algorithm: str, found: Set, expected: Set) -> Optional[Difference]:
    if found == expected:
        return None
    return Difference(
        algorithm=algorithm,
        missing=sorted(expected - found),
        extra=sorted(found - expected),
    )


def verify_graph(
    graph: Graph,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
    cap: Optional[int] = None,
) -> VerifyReport:
    """Run the algorithms that apply to `graph` and diff them with the oracle."""
    is_dag = isinstance(graph, VertexWeightedDag)
    edge_weighted = graph.to_edge_weighted() if is_dag else graph
    try:
        if is_dag:
            expected = oracle_tight_pairs(
                graph, gamma, tolerance=tolerance, cap=cap  # type: ignore
            ).keys()
        else:
            expected = oracle_tight_paths(
                edge_weighted, gamma, tolerance=tolerance, cap=cap
            ).keys()
    except PathCapExceeded as e:
        logger.warning("gamma=%.10g is unverifiable: %s", gamma, e)
        return VerifyReport(gamma=gamma, status=UNVERIFIABLE, reason=str(e))

    checked = ["tightpath"]
    paths = all_tight_paths(edge_weighted, gamma, tolerance=tolerance)
    found = paths.pairs().keys() if is_dag else paths.keys()
    differences = [_compare("tightpath", found, expected)]
    if is_dag:
        for name in PAIR_ALGORITHMS:
            checked.append(name)
            pairs = get_tight_pairs_algorithm(name)(
                graph, gamma, tolerance=tolerance  # type: ignore
            )
            differences.append(_compare(name, pairs.keys(), expected))
    else:
        not_tight = [
            path.vertices
            for path in paths
            if not is_tight_path(edge_weighted, path, gamma, tolerance=tolerance)
        ]
        if not_tight:
            differences.append(Difference(algorithm="definition", extra=not_tight))

    found_differences = [d for d in differences if d is not None]
    status = MISMATCH if found_differences else MATCH
    logger.info("gamma=%.10g: %s", gamma, status)
    return VerifyReport(
        gamma=gamma, status=status, checked=checked, differences=found_differences
    )


def verify_command(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    gammas = thresholds(args)

    def check(gamma: float) -> VerifyReport:
        return verify_graph(graph, gamma, tolerance=args.tolerance, cap=args.cap)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as executor:
            reports = list(executor.map(check, gammas))
    else:
        reports = [check(gamma) for gamma in gammas]

    emit("".join(report.render() for report in reports), args.out)
    statuses = {report.status for report in reports}
    if MISMATCH in statuses:
        return ExitCode.MISMATCH
    if UNVERIFIABLE in statuses:
        return ExitCode.ORACLE_CAP
    return ExitCode.SUCCESS


def add_verify_parser(subparsers) -> None:
    verify = subparsers.add_parser(
        "verify",
        parents=[common_options(), threshold_options()],
        help="Compare every applicable algorithm with the brute-force oracle.",
    )
    verify.add_argument("graph", type=Path, help=".elist or .vwg file")
    verify.add_argument(
        "--cap",
        type=positive_int,
        default=None,
        help="Most bounded paths the oracle may enumerate.",
    )
    verify.add_argument("--jobs", type=positive_int, default=1)
    verify.set_defaults(func=verify_command)
