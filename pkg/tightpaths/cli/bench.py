"""
Threshold-sweep benchmark.

Each cell times one algorithm at one threshold, averaged over repetitions.
Graphs are loaded and converted before any clock starts. A cell whose
algorithm cannot run on the graph is reported as `NA` and the sweep goes on.
"""
import argparse
import csv
import io
import logging
import time
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, PositiveInt, confloat, conint, validator

from tightpaths.cli.common import (
    ExitCode,
    GammaRange,
    common_options,
    emit,
    gamma_values,
    parse_gamma_range,
    positive_int,
)
from tightpaths.config import get_settings
from tightpaths.exceptions import (
    BenchmarkError,
    TightPathsException,
    UnknownVertexError,
)
from tightpaths.graph.base import VertexWeightedDag
from tightpaths.graph.io import Graph, load_graph
from tightpaths.models import TightPairSet
from tightpaths.tightpair import (
    PAIR_ALGORITHMS,
    ROOT_VARIANTS,
    get_tight_pairs_algorithm,
)
from tightpaths.tightpath import all_tight_paths, tight_paths_from_root

logger = logging.getLogger(__name__)

TIGHTPATH = "tightpath"
BENCH_ALGORITHMS: Tuple[str, ...] = (TIGHTPATH,) + PAIR_ALGORITHMS
BENCH_FIELDS = ("graph", "algo", "gamma", "seconds", "reps", "count", "total_len")
NOT_AVAILABLE = "NA"

FORMAT_CSV = "csv"
FORMAT_TSV = "tsv"

# gamma -> (output size, total output length)
Runner = Callable[[float], Tuple[int, int]]


class BenchRecord(BaseModel):
    """One benchmark cell; `seconds` is the mean over `reps` timed runs."""

    graph: str
    algo: str
    gamma: confloat(ge=0)  # type: ignore
    seconds: Optional[confloat(ge=0)]  # type: ignore
    reps: PositiveInt
    count: Optional[conint(ge=0)]  # type: ignore
    total_len: Optional[conint(ge=0)]  # type: ignore

    @validator("seconds", "count", "total_len", pre=True)
    def not_available(cls, value):
        return None if value == NOT_AVAILABLE else value

    @property
    def failed(self) -> bool:
        return self.seconds is None

    def row(self) -> List[str]:
        def cell(value, pattern: str) -> str:
            return NOT_AVAILABLE if value is None else format(value, pattern)

        return [
            self.graph,
            self.algo,
            format(self.gamma, ".10g"),
            cell(self.seconds, ".6f"),
            str(self.reps),
            cell(self.count, "d"),
            cell(self.total_len, "d"),
        ]


def _pair_runner(
    dag: VertexWeightedDag, algo: str, root: Optional[str], tolerance: Optional[float]
) -> Runner:
    if root is not None and algo in ROOT_VARIANTS:
        from_root = ROOT_VARIANTS[algo]

        def find(gamma: float) -> TightPairSet:
            return from_root(dag, root, gamma, tolerance=tolerance)

    else:
        algorithm = get_tight_pairs_algorithm(algo)

        def find(gamma: float) -> TightPairSet:
            found = algorithm(dag, gamma, tolerance=tolerance)
            if root is None:
                return found
            return TightPairSet(pair for pair in found if pair[0] == root)

    def run(gamma: float) -> Tuple[int, int]:
        found = find(gamma)
        return len(found), 2 * len(found)

    return run


def get_runner(
    graph: Graph,
    algo: str,
    *,
    root: Optional[str] = None,
    tolerance: Optional[float] = None,
) -> Runner:
    """Prepare `algo` on `graph`; raises `BenchmarkError` if it does not apply."""
    if root is not None and root not in graph:
        raise UnknownVertexError(root)
    if algo == TIGHTPATH:
        edge_weighted = (
            graph.to_edge_weighted() if isinstance(graph, VertexWeightedDag) else graph
        )

        def run(gamma: float) -> Tuple[int, int]:
            if root is None:
                found = all_tight_paths(edge_weighted, gamma, tolerance=tolerance)
            else:
                found = tight_paths_from_root(
                    edge_weighted, root, gamma, tolerance=tolerance
                )
            return len(found), sum(path.length for path in found)

        return run
    if algo not in PAIR_ALGORITHMS:
        raise BenchmarkError(f"unknown algorithm {algo!r}")
    if not isinstance(graph, VertexWeightedDag):
        raise BenchmarkError(f"{algo} needs a vertex-weighted acyclic graph")
    return _pair_runner(graph, algo, root, tolerance)


def time_cell(
    runner: Runner, gamma: float, repetitions: int, warmup: int = 0
) -> Tuple[float, int, int]:
    for _ in range(warmup):
        runner(gamma)
    elapsed = 0.0
    for _ in range(repetitions):
        start = time.perf_counter()
        count, total_len = runner(gamma)
        elapsed += time.perf_counter() - start
    return elapsed / repetitions, count, total_len


def run_bench(
    graph: Graph,
    algorithms: Sequence[str],
    gamma_range: GammaRange,
    repetitions: Optional[int] = None,
    *,
    graph_id: str = "graph",
    root: Optional[str] = None,
    warmup: int = 0,
    tolerance: Optional[float] = None,
) -> List[BenchRecord]:
    """Time every algorithm at every threshold of `gamma_range`."""
    if not algorithms:
        raise BenchmarkError("no algorithm to benchmark")
    if repetitions is None:
        repetitions = get_settings().bench_repetitions
    if repetitions < 1:
        raise BenchmarkError(f"repetitions must be at least 1, got {repetitions}")
    if root is not None and root not in graph:
        raise UnknownVertexError(root)
    gammas = gamma_values(*gamma_range)

    runners: Dict[str, Optional[Runner]] = {}
    for algo in algorithms:
        try:
            runners[algo] = get_runner(graph, algo, root=root, tolerance=tolerance)
        except TightPathsException as e:
            logger.warning("%s on %s: %s", algo, graph_id, e)
            runners[algo] = None

    records = []
    for gamma in gammas:
        logger.info("%s: gamma=%.10g", graph_id, gamma)
        for algo in algorithms:
            seconds = count = total_len = None
            runner = runners[algo]
            if runner is not None:
                try:
                    seconds, count, total_len = time_cell(
                        runner, gamma, repetitions, warmup
                    )
                except TightPathsException as e:
                    logger.warning("%s at gamma=%.10g: %s", algo, gamma, e)
            records.append(
                BenchRecord(
                    graph=graph_id,
                    algo=algo,
                    gamma=gamma,
                    seconds=seconds,
                    reps=repetitions,
                    count=count,
                    total_len=total_len,
                )
            )
    return records


def render_records(records: Iterable[BenchRecord], fmt: str = FORMAT_CSV) -> str:
    """CSV with a header row, or gnuplot-friendly TSV with a `#` header."""
    lines = []
    if fmt == FORMAT_TSV:
        lines.append("#" + "\t".join(BENCH_FIELDS))
        lines.extend("\t".join(record.row()) for record in records)
        return "".join(line + "\n" for line in lines)

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_FIELDS)
    writer.writerows(record.row() for record in records)
    return out.getvalue()


def read_records(stream: TextIO) -> List[BenchRecord]:
    """Parse CSV or `#`-headed TSV output back into records."""
    lines = [line for line in stream.read().splitlines() if line.strip()]
    if not lines:
        return []
    delimiter = "\t" if lines[0].startswith("#") else ","
    lines[0] = lines[0].lstrip("#")
    reader = csv.DictReader(lines, delimiter=delimiter)
    if tuple(reader.fieldnames or ()) != BENCH_FIELDS:
        raise BenchmarkError(f"unexpected header {reader.fieldnames}")
    return [BenchRecord(**row) for row in reader]


def render_svg(
    records: Sequence[BenchRecord], width: int = 640, height: int = 400
) -> str:
    """Line chart of mean time against threshold, one polyline per algorithm."""
    timed = [r for r in records if not r.failed]
    margin = 50
    if timed:
        low = min(r.gamma for r in timed)
        high = max(r.gamma for r in timed)
        top = max(r.seconds for r in timed) or 1.0  # type: ignore
    else:
        low, high, top = 0.0, 1.0, 1.0
    span = (high - low) or 1.0

    def x(gamma: float) -> float:
        return margin + (gamma - low) / span * (width - 2 * margin)

    def y(seconds: float) -> float:
        return height - margin - seconds / top * (height - 2 * margin)

    colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        'stroke="black"/>',
        f'<text x="{width / 2:.0f}" y="{height - 10}" text-anchor="middle">'
        "gamma</text>",
        f'<text x="10" y="{margin - 10}">seconds (max {top:.6f})</text>',
    ]
    algorithms: List[str] = []
    for record in timed:
        if record.algo not in algorithms:
            algorithms.append(record.algo)
    for index, algo in enumerate(algorithms):
        color = colors[index % len(colors)]
        points = " ".join(
            f"{x(r.gamma):.1f},{y(r.seconds):.1f}"  # type: ignore
            for r in timed
            if r.algo == algo
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" '
            f'points="{points}"/>'
        )
        parts.append(
            f'<text x="{width - margin + 5}" y="{margin + 15 * index}" '
            f'fill="{color}">{algo}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bench_command(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    records = run_bench(
        graph,
        args.algo or list(BENCH_ALGORITHMS),
        args.gamma_range,
        args.reps,
        graph_id=args.graph.stem,
        root=args.root,
        warmup=args.warmup,
        tolerance=args.tolerance,
    )
    emit(render_records(records, args.format), args.out)
    if args.svg is not None:
        args.svg.write_text(render_svg(records), encoding="utf-8")
    return ExitCode.SUCCESS


def add_bench_parser(subparsers) -> None:
    bench = subparsers.add_parser(
        "bench",
        parents=[common_options()],
        help="Time algorithms over a sweep of thresholds.",
    )
    bench.add_argument("graph", type=Path, help=".elist or .vwg file")
    bench.add_argument(
        "--gamma-range",
        type=parse_gamma_range,
        required=True,
        metavar="LO:HI:N",
        help="N equally spaced thresholds from LO to HI.",
    )
    bench.add_argument(
        "--algo",
        action="append",
        choices=BENCH_ALGORITHMS,
        help="Algorithm to time; repeat for several (default: all).",
    )
    bench.add_argument("--root", help="Only search from this vertex.")
    bench.add_argument("--reps", type=positive_int, default=None)
    bench.add_argument("--warmup", type=int, default=0)
    bench.add_argument(
        "--format", choices=(FORMAT_CSV, FORMAT_TSV), default=FORMAT_CSV
    )
    bench.add_argument("--svg", type=Path, default=None, help="Also write a chart.")
    bench.set_defaults(func=bench_command)
