"""
Synthetic inputs.

Every generator is deterministic for a given seed: it draws from its own
`random.Random(seed)` and writes vertices and edges in a fixed order.
"""
import argparse
import random
import string
from typing import Dict, List, Tuple

from tightpaths.cli.common import ExitCode, common_options, emit
from tightpaths.closure import TransactionalDataset, render_transactions
from tightpaths.exceptions import GeneratorError
from tightpaths.graph.base import VertexWeightedDag, WeightedDigraph
from tightpaths.graph.io import render_edge_list, render_vertex_weighted

DOUBLE_LOOP = "double-loop"
LAYERED_LATTICE = "layered-lattice"
RANDOM_DAG = "random-dag"
TRANSACTIONS = "transactions"
GENERATORS = (DOUBLE_LOOP, LAYERED_LATTICE, RANDOM_DAG, TRANSACTIONS)

HUB = "A"


def _names(count: int, alphabet: str) -> List[str]:
    letters = list(alphabet)
    return [
        letters[index] if index < len(letters) else f"V{index}"
        for index in range(count)
    ]


def double_loop(loops: int = 2) -> WeightedDigraph:
    """
    `loops` cycles of cost 4 through the hub vertex `A`.

    Costs alternate between 2, 1, 1 and 1, 2, 1 around consecutive loops; with
    two loops this is the graph A-B-C-A, A-D-E-A.
    """
    if loops < 1:
        raise GeneratorError(f"need at least one loop, got {loops}")
    names = _names(2 * loops, string.ascii_uppercase.replace(HUB, ""))
    edges: List[Tuple[str, str, float]] = []
    for loop in range(loops):
        first, second = names[2 * loop], names[2 * loop + 1]
        out_cost, middle_cost = (2.0, 1.0) if loop % 2 == 0 else (1.0, 2.0)
        edges += [
            (HUB, first, out_cost),
            (first, second, middle_cost),
            (second, HUB, 1.0),
        ]
    return WeightedDigraph.from_edges(edges)


def layered_lattice(
    layers: int = 4, width: int = 3, fanout: int = 2, seed: int = 0
) -> VertexWeightedDag:
    """
    A `bottom` vertex, `layers` layers of `width` vertices, and a `top` vertex.

    Layer `k` vertices weigh `k` plus a jitter below one half. The bottom
    reaches every vertex of the first layer, every vertex of the last layer
    reaches the top, and each other vertex has `fanout` random successors in
    the next layer. Many parallel paths join the same endpoints.
    """
    if layers < 1 or width < 1 or fanout < 1:
        raise GeneratorError(
            f"layers, width and fanout must be positive: {layers}, {width}, {fanout}"
        )
    rng = random.Random(seed)
    grid = [[f"n{layer}_{i}" for i in range(width)] for layer in range(1, layers + 1)]
    weights: Dict[str, float] = {"bottom": 0.0}
    for layer, names in enumerate(grid, start=1):
        for name in names:
            weights[name] = round(layer + rng.random() / 2, 6)
    weights["top"] = float(layers + 1)

    edges = [("bottom", name) for name in grid[0]]
    for current, following in zip(grid, grid[1:]):
        for name in current:
            targets = sorted(rng.sample(range(width), min(fanout, width)))
            edges += [(name, following[target]) for target in targets]
    edges += [(name, "top") for name in grid[-1]]
    return VertexWeightedDag(vertices=tuple(weights), weights=weights, edges=edges)


def random_dag(
    vertices: int = 10, density: float = 0.3, seed: int = 0
) -> VertexWeightedDag:
    """Vertices `v0, v1, ...` by increasing weight; forward edges kept at `density`."""
    if vertices < 1:
        raise GeneratorError(f"need at least one vertex, got {vertices}")
    if not 0 <= density <= 1:
        raise GeneratorError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    names = [f"v{index}" for index in range(vertices)]
    weights: Dict[str, float] = {}
    weight = 0.0
    for name in names:
        weights[name] = weight
        weight = round(weight + rng.uniform(0.1, 1.0), 3)
    edges = [
        (names[low], names[high])
        for low in range(vertices)
        for high in range(low + 1, vertices)
        if rng.random() < density
    ]
    return VertexWeightedDag(vertices=tuple(names), weights=weights, edges=edges)


def random_transactions(
    items: int = 5, transactions: int = 10, seed: int = 0
) -> TransactionalDataset:
    """Each item joins each transaction with probability one half; none is empty."""
    if items < 1 or transactions < 1:
        raise GeneratorError(
            f"items and transactions must be positive: {items}, {transactions}"
        )
    rng = random.Random(seed)
    names = _names(items, string.ascii_lowercase)
    rows = []
    for _ in range(transactions):
        row = [name for name in names if rng.random() < 0.5]
        rows.append(row or [rng.choice(names)])
    return TransactionalDataset.from_transactions(rows)


def generate_synthetic(
    kind: str,
    *,
    seed: int = 0,
    loops: int = 2,
    layers: int = 4,
    width: int = 3,
    fanout: int = 2,
    vertices: int = 10,
    density: float = 0.3,
    items: int = 5,
    transactions: int = 10,
) -> str:
    """Render the generated input of `kind` in its file format."""
    if kind == DOUBLE_LOOP:
        return render_edge_list(double_loop(loops))
    if kind == LAYERED_LATTICE:
        return render_vertex_weighted(layered_lattice(layers, width, fanout, seed))
    if kind == RANDOM_DAG:
        return render_vertex_weighted(random_dag(vertices, density, seed))
    if kind == TRANSACTIONS:
        return render_transactions(random_transactions(items, transactions, seed))
    raise GeneratorError(f"unknown generator {kind!r}; use one of {GENERATORS}")


def gen_command(args: argparse.Namespace) -> int:
    text = generate_synthetic(
        args.kind,
        seed=args.seed,
        loops=args.loops,
        layers=args.layers,
        width=args.width,
        fanout=args.fanout,
        vertices=args.vertices,
        density=args.density,
        items=args.items,
        transactions=args.transactions,
    )
    emit(text, args.out)
    return ExitCode.SUCCESS


def add_gen_parser(subparsers) -> None:
    gen = subparsers.add_parser(
        "gen", parents=[common_options()], help="Write a synthetic input file."
    )
    gen.add_argument("kind", choices=GENERATORS)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--loops", type=int, default=2, help=DOUBLE_LOOP)
    gen.add_argument("--layers", type=int, default=4, help=LAYERED_LATTICE)
    gen.add_argument("--width", type=int, default=3, help=LAYERED_LATTICE)
    gen.add_argument("--fanout", type=int, default=2, help=LAYERED_LATTICE)
    gen.add_argument("--vertices", type=int, default=10, help=RANDOM_DAG)
    gen.add_argument("--density", type=float, default=0.3, help=RANDOM_DAG)
    gen.add_argument("--items", type=int, default=5, help=TRANSACTIONS)
    gen.add_argument("--transactions", type=int, default=10, help=TRANSACTIONS)
    gen.set_defaults(func=gen_command)
