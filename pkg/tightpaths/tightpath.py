"""Tight paths of a positively weighted digraph, found with a per-root path tree."""
import logging
from typing import Iterable, List, NamedTuple, Optional, Tuple

from tightpaths.config import check_threshold, resolve_tolerance
from tightpaths.exceptions import UnknownVertexError
from tightpaths.graph.base import WeightedDigraph
from tightpaths.models import Path, TightPathSet

logger = logging.getLogger(__name__)


class PathTreeNode(NamedTuple):
    vertex: str
    parent: Optional[int]
    cost: float


class PathTree:
    """
    Bookkeeping tree of the paths leaving one root vertex.

    Each node stands for one path: the graph vertex where it ends, a link to
    the node of the path one edge shorter, and the accumulated cost. A graph
    vertex has one node per distinct path reaching it. Nodes are only ever
    appended, so parent links never change.

    :param root: Graph vertex the paths start at; node 0, cost 0.
    """

    nodes: List[PathTreeNode]

    def __init__(self, root: str):
        self.nodes = [PathTreeNode(root, None, 0.0)]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def root(self) -> str:
        return self.nodes[0].vertex

    def add(self, vertex: str, parent: int, cost: float) -> int:
        self.nodes.append(PathTreeNode(vertex, parent, cost))
        return len(self.nodes) - 1


def reconstruct_path(tree: PathTree, leaf: int) -> Path:
    """Walk parent links from `leaf` up to the root and return the path they spell."""
    if not 0 <= leaf < len(tree.nodes):
        raise IndexError(f"no tree node {leaf}")
    vertices = []
    index: Optional[int] = leaf
    while index is not None:
        node = tree.nodes[index]
        vertices.append(node.vertex)
        index = node.parent
    vertices.reverse()
    return Path.construct(vertices=tuple(vertices), cost=tree.nodes[leaf].cost)


def build_path_tree(
    graph: WeightedDigraph,
    root: str,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> Tuple[PathTree, List[int]]:
    """
    Grow the path tree of `root` and collect the nodes ending tight paths.

    Returns the final tree and the indices of the recorded nodes, in the
    order they were found.
    """
    if root not in graph:
        raise UnknownVertexError(root)
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    d0 = graph.min_predecessor_cost(root)

    tree = PathTree(root)
    nodes = tree.nodes
    stack = [0]
    tight: List[int] = []
    while stack:
        index = stack.pop()
        vertex, _, cost = nodes[index]
        may_extend = False
        for successor, edge_cost in graph.successors(vertex):
            extended = cost + edge_cost
            if extended <= bound:
                stack.append(tree.add(successor, index, extended))
                may_extend = True
        if not may_extend and d0 + cost > bound:
            tight.append(index)

    logger.debug(
        "root %s: %d tree nodes, %d tight paths", root, len(tree), len(tight)
    )
    return tree, tight


def tight_paths_from_root(
    graph: WeightedDigraph,
    root: str,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> TightPathSet:
    """Tight paths of `graph` at threshold `gamma` whose first vertex is `root`."""
    tree, tight = build_path_tree(graph, root, gamma, tolerance=tolerance)
    return TightPathSet(reconstruct_path(tree, leaf) for leaf in tight)


def all_tight_paths(
    graph: WeightedDigraph,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> TightPathSet:
    """Tight paths from every vertex, by vertex order then discovery order."""
    result = TightPathSet()
    for root in graph.vertices:
        result.update(tight_paths_from_root(graph, root, gamma, tolerance=tolerance))
    return result


def is_tight_path(
    graph: WeightedDigraph,
    path: Path,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> bool:
    """Check the definition directly: within budget, and no one-edge extension is."""
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    cost = 0.0
    for source, target in path.edges:
        costs = [c for successor, c in graph.successors(source) if successor == target]
        if not costs:
            return False
        cost += costs[0]
    if cost > bound:
        return False
    extensions = graph.predecessors(path.first) + graph.successors(path.last)
    return all(cost + edge_cost > bound for _, edge_cost in extensions)


def render_paths(paths: Iterable[Path]) -> str:
    """One path per line: vertices, a tab, the total cost."""
    return "".join(
        f"{' '.join(path.vertices)}\t{path.cost:.10g}\n" for path in paths
    )
