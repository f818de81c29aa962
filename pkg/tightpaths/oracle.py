"""
Brute-force reference implementations.

Everything here follows the definitions literally and keeps its own
traversal code, so it can be trusted to check the real algorithms. Nothing
here is fast.
"""
import logging
from collections import defaultdict
from typing import DefaultDict, List, Optional, Tuple

from tightpaths.config import check_threshold, get_settings, resolve_tolerance
from tightpaths.correspondence import Correspondence
from tightpaths.exceptions import PathCapExceeded
from tightpaths.graph.base import VertexWeightedDag, WeightedDigraph
from tightpaths.models import Path, PathSet, TightPairSet, TightPathSet

logger = logging.getLogger(__name__)

_Arcs = DefaultDict[str, List[Tuple[str, float]]]


def _arcs(graph: WeightedDigraph) -> Tuple[_Arcs, _Arcs]:
    outgoing: _Arcs = defaultdict(list)
    incoming: _Arcs = defaultdict(list)
    for edge in graph.edges:
        outgoing[edge.source].append((edge.target, edge.cost))
        incoming[edge.target].append((edge.source, edge.cost))
    return outgoing, incoming


def enumerate_bounded_paths(
    graph: WeightedDigraph,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
    cap: Optional[int] = None,
) -> PathSet:
    """
    Every path of cost at most `gamma`, from every vertex, of any length.

    Paths are generated by length, each one by appending an edge to a shorter
    one. Raises `PathCapExceeded` past `cap` paths (default from settings).
    """
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    limit = get_settings().path_cap if cap is None else cap
    outgoing, _ = _arcs(graph)

    found = PathSet()
    frontier: List[Tuple[Tuple[str, ...], float]] = [
        ((vertex,), 0.0) for vertex in graph.vertices
    ]
    while frontier:
        longer: List[Tuple[Tuple[str, ...], float]] = []
        for vertices, cost in frontier:
            found.add(Path.construct(vertices=vertices, cost=cost))
            if len(found) > limit:
                raise PathCapExceeded(limit)
            for target, edge_cost in outgoing[vertices[-1]]:
                if cost + edge_cost <= bound:
                    longer.append((vertices + (target,), cost + edge_cost))
        frontier = longer
    logger.debug("%d bounded paths at gamma=%g", len(found), gamma)
    return found


def oracle_tight_paths(
    graph: WeightedDigraph,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
    cap: Optional[int] = None,
) -> TightPathSet:
    """Bounded paths whose every one-edge extension, at either end, exceeds `gamma`."""
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    outgoing, incoming = _arcs(graph)
    return TightPathSet(
        path
        for path in enumerate_bounded_paths(
            graph, gamma, tolerance=tolerance, cap=cap
        )
        if all(path.cost + c > bound for _, c in incoming[path.vertices[0]])
        and all(path.cost + c > bound for _, c in outgoing[path.vertices[-1]])
    )


def oracle_tight_pairs(
    dag: VertexWeightedDag,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
    cap: Optional[int] = None,
) -> TightPairSet:
    """Endpoints of the tight paths of the edge-weighted version of `dag`."""
    paths = oracle_tight_paths(
        dag.to_edge_weighted(), gamma, tolerance=tolerance, cap=cap
    )
    return TightPairSet((path.vertices[0], path.vertices[-1]) for path in paths)


def oracle_tighten(relation: Correspondence) -> Correspondence:
    """Evaluate the tightening quantifiers over the whole universe."""
    pairs = relation.pairs()
    universe = relation.universe
    kept = []
    for a, b in relation.ordered_pairs():
        tight = True
        for lower in universe:
            if not relation.leq(lower, a):
                continue
            for upper in universe:
                if (
                    relation.leq(b, upper)
                    and (lower, upper) in pairs
                    and (lower != a or upper != b)
                ):
                    tight = False
                    break
            if not tight:
                break
        if tight:
            kept.append((a, b))
    return relation.with_pairs(kept)
