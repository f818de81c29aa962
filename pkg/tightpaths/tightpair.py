"""
Tight pairs of a vertex-weighted acyclic graph by depth-first search.

Two variants share one contract: `stacked` keeps the distance from the root in
the stack, `weights` recomputes it from the vertex weights. Both keep a visited
set, so each root costs O(|V| + |E|).
"""
import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

try:
    from typing import Protocol
except ImportError:  # pragma: no cover
    from typing_extensions import Protocol  # type: ignore

from tightpaths.config import check_threshold, resolve_tolerance
from tightpaths.exceptions import UnknownVertexError
from tightpaths.graph.base import VertexWeightedDag
from tightpaths.models import Pair, TightPairSet
from tightpaths.tighten import tight_pairs_via_tightening

logger = logging.getLogger(__name__)

STACKED = "stacked"
WEIGHTS = "weights"
TIGHTEN = "tighten"


class RootTightPairsProtocol(Protocol):  # pragma: no cover
    def __call__(
        self,
        dag: VertexWeightedDag,
        root: str,
        gamma: float,
        *,
        tolerance: Optional[float] = None,
    ) -> TightPairSet:
        pass


class TightPairsProtocol(Protocol):  # pragma: no cover
    def __call__(
        self,
        dag: VertexWeightedDag,
        gamma: float,
        *,
        tolerance: Optional[float] = None,
    ) -> TightPairSet:
        pass


def tight_pairs_from_root_stacked(
    dag: VertexWeightedDag,
    root: str,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> TightPairSet:
    """Tight pairs starting at `root`; the stack carries distances from the root."""
    if root not in dag:
        raise UnknownVertexError(root)
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    weights = dag.weights
    d0 = dag.min_predecessor_cost(root)

    result = TightPairSet()
    visited: Set[str] = set()
    stack: List[Tuple[str, float]] = [(root, 0.0)]
    while stack:
        vertex, distance = stack.pop()
        if vertex in visited:
            continue
        visited.add(vertex)
        may_extend = False
        for successor in dag.successors(vertex):
            extended = distance + (weights[successor] - weights[vertex])
            if extended <= bound:
                if successor not in visited:
                    stack.append((successor, extended))
                may_extend = True
        if not may_extend and d0 + distance > bound:
            result.add((root, vertex))
    return result


def tight_pairs_from_root_weights(
    dag: VertexWeightedDag,
    root: str,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> TightPairSet:
    """Tight pairs starting at `root`; distances are weight differences."""
    if root not in dag:
        raise UnknownVertexError(root)
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    weights = dag.weights
    base = weights[root]
    d0 = dag.min_predecessor_cost(root)

    result = TightPairSet()
    visited: Set[str] = set()
    stack = [root]
    while stack:
        vertex = stack.pop()
        if vertex in visited:
            continue
        visited.add(vertex)
        may_extend = False
        for successor in dag.successors(vertex):
            if weights[successor] - base <= bound:
                if successor not in visited:
                    stack.append(successor)
                may_extend = True
        if not may_extend and d0 + (weights[vertex] - base) > bound:
            result.add((root, vertex))
    return result


ROOT_VARIANTS: Dict[str, RootTightPairsProtocol] = {
    STACKED: tight_pairs_from_root_stacked,
    WEIGHTS: tight_pairs_from_root_weights,
}


def all_tight_pairs(
    dag: VertexWeightedDag,
    gamma: float,
    variant: str = WEIGHTS,
    *,
    tolerance: Optional[float] = None,
) -> TightPairSet:
    """Union of the per-root searches, roots taken in vertex order."""
    try:
        from_root = ROOT_VARIANTS[variant]
    except KeyError:
        raise ValueError(
            f"unknown variant {variant!r}; use one of {sorted(ROOT_VARIANTS)}"
        )
    result = TightPairSet()
    for root in dag.vertices:
        result.update(from_root(dag, root, gamma, tolerance=tolerance))
    logger.debug("%s: %d tight pairs at gamma=%g", variant, len(result), gamma)
    return result


def get_tight_pairs_algorithm(name: str) -> TightPairsProtocol:
    """Return the whole-graph tight pair finder called `name`."""
    if name == TIGHTEN:
        return tight_pairs_via_tightening
    if name not in ROOT_VARIANTS:
        raise ValueError(
            f"unknown algorithm {name!r}; use one of {sorted(PAIR_ALGORITHMS)}"
        )

    def find(
        dag: VertexWeightedDag, gamma: float, *, tolerance: Optional[float] = None
    ) -> TightPairSet:
        return all_tight_pairs(dag, gamma, name, tolerance=tolerance)

    return find


PAIR_ALGORITHMS: Tuple[str, ...] = (TIGHTEN, STACKED, WEIGHTS)


def sort_pairs(dag: VertexWeightedDag, pairs: Iterable[Pair]) -> List[Pair]:
    """Order pairs by first weight, then second weight, then input order."""
    position = {vertex: index for index, vertex in enumerate(dag.vertices)}
    weights = dag.weights
    return sorted(
        pairs,
        key=lambda pair: (
            weights[pair[0]],
            weights[pair[1]],
            position[pair[0]],
            position[pair[1]],
        ),
    )


def render_pairs(pairs: Iterable[Pair]) -> str:
    return "".join(f"{u}\t{v}\n" for u, v in pairs)
