"""
Tightening of correspondences over partial orders.

`tighten` keeps the pairs that cannot be improved by moving the left element
down or the right element up. On convex relations it equals
`right_tighten(left_tighten(r))`, which is how tight pairs of a vertex-weighted
acyclic graph are computed here.
"""
import logging
from typing import Callable, Dict, List, Optional

from tightpaths.config import check_threshold, resolve_tolerance
from tightpaths.correspondence import Correspondence
from tightpaths.graph.base import VertexWeightedDag
from tightpaths.models import TightPairSet

logger = logging.getLogger(__name__)

PhaseTrace = Callable[[str, Correspondence], None]

PHASE_BUILD = "build"
PHASE_LEFT = "left"
PHASE_RIGHT = "right"


def tighten(relation: Correspondence) -> Correspondence:
    """Keep `(a, b)` unless another related `(a', b')` has `a' <= a` and `b <= b'`."""
    pairs = relation.ordered_pairs()
    kept = [
        (a, b)
        for a, b in pairs
        if not any(
            (other_a, other_b) != (a, b)
            and relation.leq(other_a, a)
            and relation.leq(b, other_b)
            for other_a, other_b in pairs
        )
    ]
    return relation.with_pairs(kept)


def left_tighten(relation: Correspondence) -> Correspondence:
    """Keep `(a, b)` when `a` is minimal among the elements related to `b`."""
    return relation.with_lists(
        {
            b: [
                a
                for a in entries
                if not any(other != a and relation.leq(other, a) for other in entries)
            ]
            for b, entries in relation.lists.items()
        }
    )


def right_tighten(relation: Correspondence) -> Correspondence:
    """
    Keep `(a, b)` when `b` is maximal among the elements related to `a`.

    For every `v` and every `u < v`, the entries of `v`'s list are removed from
    `u`'s list.
    """
    lists: Dict[str, List[str]] = {
        element: list(entries) for element, entries in relation.lists.items()
    }
    for high in relation.universe:
        removed = set(lists[high])
        if not removed:
            continue
        for low in relation.universe:
            if relation.lt(low, high) and lists[low]:
                lists[low] = [a for a in lists[low] if a not in removed]
    return relation.with_lists(lists)


def is_convex(relation: Correspondence) -> bool:
    """True iff related pairs are ordered and closed under betweenness."""
    pairs = relation.pairs()
    for a, c in pairs:
        if not relation.leq(a, c):
            return False
        for b in relation.universe:
            if relation.leq(a, b) and relation.leq(b, c):
                if (a, b) not in pairs or (b, c) not in pairs:
                    return False
    return True


def build_correspondence(
    dag: VertexWeightedDag,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
) -> Correspondence:
    """
    Pairs `(u, v)` with a path from `u` to `v` and `w(v) - w(u) <= gamma`.

    Each vertex is related to itself.
    """
    bound = check_threshold(gamma) + resolve_tolerance(tolerance)
    closure = dag.reachability_closure()
    weights = dag.weights
    return closure.with_lists(
        {
            v: [u for u in entries if weights[v] - weights[u] <= bound]
            for v, entries in closure.lists.items()
        }
    )


def tight_pairs_via_tightening(
    dag: VertexWeightedDag,
    gamma: float,
    *,
    tolerance: Optional[float] = None,
    trace: Optional[PhaseTrace] = None,
) -> TightPairSet:
    """
    Tight pairs of `dag` at `gamma` in three phases.

    Build the bounded reachability relation, tighten it on the left, then on
    the right. `trace`, if given, receives the relation after each phase.
    """
    relation = build_correspondence(dag, gamma, tolerance=tolerance)
    _report(PHASE_BUILD, relation, trace)
    relation = left_tighten(relation)
    _report(PHASE_LEFT, relation, trace)
    relation = right_tighten(relation)
    _report(PHASE_RIGHT, relation, trace)
    return TightPairSet(relation.ordered_pairs())


def _report(
    phase: str, relation: Correspondence, trace: Optional[PhaseTrace]
) -> None:
    logger.debug("phase %s: %d pairs", phase, relation.size())
    if trace is not None:
        trace(phase, relation)
