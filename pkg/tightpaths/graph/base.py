import math
from typing import Dict, List, Tuple

from pydantic import BaseModel, PrivateAttr, confloat, validator

from tightpaths.correspondence import Correspondence
from tightpaths.exceptions import UnknownVertexError
from tightpaths.models import Pair, VertexId

INFINITY = math.inf

Successor = Tuple[str, float]


class Edge(BaseModel):
    source: VertexId  # type: ignore
    target: VertexId  # type: ignore
    cost: float

    class Config:
        frozen = True

    @validator("cost")
    def positive_finite_cost(cls, cost: float) -> float:
        if not cost > 0 or not math.isfinite(cost):
            raise ValueError(f"edge cost must be a positive real, got {cost!r}")
        return cost


def _unique_vertices(vertices: Tuple[str, ...]) -> Tuple[str, ...]:
    seen = set()
    for vertex in vertices:
        if vertex in seen:
            raise ValueError(f"vertex {vertex!r} listed twice")
        seen.add(vertex)
    return vertices


class WeightedDigraph(BaseModel):
    """
    Directed graph with strictly positive edge costs.

    Self-loops are edges like any other; parallel edges are rejected.
    Immutable once built.

    :param vertices: Vertex identifiers, in input order.
    :param edges: Edges, in input order; successor lists keep that order.
    """

    vertices: Tuple[VertexId, ...]  # type: ignore
    edges: Tuple[Edge, ...] = ()

    _successors: Dict[str, Tuple[Successor, ...]] = PrivateAttr()
    _predecessors: Dict[str, Tuple[Successor, ...]] = PrivateAttr()

    class Config:
        allow_mutation = False

    _check_vertices = validator("vertices", allow_reuse=True)(_unique_vertices)

    @validator("edges")
    def known_distinct_edges(cls, edges: Tuple[Edge, ...], values):
        if "vertices" not in values:
            return edges
        vertices = set(values["vertices"])
        seen = set()
        for edge in edges:
            for endpoint in (edge.source, edge.target):
                if endpoint not in vertices:
                    raise ValueError(f"edge endpoint {endpoint!r} is not a vertex")
            key = (edge.source, edge.target)
            if key in seen:
                raise ValueError(f"parallel edge ({edge.source}, {edge.target})")
            seen.add(key)
        return edges

    def __init__(self, **data):
        super().__init__(**data)
        successors: Dict[str, List[Successor]] = {v: [] for v in self.vertices}
        predecessors: Dict[str, List[Successor]] = {v: [] for v in self.vertices}
        for edge in self.edges:
            successors[edge.source].append((edge.target, edge.cost))
            predecessors[edge.target].append((edge.source, edge.cost))
        self._successors = {v: tuple(s) for v, s in successors.items()}
        self._predecessors = {v: tuple(p) for v, p in predecessors.items()}

    @classmethod
    def from_edges(
        cls, edges: List[Tuple[str, str, float]], vertices: Tuple[str, ...] = ()
    ) -> "WeightedDigraph":
        """Build a graph; vertex order is `vertices`, then first use in `edges`."""
        order: Dict[str, None] = dict.fromkeys(vertices)
        for source, target, _ in edges:
            order.setdefault(source)
            order.setdefault(target)
        return cls(
            vertices=tuple(order),
            edges=tuple(
                Edge(source=source, target=target, cost=cost)
                for source, target, cost in edges
            ),
        )

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._successors

    def successors(self, vertex: str) -> Tuple[Successor, ...]:
        try:
            return self._successors[vertex]
        except KeyError:
            raise UnknownVertexError(vertex)

    def predecessors(self, vertex: str) -> Tuple[Successor, ...]:
        try:
            return self._predecessors[vertex]
        except KeyError:
            raise UnknownVertexError(vertex)

    def min_predecessor_cost(self, vertex: str) -> float:
        """Cost of the cheapest edge entering `vertex`; `INFINITY` for sources."""
        return min((cost for _, cost in self.predecessors(vertex)), default=INFINITY)

    def min_edge_cost(self) -> float:
        return min((edge.cost for edge in self.edges), default=INFINITY)


class VertexWeightedDag(BaseModel):
    """
    Acyclic graph whose edge costs are weight differences.

    Every edge `(u, v)` satisfies `w(u) < w(v)`, which alone guarantees
    acyclicity; the derived cost of `(u, v)` is `w(v) - w(u)`.

    :param vertices: Vertex identifiers, in input order.
    :param weights: Nonnegative weight of every vertex.
    :param edges: `(source, target)` pairs, in input order.
    """

    vertices: Tuple[VertexId, ...]  # type: ignore
    weights: Dict[VertexId, confloat(ge=0)]  # type: ignore
    edges: Tuple[Tuple[VertexId, VertexId], ...] = ()  # type: ignore

    _successors: Dict[str, Tuple[str, ...]] = PrivateAttr()
    _predecessors: Dict[str, Tuple[str, ...]] = PrivateAttr()
    _topological: Tuple[str, ...] = PrivateAttr()
    _closure: Correspondence = PrivateAttr(default=None)

    class Config:
        allow_mutation = False

    _check_vertices = validator("vertices", allow_reuse=True)(_unique_vertices)

    @validator("weights")
    def weight_per_vertex(cls, weights: Dict[str, float], values):
        if "vertices" not in values:
            return weights
        vertices = values["vertices"]
        missing = [v for v in vertices if v not in weights]
        if missing:
            raise ValueError(f"no weight for vertices {missing}")
        extra = [v for v in weights if v not in set(vertices)]
        if extra:
            raise ValueError(f"weights for unknown vertices {extra}")
        for vertex, weight in weights.items():
            if not math.isfinite(weight):
                raise ValueError(f"weight of {vertex!r} must be finite")
        return weights

    @validator("edges")
    def increasing_edges(cls, edges: Tuple[Pair, ...], values):
        if "weights" not in values:
            return edges
        weights = values["weights"]
        seen = set()
        for source, target in edges:
            for endpoint in (source, target):
                if endpoint not in weights:
                    raise ValueError(f"edge endpoint {endpoint!r} is not a vertex")
            if (source, target) in seen:
                raise ValueError(f"parallel edge ({source}, {target})")
            seen.add((source, target))
            if not weights[source] < weights[target]:
                raise ValueError(
                    f"edge ({source}, {target}) violates w(u) < w(v): "
                    f"{weights[source]!r} >= {weights[target]!r}"
                )
        return edges

    def __init__(self, **data):
        super().__init__(**data)
        successors: Dict[str, List[str]] = {v: [] for v in self.vertices}
        predecessors: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for source, target in self.edges:
            successors[source].append(target)
            predecessors[target].append(source)
        self._successors = {v: tuple(s) for v, s in successors.items()}
        self._predecessors = {v: tuple(p) for v, p in predecessors.items()}
        position = {v: index for index, v in enumerate(self.vertices)}
        self._topological = tuple(
            sorted(self.vertices, key=lambda v: (self.weights[v], position[v]))
        )

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._successors

    @property
    def topological_order(self) -> Tuple[str, ...]:
        """Vertices by ascending weight, ties broken by input order."""
        return self._topological

    def weight(self, vertex: str) -> float:
        try:
            return self.weights[vertex]
        except KeyError:
            raise UnknownVertexError(vertex)

    def successors(self, vertex: str) -> Tuple[str, ...]:
        try:
            return self._successors[vertex]
        except KeyError:
            raise UnknownVertexError(vertex)

    def predecessors(self, vertex: str) -> Tuple[str, ...]:
        try:
            return self._predecessors[vertex]
        except KeyError:
            raise UnknownVertexError(vertex)

    def cost(self, source: str, target: str) -> float:
        return self.weight(target) - self.weight(source)

    def min_predecessor_cost(self, vertex: str) -> float:
        """Smallest `w(vertex) - w(u)` over predecessors `u`; `INFINITY` for sources."""
        weight = self.weight(vertex)
        return min(
            (weight - self.weights[u] for u in self._predecessors[vertex]),
            default=INFINITY,
        )

    def reachability_closure(self) -> Correspondence:
        """
        Reflexive-transitive closure of the edges, as predecessor lists.

        `lists[v]` holds every `u` with a path from `u` to `v`, `v` included,
        in topological order. Computed once and cached.
        """
        if self._closure is None:
            ancestors: Dict[str, set] = {}
            for vertex in self._topological:
                reached = {vertex}
                for predecessor in self._predecessors[vertex]:
                    reached |= ancestors[predecessor]
                ancestors[vertex] = reached
            order = frozenset(
                (low, high) for high, lows in ancestors.items() for low in lows
            )
            self._closure = Correspondence(
                universe=self._topological,
                order=order,
                lists={vertex: tuple(lows) for vertex, lows in ancestors.items()},
            )
        return self._closure

    def to_edge_weighted(self) -> WeightedDigraph:
        """Same vertices and edges, each edge costing `w(v) - w(u)`."""
        return WeightedDigraph(
            vertices=self.vertices,
            edges=tuple(
                Edge(source=source, target=target, cost=self.cost(source, target))
                for source, target in self.edges
            ),
        )
