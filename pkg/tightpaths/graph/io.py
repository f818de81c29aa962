"""
Text formats for graphs.

`.elist`: one `SRC DST COST` edge per line.
`.vwg`: `v NAME WEIGHT` vertex lines, then `e SRC DST` edge lines.

In both, blank lines and lines starting with `#` are ignored.
"""
import math
from pathlib import Path as FilePath
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from pydantic import ValidationError

from tightpaths.exceptions import GraphError, GraphParseError, GraphValidationError
from tightpaths.graph.base import Edge, VertexWeightedDag, WeightedDigraph

TextSource = Union[str, Iterable[str]]
Graph = Union[WeightedDigraph, VertexWeightedDag]

EDGE_LIST_SUFFIX = ".elist"
VERTEX_WEIGHTED_SUFFIX = ".vwg"


def data_lines(text: TextSource) -> Iterator[Tuple[int, List[str]]]:
    """Yield `(line number, tokens)` for every non-blank, non-comment line."""
    lines = text.splitlines() if isinstance(text, str) else text
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _parse_real(token: str, number: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise GraphParseError(number, f"{what} {token!r} is not a number")


def _validation_reason(error: ValidationError) -> str:
    return "; ".join(item["msg"] for item in error.errors())


def parse_edge_list(text: TextSource) -> WeightedDigraph:
    """Parse the `.elist` format; vertices are ordered by first appearance."""
    vertices: Dict[str, None] = {}
    edges: List[Edge] = []
    seen: Dict[Tuple[str, str], int] = {}
    for number, tokens in data_lines(text):
        if len(tokens) != 3:
            raise GraphParseError(number, "expected 'SRC DST COST'")
        source, target, raw_cost = tokens
        cost = _parse_real(raw_cost, number, "cost")
        if not cost > 0 or not math.isfinite(cost):
            raise GraphValidationError(
                f"edge ({source}, {target}) has nonpositive or infinite cost {cost!r}",
                number,
            )
        if (source, target) in seen:
            raise GraphValidationError(
                f"parallel edge ({source}, {target}), first given on line "
                f"{seen[(source, target)]}",
                number,
            )
        seen[(source, target)] = number
        vertices.setdefault(source)
        vertices.setdefault(target)
        try:
            edges.append(Edge(source=source, target=target, cost=cost))
        except ValidationError as e:
            raise GraphValidationError(_validation_reason(e), number)
    try:
        return WeightedDigraph(vertices=tuple(vertices), edges=tuple(edges))
    except ValidationError as e:
        raise GraphValidationError(_validation_reason(e))


def parse_vertex_weighted(text: TextSource) -> VertexWeightedDag:
    """Parse the `.vwg` format; vertices keep their declaration order."""
    weights: Dict[str, float] = {}
    edges: List[Tuple[str, str]] = []
    seen = set()
    for number, tokens in data_lines(text):
        kind = tokens[0]
        if kind == "v":
            if len(tokens) != 3:
                raise GraphParseError(number, "expected 'v NAME WEIGHT'")
            if edges:
                raise GraphParseError(number, "vertex line after the first edge line")
            name = tokens[1]
            if name in weights:
                raise GraphValidationError(f"vertex {name!r} declared twice", number)
            weight = _parse_real(tokens[2], number, "weight")
            if not weight >= 0 or not math.isfinite(weight):
                raise GraphValidationError(
                    f"vertex {name!r} has invalid weight {weight!r}", number
                )
            weights[name] = weight
        elif kind == "e":
            if len(tokens) != 3:
                raise GraphParseError(number, "expected 'e SRC DST'")
            source, target = tokens[1], tokens[2]
            for endpoint in (source, target):
                if endpoint not in weights:
                    raise GraphValidationError(
                        f"edge ({source}, {target}) uses unknown vertex {endpoint!r}",
                        number,
                    )
            if not weights[source] < weights[target]:
                raise GraphValidationError(
                    f"edge ({source}, {target}) violates w(u) < w(v): "
                    f"{weights[source]!r} >= {weights[target]!r}",
                    number,
                )
            if (source, target) in seen:
                raise GraphValidationError(
                    f"parallel edge ({source}, {target})", number
                )
            seen.add((source, target))
            edges.append((source, target))
        else:
            raise GraphParseError(number, f"unknown line kind {kind!r}")
    try:
        return VertexWeightedDag(
            vertices=tuple(weights), weights=weights, edges=tuple(edges)
        )
    except ValidationError as e:
        raise GraphValidationError(_validation_reason(e))


def render_edge_list(graph: WeightedDigraph) -> str:
    return "".join(
        f"{edge.source} {edge.target} {edge.cost!r}\n" for edge in graph.edges
    )


def render_vertex_weighted(dag: VertexWeightedDag) -> str:
    vertex_lines = (f"v {v} {dag.weights[v]!r}\n" for v in dag.vertices)
    edge_lines = (f"e {source} {target}\n" for source, target in dag.edges)
    return "".join(vertex_lines) + "".join(edge_lines)


def render_graph(graph: Graph) -> str:
    if isinstance(graph, VertexWeightedDag):
        return render_vertex_weighted(graph)
    return render_edge_list(graph)


def read_lines(path: Union[str, FilePath]) -> List[str]:
    """Decode a UTF-8 file line by line, so a bad byte is reported with its line."""
    lines = []
    for number, raw in enumerate(FilePath(path).read_bytes().splitlines(), start=1):
        try:
            lines.append(raw.decode("utf-8"))
        except UnicodeDecodeError as e:
            raise GraphParseError(number, f"not valid UTF-8 ({e.reason})")
    return lines


def load_graph(path: Union[str, FilePath]) -> Graph:
    """Read a graph file, choosing the format from its suffix."""
    path = FilePath(path)
    if path.suffix == EDGE_LIST_SUFFIX:
        return parse_edge_list(read_lines(path))
    if path.suffix == VERTEX_WEIGHTED_SUFFIX:
        return parse_vertex_weighted(read_lines(path))
    raise GraphError(
        f"cannot tell the format of {path.name}; "
        f"use {EDGE_LIST_SUFFIX} or {VERTEX_WEIGHTED_SUFFIX}"
    )
