from tightpaths.graph.base import (  # noqa: F401
    INFINITY,
    Edge,
    VertexWeightedDag,
    WeightedDigraph,
)
from tightpaths.graph.io import (  # noqa: F401
    load_graph,
    parse_edge_list,
    parse_vertex_weighted,
    render_edge_list,
    render_graph,
    render_vertex_weighted,
)
