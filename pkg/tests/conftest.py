from pathlib import Path
from typing import Callable

import pytest
from hypothesis import settings

from tightpaths.closure import TransactionalDataset, parse_transactions
from tightpaths.config import get_settings
from tightpaths.correspondence import Correspondence, close_order
from tightpaths.graph import (
    VertexWeightedDag,
    WeightedDigraph,
    parse_edge_list,
    parse_vertex_weighted,
)

settings.register_profile(
    "tightpaths", max_examples=500, deadline=None, derandomize=True
)
settings.load_profile("tightpaths")

# Lattice weights are three-decimal floats; their differences need slack.
WEIGHT_TOLERANCE = 1e-9

SIMPLE_GRAPH = """\
# five vertices, two routes from A to E
A B 2
B C 1
C E 1
A D 1
D E 2
"""

DOUBLE_LOOP_GRAPH = """\
A B 2
B C 1
C A 1
A D 1
D E 2
E A 1
"""

LATTICE_GRAPH = """\
v 0.000 0.000
v 0.115 0.115
v 0.379 0.379
v 0.530 0.530
v 1.115 1.115
v 1.700 1.700
e 0.000 0.115
e 0.000 0.379
e 0.115 0.530
e 0.379 0.530
e 0.115 1.115
e 0.530 1.700
e 1.115 1.700
"""

THREE_CLOSURES = """\
a b
a b
a c
"""

CHAIN = ("1", "2", "3", "4")
CHAIN_RELATION = [("1", "2"), ("1", "4"), ("2", "3"), ("3", "4")]


@pytest.fixture
def simple_graph() -> WeightedDigraph:
    return parse_edge_list(SIMPLE_GRAPH)


@pytest.fixture
def double_loop_graph() -> WeightedDigraph:
    return parse_edge_list(DOUBLE_LOOP_GRAPH)


@pytest.fixture
def lattice_dag() -> VertexWeightedDag:
    return parse_vertex_weighted(LATTICE_GRAPH)


@pytest.fixture
def chain_relation() -> Correspondence:
    """Non-convex relation over the chain 1 < 2 < 3 < 4."""
    order = close_order(CHAIN, [("1", "2"), ("2", "3"), ("3", "4")])
    return Correspondence.from_pairs(CHAIN, order, CHAIN_RELATION)


@pytest.fixture
def three_closures() -> TransactionalDataset:
    return parse_transactions(THREE_CLOSURES)


@pytest.fixture
def fresh_settings():
    """Rebuild settings from the environment inside the test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write_file(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return _write_file
