import math

import pytest
from pydantic import ValidationError

from tightpaths.exceptions import UnknownVertexError
from tightpaths.graph import INFINITY, Edge, VertexWeightedDag, WeightedDigraph


@pytest.mark.graph
class TestWeightedDigraph:
    def test_from_edges_vertex_order(self):
        graph = WeightedDigraph.from_edges([("B", "C", 1.0), ("A", "B", 2.0)])
        assert graph.vertices == ("B", "C", "A")

    def test_isolated_vertices_kept(self):
        graph = WeightedDigraph.from_edges([("A", "B", 1.0)], vertices=("Z",))
        assert graph.vertices == ("Z", "A", "B")
        assert graph.successors("Z") == ()

    @pytest.mark.parametrize("cost", [0.0, -1.0, math.inf, math.nan])
    def test_invalid_cost(self, cost):
        with pytest.raises(ValidationError):
            Edge(source="A", target="B", cost=cost)

    def test_unknown_endpoint(self):
        with pytest.raises(ValidationError):
            WeightedDigraph(
                vertices=("A",), edges=(Edge(source="A", target="B", cost=1.0),)
            )

    def test_parallel_edges(self):
        with pytest.raises(ValidationError):
            WeightedDigraph.from_edges([("A", "B", 1.0), ("A", "B", 2.0)])

    def test_duplicate_vertices(self):
        with pytest.raises(ValidationError):
            WeightedDigraph(vertices=("A", "A"))

    def test_self_loop(self):
        graph = WeightedDigraph.from_edges([("X", "X", 1.0)])
        assert graph.successors("X") == (("X", 1.0),)
        assert graph.min_predecessor_cost("X") == 1.0

    def test_immutable(self, simple_graph):
        with pytest.raises(TypeError):
            simple_graph.vertices = ()


@pytest.mark.graph
class TestSuccessors:
    def test_hub(self, double_loop_graph):
        assert double_loop_graph.successors("A") == (("B", 2.0), ("D", 1.0))

    def test_sink(self, simple_graph):
        assert simple_graph.successors("E") == ()

    def test_unknown_vertex(self, simple_graph):
        with pytest.raises(UnknownVertexError) as excinfo:
            simple_graph.successors("Z")
        assert excinfo.value.vertex == "Z"

    def test_predecessors(self, simple_graph):
        assert simple_graph.predecessors("E") == (("C", 1.0), ("D", 2.0))


@pytest.mark.graph
class TestMinPredecessorCost:
    def test_hub(self, double_loop_graph):
        assert double_loop_graph.min_predecessor_cost("A") == 1.0

    def test_source(self, simple_graph):
        cost = simple_graph.min_predecessor_cost("A")
        assert cost == INFINITY
        assert cost + 5 == INFINITY
        assert cost > 1e308

    def test_sink(self, simple_graph):
        assert simple_graph.min_predecessor_cost("E") == 1.0

    def test_unknown_vertex(self, simple_graph):
        with pytest.raises(UnknownVertexError):
            simple_graph.min_predecessor_cost("Z")


@pytest.mark.graph
class TestVertexWeightedDag:
    def test_equal_weights(self):
        with pytest.raises(ValidationError) as excinfo:
            VertexWeightedDag(
                vertices=("u", "v"), weights={"u": 1.0, "v": 1.0}, edges=(("u", "v"),)
            )
        assert "(u, v)" in str(excinfo.value)

    def test_decreasing_weights(self):
        with pytest.raises(ValidationError):
            VertexWeightedDag(
                vertices=("u", "v"), weights={"u": 2.0, "v": 1.0}, edges=(("u", "v"),)
            )

    def test_missing_weight(self):
        with pytest.raises(ValidationError):
            VertexWeightedDag(vertices=("u", "v"), weights={"u": 1.0})

    def test_single_vertex(self):
        dag = VertexWeightedDag(vertices=("u",), weights={"u": 0.5})
        assert dag.successors("u") == ()
        assert dag.min_predecessor_cost("u") == INFINITY

    def test_topological_order(self):
        dag = VertexWeightedDag(
            vertices=("c", "a", "b", "d"),
            weights={"a": 0.0, "b": 1.0, "c": 2.0, "d": 1.0},
        )
        assert dag.topological_order == ("a", "b", "d", "c")

    def test_min_predecessor_cost(self, lattice_dag):
        assert lattice_dag.min_predecessor_cost("0.530") == pytest.approx(0.151)
        assert lattice_dag.min_predecessor_cost("1.700") == pytest.approx(0.585)

    def test_unknown_vertex(self, lattice_dag):
        with pytest.raises(UnknownVertexError):
            lattice_dag.weight("2.000")


@pytest.mark.graph
class TestReachabilityClosure:
    def test_sink_reaches_everything(self, lattice_dag):
        closure = lattice_dag.reachability_closure()
        assert set(closure.lists["1.700"]) == set(lattice_dag.vertices)

    def test_source(self, lattice_dag):
        assert lattice_dag.reachability_closure().lists["0.000"] == ("0.000",)

    def test_chain(self):
        dag = VertexWeightedDag(
            vertices=("a", "b", "c"),
            weights={"a": 0.0, "b": 1.0, "c": 2.0},
            edges=(("a", "b"), ("b", "c")),
        )
        assert dag.reachability_closure().lists == {
            "a": ("a",),
            "b": ("a", "b"),
            "c": ("a", "b", "c"),
        }

    def test_topologically_sorted(self, lattice_dag):
        closure = lattice_dag.reachability_closure()
        position = {v: i for i, v in enumerate(lattice_dag.topological_order)}
        for entries in closure.lists.values():
            assert [position[v] for v in entries] == sorted(
                position[v] for v in entries
            )

    def test_cached(self, lattice_dag):
        assert lattice_dag.reachability_closure() is lattice_dag.reachability_closure()


@pytest.mark.graph
class TestToEdgeWeighted:
    def test_weight_difference(self, lattice_dag):
        graph = lattice_dag.to_edge_weighted()
        costs = {(e.source, e.target): e.cost for e in graph.edges}
        assert costs[("0.115", "1.115")] == pytest.approx(1.0)
        assert costs[("0.000", "0.115")] + costs[("0.115", "0.530")] == pytest.approx(
            0.530
        )

    def test_same_structure(self, lattice_dag):
        graph = lattice_dag.to_edge_weighted()
        assert graph.vertices == lattice_dag.vertices
        assert [(e.source, e.target) for e in graph.edges] == list(lattice_dag.edges)
        assert all(edge.cost > 0 for edge in graph.edges)
