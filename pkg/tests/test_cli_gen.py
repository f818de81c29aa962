import pytest

from tests.conftest import DOUBLE_LOOP_GRAPH
from tightpaths.cli import main
from tightpaths.cli.common import ExitCode
from tightpaths.cli.gen import (
    DOUBLE_LOOP,
    LAYERED_LATTICE,
    RANDOM_DAG,
    TRANSACTIONS,
    double_loop,
    generate_synthetic,
    layered_lattice,
    random_dag,
    random_transactions,
)
from tightpaths.closure import parse_transactions
from tightpaths.exceptions import GeneratorError
from tightpaths.graph import parse_edge_list, parse_vertex_weighted
from tightpaths.tightpath import tight_paths_from_root


@pytest.mark.cli
class TestDoubleLoop:
    def test_two_loops(self):
        assert double_loop(2) == parse_edge_list(DOUBLE_LOOP_GRAPH)

    def test_three_loops(self):
        graph = double_loop(3)
        assert graph.vertices == ("A", "B", "C", "D", "E", "F", "G")
        assert len(tight_paths_from_root(graph, "A", 8)) == 9

    def test_every_loop_costs_four(self):
        graph = double_loop(5)
        for first, cost in graph.successors("A"):
            [(second, middle)] = graph.successors(first)
            [(hub, back)] = graph.successors(second)
            assert hub == "A"
            assert cost + middle + back == 4

    def test_no_loops(self):
        with pytest.raises(GeneratorError):
            double_loop(0)


@pytest.mark.cli
class TestLayeredLattice:
    def test_small(self):
        dag = layered_lattice(layers=2, width=2, fanout=2)
        assert len(dag.vertices) == 6
        assert len(dag.edges) == 8
        assert dag.topological_order[0] == "bottom"
        assert dag.topological_order[-1] == "top"

    def test_weights_follow_layers(self):
        dag = layered_lattice(layers=3, width=4, fanout=2, seed=7)
        for name in dag.vertices:
            if name.startswith("n"):
                layer = int(name[1:].split("_")[0])
                assert layer <= dag.weights[name] <= layer + 0.5

    def test_fanout(self):
        dag = layered_lattice(layers=3, width=4, fanout=2)
        assert len(dag.successors("n1_0")) == 2
        assert dag.successors("n3_0") == ("top",)

    @pytest.mark.parametrize("sizes", [(0, 3, 2), (2, 0, 2), (2, 3, 0)])
    def test_degenerate(self, sizes):
        with pytest.raises(GeneratorError):
            layered_lattice(*sizes)


@pytest.mark.cli
class TestRandomInputs:
    def test_random_dag(self):
        dag = random_dag(vertices=12, density=0.5, seed=3)
        assert len(dag.vertices) == 12
        assert dag.weights["v0"] == 0

    def test_dense_dag(self):
        dag = random_dag(vertices=5, density=1.0)
        assert len(dag.edges) == 10

    def test_invalid_density(self):
        with pytest.raises(GeneratorError):
            random_dag(density=1.5)

    def test_transactions(self):
        dataset = random_transactions(items=4, transactions=20, seed=1)
        assert len(dataset.transactions) == 20
        assert set(dataset.items) <= set("abcd")
        assert all(dataset.transactions)

    def test_deterministic(self):
        for kind in (LAYERED_LATTICE, RANDOM_DAG, TRANSACTIONS):
            assert generate_synthetic(kind, seed=5) == generate_synthetic(kind, seed=5)
        assert generate_synthetic(RANDOM_DAG, seed=1) != generate_synthetic(
            RANDOM_DAG, seed=2
        )

    def test_unknown_kind(self):
        with pytest.raises(GeneratorError):
            generate_synthetic("grid")


@pytest.mark.cli
class TestGenCommand:
    def test_double_loop(self, capsys):
        assert main(["gen", DOUBLE_LOOP]) == ExitCode.SUCCESS
        graph = parse_edge_list(capsys.readouterr().out)
        assert graph == parse_edge_list(DOUBLE_LOOP_GRAPH)

    def test_layered_lattice(self, capsys):
        args = ["gen", LAYERED_LATTICE, "--layers", "2", "--width", "2"]
        assert main(args) == 0
        assert len(parse_vertex_weighted(capsys.readouterr().out).vertices) == 6

    def test_transactions_to_file(self, tmp_path):
        out = tmp_path / "toy.td"
        assert main(["gen", TRANSACTIONS, "--items", "3", "--out", str(out)]) == 0
        dataset = parse_transactions(out.read_text())
        assert len(dataset.transactions) == 10

    def test_generated_input_verifies(self, tmp_path, capsys):
        out = tmp_path / "random.vwg"
        assert main(["gen", RANDOM_DAG, "--vertices", "7", "--out", str(out)]) == 0
        args = ["verify", str(out), "--gamma-range", "0:3:7", "--tolerance", "1e-9"]
        assert main(args) == 0
        assert capsys.readouterr().out.count(" match ") == 7

    @pytest.mark.parametrize(
        "args",
        [
            [DOUBLE_LOOP, "--loops", "0"],
            [LAYERED_LATTICE, "--width", "0"],
            [RANDOM_DAG, "--density", "2"],
            [TRANSACTIONS, "--items", "0"],
        ],
    )
    def test_degenerate_sizes(self, args, capsys):
        assert main(["gen"] + args) == ExitCode.VALIDATION
        assert "error" in capsys.readouterr().err

    def test_unknown_kind(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "grid"])
        assert excinfo.value.code == ExitCode.USAGE
