import pytest

from tests.conftest import LATTICE_GRAPH, SIMPLE_GRAPH, THREE_CLOSURES
from tightpaths import __version__
from tightpaths.cli import main
from tightpaths.cli.common import ExitCode, gamma_values, parse_gamma_range
from tightpaths.exceptions import BenchmarkError
from tightpaths.graph import parse_edge_list, parse_vertex_weighted


@pytest.fixture
def simple_file(write_file):
    return str(write_file("simple.elist", SIMPLE_GRAPH))


@pytest.fixture
def lattice_file(write_file):
    return str(write_file("lattice.vwg", LATTICE_GRAPH))


@pytest.fixture
def dataset_file(write_file):
    return str(write_file("three.td", THREE_CLOSURES))


def lines(text):
    return sorted(text.splitlines())


@pytest.mark.cli
class TestGammaRange:
    def test_parse(self):
        assert parse_gamma_range("0:2:5") == (0.0, 2.0, 5)
        assert parse_gamma_range("1:3") == (1.0, 3.0, None)

    def test_values(self):
        assert gamma_values(0, 2, 5) == [0, 0.5, 1, 1.5, 2]

    def test_default_count(self):
        assert len(gamma_values(0, 1)) == 25

    @pytest.mark.parametrize("low,high,count", [(0, 1, 1), (2, 1, 5), (1, 1, 3)])
    def test_invalid(self, low, high, count):
        with pytest.raises(BenchmarkError):
            gamma_values(low, high, count)


@pytest.mark.cli
class TestUsage:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_no_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == ExitCode.USAGE

    def test_missing_threshold(self, simple_file, capsys):
        assert main(["paths", simple_file]) == ExitCode.USAGE
        assert "--gamma" in capsys.readouterr().err

    def test_both_thresholds(self, simple_file):
        with pytest.raises(SystemExit) as excinfo:
            main(["paths", simple_file, "--gamma", "1", "--gamma-range", "0:1:2"])
        assert excinfo.value.code == ExitCode.USAGE

    @pytest.mark.parametrize("gamma", ["-1", "abc", "inf"])
    def test_bad_threshold(self, simple_file, gamma):
        with pytest.raises(SystemExit) as excinfo:
            main(["paths", simple_file, "--gamma", gamma])
        assert excinfo.value.code == ExitCode.USAGE

    @pytest.mark.parametrize("gamma_range", ["0-1", "0:inf:3"])
    def test_bad_gamma_range(self, simple_file, gamma_range):
        with pytest.raises(SystemExit) as excinfo:
            main(["paths", simple_file, "--gamma-range", gamma_range])
        assert excinfo.value.code == ExitCode.USAGE

    def test_unknown_algorithm(self, lattice_file):
        with pytest.raises(SystemExit) as excinfo:
            main(["pairs", lattice_file, "--gamma", "1", "--algo", "bogus"])
        assert excinfo.value.code == ExitCode.USAGE


@pytest.mark.cli
class TestPaths:
    def test_simple_graph(self, simple_file, capsys):
        assert main(["paths", simple_file, "--gamma", "3"]) == ExitCode.SUCCESS
        assert lines(capsys.readouterr().out) == [
            "A B C\t3",
            "A D E\t3",
            "B C E\t2",
        ]

    def test_root(self, simple_file, capsys):
        assert main(["paths", simple_file, "--gamma", "3", "--root", "B"]) == 0
        assert capsys.readouterr().out == "B C E\t2\n"

    def test_gamma_range(self, simple_file, capsys):
        assert main(["paths", simple_file, "--gamma-range", "0:3:2"]) == 0
        output = capsys.readouterr().out
        assert output.startswith("# gamma=0\n")
        assert "# gamma=3\n" in output
        assert output.count("\n") == 2 + 5 + 3

    def test_out_file(self, simple_file, tmp_path, capsys):
        out = tmp_path / "paths.txt"
        assert main(["paths", simple_file, "--gamma", "0", "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert len(out.read_text().splitlines()) == 5

    def test_vertex_weighted_input(self, lattice_file, capsys):
        args = ["paths", lattice_file, "--gamma", "0.9", "--tolerance", "1e-9"]
        assert main(args) == 0
        paths = [line.split("\t")[0] for line in lines(capsys.readouterr().out)]
        assert paths == [
            "0.000 0.115 0.530",
            "0.000 0.379 0.530",
            "1.115 1.700",
        ]

    def test_convert(self, lattice_file, capsys):
        assert main(["paths", lattice_file, "--convert"]) == 0
        graph = parse_edge_list(capsys.readouterr().out)
        assert len(graph.edges) == 7

    def test_unknown_root(self, simple_file, capsys):
        assert main(["paths", simple_file, "--gamma", "1", "--root", "Z"]) == 2
        assert "unknown vertex 'Z'" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        missing = str(tmp_path / "missing.elist")
        assert main(["paths", missing, "--gamma", "1"]) == ExitCode.VALIDATION

    def test_invalid_graph(self, write_file, capsys):
        path = write_file("bad.elist", "A B 1\nB C -2\n")
        assert main(["paths", str(path), "--gamma", "1"]) == ExitCode.VALIDATION
        assert "line 2" in capsys.readouterr().err

    @pytest.mark.parametrize("name", ["bad.elist", "bad.vwg"])
    def test_invalid_utf8(self, tmp_path, name, capsys):
        path = tmp_path / name
        path.write_bytes(b"A B 1\n\xff\xfe C 2\n")
        assert main(["paths", str(path), "--gamma", "3"]) == ExitCode.VALIDATION
        assert "line 2: not valid UTF-8" in capsys.readouterr().err


@pytest.mark.cli
class TestPairs:
    @pytest.mark.parametrize("algo", ["tighten", "stacked", "weights"])
    def test_lattice(self, lattice_file, algo, capsys):
        args = ["pairs", lattice_file, "--gamma", "0.9", "--algo", algo]
        assert main(args + ["--tolerance", "1e-9"]) == 0
        assert capsys.readouterr().out == "0.000\t0.530\n1.115\t1.700\n"

    @pytest.mark.parametrize("algo", ["tighten", "stacked", "weights"])
    def test_root(self, lattice_file, algo, capsys):
        args = ["pairs", lattice_file, "--gamma", "1", "--algo", algo]
        assert main(args + ["--root", "0.115", "--tolerance", "1e-9"]) == 0
        assert capsys.readouterr().out == "0.115\t1.115\n"

    def test_sorted_by_weight(self, lattice_file, capsys):
        assert main(["pairs", lattice_file, "--gamma", "0.5"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "0.000\t0.115",
            "0.000\t0.379",
            "0.115\t0.530",
            "0.379\t0.530",
            "1.115\t1.115",
            "1.700\t1.700",
        ]

    @pytest.mark.parametrize("algo", ["tighten", "stacked", "weights"])
    def test_unknown_root(self, lattice_file, algo, capsys):
        args = ["pairs", lattice_file, "--gamma", "1", "--algo", algo]
        assert main(args + ["--root", "nope"]) == ExitCode.VALIDATION
        assert "unknown vertex 'nope'" in capsys.readouterr().err

    def test_needs_vertex_weights(self, simple_file, capsys):
        assert main(["pairs", simple_file, "--gamma", "1"]) == ExitCode.VALIDATION
        assert ".vwg" in capsys.readouterr().err

    def test_invalid_weights(self, write_file):
        path = write_file("bad.vwg", "v u 1\nv w 1\ne u w\n")
        assert main(["pairs", str(path), "--gamma", "1"]) == ExitCode.VALIDATION


@pytest.mark.cli
class TestTighten:
    def test_output(self, lattice_file, capsys):
        assert main(["tighten", lattice_file, "--gamma", "2"]) == 0
        assert capsys.readouterr().out == "0.000\t1.700\n"

    def test_debug(self, lattice_file, capsys):
        args = ["tighten", lattice_file, "--gamma", "0.9", "--debug"]
        assert main(args + ["--tolerance", "1e-9"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "0.000\t0.530\n1.115\t1.700\n"
        assert "## phase build: 12 pairs\n" in captured.err
        assert "## phase left: 6 pairs\n" in captured.err
        assert "## phase right: 2 pairs\n" in captured.err
        assert "0.530: 0.000 0.115 0.379 0.530\n" in captured.err


@pytest.mark.cli
class TestMine:
    def test_lattice(self, dataset_file, capsys):
        assert main(["mine", dataset_file, "--emit", "lattice"]) == 0
        assert capsys.readouterr().out == (
            "c {a} 3\nc {a,b} 2\nc {a,c} 1\nh {a} {a,b}\nh {a} {a,c}\n"
        )

    def test_vertex_weighted(self, dataset_file, capsys):
        assert main(["mine", dataset_file]) == 0
        dag = parse_vertex_weighted(capsys.readouterr().out)
        assert dag.vertices == ("{a}", "{a,b}", "{a,c}")
        assert dag.weights["{a}"] == 0

    def test_minimum_support(self, dataset_file, capsys):
        assert main(["mine", dataset_file, "--emit", "lattice", "--minsupp", "2"]) == 0
        assert capsys.readouterr().out == "c {a} 3\nc {a,b} 2\nh {a} {a,b}\n"

    def test_nothing_frequent(self, dataset_file):
        assert main(["mine", dataset_file, "--minsupp", "4"]) == ExitCode.VALIDATION

    @pytest.mark.parametrize("command", [["mine"], ["antecedents", "--conf", "0.5"]])
    def test_invalid_utf8(self, tmp_path, command, capsys):
        path = tmp_path / "bad.td"
        path.write_bytes(b"a b\nc \xff\n")
        assert main([command[0], str(path)] + command[1:]) == ExitCode.VALIDATION
        assert "line 2: not valid UTF-8" in capsys.readouterr().err

    def test_empty_dataset(self, write_file):
        path = write_file("empty.td", "# no transactions\n")
        assert main(["mine", str(path)]) == ExitCode.VALIDATION

    def test_mined_graph_feeds_pairs(self, dataset_file, tmp_path, capsys):
        out = tmp_path / "three.vwg"
        assert main(["mine", dataset_file, "--out", str(out)]) == 0
        args = ["pairs", str(out), "--gamma", "0.51"]
        assert main(args + ["--tolerance", "1e-9"]) == 0
        assert capsys.readouterr().out == "{a}\t{a,b}\n{a,c}\t{a,c}\n"


@pytest.mark.cli
class TestAntecedents:
    def test_output(self, dataset_file, capsys):
        assert main(["antecedents", dataset_file, "--conf", "0.6"]) == 0
        assert capsys.readouterr().out == "a -> a b\t0.666667\na c -> a c\t1.000000\n"

    @pytest.mark.parametrize("conf", ["0", "1.5", "high"])
    def test_invalid_confidence(self, dataset_file, conf, capsys):
        assert main(["antecedents", dataset_file, "--conf", conf]) == 2
        assert "invalid threshold" in capsys.readouterr().err

    def test_confidence_required(self, dataset_file):
        with pytest.raises(SystemExit) as excinfo:
            main(["antecedents", dataset_file])
        assert excinfo.value.code == ExitCode.USAGE
