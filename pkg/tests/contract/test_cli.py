"""Contract tests for the corona-spectra command line: goldens and exit codes."""

import json
from pathlib import Path

import pytest

from src.cli.main import (
    EXIT_FAILED,
    EXIT_INTERNAL,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    parse_args,
    run,
)
from src.lib.edge_list import parse_edge_list
from src.lib.errors import FormulaCountError
from src.models.graph import CoronaKind
from src.models.reports import VerifyCell

GOLDENS = Path(__file__).parent / "goldens"


def _golden(name: str) -> str:
    return (GOLDENS / name).read_text(encoding="utf-8")


class TestParseArgs:
    """Test argument parsing and validation"""

    def test_spectrum(self):
        """Test spectrum --graph cycle:4 --alpha 0.5"""
        args = parse_args(["spectrum", "--graph", "cycle:4", "--alpha", "0.5"])
        assert args.verb == "spectrum"
        assert args.graph == "cycle:4"
        assert args.alpha == 0.5

    def test_verify(self):
        """Test hyphenated kinds and comma-separated alpha grids"""
        args = parse_args(
            [
                "verify",
                "--kind",
                "q-vertex",
                "--g1",
                "cycle:4",
                "--g2",
                "complete:2",
                "--alpha-grid",
                "0,0.5,1",
            ]
        )
        assert args.kind is CoronaKind.Q_VERTEX
        assert args.alpha_grid == [0.0, 0.5, 1.0]
        assert args.mode == "spectrum"
        assert args.tol is None

    @pytest.mark.parametrize(
        "argv",
        [
            "predict --kind total --g1 cycle:4 --g2 complete:2 --alpha 1.5".split(),
            "predict --kind corona --g1 cycle:4 --g2 complete:2 --alpha 0".split(),
            ["compose", "--kind", "bogus", "--g1", "cycle:4", "--g2", "complete:2"],
            ["verify", "--kind", "total", "--g1", "cycle:4", "--g2", "complete:2", "--tol", "0"],
            ["transmogrify"],
            ["energy", "--alpha", "0.5"],
            ["energy", "--graph", "cycle:4", "--kind", "total", "--alpha", "0.5"],
            ["cospectral", "--kind", "total"],
        ],
    )
    def test_usage_errors(self, argv):
        """Test invalid command lines exit with status 2"""
        with pytest.raises(SystemExit) as exc_info:
            parse_args(argv)
        assert exc_info.value.code == EXIT_USAGE

    @pytest.mark.parametrize("option", ["--g1", "--g2"])
    def test_missing_edge_list(self, option, tmp_path):
        """Test a missing @path for any graph option exits with status 2"""
        graphs = {"--g1": "cycle:4", "--g2": "complete:2", option: f"@{tmp_path / 'none.txt'}"}
        argv = ["predict", "--kind", "total", "--alpha", "0.5"]
        for name, spec in graphs.items():
            argv += [name, spec]
        with pytest.raises(SystemExit) as exc_info:
            parse_args(argv)
        assert exc_info.value.code == EXIT_USAGE

    def test_existing_edge_list(self, tmp_path):
        """Test an existing @path passes parsing"""
        path = tmp_path / "c4.txt"
        path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
        assert parse_args(["spectrum", "--graph", f"@{path}", "--alpha", "0"]).graph == f"@{path}"


class TestGoldenRuns:
    """Test byte-identical JSON for the documented examples"""

    def test_spectrum(self, capsys):
        """Test spectrum of cycle:4 at alpha 0"""
        assert run(["spectrum", "--graph", "cycle:4", "--alpha", "0"]) == EXIT_OK
        assert capsys.readouterr().out == _golden("spectrum_cycle4_alpha0.json")

    def test_verify(self, capsys):
        """Test verify q-vertex cycle:4 complete:2 over {0, 0.5, 1}"""
        status = run(
            [
                "verify",
                "--kind",
                "q-vertex",
                "--g1",
                "cycle:4",
                "--g2",
                "complete:2",
                "--alpha-grid",
                "0,0.5,1",
            ]
        )
        assert status == EXIT_OK
        assert capsys.readouterr().out == _golden("verify_qvertex_cycle4_complete2.json")

    def test_energy(self, capsys):
        """Test energy of cycle:4 at alpha 0.5"""
        assert run(["energy", "--graph", "cycle:4", "--alpha", "0.5"]) == EXIT_OK
        assert capsys.readouterr().out == _golden("energy_cycle4_alpha05.json")

    def test_repeatable(self, capsys):
        """Test identical commands produce identical bytes"""
        argv = "predict --kind total --g1 cycle:4 --g2 complete:2 --alpha 0.3".split()
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first


class TestVerbs:
    """Test the remaining verbs"""

    def test_generate_round_trip(self, capsys, tmp_path):
        """Test generate output reads back through @path"""
        assert run(["generate", "--graph", "petersen"]) == EXIT_OK
        path = tmp_path / "petersen.txt"
        path.write_text(capsys.readouterr().out, encoding="utf-8")

        assert run(["spectrum", "--graph", f"@{path}", "--alpha", "0"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 10
        assert payload["eigenvalues"][-1] == 3.0

    @pytest.mark.parametrize("kind", ["q-vertex", "q-edge"])
    def test_compose_stdout(self, kind, capsys):
        """Test the 16-vertex, 24-edge composites of C4 and K2"""
        assert run(["compose", "--kind", kind, "--g1", "cycle:4", "--g2", "complete:2"]) == EXIT_OK
        out = capsys.readouterr().out
        header, _, body = out.partition("\n")
        assert header.startswith("# layout ")
        layout = json.loads(header[len("# layout "):])
        assert layout["order"] == 16
        graph = parse_edge_list(out)
        assert (graph.n, graph.m) == (16, 24)
        assert body.startswith("16 24\n")

    def test_compose_out(self, tmp_path):
        """Test --out writes the edge list and the layout side file"""
        out = tmp_path / "total.txt"
        argv = "compose --kind total --g1 cycle:4 --g2 path:3".split() + ["--out", str(out)]
        assert run(argv) == EXIT_OK
        graph = parse_edge_list(out.read_text(encoding="utf-8"))
        layout = json.loads((tmp_path / "total.txt.layout.json").read_text(encoding="utf-8"))
        assert graph.n == layout["order"] == 4 + 4 + 12
        assert len(layout["copy_ranges"]) == 4

    def test_predict(self, capsys):
        """Test predict reports every family"""
        argv = "predict --kind q-edge --g1 complete:4 --g2 complete:2 --alpha 0.5".split()
        assert run(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "q_edge"
        assert len(payload["eigenvalues"]) == payload["order"] == 22

    def test_cospectral_attach(self, capsys):
        """Test a seed-pair certificate"""
        argv = "cospectral --kind splitting --attach complete:2 --alpha-grid 0,1".split()
        assert run(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] is True
        assert payload["seed_names"] == ["shrikhande", "rook4"]
        assert payload["attachment"] == "complete:2"
        assert payload["alpha_grid"] == [0.0, 1.0]
        assert payload["construction"] == "regular_seeds"

    def test_cospectral_base(self, capsys):
        """Test an equal-coronal attachment certificate"""
        argv = ["cospectral", "--kind", "corona", "--base", "cycle:3", "--alpha-grid", "0.5"]
        assert run(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["construction"] == "coronal_attachments"
        assert payload["attachment"] == "cycle:3"

    def test_composite_energy(self, capsys):
        """Test energy of a composite"""
        argv = "energy --kind q-vertex --g1 cycle:4 --g2 complete:2 --alpha 0".split()
        assert run(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["graph"] == "cycle:4 q_vertex complete:2"
        assert payload["energy"] > 0


class TestExitCodes:
    """Test the exit-code matrix"""

    def test_usage(self):
        """Test alpha out of range exits 2"""
        argv = "predict --kind total --g1 cycle:4 --g2 complete:2 --alpha 1.5".split()
        assert run(argv) == EXIT_USAGE

    @pytest.mark.parametrize(
        "argv",
        [
            ["spectrum", "--graph", "hypercube:3", "--alpha", "0"],
            ["predict", "--kind", "total", "--g1", "path:3", "--g2", "complete:2", "--alpha", "0"],
            ["cospectral", "--kind", "total", "--base", "path:3"],
        ],
    )
    def test_invalid_input(self, argv, capsys):
        """Test domain errors exit 2 with a message on stderr"""
        assert run(argv) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_version(self, capsys):
        """Test --version exits 0"""
        assert run(["--version"]) == EXIT_OK
        assert "corona-spectra" in capsys.readouterr().out

    def test_missing_file(self, tmp_path, capsys):
        """Test a missing @path edge list is a usage error"""
        missing = tmp_path / "missing.txt"
        assert run(["spectrum", "--graph", f"@{missing}", "--alpha", "0"]) == EXIT_USAGE
        assert "does not exist" in capsys.readouterr().err

    def test_unwritable_output(self, tmp_path):
        """Test an unwritable --out path exits 3"""
        out = tmp_path / "no_such_dir" / "spectrum.json"
        assert run(["spectrum", "--graph", "cycle:4", "--alpha", "0", "--out", str(out)]) == EXIT_IO

    def test_verification_failure(self, monkeypatch):
        """Test a failing cell exits 1"""

        def failing_cell(kind, g1, g2, alpha, tol):
            return VerifyCell(alpha=alpha, max_deviation=1.0, samples=16, passed=False)

        monkeypatch.setattr(
            "src.services.verification_service.verify_spectrum_cell", failing_cell
        )
        argv = ["verify", "--kind", "total", "--g1", "cycle:4", "--g2", "complete:2"]
        assert run(argv) == EXIT_FAILED

    def test_internal_error(self, monkeypatch, capsys):
        """Test a formula bookkeeping error exits 4 naming the family"""

        def broken(*args, **kwargs):
            raise FormulaCountError("families hold 15 eigenvalues, expected 16", family="total")

        monkeypatch.setattr("src.cli.main.predict_spectrum", broken)
        argv = "predict --kind total --g1 cycle:4 --g2 complete:2 --alpha 0".split()
        assert run(argv) == EXIT_INTERNAL
        assert "family total" in capsys.readouterr().err
