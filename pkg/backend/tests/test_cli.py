import pytest
from typer.testing import CliRunner

from app import __version__
from app.main import cli

runner = CliRunner()


def invoke(*args):
    return runner.invoke(cli, [str(a) for a in args])


class TestSolve:

    def test_suite_problem(self):
        result = invoke("solve", "--problem", "f1", "--x0", "1.7")
        assert result.exit_code == 0
        assert "Converged" in result.output

    def test_expression_with_trace(self):
        result = invoke("solve", "--expr", "x^2 - 2", "--x0", "1.5", "--digits", 60, "--tol", "1e-40", "--trace")
        assert result.exit_code == 0
        assert "iterates" in result.output

    def test_no_real_root_exits_one(self):
        result = invoke("solve", "--expr", "x^2 + 1", "--x0", "0.5", "--digits", 60, "--max-iter", 3)
        assert result.exit_code == 1

    def test_coc_row(self):
        result = invoke(
            "solve", "--problem", "f1", "--x0", "1.7", "--method", "steffensen",
            "--digits", 300, "--tol", "1e-200", "--coc",
        )
        assert result.exit_code == 0
        assert "COC" in result.output

    @pytest.mark.parametrize("args", [
        ["--problem", "f1", "--x0", "abc"],
        ["--problem", "f1", "--expr", "x - 1", "--x0", "1"],
        ["--x0", "1"],
        ["--problem", "f9", "--x0", "1"],
        ["--problem", "f1"],
        ["--problem", "f1", "--x0", "1.7", "--digits", 20],
        ["--expr", "x +* 2", "--x0", "1"],
        ["--problem", "f1", "--x0", "1.7", "--bogus"],
        ["--problem", "f1", "--x0", "1.7", "--method", "halley"],
    ])
    def test_usage_errors(self, args):
        assert invoke("solve", *args).exit_code == 2


class TestConfigFile:

    def test_values_from_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("digits=60\ntol=1e-40\nx0=1.5\nexpr='x^2 - 2'\n")
        result = invoke("solve", "--config", path)
        assert result.exit_code == 0
        assert "60 digits" in result.output

    def test_flag_overrides_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("digits=60\ntol=1e-40\nx0=1.5\nexpr='x^2 - 2'\nmax-iter=50\n")
        result = invoke("solve", "--config", path, "--digits", 80)
        assert result.exit_code == 0
        assert "80 digits" in result.output

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("digits=60\ncolour=blue\n")
        assert invoke("solve", "--config", path).exit_code == 2

    def test_missing_file(self, tmp_path):
        assert invoke("solve", "--config", tmp_path / "absent.cfg").exit_code == 2


class TestBench:

    def test_non_comparable_run_writes_csv(self, tmp_path):
        out = tmp_path / "bench.csv"
        result = invoke(
            "bench", "--digits", 100, "--tol", "1e-10", "--format", "csv", "--out", out, "--workers", 1
        )
        assert result.exit_code == 0
        assert "non-comparable" in result.output
        lines = out.read_text().splitlines()
        assert len(lines) == 22
        assert lines[0].startswith("function,guess,status")

    def test_unwritable_output(self, tmp_path):
        blocker = tmp_path / "file.txt"
        blocker.write_text("")
        result = invoke("bench", "--digits", 100, "--tol", "1e-10", "--out", blocker / "bench.md", "--workers", 1)
        assert result.exit_code == 3

    def test_bad_format(self):
        assert invoke("bench", "--format", "html").exit_code == 2


class TestBasins:

    def test_writes_ppm(self, tmp_path):
        result = invoke(
            "basins", "--poly", "z3-1", "--method", "steffensen", "--grid", 32,
            "--max-iter-basin", 30, "--out", tmp_path, "--workers", 1,
        )
        assert result.exit_code == 0
        path = tmp_path / "basins_z3-1_steffensen.ppm"
        assert path.stat().st_size == len(b"P6\n32 32\n255\n") + 32 * 32 * 3

    def test_one_image_per_pair(self, tmp_path):
        result = invoke(
            "basins", "--poly", "z3-1", "--poly", "1,0,-1", "--method", "newton", "--method", "om8",
            "--grid", 16, "--max-iter-basin", 20, "--out", tmp_path, "--workers", 1,
        )
        assert result.exit_code == 0
        assert len(list(tmp_path.glob("*.ppm"))) == 4

    @pytest.mark.parametrize("args", [
        ["--poly", "z1-1"],
        ["--poly", "abc"],
        ["--grid", 8],
        ["--region", "1,1,-2,2"],
        ["--region", "-2,2"],
        ["--alpha", "0"],
    ])
    def test_usage_errors(self, tmp_path, args):
        assert invoke("basins", *args, "--out", tmp_path, "--workers", 1).exit_code == 2


class TestInfoCommands:

    def test_weights(self):
        result = invoke("weights")
        assert result.exit_code == 0
        assert "Efficiency index" in result.output

    def test_weights_needs_digits(self):
        assert invoke("weights", "--digits", 10).exit_code == 2

    def test_problems(self):
        result = invoke("problems")
        assert result.exit_code == 0
        assert "f7" in result.output

    def test_version(self):
        result = invoke("version")
        assert result.exit_code == 0
        assert __version__ in result.output
