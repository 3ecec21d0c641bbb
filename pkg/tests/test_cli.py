import io
from pathlib import Path

import pandas as pd
import pytest

from zerodensity.cli import EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, OUTPUT_DIR_ENV, main
from zerodensity.config import ParameterSet
from zerodensity.utils import parse_key_value_text

pytestmark = pytest.mark.filterwarnings("ignore:delta < 1")

ROOT = Path(__file__).resolve().parent.parent


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBound:
    def test_table2_defaults_csv(self, capsys):
        code, out, _ = run(capsys, "bound", "--sigma", "0.9", "--table2-defaults", "--format", "csv")
        assert code == EXIT_OK
        row = pd.read_csv(io.StringIO(out)).iloc[0]
        assert row["form"] == "log_form"
        assert row["value"] <= 130.07 * 1.01

    def test_table1_power_form(self, capsys):
        code, out, _ = run(capsys, "bound", "--sigma", "0.9", "--table1-defaults", "--form", "power")
        assert code == EXIT_OK
        record = parse_key_value_text(out)
        assert float(record["A"]) == pytest.approx(11.499, rel=5e-3)

    def test_headline_with_constants(self, capsys):
        code, out, _ = run(capsys, "bound", "--headline", "--show-constants", "--compare-ramare")
        assert code == EXIT_OK
        record = parse_key_value_text(out)
        assert float(record["B"]) == pytest.approx(3.186, rel=5e-3)
        assert "scriptC1" in record
        assert float(record["ramare"]) > float(record["value"])

    def test_set_override(self, capsys, table2_headline_params):
        code, out, _ = run(capsys, "bound", "--sigma", "0.9", "--table2-defaults", "--set", "d=9.0")
        assert code == EXIT_OK
        _, reference, _ = run(capsys, "bound", "--sigma", "0.9", "--table2-defaults")
        assert out != reference

    def test_invalid_sigma_from_params_file(self, capsys, tmp_path, table2_headline_params):
        path = tmp_path / "params.txt"
        path.write_text(table2_headline_params.replace(sigma=0.5).to_text())
        code, _, err = run(capsys, "bound", "--params-file", str(path))
        assert code == EXIT_VALIDATION
        assert "sigma" in err

    def test_unknown_parameter(self, capsys):
        code, _, err = run(capsys, "bound", "--sigma", "0.9", "--table2-defaults", "--set", "gamma=1")
        assert code == EXIT_USAGE
        assert "gamma" in err

    def test_malformed_value(self, capsys):
        code, _, _ = run(capsys, "bound", "--sigma", "0.9", "--table2-defaults", "--set", "k=one")
        assert code == EXIT_USAGE

    def test_missing_parameters(self, capsys):
        code, _, err = run(capsys, "bound", "--sigma", "0.9")
        assert code == EXIT_USAGE
        assert "missing" in err


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "plot")
        assert code == EXIT_USAGE
        assert "invalid choice" in err

    def test_exclusive_presets(self, capsys):
        code, _, _ = run(capsys, "bound", "--sigma", "0.9", "--table1-defaults", "--table2-defaults")
        assert code == EXIT_USAGE


class TestTable:
    def test_table2_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--which", "2", "--format", "csv", "--quiet")
        assert code == EXIT_OK
        assert len(pd.read_csv(io.StringIO(out))) == 20

    def test_table1_subset(self, capsys):
        code, out, _ = run(capsys, "table", "--which", "1", "--sigma", "0.6", "0.9", "--format", "tsv", "--quiet")
        assert code == EXIT_OK
        frame = pd.read_csv(io.StringIO(out), sep="\t", float_precision="round_trip")
        assert frame["sigma_0"].tolist() == [0.6, 0.9]

    def test_unknown_row(self, capsys):
        code, _, _ = run(capsys, "table", "--which", "1", "--sigma", "0.555", "--quiet")
        assert code == EXIT_USAGE

    def test_output_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
        code, out, _ = run(capsys, "table", "--which", "2", "--sigma", "0.9", "--output", "t2.csv",
                           "--format", "csv", "--quiet")
        assert code == EXIT_OK
        assert out == ""
        assert (tmp_path / "t2.csv").exists()


class TestOptimize:
    @pytest.mark.parametrize("flag", ["--grid-file", "--config"])
    def test_table2_mode(self, capsys, tmp_path, flag):
        path = tmp_path / "best.txt"
        code, _, _ = run(capsys, "optimize", "--sigma", "0.9", "--mode", "table2", flag, str(ROOT / "config.yaml"),
                         "--quiet", "--output", str(path))
        assert code == EXIT_OK
        text = path.read_text()
        assert text.startswith("# objective = min_bound_at_H0")
        params = ParameterSet.from_text(text)
        assert (params.k, params.alpha, params.delta, params.H_gap) == (1.0, 0.324, 0.3, 1e-6)
        assert float(text.splitlines()[1].rsplit("value = ", 1)[1]) <= 130.07 * 1.01

    def test_table1_mode(self, capsys):
        code, out, _ = run(capsys, "optimize", "--sigma", "0.9", "--mode", "table1", "--quiet")
        assert code == EXIT_OK
        assert out.startswith("# objective = min_A")
        assert ParameterSet.from_text(out).H_gap == 1.0

    def test_unknown_mode(self, capsys):
        code, _, _ = run(capsys, "optimize", "--sigma", "0.9", "--mode", "table3")
        assert code == EXIT_USAGE

    def test_round_trip_through_params_file(self, capsys, tmp_path):
        path = tmp_path / "best.txt"
        code, _, _ = run(capsys, "optimize", "--sigma", "0.9", "--grid-file", str(ROOT / "config_table2.yaml"),
                         "--quiet", "--output", str(path))
        assert code == EXIT_OK
        text = path.read_text()
        assert text.startswith("# objective = min_bound_at_H0")
        params = ParameterSet.from_text(text)
        reported = float(text.splitlines()[1].rsplit("value = ", 1)[1])

        code, out, _ = run(capsys, "bound", "--params-file", str(path), "--format", "csv")
        assert code == EXIT_OK
        assert pd.read_csv(io.StringIO(out), float_precision="round_trip").iloc[0]["value"] == reported
        assert params.H_gap == 1e-6


class TestVerify:
    @pytest.mark.parametrize("lemma", ["mobius", "lambda", "mv", "divisor", "weight"])
    def test_lemmas_pass(self, capsys, lemma):
        code, out, _ = run(capsys, "verify", "--lemma", lemma, "--format", "csv", "--quiet")
        assert code == EXIT_OK
        frame = pd.read_csv(io.StringIO(out))
        assert len(frame) > 0

    def test_caveats_are_reported(self, capsys):
        code, out, _ = run(capsys, "verify", "--lemma", "mobius", "--X", "10")
        assert code == EXIT_OK
        assert "hypothesis requires" in out

    def test_out_of_domain(self, capsys):
        code, _, _ = run(capsys, "verify", "--lemma", "lambda", "--X", "100")
        assert code == EXIT_VALIDATION
