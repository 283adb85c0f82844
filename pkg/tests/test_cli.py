"""CLI contract: exit codes, JSON schema, determinism, expansion loading."""

import json
import pathlib

import pytest
from jsonschema import validate

from twistkit.cli import main
from twistkit.expansion import massuyeau_theta0, table_to_json

SCHEMA = json.loads(
    (pathlib.Path(__file__).parent.parent / "src" / "twistkit" / "report.schema.json").read_text()
)

FAST = ["--trials", "4"]


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(args, capsys):
    code, out, _ = run_cli(args + ["--format", "json"], capsys)
    report = json.loads(out)
    validate(report, SCHEMA)
    return code, report


class TestSubcommands:
    def test_coeffs_payload(self, capsys):
        code, report = run_json(["coeffs", "--config", "I", "--g", "2"], capsys)
        assert code == 0
        assert report["payload"]["m"] == [2, 2, -1]

    def test_table2_payload(self, capsys):
        code, report = run_json(
            ["table2", "--config", "II-a", "--g", "2", "--h", "2"], capsys
        )
        assert code == 0
        coords = report["payload"]["coords"]
        assert coords["L4x"] == ["1/2", "-1/2", "1/24"]
        assert coords["M"] == ["0", "1/2", "-1/12"]
        assert report["payload"]["basis"] == ["u1", "u2", "u3"]

    def test_residual_payload(self, capsys):
        code, report = run_json(
            ["residual", "--config", "IV-a", "--g", "2", "--k1", "1", "--k2", "1"],
            capsys,
        )
        assert code == 0
        residual = report["payload"]["residual"]
        assert residual["degree"] == 8
        assert residual["nonzero"] is True
        assert residual["tensor"]

    def test_lemmas_command(self, capsys):
        code, report = run_json(["lemmas", "--trials", "4"], capsys)
        assert code == 0
        assert report["checks"][0]["name"] == "lemma_suite"

    def test_expansion_check(self, capsys):
        code, report = run_json(["expansion-check", "--g", "2"], capsys)
        assert code == 0
        names = [c["name"] for c in report["checks"]]
        assert names == sorted(names)
        assert "check_boundary" in names
        assert report["payload"]["valid_degree"] == 3

    def test_invalid_configuration_is_usage_error(self, capsys):
        code, out, err = run_cli(["coeffs", "--config", "I", "--g", "1"], capsys)
        assert code == 2
        assert "g >= 2" in err

    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_config_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table2"])
        assert exc.value.code == 2


class TestVerifyAll:
    def test_passes_and_validates(self, capsys):
        code, report = run_json(["verify-all"] + FAST, capsys)
        assert code == 0
        assert report["summary"]["verdict"] == "pass"
        names = [c["name"] for c in report["checks"]]
        assert names == sorted(names)
        assert "check_boundary" in names
        assert "residuals" in names
        assert report["params"]["seed"] == 0
        assert report["params"]["trunc"] == 8

    def test_seven_verdicts_in_residual_check(self, capsys):
        code, report = run_json(["verify-all"] + FAST, capsys)
        residuals = next(c for c in report["checks"] if c["name"] == "residuals")
        assert len(residuals["details"]) == 7
        assert all(
            entry["verdict"] == "not a mapping class"
            for entry in residuals["details"].values()
        )

    def test_byte_identical_reports(self, capsys, tmp_path):
        out1 = tmp_path / "r1.json"
        out2 = tmp_path / "r2.json"
        assert main(["verify-all", "--trials", "3", "--format", "json", "--out", str(out1)]) == 0
        assert main(["verify-all", "--trials", "3", "--format", "json", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_threads_do_not_change_bytes(self, capsys, tmp_path, monkeypatch):
        out1 = tmp_path / "r1.json"
        out2 = tmp_path / "r2.json"
        assert main(["verify-all", "--trials", "3", "--format", "json", "--out", str(out1)]) == 0
        monkeypatch.setenv("TWISTKIT_THREADS", "4")
        assert main(["verify-all", "--trials", "3", "--format", "json", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_flipped_pairing_still_passes(self, capsys):
        code, report = run_json(["verify-all", "--trials", "3", "--pairing-sign", "-"], capsys)
        assert code == 0
        calibration = next(c for c in report["checks"] if c["name"] == "calibration")
        assert calibration["details"]["a1"]["image"] == "b1 a1^-1"

    def test_text_format_mentions_summary(self, capsys):
        code, out, _ = run_cli(["verify-all"] + FAST, capsys)
        assert code == 0
        assert "summary: pass" in out


class TestExpansionLoading:
    def _write_table(self, tmp_path, mutate=None):
        data = table_to_json(massuyeau_theta0(2))
        if mutate:
            mutate(data)
        path = tmp_path / "table.json"
        path.write_text(json.dumps(data))
        return str(path)

    def test_valid_custom_table_passes(self, capsys, tmp_path):
        path = self._write_table(tmp_path)
        code, report = run_json(
            ["verify-all", "--trials", "3", "--expansion", path], capsys
        )
        assert code == 0
        assert report["params"]["expansion"] == path

    def test_corrupted_table_fails_boundary_check(self, capsys, tmp_path):
        def flip_degree_two_of_b1(data):
            for entry in data["entries"]:
                if entry["gen"] == "b1":
                    for term in entry["terms"]:
                        if len(term["word"]) == 2:
                            coeff = term["coeff"]
                            term["coeff"] = coeff[1:] if coeff.startswith("-") else "-" + coeff

        path = self._write_table(tmp_path, flip_degree_two_of_b1)
        code, report = run_json(
            ["verify-all", "--trials", "3", "--expansion", path], capsys
        )
        assert code == 1
        failing = [c["name"] for c in report["checks"] if not c["passed"]]
        assert "check_boundary" in failing

    def test_missing_file_is_io_error(self, capsys):
        code, out, err = run_cli(
            ["verify-all", "--expansion", "/nonexistent/table.json"], capsys
        )
        assert code == 2
        assert "cannot load expansion" in err

    def test_malformed_json_is_io_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, out, err = run_cli(["verify-all", "--expansion", str(path)], capsys)
        assert code == 2

    def test_expansion_check_on_custom_table(self, capsys, tmp_path):
        path = self._write_table(tmp_path)
        code, report = run_json(["expansion-check", "--g", "2", "--expansion", path], capsys)
        assert code == 0
        assert report["payload"]["genus"] == 2
