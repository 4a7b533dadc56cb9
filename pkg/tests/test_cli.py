import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from minkcurves.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def rows_from_csv(text):
    lines = [ln for ln in text.strip().splitlines() if ln]
    header = lines[0].split(",")
    data = [[float(x) for x in ln.split(",")] for ln in lines[1:]]
    return header, data


class TestSample:
    def test_row_count_and_header(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.1", "--t-max", "2", "--count", "64"])
        assert res.exit_code == 0
        header, data = rows_from_csv(res.output)
        assert header == ["t", "x1", "x2", "x3"]
        assert len(data) == 64

    def test_m_must_exceed_one(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "1",
                                   "--t-min", "0.1", "--t-max", "2"])
        assert res.exit_code == 2
        assert "m must exceed 1" in res.output

    def test_t_min_positive(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0", "--t-max", "2"])
        assert res.exit_code == 2

    def test_count_at_least_two(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.1", "--t-max", "2", "--count", "1"])
        assert res.exit_code == 2

    def test_anti_family_drift_column_monotone(self, runner):
        res = runner.invoke(main, ["sample", "--family", "anti-salkowski", "--m", "2",
                                   "--t-min", "0.1", "--t-max", "2", "--count", "32"])
        assert res.exit_code == 0
        _, data = rows_from_csv(res.output)
        x3 = [row[3] for row in data]
        assert all(b > a for a, b in zip(x3, x3[1:]))

    def test_json_format(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.1", "--t-max", "1", "--count", "4",
                                   "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["columns"] == ["t", "x1", "x2", "x3"]
        assert len(payload["rows"]) == 4

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "curve.csv"
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.1", "--t-max", "1", "--count", "8",
                                   "-o", str(out)])
        assert res.exit_code == 0
        header, data = rows_from_csv(out.read_text())
        assert len(data) == 8

    def test_full_precision_round_trip(self, runner):
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.5", "--t-max", "0.5001", "--count", "2"])
        _, data = rows_from_csv(res.output)
        from minkcurves.curve_families import SalkowskiParams, salkowski_point
        want = salkowski_point(SalkowskiParams(2.0), 0.5)
        assert data[0][1] == want.x1 and data[0][2] == want.x2 and data[0][3] == want.x3


class TestFrenet:
    def test_kappa_column_all_ones(self, runner):
        res = runner.invoke(main, ["frenet", "--family", "salkowski", "--m", "2",
                                   "--count", "16"])
        assert res.exit_code == 0
        header, data = rows_from_csv(res.output)
        assert header[:5] == ["t", "s", "speed", "kappa", "tau"]
        for row in data:
            assert abs(row[3] - 1.0) < 1e-9

    def test_anti_tau_column_fd(self, runner):
        res = runner.invoke(main, ["frenet", "--family", "anti-salkowski", "--m", "2",
                                   "--count", "12", "--method", "fd"])
        assert res.exit_code == 0
        _, data = rows_from_csv(res.output)
        for row in data:
            assert abs(row[4] - 1.0) < 1e-4

    def test_lightlike_input_exit_3(self, runner, tmp_path):
        path = tmp_path / "light.csv"
        ts = np.linspace(0.0, 2.0, 9)
        lines = ["t,x1,x2,x3"] + [f"{t},{t},{t},0.0" for t in ts]
        path.write_text("\n".join(lines) + "\n")
        res = runner.invoke(main, ["frenet", "--input", str(path)])
        assert res.exit_code == 3

    def test_straight_line_exit_4(self, runner, tmp_path):
        path = tmp_path / "line.csv"
        ts = np.linspace(0.0, 2.0, 9)
        lines = ["t,x1,x2,x3"] + [f"{t},{2*t},{t},0.0" for t in ts]
        path.write_text("\n".join(lines) + "\n")
        res = runner.invoke(main, ["frenet", "--input", str(path)])
        assert res.exit_code == 4

    def test_family_and_input_mutually_exclusive(self, runner, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("t,x1,x2,x3\n")
        res = runner.invoke(main, ["frenet", "--family", "salkowski", "--m", "2",
                                   "--input", str(path)])
        assert res.exit_code == 2

    def test_csv_round_trip_recovers_invariants(self, runner, tmp_path):
        # sample -> re-ingest as tabulated -> frenet reproduces kappa/tau
        path = tmp_path / "samples.csv"
        res = runner.invoke(main, ["sample", "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.3", "--t-max", "2.0",
                                   "--count", "64", "-o", str(path)])
        assert res.exit_code == 0
        res = runner.invoke(main, ["frenet", "--input", str(path), "--count", "16"])
        assert res.exit_code == 0
        _, data = rows_from_csv(res.output)
        n = 2.0 / math.sqrt(3.0)
        # interior points only: spline accuracy degrades in the end layers
        for row in data:
            t = row[0]
            if not 0.45 <= t <= 1.85:
                continue
            assert abs(row[3] - 1.0) < 1e-4
            assert abs(row[4] - 1.0 / math.tanh(n * t)) < 1e-4


class TestTransform:
    def test_lemma2_matches_anti_sample_after_offset(self, runner):
        common = ["--m", "2", "--t-min", "0.2", "--t-max", "2", "--count", "16"]
        res_t = runner.invoke(main, ["transform", "--which", "lemma2",
                                     "--family", "salkowski", *common])
        res_s = runner.invoke(main, ["sample", "--family", "anti-salkowski", *common])
        assert res_t.exit_code == 0 and res_s.exit_code == 0
        _, beta = rows_from_csv(res_t.output)
        _, anti = rows_from_csv(res_s.output)
        a0 = anti[0]
        for rb, ra in zip(beta, anti):
            for j in (1, 2, 3):
                assert abs(rb[j] - (ra[j] - a0[j])) < 1e-6

    def test_lemma3_image_has_unit_curvature(self, runner, tmp_path):
        out = tmp_path / "beta.csv"
        res = runner.invoke(main, ["transform", "--which", "lemma3",
                                   "--family", "anti-salkowski", "--m", "2",
                                   "--t-min", "0.2", "--t-max", "2", "--count", "80",
                                   "-o", str(out)])
        assert res.exit_code == 0
        res = runner.invoke(main, ["frenet", "--input", str(out), "--count", "10"])
        assert res.exit_code == 0
        _, data = rows_from_csv(res.output)
        for row in data:
            if 0.5 <= row[0] <= 1.7:
                assert abs(row[3] - 1.0) < 1e-3

    def test_zero_length_range(self, runner):
        res = runner.invoke(main, ["transform", "--which", "lemma2",
                                   "--family", "salkowski", "--m", "2",
                                   "--t-min", "0.5", "--t-max", "0.5", "--count", "4"])
        assert res.exit_code == 0
        lines = [ln for ln in res.output.strip().splitlines() if ln]
        assert lines == ["t,x1,x2,x3"]


class TestVerify:
    def test_all_suites_pass(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "all", "--m", "2"])
        assert res.exit_code == 0
        reports = json.loads(res.output)
        assert len(reports) >= 10
        assert all(r["passed"] for r in reports)
        assert set(reports[0]) == {"name", "grid_size", "max_residual",
                                   "tolerance", "passed"}

    def test_deterministic_output(self, runner):
        args = ["verify", "--suite", "all", "--m", "2"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.exit_code == 0 and second.exit_code == 0
        assert first.output == second.output

    def test_slant_suite_value(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "slant", "--m", "2"])
        assert res.exit_code == 0
        reports = json.loads(res.output)
        names = [r["name"] for r in reports]
        assert any("slant-invariant-equals-minus-m" in n for n in names)
        assert all(r["passed"] for r in reports)

    def test_lemma2_suite_includes_translation_match(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "lemma2", "--m", "2"])
        assert res.exit_code == 0
        names = [r["name"] for r in json.loads(res.output)]
        assert any("matches-anti-family-translation" in n for n in names)

    def test_csv_format(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "lemma1", "--m", "2",
                                   "--format", "csv"])
        assert res.exit_code == 0
        lines = res.output.strip().splitlines()
        assert lines[0] == "name,grid_size,max_residual,tolerance,passed"
        assert len(lines) >= 3

    def test_invalid_m_exit_2(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "slant", "--m", "0.5"])
        assert res.exit_code == 2

    def test_tol_env_var(self, runner, monkeypatch):
        plain = runner.invoke(main, ["verify", "--suite", "lemma1", "--m", "2"])
        monkeypatch.setenv("MINKCURVES_TOL", "1e6")
        scaled = runner.invoke(main, ["verify", "--suite", "lemma1", "--m", "2"])
        assert plain.exit_code == 0 and scaled.exit_code == 0
        for a, b in zip(json.loads(plain.output), json.loads(scaled.output)):
            assert abs(b["tolerance"] / a["tolerance"] - 1e6) < 1e-3

    def test_bad_tol_env_var(self, runner, monkeypatch):
        monkeypatch.setenv("MINKCURVES_TOL", "huge")
        res = runner.invoke(main, ["verify", "--suite", "lemma1", "--m", "2"])
        assert res.exit_code == 2

    def test_failed_invariants_exit_1_with_reports(self, runner, monkeypatch):
        # impossibly tight tolerances force failures; reports still emitted
        monkeypatch.setenv("MINKCURVES_TOL", "1e-12")
        res = runner.invoke(main, ["verify", "--suite", "lemma2", "--m", "2"])
        assert res.exit_code == 1
        # stdout still carries the full JSON report list (the runner appends
        # the stderr failure summary after it)
        lines = res.output.splitlines()
        close = max(i for i, ln in enumerate(lines) if ln == "]")
        reports = json.loads("\n".join(lines[: close + 1]))
        assert any(not r["passed"] for r in reports)
