"""Command-line interface: artifacts, configuration, exit codes."""

import hashlib
import json
import os

import numpy as np
import pytest

from hybrid_kitaev.cli import EXIT_BAD_CONFIG, EXIT_OK, EXIT_PHYSICS, main


def run(*args) -> int:
    return main(list(args))


def read_csv(path):
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return header, data


class TestSweep:
    def test_shape_and_header(self, tmp_path):
        out = str(tmp_path)
        assert run("sweep", "--layout", "nn", "-L", "10",
                   "--mu-grid=-4:4:11", "--out", out) == EXIT_OK
        header, data = read_csv(os.path.join(out, "sweep.csv"))
        assert header == ["mu"] + [f"e_{k}" for k in range(1, 21)]
        assert data.shape == (11, 21)
        np.testing.assert_allclose(data[:, 0], np.linspace(-4, 4, 11))

    def test_rerun_is_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            out.mkdir()
            assert run("sweep", "--layout", "lr", "-L", "12", "--alpha", "0.5",
                       "--mu-grid=0:2:5", "--out", str(out)) == EXIT_OK
        assert (a / "sweep.csv").read_bytes() == (b / "sweep.csv").read_bytes()

    def test_worker_count_does_not_change_bytes(self, tmp_path):
        a, b = tmp_path / "w1", tmp_path / "w4"
        for out, workers in ((a, "1"), (b, "4")):
            out.mkdir()
            assert run("sweep", "--layout", "nn", "-L", "10",
                       "--mu-grid=-1:1:7", "--workers", workers,
                       "--out", str(out)) == EXIT_OK
        assert (a / "sweep.csv").read_bytes() == (b / "sweep.csv").read_bytes()


class TestModes:
    def test_decoupled_hybrid_profiles(self, tmp_path):
        out = str(tmp_path)
        assert run("modes", "--layout", "hybrid-nn-lr", "-L", "40", "--l1",
                   "20", "--alpha", "0.5", "--jh", "0", "--out", out) == EXIT_OK
        header, data = read_csv(os.path.join(out, "modes.csv"))
        assert data.shape[0] == 2                      # one Majorana pair
        p = data[:, 4:44]                              # per-site block
        assert p[0].argmax() == 0 and p[1].argmax() == 19
        assert np.all(np.abs(data[:, 3] - 1.0) < 1e-6)  # |R| = 1

    def test_switched_layout_profiles_on_right(self, tmp_path):
        out = str(tmp_path)
        assert run("modes", "--layout", "hybrid-lr-nn", "-L", "40", "--l1",
                   "20", "--alpha", "0.5", "--jh", "0", "--out", out) == EXIT_OK
        _, data = read_csv(os.path.join(out, "modes.csv"))
        p = data[:, 4:44]
        assert p[0].argmax() == 20 and p[1].argmax() == 39

    def test_trivial_phase_exit_code(self, tmp_path):
        assert run("modes", "--layout", "nn", "-L", "20", "--mu", "2",
                   "--out", str(tmp_path)) == EXIT_PHYSICS


class TestQuench:
    def test_series_and_heatmap_shapes(self, tmp_path):
        out = str(tmp_path)
        assert run("quench", "-L", "30", "--l1", "15", "--alpha", "0.7",
                   "--jh", "0.5", "--tmax", "4", "--dt", "0.5",
                   "--out", out) == EXIT_OK
        header, series = read_csv(os.path.join(out, "quench.csv"))
        assert header == ["t", "f", "re_r", "im_r", "ipr"]
        assert series.shape == (9, 5)
        hm_header, heatmap = read_csv(os.path.join(out, "quench_heatmap.csv"))
        assert len(hm_header) == 30 and heatmap.shape == (9, 30)
        np.testing.assert_allclose(heatmap.sum(axis=1), 1.0, atol=1e-9)

    def test_requires_hybrid_layout(self, tmp_path):
        assert run("quench", "--layout", "nn", "-L", "30",
                   "--out", str(tmp_path)) == EXIT_BAD_CONFIG


class TestVerify:
    def test_report(self, tmp_path):
        out = str(tmp_path)
        assert run("verify", "-L", "6", "--out", out) == EXIT_OK
        with open(os.path.join(out, "verify.json"), encoding="utf-8") as fh:
            report = json.load(fh)
        assert report["all_passed"]
        assert len(report["checks"]) == 3
        assert all(c["max_deviation"] < 1e-9 for c in report["checks"])


class TestConfiguration:
    def test_config_file_with_flag_precedence(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("layout = nn\nlength = 8\nmu_grid = 0:1:3\n")
        out = str(tmp_path)
        assert run("sweep", "--config", str(cfg), "-L", "6",
                   "--out", out) == EXIT_OK
        _, data = read_csv(os.path.join(out, "sweep.csv"))
        assert data.shape == (3, 13)      # flag -L 6 overrides length = 8

    def test_unknown_config_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("lenght = 8\n")
        assert run("sweep", "--config", str(cfg),
                   "--out", str(tmp_path)) == EXIT_BAD_CONFIG

    def test_environment_output_directory(self, tmp_path, monkeypatch):
        monkeypatch.setenv("HYBRID_KITAEV_OUTDIR", str(tmp_path / "envout"))
        assert run("verify", "-L", "4") == EXIT_OK
        assert (tmp_path / "envout" / "verify.json").exists()

    def test_invalid_spec_exit_code(self, tmp_path):
        assert run("sweep", "--layout", "nn", "-L", "0",
                   "--out", str(tmp_path)) == EXIT_BAD_CONFIG

    def test_bad_grid_syntax(self, tmp_path):
        assert run("sweep", "--layout", "nn", "-L", "4", "--mu-grid", "0:1",
                   "--out", str(tmp_path)) == EXIT_BAD_CONFIG


class TestManifest:
    def test_checksums_match_outputs(self, tmp_path):
        out = str(tmp_path)
        assert run("sweep", "--layout", "nn", "-L", "8", "--mu-grid=0:1:3",
                   "--out", out) == EXIT_OK
        with open(os.path.join(out, "sweep_manifest.json"), encoding="utf-8") as fh:
            manifest = json.load(fh)
        assert manifest["command"] == "sweep"
        assert manifest["parameters"]["length"] == 8
        for entry in manifest["outputs"]:
            digest = hashlib.sha256(
                (tmp_path / entry["path"]).read_bytes()).hexdigest()
            assert digest == entry["sha256"]
