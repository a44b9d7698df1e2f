"""Tests for the command-line surface."""

import json

import pytest
from mpmath import mpf

from superosc.cli import main, parse_document, render_json


def run_cli(tmp_path, *argv):
    out = tmp_path / "doc.out"
    code = main(list(argv) + ["--out", str(out)])
    text = out.read_text() if out.exists() else ""
    return code, text


class TestDesign:
    def test_happy_path_json(self, tmp_path):
        code, text = run_cli(
            tmp_path, "design", "-n", "6", "-m", "3", "--interval", "1",
            "--samples", "33",
        )
        assert code == 0
        doc = parse_document(text)
        assert doc["config"]["band_limit"] == 6
        assert doc["mode"]["index"] == 5  # N+2-M modes, top is last
        assert len(doc["mode"]["coefficients"]) == 7
        assert len(doc["series"]["full_period"]["t"]) == 33
        lam = mpf(doc["eigenvalue"])
        assert 0 < lam < 1

    def test_too_many_constraints_exits_2(self, tmp_path, capsys):
        code, _ = run_cli(tmp_path, "design", "-n", "4", "-m", "6",
                          "--interval", "1")
        assert code == 2
        assert "no solution for M>N+1" in capsys.readouterr().err

    def test_missing_domain_exits_2(self, tmp_path):
        code, _ = run_cli(tmp_path, "design", "-n", "4", "-m", "2")
        assert code == 2

    def test_bad_domain_exits_2(self, tmp_path):
        code, _ = run_cli(tmp_path, "design", "-n", "4", "-m", "2",
                          "--domain", "2,1")
        assert code == 2

    def test_saturated_constraints_single_mode(self, tmp_path):
        code, text = run_cli(tmp_path, "design", "-n", "2", "-m", "3",
                             "--interval", "1")
        assert code == 0
        doc = parse_document(text)
        assert doc["mode"]["index"] == 1

    def test_log_magnitude_dips_inside_domain(self, tmp_path):
        # the exported full-period series must show the signature shape:
        # |f| inside the superoscillation interval orders of magnitude
        # below |f| outside
        code, text = run_cli(
            tmp_path, "design", "-n", "10", "-m", "5", "--interval", "1",
            "--precision", "20", "--samples", "801",
        )
        assert code == 0
        doc = parse_document(text)
        series = doc["series"]["full_period"]
        inside, outside = [], []
        for t, log_mag in zip(series["t"], series["log10_abs_f"]):
            if log_mag == "-inf":
                continue
            (inside if abs(mpf(t)) < 0.8 else outside).append(mpf(log_mag))
        assert max(inside) < max(outside) - 1
        assert sum(inside) / len(inside) < sum(outside) / len(outside) - 1


class TestSpectrum:
    def test_mode_count_and_order(self, tmp_path):
        code, text = run_cli(tmp_path, "spectrum", "-n", "7", "-m", "4",
                             "--interval", "1.2")
        assert code == 0
        doc = parse_document(text)
        assert doc["count"] == 5
        values = [mpf(s) for s in doc["eigenvalues"]]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_both_methods_reports_deltas(self, tmp_path):
        code, text = run_cli(tmp_path, "spectrum", "-n", "6", "-m", "3",
                             "--interval", "1", "--method", "both",
                             "--precision", "40")
        assert code == 0
        doc = parse_document(text)
        assert len(doc["method_relative_deltas"]) == 5
        assert all(mpf(d) < mpf("1e-6") for d in doc["method_relative_deltas"])

    def test_annulus_flag(self, tmp_path):
        code, text = run_cli(tmp_path, "spectrum", "-n", "5", "-m", "3",
                             "--annulus", "0.5", "1")
        assert code == 0
        doc = parse_document(text)
        assert len(doc["config"]["domain"]) == 2

    def test_csv_layout(self, tmp_path):
        code, text = run_cli(tmp_path, "spectrum", "-n", "5", "-m", "3",
                             "--interval", "1", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "index,eigenvalue,yield_quadrature,crossings"
        assert len(lines) == 5  # header + N+2-M rows

    def test_csv_series_files(self, tmp_path):
        out = tmp_path / "spec.csv"
        code = main(["spectrum", "-n", "4", "-m", "2", "--interval", "1",
                     "--format", "csv", "--samples", "17", "--out", str(out)])
        assert code == 0
        series = tmp_path / "spec_series_1.csv"
        assert series.exists()
        assert len(series.read_text().strip().splitlines()) == 18


class TestBaseline:
    def test_fields(self, tmp_path):
        code, text = run_cli(tmp_path, "baseline", "-n", "6", "-m", "3",
                             "--interval", "1")
        assert code == 0
        doc = parse_document(text)
        fk = doc["fk_minimum_energy"]
        assert fk["energy"] == fk["mu_tilde_norm_sq"]
        assert doc["slepian"]["count"] == 7
        assert mpf(fk["yield_algebraic"]) <= mpf(doc["spectrum_max_eigenvalue"])
        top_slepian = mpf(doc["slepian"]["eigenvalues"][0])
        assert top_slepian >= mpf(doc["spectrum_max_eigenvalue"])


class TestSweep:
    def test_radius_sweep(self, tmp_path):
        code, text = run_cli(tmp_path, "sweep", "-n", "5", "-m", "3",
                             "--a-values", "0.4,0.2", "--precision", "30")
        assert code == 0
        doc = parse_document(text)
        assert doc["grid"]["kind"] == "interval_radius"
        assert len(doc["rows"]) == 8  # two radii x (N+2-M)
        assert set(doc["slopes"]) == {"1", "2", "3", "4"}

    def test_constraint_sweep(self, tmp_path):
        code, text = run_cli(tmp_path, "sweep", "-n", "6", "-m", "3",
                             "--interval", "0.5", "--m-values", "2,3")
        assert code == 0
        doc = parse_document(text)
        assert doc["grid"]["kind"] == "constraint_count"
        assert {r["key"] for r in doc["rows"]} == {2, 3}

    def test_needs_exactly_one_grid(self, tmp_path):
        code, _ = run_cli(tmp_path, "sweep", "-n", "5", "-m", "3")
        assert code == 2


class TestDeterminism:
    def test_byte_identical_documents(self, tmp_path):
        args = ["spectrum", "-n", "5", "-m", "3", "--interval", "1",
                "--seed", "42", "--samples", "9"]
        first = run_cli(tmp_path, *args)
        second = run_cli(tmp_path, *args)
        assert first == second
        assert first[0] == 0

    def test_round_trip_is_lossless(self, tmp_path):
        code, text = run_cli(tmp_path, "design", "-n", "4", "-m", "2",
                             "--interval", "0.8")
        assert code == 0
        doc = parse_document(text)
        assert render_json(doc) == text
