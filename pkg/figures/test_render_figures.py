"""Tests for the figure renderer. Inputs are handwritten CSVs with the
same schema the solver CLI emits, so the renderer is exercised purely
through its file interface.
"""

import csv
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))
import render_figures as rf  # noqa: E402

COLUMNS = [
    "s", "tau_star", "tau_perceived", "W", "xi", "mu", "E", "h_bar",
    "revenue", "foc_residual", "soc_value",
    "order_preserving_margin", "revenue_efficient_margin", "errors",
]


def write_frontier(path, n=6, broken_row=False):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COLUMNS)
        for k in range(n):
            s = 0.2 + 0.8 * k / (n - 1)
            row = [s, 0.5 - 0.2 * s, s * (0.5 - 0.2 * s), -1.0 + 0.1 * s,
                   90000 - 1000 * s, 95000 - 500 * s, 0.9 - 0.3 * s, 0.8,
                   30000.0, 1e-12, -5.0, 0.4, 1.2, ""]
            writer.writerow(row)
        if broken_row:
            writer.writerow([0.99] + [""] * (len(COLUMNS) - 2) + ["BracketFailure"])


@pytest.fixture
def csv_dir(tmp_path):
    d = tmp_path / "csv"
    d.mkdir()
    for rho in (0.1, 3):
        for eps in (0.25, 0.5):
            write_frontier(d / f"frontier_rho{rho:g}_eps{eps:g}.csv")
    return d


class TestRenderAll:
    def test_creates_both_figures(self, csv_dir, tmp_path):
        rendered = rf.render_all(csv_dir, tmp_path / "figs", fmt="png")
        paths = sorted(rendered)
        assert len(paths) == 2
        for p in paths:
            assert Path(p).exists()
            assert Path(p).suffix == ".png"

    def test_plots_exactly_the_csv_columns(self, csv_dir, tmp_path):
        rendered = rf.render_all(csv_dir, tmp_path / "figs", fmt="svg")
        for plotted in rendered.values():
            assert plotted  # every figure reports its source arrays
            for (name, col), values in plotted.items():
                with open(csv_dir / name) as fh:
                    expected = tuple(float(r[col]) for r in csv.DictReader(fh))
                assert values == expected

    def test_error_rows_are_skipped(self, csv_dir, tmp_path):
        write_frontier(csv_dir / "frontier_rho0.1_eps0.25.csv", broken_row=True)
        rendered = rf.render_all(csv_dir, tmp_path / "figs")
        for plotted in rendered.values():
            assert len(plotted[("frontier_rho0.1_eps0.25.csv", "s")]) == 6

    def test_supported_formats_only(self, csv_dir, tmp_path):
        with pytest.raises(rf.RenderError):
            rf.render_all(csv_dir, tmp_path / "figs", fmt="bmp")


class TestFailureModes:
    def test_missing_column(self, csv_dir, tmp_path):
        name = "frontier_rho0.1_eps0.25.csv"
        rows = list(csv.DictReader(open(csv_dir / name)))
        for r in rows:
            r.pop("mu")
        with open(csv_dir / name, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        with pytest.raises(rf.MissingColumn):
            rf.render_all(csv_dir, tmp_path / "figs")

    def test_empty_directory(self, tmp_path):
        (tmp_path / "empty").mkdir()
        with pytest.raises(rf.EmptyInput):
            rf.render_all(tmp_path / "empty", tmp_path / "figs")

    def test_header_only_file(self, csv_dir, tmp_path):
        name = csv_dir / "frontier_rho0.1_eps0.25.csv"
        name.write_text(",".join(COLUMNS) + "\n")
        with pytest.raises(rf.EmptyInput):
            rf.render_all(csv_dir, tmp_path / "figs")

    def test_cli_exit_codes(self, csv_dir, tmp_path, capsys):
        assert rf.main(["--input-dir", str(csv_dir), "--out-dir", str(tmp_path / "f")]) == 0
        assert rf.main(["--input-dir", str(tmp_path / "void"),
                        "--out-dir", str(tmp_path / "f")]) == 1
