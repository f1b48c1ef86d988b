#!/usr/bin/env python3
"""Render frontier figures from the solver's CSV output.

Consumes frontier_rho{R}_eps{E}.csv files produced by the `taxsalience
replicate` command and draws two 2x2 panel figures:

  levels:  efficiency (left axis) and equality (right axis) against
           salience, one panel per (rho, eps) pair;
  rates:   the optimal tax and the perceived rate against salience.

Everything plotted is read straight from the CSV columns; nothing is
recomputed. render_all returns, per output file, the exact tuples that
went into each line so callers can audit that property.

Usage:
  python render_figures.py --input-dir CSVDIR --out-dir FIGDIR [--format png|svg|pdf]
"""

import argparse
import csv
import re
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


class RenderError(Exception):
    pass


class MissingColumn(RenderError):
    pass


class EmptyInput(RenderError):
    pass


FILE_PATTERN = re.compile(r"frontier_rho(?P<rho>[0-9.eE+-]+)_eps(?P<eps>[0-9.eE+-]+)\.csv$")

FIGURES = {
    "frontier_levels": (
        ("mu", "efficiency", "tab:blue"),
        ("E", "equality", "tab:red"),
    ),
    "frontier_rates": (
        ("tau_star", "optimal tax", "tab:blue"),
        ("tau_perceived", "perceived rate", "tab:red"),
    ),
}


def load_frontier(path):
    with open(path, newline="") as fh:
        rows = [r for r in csv.DictReader(fh) if not r.get("errors")]
    if not rows:
        raise EmptyInput(f"{path} has no usable rows")
    return rows


def column(rows, name, path):
    if name not in rows[0]:
        raise MissingColumn(f"{path} is missing column {name!r}")
    return tuple(float(r[name]) for r in rows)


def discover_inputs(input_dir):
    input_dir = Path(input_dir)
    found = []
    for path in sorted(input_dir.glob("frontier_rho*_eps*.csv")):
        m = FILE_PATTERN.search(path.name)
        if m:
            found.append((float(m.group("rho")), float(m.group("eps")), path))
    if not found:
        raise EmptyInput(f"no frontier CSVs found in {input_dir}")
    return sorted(found)[:4]


def render_figure(inputs, fig_name, series, out_path):
    """One 2x2 dual-axis figure; returns {(csv_name, column): tuple_of_values}."""
    (left_col, left_label, left_color), (right_col, right_label, right_color) = series
    fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
    plotted = {}
    for ax, (rho, eps, path) in zip(axes.ravel(), inputs):
        rows = load_frontier(path)
        s = column(rows, "s", path)
        left = column(rows, left_col, path)
        right = column(rows, right_col, path)
        plotted[(path.name, "s")] = s
        plotted[(path.name, left_col)] = left
        plotted[(path.name, right_col)] = right
        ax.plot(s, left, color=left_color, label=left_label)
        ax.set_ylabel(left_label, color=left_color)
        ax.tick_params(axis="y", labelcolor=left_color)
        twin = ax.twinx()
        twin.plot(s, right, color=right_color, linestyle="--", label=right_label)
        twin.set_ylabel(right_label, color=right_color)
        twin.tick_params(axis="y", labelcolor=right_color)
        ax.set_title(f"rho={rho:g}, eps={eps:g}")
        ax.set_xlabel("salience")
    fig.suptitle(fig_name.replace("_", " "))
    fig.tight_layout()
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_path)
    plt.close(fig)
    return plotted


def render_all(input_dir, out_dir, fmt="png"):
    """Render both figures; returns {output_path: plotted_series_dict}."""
    if fmt not in ("png", "svg", "pdf"):
        raise RenderError(f"unsupported format {fmt!r}")
    inputs = discover_inputs(input_dir)
    out_dir = Path(out_dir)
    rendered = {}
    for fig_name, series in FIGURES.items():
        out_path = out_dir / f"{fig_name}.{fmt}"
        rendered[str(out_path)] = render_figure(inputs, fig_name, series, out_path)
    return rendered


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input-dir", required=True)
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--format", choices=("png", "svg", "pdf"), default="png")
    args = parser.parse_args(argv)
    try:
        rendered = render_all(args.input_dir, args.out_dir, fmt=args.format)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in rendered:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
