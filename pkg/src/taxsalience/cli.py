"""Command-line interface.

Subcommands: optimize, frontier, replicate, paths, decompose, price,
two-tax, calibrate. Economies come from a TOML config that either lists
wages inline or gives lognormal calibration targets. Exit codes: 0 on
success, 2 on configuration or domain errors, 3 on solver failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

try:
    import tomllib as tomli
except ModuleNotFoundError:
    import tomli

from . import geometry, twotax
from .economy import CalibrationSpec, calibrate_lognormal, economy_from_wages
from .errors import ConfigError, InputError, SolverError
from .optimizer import frontier_sweep, s_optimal_tax

FRONTIER_COLUMNS = [
    "s", "tau_star", "tau_perceived", "W", "xi", "mu", "E", "h_bar",
    "revenue", "foc_residual", "soc_value",
    "order_preserving_margin", "revenue_efficient_margin",
]

_CALIBRATION_KEYS = {
    "mean_income", "mld", "lower_trunc", "upper_trunc",
    "anchor_tau", "anchor_s", "n_agents",
}


def _fmt(x) -> str:
    return format(float(x), ".12g")


def load_config(path):
    try:
        with open(path, "rb") as fh:
            return tomli.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"config is not valid TOML: {exc}") from exc


def build_economy(cfg, epsilon=None, rho=None):
    """Economy from a parsed config, with optional parameter overrides."""
    eps = float(epsilon if epsilon is not None else cfg.get("epsilon", 0.0))
    curv = float(rho if rho is not None else cfg.get("rho", 0.0))
    if eps <= 0.0 or curv <= 0.0:
        raise ConfigError("config must set positive epsilon and rho (or override them)")
    if "wages" in cfg:
        return economy_from_wages(cfg["wages"], eps, curv)
    if "calibration" in cfg:
        cal = dict(cfg["calibration"])
        unknown = set(cal) - _CALIBRATION_KEYS
        if unknown:
            raise ConfigError(f"unknown calibration keys: {sorted(unknown)}")
        missing = _CALIBRATION_KEYS - set(cal)
        if missing:
            raise ConfigError(f"missing calibration keys: {sorted(missing)}")
        spec = CalibrationSpec(
            mean_income=float(cal["mean_income"]),
            mld=float(cal["mld"]),
            lower_trunc=float(cal["lower_trunc"]),
            upper_trunc=float(cal["upper_trunc"]),
            anchor_tau=float(cal["anchor_tau"]),
            anchor_s=float(cal["anchor_s"]),
            n_agents=int(cal["n_agents"]),
        )
        return calibrate_lognormal(spec, eps, curv)
    raise ConfigError("config needs either a wages list or a [calibration] table")


def parse_grid(text):
    """'a:b:n' into n equally spaced points from a to b."""
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError as exc:
        raise ConfigError(f"grid must look like a:b:n, got {text!r}") from exc
    if n < 1 or not a < b:
        raise ConfigError(f"grid needs a < b and n >= 1, got {text!r}")
    return np.linspace(a, b, n)


def _parse_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ConfigError(f"expected a comma-separated number list, got {text!r}") from exc


def row_values(row):
    return [getattr(row, col) for col in FRONTIER_COLUMNS]


def write_rows(rows, columns, stream, fmt):
    if fmt == "json":
        payload = [dict(zip(columns, [float(v) if v is not None else None for v in r]))
                   for r in rows]
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    else:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_fmt(v) if v is not None else "" for v in r])


def _open_out(args, default_name):
    """Output stream from --out (file or directory) or stdout."""
    if args.out is None:
        return sys.stdout, None
    out = Path(args.out)
    if out.is_dir() or str(args.out).endswith("/"):
        out.mkdir(parents=True, exist_ok=True)
        out = out / default_name
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
    return open(out, "w", newline=""), out


def cmd_optimize(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    row = s_optimal_tax(economy, args.s, tol=args.tol)
    stream, path = _open_out(args, "optimum.csv")
    try:
        write_rows([row_values(row)], FRONTIER_COLUMNS, stream, args.format)
    finally:
        if path is not None:
            stream.close()
    return 0


def cmd_frontier(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    rows = frontier_sweep(economy, parse_grid(args.s_grid), tol=args.tol)
    stream, path = _open_out(args, "frontier.csv")
    try:
        write_rows([row_values(r) for r in rows], FRONTIER_COLUMNS, stream, args.format)
    finally:
        if path is not None:
            stream.close()
    return 0


def cmd_replicate(args):
    cfg = load_config(args.config)
    rhos = _parse_list(args.rho) if args.rho else [float(cfg.get("rho", 0.0))]
    epss = _parse_list(args.eps) if args.eps else [float(cfg.get("epsilon", 0.0))]
    grid = parse_grid(args.s_grid)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    columns = FRONTIER_COLUMNS + ["errors"]
    for rho in rhos:
        for eps in epss:
            economy = build_economy(cfg, eps, rho)
            rows = []
            for s in grid:
                try:
                    rows.append(row_values(s_optimal_tax(economy, float(s), tol=args.tol)) + [None])
                except (InputError, SolverError) as exc:
                    rows.append([float(s)] + [None] * (len(FRONTIER_COLUMNS) - 1)
                                + [type(exc).__name__])
            name = f"frontier_rho{rho:g}_eps{eps:g}.csv"
            with open(out_dir / name, "w", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(columns)
                for r in rows:
                    writer.writerow([_fmt(v) if isinstance(v, float) else (v or "")
                                     for v in r])
            print(out_dir / name)
    return 0


def cmd_paths(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    if (args.iso_equality is None) == (args.iso_efficiency is None):
        raise ConfigError("choose exactly one of --iso-equality E or --iso-efficiency MU")
    if args.iso_equality is not None:
        points = geometry.iso_equality_path(
            economy, args.iso_equality, args.s0, args.s1, n_steps=args.steps
        )
        rows = [[p.s, p.tau_numeric, p.tau_analytic] for p in points]
        columns = ["s", "tau_numeric", "tau_analytic"]
    else:
        s_values = np.linspace(args.s0, args.s1, args.steps + 1)
        rows = [[s, tau] for s, tau in geometry.iso_efficiency_path(
            economy, args.iso_efficiency, s_values)]
        columns = ["s", "tau"]
    stream, path = _open_out(args, "path.csv")
    try:
        write_rows(rows, columns, stream, args.format)
    finally:
        if path is not None:
            stream.close()
    return 0


def cmd_decompose(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    d = geometry.effect_decomposition(economy, args.s0, h=args.h)
    columns = ["s0", "total", "substitution", "income", "delta_used"]
    row = [args.s0, d.total, d.substitution, d.income, d.delta_used]
    write_rows([row], columns, sys.stdout, args.format)
    return 0


def cmd_price(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    target = args.E if args.E is not None else s_optimal_tax(economy, args.s).E
    point = geometry.tau_for_equality(economy, target, args.s)
    slope = geometry.price_of_equality_derivative(economy, target, args.s)
    columns = ["s", "E", "tau_check", "mu_check", "p_E", "dpE_ds"]
    row = [args.s, target, point.tau_check, point.mu_check, point.p_E, slope]
    write_rows([row], columns, sys.stdout, args.format)
    return 0


def cmd_two_tax(args):
    pol = twotax.to_two_tax(args.tau, args.s, args.sc)
    tau_back, s_back = twotax.from_two_tax(pol)
    columns = ["tau", "s", "s_C", "tau_L", "tau_C", "tau_roundtrip", "s_roundtrip"]
    row = [args.tau, args.s, args.sc, pol.tau_L, pol.tau_C, tau_back, s_back]
    write_rows([row], columns, sys.stdout, args.format)
    return 0


def cmd_calibrate(args):
    cfg = load_config(args.config)
    economy = build_economy(cfg, args.eps, args.rho)
    stream, path = _open_out(args, "wages.csv")
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["agent", "wage"])
        for k, w in enumerate(economy.wages):
            writer.writerow([k, _fmt(w)])
    finally:
        if path is not None:
            stream.close()
    print(f"agents={economy.n_agents} epsilon={economy.epsilon:g} rho={economy.rho:g} "
          f"wage_min={economy.wages[0]:.6g} wage_max={economy.wages[-1]:.6g}",
          file=sys.stderr)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="taxsalience",
        description="Optimal linear taxation under misperceived (partially salient) taxes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("--config", required=True, help="TOML config path")
        p.add_argument("--rho", help="override outer-utility curvature")
        p.add_argument("--eps", help="override labor supply elasticity")
        p.add_argument("--tol", type=float, default=1e-10, help="solver tolerance")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--seed", type=int, default=0,
                       help="accepted for interface stability; all solvers are deterministic")
        p.add_argument("--out", help="output file or directory (stdout if omitted)")

    p = sub.add_parser("optimize", help="optimal tax at one salience level")
    common(p)
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=cmd_optimize, scalar_params=True)

    p = sub.add_parser("frontier", help="sweep the optimum over a salience grid")
    common(p)
    p.add_argument("--s-grid", default="0.05:1.0:50", help="a:b:n grid spec")
    p.set_defaults(func=cmd_frontier, scalar_params=True)

    p = sub.add_parser("replicate", help="frontier CSVs for each (rho, eps) pair")
    common(p)
    p.add_argument("--s-grid", default="0.05:1.0:50")
    p.set_defaults(func=cmd_replicate, scalar_params=False)
    for a in p._actions:
        if a.dest == "out":
            a.required = True

    p = sub.add_parser("paths", help="iso-equality or iso-efficiency curves")
    common(p)
    p.add_argument("--iso-equality", type=float, metavar="E")
    p.add_argument("--iso-efficiency", type=float, metavar="MU")
    p.add_argument("--s0", type=float, required=True)
    p.add_argument("--s1", type=float, required=True)
    p.add_argument("--steps", type=int, default=10)
    p.set_defaults(func=cmd_paths, scalar_params=True)

    p = sub.add_parser("decompose", help="substitution/income split of the salience effect")
    common(p)
    p.add_argument("--s0", type=float, required=True)
    p.add_argument("--h", type=float, default=1e-3)
    p.set_defaults(func=cmd_decompose, scalar_params=True)

    p = sub.add_parser("price", help="marginal cost of equality and its slope in salience")
    common(p)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--E", type=float, help="equality target (defaults to the s-optimum's)")
    p.set_defaults(func=cmd_price, scalar_params=True)

    p = sub.add_parser("two-tax", help="translate a salient tax into a two-tax system")
    common(p, config=False)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--sc", type=float, required=True, help="consumption-tax salience")
    p.set_defaults(func=cmd_two_tax, scalar_params=True)

    p = sub.add_parser("calibrate", help="build and dump the calibrated wage grid")
    common(p)
    p.set_defaults(func=cmd_calibrate, scalar_params=True)

    return parser


def _scalar(value, name):
    if value is None:
        return None
    try:
        return float(value)
    except ValueError as exc:
        raise ConfigError(f"--{name} must be a number, got {value!r}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "scalar_params", True) and args.command != "two-tax":
            args.rho = _scalar(args.rho, "rho")
            args.eps = _scalar(args.eps, "eps")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
