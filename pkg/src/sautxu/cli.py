"""Command-line entry point: ``sautxu {run,converge,kdv,homogenize,linear-check}``."""
import argparse
import sys
from pathlib import Path

from . import experiments
from .errors import SautXuError
from .io import (parse_config, write_diagnostics_jsonl, write_error_table_csv,
                 write_quotient_table_csv, write_snapshot_csv)
from .model import PhysicalParams, make_bathymetry, make_initial
from .spectral import Grid
from .stepping import StepConfig, run


def _floats(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_from_config(cfg):
    grid = Grid(cfg.grid.half_length, cfg.grid.n_points)
    params = PhysicalParams(cfg.params.epsilon, cfg.params.mu, cfg.params.beta)
    bathy = make_bathymetry(cfg.bathymetry.kind, grid, alpha=cfg.bathymetry.alpha,
                            beta=params.beta)
    init_kw = {} if cfg.initial.alpha is None else {"alpha": cfg.initial.alpha}
    initial = make_initial(cfg.initial.kind, grid, **init_kw)
    step = StepConfig(cfg.time.dt_mode, cfg.time.dt_fixed, cfg.time.cfl_sigma,
                      cfg.time.dt_max)
    return grid, params, bathy, initial, step


def _out_dir(path):
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_run(args):
    cfg = parse_config(args.config)
    _, params, bathy, initial, step = build_from_config(cfg)
    snaps, diag = run(initial, params, bathy, step, cfg.time.t_final,
                      cfg.output.snapshot_times)
    out = _out_dir(args.out_dir or cfg.output.out_dir)
    for i, state in enumerate(snaps):
        write_snapshot_csv(state, out / f"snapshot_{i:03d}_t{state.time:g}.csv")
    write_diagnostics_jsonl(diag, out / "diagnostics.jsonl")
    final = snaps[-1] if snaps else initial
    print(f"run: t={final.time:g} steps={len(diag)} snapshots={len(snaps)} "
          f"max_zeta={max(abs(final.zeta)):.6g}")


def cmd_converge(args):
    cfg = parse_config(args.config)
    grid, params, bathy, initial, _ = build_from_config(cfg)
    scenario = experiments.Scenario(grid, params, bathy, initial, cfg.time.t_final)
    table = experiments.convergence_study(scenario, args.dts)
    out = _out_dir(args.out_dir or cfg.output.out_dir)
    write_error_table_csv(table, out / "convergence.csv")
    print(f"converge: slope={table.slope:.6g}")


def cmd_kdv(args):
    grid = Grid(args.half_length, args.n_points)
    table = experiments.kdv_comparison(args.eps, grid, args.t_final, args.alpha)
    write_quotient_table_csv(table, _out_dir(args.out_dir) / "kdv.csv")
    print("kdv: quotients=" + ",".join(f"{q:.6g}" for q in table.quotients))


def cmd_homogenize(args):
    grid = Grid(args.half_length, args.n_points)
    params = PhysicalParams(args.epsilon, args.mu, args.beta)
    table = experiments.homogenization_sweep(args.alphas, params, grid, args.t_final)
    write_quotient_table_csv(table, _out_dir(args.out_dir) / "homogenization.csv")
    print("homogenize: quotients=" + ",".join(f"{q:.6g}" for q in table.quotients))


def cmd_linear_check(args):
    grid = Grid(args.half_length, args.n_points)
    table = experiments.linear_oracle_check(grid, args.mu, args.dts, args.t_final)
    write_error_table_csv(table, _out_dir(args.out_dir) / "linear_check.csv")
    print(f"linear-check: slope={table.slope:.6g}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sautxu", description="Split-step solver for the deep-water Saut-Xu system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate a configuration")
    p.add_argument("config")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("converge", help="self-convergence study in fixed-dt mode")
    p.add_argument("config")
    p.add_argument("--dts", type=_floats, required=True)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("kdv", help="compare with the KdV soliton for eps = mu")
    p.add_argument("--eps", type=_floats, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--n-points", type=int, default=512)
    p.add_argument("--half-length", type=float, default=30.0)
    p.add_argument("--t-final", type=float, default=10.0)
    p.add_argument("--out-dir", default="out")
    p.set_defaults(func=cmd_kdv)

    p = sub.add_parser("homogenize", help="rapidly varying bottom versus flat bottom")
    p.add_argument("--alphas", type=_floats, required=True)
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.5)
    p.add_argument("--n-points", type=int, default=512)
    p.add_argument("--half-length", type=float, default=30.0)
    p.add_argument("--t-final", type=float, default=10.0)
    p.add_argument("--out-dir", default="out")
    p.set_defaults(func=cmd_homogenize)

    p = sub.add_parser("linear-check", help="splitting solver versus exact linear flow")
    p.add_argument("--dts", type=_floats, required=True)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--n-points", type=int, default=256)
    p.add_argument("--half-length", type=float, default=30.0)
    p.add_argument("--t-final", type=float, default=1.0)
    p.add_argument("--out-dir", default="out")
    p.set_defaults(func=cmd_linear_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (SautXuError, OSError) as exc:
        message = " ".join(str(exc).split())
        print(f"sautxu {args.command}: {type(exc).__name__}: {message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
