"""Run configuration (JSON) and result files (CSV, JSON lines)."""
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError
from .model import BATHYMETRY_KINDS, INITIAL_KINDS
from .spectral import Grid
from .stepping import default_dt_max

SNAPSHOT_HEADER = "x,zeta,v"
ERROR_TABLE_HEADER = "dt,error"
DIAGNOSTIC_KEYS = ("t", "dt", "energy0", "max_zeta", "max_v", "mass", "momentum")


def format_float(x):
    """17 significant digits: lossless for IEEE doubles."""
    return format(float(x), ".17g")


@dataclass
class GridConfig:
    half_length: float
    n_points: int


@dataclass
class ParamsConfig:
    epsilon: float
    mu: float
    beta: float


@dataclass
class BathymetryConfig:
    kind: str = "flat"
    alpha: float = None


@dataclass
class InitialConfig:
    kind: str = "sech_pulse"
    alpha: float = None


@dataclass
class TimeConfig:
    t_final: float
    dt_mode: str = "cfl"
    dt_fixed: float = None
    cfl_sigma: float = 0.5
    dt_max: float = None


@dataclass
class OutputConfig:
    snapshot_times: list = field(default_factory=list)
    out_dir: str = "out"


@dataclass
class RunConfig:
    grid: GridConfig
    params: ParamsConfig
    bathymetry: BathymetryConfig
    initial: InitialConfig
    time: TimeConfig
    output: OutputConfig

    def to_dict(self):
        return asdict(self)


def _number(section, key, value, *, positive=False, integer=False, lo=None, hi=None):
    name = f"{section}.{key}"
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(name, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(name, "must be finite")
    if integer and int(value) != value:
        raise ValidationError(name, f"expected an integer, got {value!r}")
    if positive and not value > 0:
        raise ValidationError(name, f"must be positive, got {value!r}")
    if lo is not None and value < lo:
        raise ValidationError(name, f"must be >= {lo}, got {value!r}")
    if hi is not None and value > hi:
        raise ValidationError(name, f"must be <= {hi}, got {value!r}")
    return int(value) if integer else float(value)


def _section(raw, name, required=True):
    value = raw.get(name)
    if value is None:
        if required:
            raise ValidationError(name, "missing section")
        return {}
    if not isinstance(value, dict):
        raise ValidationError(name, "expected an object")
    return value


def _required(section, data, key):
    if key not in data:
        raise ValidationError(f"{section}.{key}", "missing field")
    return data[key]


def _reject_unknown(section, data, allowed):
    extra = sorted(set(data) - set(allowed))
    if extra:
        raise ValidationError(f"{section}.{extra[0]}", "unknown field")


def config_from_dict(raw):
    """Validate a decoded JSON object and fill defaults."""
    if not isinstance(raw, dict):
        raise ValidationError("<root>", "expected a JSON object")
    _reject_unknown("<root>", raw, ("grid", "params", "bathymetry", "initial", "time", "output"))

    g = _section(raw, "grid")
    _reject_unknown("grid", g, ("half_length", "n_points"))
    half_length = _number("grid", "half_length", _required("grid", g, "half_length"),
                          positive=True)
    n_points = _number("grid", "n_points", _required("grid", g, "n_points"),
                       positive=True, integer=True)
    if n_points < 2 or n_points & (n_points - 1):
        raise ValidationError("grid.n_points", f"must be a power of two, got {n_points}")
    grid = GridConfig(half_length, n_points)

    p = _section(raw, "params")
    _reject_unknown("params", p, ("epsilon", "mu", "beta"))
    params = ParamsConfig(
        epsilon=_number("params", "epsilon", _required("params", p, "epsilon"), lo=0.0, hi=1.0),
        mu=_number("params", "mu", _required("params", p, "mu"), positive=True),
        beta=_number("params", "beta", p.get("beta", 0.0), lo=0.0, hi=1.0),
    )

    b = _section(raw, "bathymetry", required=False)
    _reject_unknown("bathymetry", b, ("kind", "alpha"))
    b_kind = b.get("kind", "flat")
    if b_kind not in BATHYMETRY_KINDS:
        raise ValidationError("bathymetry.kind",
                              f"unknown kind {b_kind!r}; expected one of {', '.join(BATHYMETRY_KINDS)}")
    b_alpha = b.get("alpha")
    if b_kind == "cos_alpha" and b_alpha is None:
        raise ValidationError("bathymetry.alpha", "required for cos_alpha")
    if b_alpha is not None:
        b_alpha = _number("bathymetry", "alpha", b_alpha, positive=True)
    bathymetry = BathymetryConfig(b_kind, b_alpha)

    i = _section(raw, "initial", required=False)
    _reject_unknown("initial", i, ("kind", "alpha"))
    i_kind = i.get("kind", "sech_pulse")
    if i_kind not in INITIAL_KINDS:
        raise ValidationError("initial.kind",
                              f"unknown kind {i_kind!r}; expected one of {', '.join(INITIAL_KINDS)}")
    i_alpha = i.get("alpha")
    if i_alpha is not None:
        i_alpha = _number("initial", "alpha", i_alpha, positive=True)
    initial = InitialConfig(i_kind, i_alpha)

    t = _section(raw, "time")
    _reject_unknown("time", t, ("t_final", "dt_mode", "dt_fixed", "cfl_sigma", "dt_max"))
    t_final = _number("time", "t_final", _required("time", t, "t_final"), lo=0.0)
    dt_mode = t.get("dt_mode", "cfl")
    if dt_mode not in ("cfl", "fixed"):
        raise ValidationError("time.dt_mode", f"expected 'cfl' or 'fixed', got {dt_mode!r}")
    dt_fixed = t.get("dt_fixed")
    if dt_mode == "fixed" and dt_fixed is None:
        raise ValidationError("time.dt_fixed", "required when dt_mode is 'fixed'")
    if dt_fixed is not None:
        dt_fixed = _number("time", "dt_fixed", dt_fixed, positive=True)
    cfl_sigma = _number("time", "cfl_sigma", t.get("cfl_sigma", 0.5), positive=True)
    if not cfl_sigma < 1.0:
        raise ValidationError("time.cfl_sigma", f"must be < 1, got {cfl_sigma!r}")
    dt_max = t.get("dt_max")
    if dt_max is None:
        dt_max = default_dt_max(Grid(half_length, n_points), params.mu)
    dt_max = _number("time", "dt_max", dt_max, positive=True)
    time = TimeConfig(t_final, dt_mode, dt_fixed, cfl_sigma, dt_max)

    o = _section(raw, "output", required=False)
    _reject_unknown("output", o, ("snapshot_times", "out_dir"))
    snaps = o.get("snapshot_times", [t_final])
    if not isinstance(snaps, list):
        raise ValidationError("output.snapshot_times", "expected a list")
    snaps = [_number("output", "snapshot_times", s, lo=0.0, hi=t_final) for s in snaps]
    if snaps != sorted(snaps):
        raise ValidationError("output.snapshot_times", "must be sorted")
    out_dir = o.get("out_dir", "out")
    if not isinstance(out_dir, str):
        raise ValidationError("output.out_dir", "expected a string")
    output = OutputConfig(snaps, out_dir)

    return RunConfig(grid, params, bathymetry, initial, time, output)


def parse_config(path):
    """Read and validate a JSON run configuration."""
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno} column {exc.colno}",
                         exc.lineno, exc.colno) from exc
    return config_from_dict(raw)


def write_config(config, path):
    Path(path).write_text(json.dumps(config.to_dict(), indent=2) + "\n")


def write_snapshot_csv(state, path):
    """Write ``x,zeta,v`` rows, one per grid node."""
    lines = [SNAPSHOT_HEADER]
    for x, z, v in zip(state.grid.nodes, state.zeta, state.v):
        lines.append(f"{format_float(x)},{format_float(z)},{format_float(v)}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_snapshot_csv(path):
    """Return ``(x, zeta, v)`` arrays from a snapshot file."""
    with open(path, newline="") as fh:
        header = fh.readline().rstrip("\n")
        if header != SNAPSHOT_HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    return data[:, 0], data[:, 1], data[:, 2]


def write_error_table_csv(table, path):
    """``dt,error`` rows in table order, then ``# slope=<value>``."""
    lines = [ERROR_TABLE_HEADER]
    lines += [f"{format_float(dt)},{format_float(err)}" for dt, err in table.rows()]
    lines.append(f"# slope={format_float(table.slope)}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_error_table_csv(path):
    rows, slope = [], None
    with open(path, newline="") as fh:
        header = fh.readline().rstrip("\n")
        if header != ERROR_TABLE_HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("# slope="):
                slope = float(line[len("# slope="):])
            elif line:
                dt, err = line.split(",")
                rows.append((float(dt), float(err)))
    return rows, slope


def write_quotient_table_csv(table, path):
    lines = [f"{table.name},quotient"]
    lines += [f"{format_float(p)},{format_float(q)}" for p, q in table.rows()]
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_diagnostics_jsonl(diag, path):
    """One JSON object per step with the contractual diagnostic keys."""
    with open(path, "w", newline="\n") as fh:
        for record in diag.as_dicts():
            fh.write(json.dumps({k: record[k] for k in DIAGNOSTIC_KEYS}) + "\n")
