"""Command-line scenario runner.

Subcommands reproduce each bundled scenario's dataset as CSV (full double
precision) and expose the solvers for arbitrary parameters via flat JSON
configuration files.  Every run also emits the resolved configuration next
to its output, so any dataset can be regenerated byte-identically from the
emitted file alone.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields
from pathlib import Path

import numpy as np

from . import dressed, floquet, oracle
from .liouvillian import build_for
from .params import ParameterError, SystemParams
from .presets import PRESETS, get_preset

_PARAM_KEYS = tuple(f.name for f in fields(SystemParams))

_GRID_KEYS = {
    "probe-spectrum": ("delta1_min", "delta1_max", "n_points"),
    "interference-sweep": ("p_min", "p_max", "n_points"),
    "pump-sweeps": ("delta2_min", "delta2_max", "n_points"),
    "dressed-evolve": ("t_max", "dt", "store_every"),
    "dump-liouvillian": (),
}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_csv(path: Path, header: list, rows: list, as_json: bool):
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    if as_json:
        records = [dict(zip(header, row)) for row in rows]
        Path(str(path) + ".json").write_text(json.dumps(records) + "\n")


def _emit_config(out: Path, config: dict):
    Path(str(out) + ".config.json").write_text(json.dumps(config, indent=2) + "\n")


def _resolve_config(args, command: str) -> tuple[SystemParams, dict]:
    """Merge preset, config file, and grid overrides into (params, grid)."""
    grid_keys = _GRID_KEYS[command]
    if args.config:
        data = json.loads(Path(args.config).read_text())
        unknown = set(data) - set(_PARAM_KEYS) - set(grid_keys)
        if unknown:
            raise ParameterError(f"unknown configuration keys: {sorted(unknown)}")
        grid = {k: data.pop(k) for k in grid_keys if k in data}
        params = SystemParams.from_dict(data)
    elif args.preset:
        preset = get_preset(args.preset)
        params = preset.params
        grid = {k: v for k, v in preset.grid.items() if k in grid_keys}
    else:
        raise ParameterError("either --preset or --config is required")

    if getattr(args, "points", None) is not None:
        grid["n_points"] = args.points
    missing = set(grid_keys) - set(grid)
    if missing:
        raise ParameterError(f"missing grid fields for {command}: {sorted(missing)}")
    if "n_points" in grid and grid["n_points"] < 1:
        raise ParameterError(f"grid must be non-empty, got n_points={grid['n_points']}")
    return params, grid


def _full_config(params: SystemParams, grid: dict) -> dict:
    return {**params.to_dict(), **grid}


def cmd_probe_spectrum(args) -> int:
    params, grid = _resolve_config(args, "probe-spectrum")
    values = np.linspace(grid["delta1_min"], grid["delta1_max"], grid["n_points"])
    points = floquet.probe_spectrum(params, values)
    header = ["delta1", "re_chi", "im_chi", "slope"]
    rows = [[pt.delta1, pt.chi.real, pt.chi.imag, pt.slope] for pt in points]
    if args.k_value is not None:
        header.append("c_over_vg")
        for row in rows:
            row.append(floquet.group_velocity_ratio(row[3], args.k_value))
    out = Path(args.out)
    _write_csv(out, header, rows, args.json)
    _emit_config(out, _full_config(params, grid))
    return 0


def cmd_interference_sweep(args) -> int:
    params, grid = _resolve_config(args, "interference-sweep")
    p_values = np.linspace(grid["p_min"], grid["p_max"], grid["n_points"])
    sweep = floquet.interference_sweep(params, p_values)
    out = Path(args.out)
    _write_csv(out, ["p", "slope_normalized"], [list(row) for row in sweep], args.json)
    _emit_config(out, _full_config(params, grid))
    return 0


def cmd_pump_sweeps(args) -> int:
    params, grid = _resolve_config(args, "pump-sweeps")
    d2_values = np.linspace(grid["delta2_min"], grid["delta2_max"], grid["n_points"])
    pops = floquet.pump_population_sweep(params, d2_values)
    cohs = floquet.pump_coherence_sweep(params, d2_values)
    out = Path(args.out)
    pop_path = out.with_name(out.stem + "_populations.csv")
    coh_path = out.with_name(out.stem + "_coherences.csv")
    _write_csv(pop_path, ["delta2", "rho11", "rho22", "rho33"],
               [list(row) for row in pops], args.json)
    _write_csv(coh_path,
               ["delta2", "re_rho23", "im_rho23", "re_rho34", "im_rho34"],
               [[d2, r23.real, r23.imag, r34.real, r34.imag]
                for d2, r23, r34 in cohs], args.json)
    _emit_config(out, _full_config(params, grid))
    return 0


def cmd_dressed_evolve(args) -> int:
    params, grid = _resolve_config(args, "dressed-evolve")
    table = dressed.secular_table_from_params(params)
    times, states = dressed.evolve_secular(
        table, dressed.middle_state_dressed_populations(),
        grid["t_max"], grid["dt"])
    step = int(grid.get("store_every", 1))
    keep = np.arange(0, len(times), step)
    header = ["t", "rho11", "rho_pp", "rho_mm", "rho_dd", "rho_1m"]
    rows = [[times[k], *states[k]] for k in keep]

    steady = dressed.secular_steady_state(table)
    summary = {"steady": dict(zip(header[1:], map(float, steady)))}
    if args.oracle_check:
        liouv = build_for(params.with_(Omega1=0.0))
        init = np.zeros(liouv.dim, dtype=complex)
        init[liouv.index("33")] = 1.0
        dt_full = 0.9 * oracle.max_stable_dt(liouv, 0.0)
        n_per = max(1, int(round(grid["dt"] * step / dt_full)))
        cfg = oracle.TrajectoryConfig(t_max=grid["t_max"], dt=grid["dt"] * step / n_per,
                                      initial=init, store_every=n_per)
        t_full, s_full = oracle.integrate_full(liouv, params.with_(Omega1=0.0), cfg)
        rho11_full = np.interp(times[keep], t_full, s_full[:, 0].real)
        header.append("rho11_full")
        for row, v in zip(rows, rho11_full):
            row.append(float(v))
        summary["full_me_rho11_steady"] = float(
            floquet.steady_state(liouv)[0].real)

    out = Path(args.out)
    _write_csv(out, header, rows, args.json)
    _emit_config(out, _full_config(params, grid))
    print(json.dumps(summary))
    return 0


def cmd_dump_liouvillian(args) -> int:
    params, grid = _resolve_config(args, "dump-liouvillian")
    liouv = build_for(params)
    out = Path(args.out)
    out.write_text(json.dumps(liouv.to_jsonable()) + "\n")
    _emit_config(out, _full_config(params, grid))
    return 0


_COMMANDS = {
    "probe-spectrum": cmd_probe_spectrum,
    "interference-sweep": cmd_interference_sweep,
    "pump-sweeps": cmd_pump_sweeps,
    "dressed-evolve": cmd_dressed_evolve,
    "dump-liouvillian": cmd_dump_liouvillian,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yprobe",
        description="Pump-probe spectra of driven Y-type atoms with "
                    "decay-induced interference")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--preset", choices=sorted(PRESETS),
                       help="bundled scenario name")
        p.add_argument("--config", help="flat JSON configuration file")
        p.add_argument("--out", required=True, help="output path")
        p.add_argument("--points", type=int, help="override grid point count")
        p.add_argument("--k-value", type=float, default=None,
                       help="group-velocity prefactor K")
        p.add_argument("--oracle-check", action="store_true",
                       help="add a full master-equation comparison column")
        p.add_argument("--json", action="store_true",
                       help="mirror CSV output as JSON row objects")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except Exception as exc:  # pragma: no cover - exercised via CLI tests
        record = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(record), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
