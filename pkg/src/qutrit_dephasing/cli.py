"""Command-line interface.

Subcommands:

* state <horodecki|upb> [--a X] [--out PATH] -- dump an initial state as CSV
* witness <rho.csv>                          -- witnesses + classification
* run <config-file> [--out PATH]             -- run a scenario config
* preset <name> [--seed N] [--out PATH]      -- run a figure preset

Exit code 0 on success, 2 with a message on stderr for bad configs or
violated invariants.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from ._version import __version__
from .errors import ConfigError, InvariantViolation
from .experiments import (
    emit_csv,
    figure_preset,
    load_config,
    preset_names,
    read_density_csv,
    run_scenario,
    scenario_metadata,
    write_density_csv,
)
from .states import horodecki_state, upb_state
from .witnesses import witness_pair


def _cmd_state(args) -> int:
    if args.which == "horodecki":
        rho = horodecki_state(args.a)
        meta = {"state": "horodecki", "a": repr(args.a)}
    else:
        rho = upb_state()
        meta = {"state": "upb"}
    meta["version"] = __version__
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_density_csv(rho, fh, metadata=meta)
        print(f"wrote {args.which} state to {args.out}")
    else:
        write_density_csv(rho, sys.stdout, metadata=meta)
    return 0


def _cmd_witness(args) -> int:
    pair = witness_pair(read_density_csv(args.path))
    print(f"negativity = {pair.negativity:.12g}")
    print(f"realignment = {pair.realignment:.12g}")
    print(f"classification = {pair.classification}")
    return 0


def _run_and_emit(cfg, out_override: str | None) -> int:
    path = out_override or cfg.output_path
    if not path:
        raise ConfigError("no output path: set output_path in the config or pass --out")
    rows = run_scenario(cfg)
    emit_csv(rows, path, metadata=scenario_metadata(cfg))
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def _cmd_run(args) -> int:
    return _run_and_emit(load_config(args.config), args.out)


def _cmd_preset(args) -> int:
    cfg = figure_preset(args.name)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    return _run_and_emit(cfg, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-dephasing",
        description="Two qutrits under collective dephasing: free and bound entanglement dynamics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="dump an initial state as CSV (re, im interleaved)")
    p_state.add_argument("which", choices=["horodecki", "upb"])
    p_state.add_argument("--a", type=float, default=4.0, help="Horodecki parameter in [2, 5]")
    p_state.add_argument("--out", help="output file (default: stdout)")
    p_state.set_defaults(func=_cmd_state)

    p_wit = sub.add_parser("witness", help="evaluate both witnesses on a stored state")
    p_wit.add_argument("path", help="CSV file written by the state subcommand")
    p_wit.set_defaults(func=_cmd_witness)

    p_run = sub.add_parser("run", help="run a scenario config file")
    p_run.add_argument("config")
    p_run.add_argument("--out", help="override the config's output_path")
    p_run.set_defaults(func=_cmd_run)

    p_pre = sub.add_parser("preset", help="run a figure preset")
    p_pre.add_argument("name", help=f"one of: {', '.join(preset_names())}")
    p_pre.add_argument("--seed", type=int, help="override the documented default seed")
    p_pre.add_argument("--out", help="override the preset's output path")
    p_pre.set_defaults(func=_cmd_preset)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, InvariantViolation, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
