"""Command-line front end for the benchmark harness.

Subcommands:

* ``run``: execute a sweep from a TOML config, a named preset, or both
  (the preset supplies the sweep grid, the config supplies engine settings);
* ``report``: regenerate plots and the text table from a results directory;
* ``list-presets``: show the shipped sweep presets.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Optional, Sequence

from .harness import (
    ConfigError,
    ExperimentConfig,
    PRESETS,
    apply_preset,
    expand_cells,
    get_preset,
    parse_config,
    regenerate_report,
    run_experiment,
    _parse_raw,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gp-parsimony",
        description="Symbolic-regression sweeps comparing bloat-control methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a sweep")
    run_p.add_argument("config", nargs="?", default=None, help="TOML sweep config")
    run_p.add_argument("--preset", help="use a shipped sweep grid")
    run_p.add_argument("--runs", type=int, help="override runs per cell")
    run_p.add_argument("--generations", type=int, help="override generations per run")
    run_p.add_argument("--seed", type=int, help="override the master seed")
    run_p.add_argument("--jobs", type=int, help="worker process count")
    run_p.add_argument("--out", type=Path, help="output directory")
    run_p.add_argument(
        "--dry-run",
        action="store_true",
        help="list the cells that would run, without running them",
    )

    report_p = sub.add_parser("report", help="regenerate plots and tables")
    report_p.add_argument("dir", type=Path, help="results directory")

    sub.add_parser("list-presets", help="show shipped sweep presets")
    return parser


def _load_experiment(args) -> ExperimentConfig:
    if args.config is None and args.preset is None:
        raise ConfigError("run needs a config file, a --preset, or both")

    engine = None
    config: Optional[ExperimentConfig] = None
    if args.config is not None:
        path = Path(args.config)
        try:
            text = path.read_text()
        except OSError as err:
            raise ConfigError(f"cannot read config {path}: {err}") from None
        if args.preset is None:
            config = parse_config(text)
        else:
            engine, _, _ = _parse_raw(text)

    if args.preset is not None:
        config = apply_preset(get_preset(args.preset), engine)

    assert config is not None
    overrides = {}
    if args.generations is not None:
        if args.generations < 0:
            raise ConfigError("--generations must be >= 0")
        overrides["generations"] = args.generations
    if args.seed is not None:
        overrides["seed"] = args.seed
    if overrides:
        config.engine = dataclasses.replace(config.engine, **overrides)
    if args.runs is not None:
        if args.runs < 1:
            raise ConfigError("--runs must be >= 1")
        config.runs = args.runs
    if args.out is not None:
        config.output_dir = args.out
    return config


def _cmd_run(args) -> int:
    config = _load_experiment(args)
    if args.dry_run:
        cells = expand_cells(config)
        for cell in cells:
            print(
                f"{cell.problem} {cell.strategy_text} W={cell.kill_proportion!r} "
                f"run={cell.run_index} seed={cell.seed}"
            )
        print(f"total: {len(cells)} cells")
        return 0
    records, summaries = run_experiment(config, jobs=args.jobs)
    print(
        f"completed {len(records)} runs across {len(summaries)} cells; "
        f"results in {config.output_dir}"
    )
    return 0


def _cmd_report(args) -> int:
    written = regenerate_report(args.dir)
    print(f"wrote {len(written)} report files to {args.dir}")
    return 0


def _cmd_list_presets() -> int:
    for name in sorted(PRESETS):
        preset = PRESETS[name]
        cells = len(preset.problems) * len(preset.methods)
        print(f"{name}: {preset.description} ({cells} cells x {preset.runs} runs)")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "report":
            return _cmd_report(args)
        return _cmd_list_presets()
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
