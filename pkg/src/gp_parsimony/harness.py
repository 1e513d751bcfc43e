"""Benchmark harness: sweep configuration, execution, persistence, reports.

A sweep is a grid of (problem, selection strategy, Tarpeian kill proportion)
cells, each run several times with independently derived seeds.  The harness
reads TOML configs, ships with presets reproducing the published comparison
grids, fans cells out over worker processes, and persists per-generation and
summary CSVs plus SVG bar charts of the two bloat measures.

Every cell seed is derived by hashing the master seed with the cell's
coordinates, so results do not depend on execution order or worker count, and
rerunning a sweep with the same master seed reproduces its CSVs byte for byte.
"""
from __future__ import annotations

import csv
import dataclasses
import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .bloatcontrol import TarpeianConfig
from .engine import EngineConfig, run_evolution
from .metrics import RunRecord, SweepSummary, split_strategy_text, summarize
from .problems import PROBLEM_ORDER, get_problem
from .selection import (
    DirectBucket,
    DoubleTournament,
    PlainTournament,
    RatioBucket,
    StrategySpec,
    format_strategy,
    parse_strategy,
)

JOBS_ENV_VAR = "GP_PARSIMONY_JOBS"

GENERATIONS_HEADER = [
    "problem",
    "method",
    "params",
    "kill_proportion",
    "run",
    "generation",
    "best_adjusted",
    "best_size",
    "mean_pop_size",
    "mean_adjusted",
    "evaluations",
]

SUMMARY_HEADER = [
    "problem",
    "method",
    "params",
    "kill_proportion",
    "n_runs",
    "mean_fitness",
    "std_fitness",
    "mean_tree_size",
    "std_tree_size",
    "mean_evaluations",
]

INCOMPLETE_MARKER = "INCOMPLETE"


class ConfigError(Exception):
    """A sweep configuration problem; the message names the offending key."""


@dataclass
class ExperimentConfig:
    """A fully expanded sweep: problems x (strategy, kill proportion) x runs."""

    problems: list[str]
    methods: list[tuple[StrategySpec, float]]
    runs: int = 40
    engine: EngineConfig = field(default_factory=EngineConfig)
    output_dir: Path = Path("gp-results")

    @property
    def master_seed(self) -> int:
        return self.engine.seed

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.runs}")
        if not self.problems:
            raise ConfigError("sweep names no problems")
        if not self.methods:
            raise ConfigError("sweep names no selection strategies")
        for problem in self.problems:
            get_problem(problem)
        self.output_dir = Path(self.output_dir)


@dataclass(frozen=True)
class Cell:
    """One unit of work: a single run inside one sweep cell."""

    problem: str
    strategy_text: str
    kill_proportion: float
    run_index: int
    seed: int


def derive_run_seed(
    master_seed: int,
    problem: str,
    strategy_text: str,
    kill_proportion: float,
    run_index: int,
) -> int:
    """63-bit seed hashed from the master seed and the cell coordinates."""
    key = f"{master_seed}|{problem}|{strategy_text}|{kill_proportion!r}|{run_index}"
    digest = hashlib.sha256(key.encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def expand_cells(config: ExperimentConfig) -> list[Cell]:
    """All runs of the sweep in their canonical (deterministic) order."""
    cells = []
    for problem in config.problems:
        for strategy, kill in config.methods:
            text = format_strategy(strategy)
            for run_index in range(config.runs):
                cells.append(
                    Cell(
                        problem=problem,
                        strategy_text=text,
                        kill_proportion=kill,
                        run_index=run_index,
                        seed=derive_run_seed(
                            config.master_seed, problem, text, kill, run_index
                        ),
                    )
                )
    return cells


# --- TOML parsing ---------------------------------------------------------

_ENGINE_INT_KEYS = ("population_size", "generations", "max_depth", "n_cases", "seed")
_ENGINE_FLOAT_KEYS = ("crossover_prob", "mutation_prob")
_ENGINE_KEYS = _ENGINE_INT_KEYS + _ENGINE_FLOAT_KEYS + ("fixed_case_seed",)
_SWEEP_KEYS = ("problems", "strategies", "runs")
_TARPEIAN_KEYS = ("kill_proportion",)


def _key_line(text: str, key: str) -> str:
    for lineno, line in enumerate(text.splitlines(), start=1):
        if key in line:
            return f" (line {lineno})"
    return ""


def _require_int(table: str, key: str, value, text: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(
            f"{table}.{key} must be an integer, got {value!r}{_key_line(text, key)}"
        )
    return value


def _require_float(table: str, key: str, value, text: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(
            f"{table}.{key} must be a number, got {value!r}{_key_line(text, key)}"
        )
    return float(value)


def _parse_engine_table(table: dict, text: str) -> EngineConfig:
    for key in table:
        if key not in _ENGINE_KEYS:
            raise ConfigError(f"unknown key engine.{key}{_key_line(text, key)}")
    kwargs = {}
    for key in _ENGINE_INT_KEYS:
        if key in table:
            kwargs[key] = _require_int("engine", key, table[key], text)
    if "fixed_case_seed" in table:
        kwargs["fixed_case_seed"] = _require_int(
            "engine", "fixed_case_seed", table["fixed_case_seed"], text
        )
    if "crossover_prob" in table or "mutation_prob" in table:
        crossover = _require_float(
            "engine", "crossover_prob", table.get("crossover_prob", 0.8), text
        )
        mutation = _require_float(
            "engine", "mutation_prob", table.get("mutation_prob", 0.1), text
        )
        reproduction = 1.0 - crossover - mutation
        if reproduction < -1e-9:
            raise ConfigError(
                "engine.crossover_prob + engine.mutation_prob must not exceed 1"
                f"{_key_line(text, 'crossover_prob')}"
            )
        kwargs["crossover_prob"] = crossover
        kwargs["mutation_prob"] = mutation
        kwargs["reproduction_prob"] = max(reproduction, 0.0)
    try:
        return EngineConfig(**kwargs)
    except ValueError as err:
        raise ConfigError(f"bad [engine] settings: {err}") from None


def _parse_sweep_table(table: dict, text: str) -> tuple[list[str], list[StrategySpec], int]:
    for key in table:
        if key not in _SWEEP_KEYS:
            raise ConfigError(f"unknown key sweep.{key}{_key_line(text, key)}")
    problems_raw = table.get("problems")
    if problems_raw == "all":
        problems = list(PROBLEM_ORDER)
    elif isinstance(problems_raw, list) and all(
        isinstance(p, str) for p in problems_raw
    ):
        problems = list(problems_raw)
    else:
        raise ConfigError(
            f"sweep.problems must be 'all' or a list of problem ids"
            f"{_key_line(text, 'problems')}"
        )
    for problem in problems:
        try:
            get_problem(problem)
        except ValueError as err:
            raise ConfigError(f"sweep.problems: {err}{_key_line(text, problem)}") from None

    strategies_raw = table.get("strategies")
    if not isinstance(strategies_raw, list) or not strategies_raw:
        raise ConfigError(
            f"sweep.strategies must be a non-empty list{_key_line(text, 'strategies')}"
        )
    strategies = []
    for entry in strategies_raw:
        if not isinstance(entry, str):
            raise ConfigError(f"sweep.strategies entries must be strings, got {entry!r}")
        try:
            strategies.append(parse_strategy(entry))
        except ValueError as err:
            raise ConfigError(f"sweep.strategies: {err}{_key_line(text, entry)}") from None

    runs = table.get("runs", 40)
    runs = _require_int("sweep", "runs", runs, text)
    return problems, strategies, runs


def _parse_tarpeian_table(table: dict, text: str) -> list[float]:
    for key in table:
        if key not in _TARPEIAN_KEYS:
            raise ConfigError(f"unknown key tarpeian.{key}{_key_line(text, key)}")
    raw = table.get("kill_proportion", 0.0)
    values = raw if isinstance(raw, list) else [raw]
    grid = []
    for value in values:
        w = _require_float("tarpeian", "kill_proportion", value, text)
        if not 0.0 <= w <= 1.0:
            raise ConfigError(
                f"tarpeian.kill_proportion must lie in [0, 1], got {w}"
                f"{_key_line(text, 'kill_proportion')}"
            )
        grid.append(w)
    if not grid:
        raise ConfigError(
            f"tarpeian.kill_proportion list is empty{_key_line(text, 'kill_proportion')}"
        )
    return grid


def _parse_raw(text: str):
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f"invalid TOML: {err}") from None
    for table in data:
        if table not in ("engine", "sweep", "tarpeian"):
            raise ConfigError(f"unknown table [{table}]{_key_line(text, table)}")
        if not isinstance(data[table], dict):
            raise ConfigError(f"[{table}] must be a table{_key_line(text, table)}")
    engine = _parse_engine_table(data.get("engine", {}), text)
    sweep = None
    if "sweep" in data:
        sweep = _parse_sweep_table(data["sweep"], text)
    kill_grid = _parse_tarpeian_table(data.get("tarpeian", {}), text)
    return engine, sweep, kill_grid


def parse_config(text: str) -> ExperimentConfig:
    """Parse a complete TOML sweep configuration.

    The Tarpeian grid crosses with every strategy: each strategy runs once
    per configured kill proportion (0.0 disables Tarpeian for that cell).
    """
    engine, sweep, kill_grid = _parse_raw(text)
    if sweep is None:
        raise ConfigError("config has no [sweep] table and no preset was requested")
    problems, strategies, runs = sweep
    methods = [(strategy, kill) for strategy in strategies for kill in kill_grid]
    return ExperimentConfig(problems=problems, methods=methods, runs=runs, engine=engine)


# --- Presets --------------------------------------------------------------


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    problems: tuple[str, ...]
    methods: tuple[tuple[StrategySpec, float], ...]
    runs: int = 40


def _build_presets() -> dict[str, Preset]:
    all_problems = tuple(PROBLEM_ORDER)
    kill_grid = tuple(round(0.1 * i, 1) for i in range(6))  # 0.0 .. 0.5
    table3 = tuple((PlainTournament(7), w) for w in kill_grid) + tuple(
        (DirectBucket(b), 0.0) for b in (10, 25, 50, 100, 250, 500)
    )
    d_grid = tuple(round(1.0 + 0.1 * i, 1) for i in range(11))  # 1.0 .. 2.0
    table4 = tuple((RatioBucket(r), 0.0) for r in range(2, 11)) + tuple(
        (DoubleTournament(7, d), 0.0) for d in d_grid
    )
    combined_d = (1.6, 1.8, 1.9)
    table6 = tuple((DoubleTournament(7, d), 0.0) for d in combined_d) + tuple(
        (DoubleTournament(7, d), w) for d in combined_d for w in (0.3, 0.4, 0.5)
    )
    presets = [
        Preset(
            "baseline",
            "plain size-7 fitness tournament on all six problems",
            all_problems,
            ((PlainTournament(7), 0.0),),
        ),
        Preset(
            "paper-table3",
            "Tarpeian kill proportions 0.0-0.5 and direct bucket counts "
            "10/25/50/100/250/500 on all six problems",
            all_problems,
            table3,
        ),
        Preset(
            "paper-table4",
            "ratio bucketing r=2..10 and double tournament D=1.0..2.0 "
            "on all six problems",
            all_problems,
            table4,
        ),
        Preset(
            "paper-table6",
            "double tournament D=1.6/1.8/1.9 alone and combined with "
            "Tarpeian W=0.3/0.4/0.5 on all six problems",
            all_problems,
            table6,
        ),
    ]
    return {p.name: p for p in presets}


PRESETS: dict[str, Preset] = _build_presets()


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown preset {name!r}; known: {known}") from None


def apply_preset(
    preset: Preset, engine: Optional[EngineConfig] = None
) -> ExperimentConfig:
    """Experiment built from a preset, optionally reusing engine settings."""
    return ExperimentConfig(
        problems=list(preset.problems),
        methods=list(preset.methods),
        runs=preset.runs,
        engine=engine if engine is not None else EngineConfig(),
    )


# --- Execution ------------------------------------------------------------


def effective_jobs(explicit: Optional[int] = None) -> int:
    """Worker count: the jobs env var overrides the explicit argument, which
    overrides the machine's core count."""
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is not None and raw != "":
        try:
            jobs = int(raw)
        except ValueError:
            raise ConfigError(
                f"{JOBS_ENV_VAR} must be an integer, got {raw!r}"
            ) from None
    elif explicit is not None:
        jobs = explicit
    else:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise ConfigError(f"worker count must be >= 1, got {jobs}")
    return jobs


def _cell_engine_config(config: ExperimentConfig, cell: Cell) -> EngineConfig:
    strategy = parse_strategy(cell.strategy_text)
    tarpeian = TarpeianConfig(
        kill_proportion=cell.kill_proportion, enabled=cell.kill_proportion > 0.0
    )
    return dataclasses.replace(
        config.engine, strategy=strategy, tarpeian=tarpeian, seed=cell.seed
    )


def _run_cell(payload: tuple[Cell, EngineConfig]) -> RunRecord:
    cell, engine = payload
    problem = get_problem(cell.problem)
    trajectory = run_evolution(engine, problem)
    return RunRecord.from_trajectory(
        problem=cell.problem,
        strategy=cell.strategy_text,
        kill_proportion=cell.kill_proportion,
        run_index=cell.run_index,
        seed=cell.seed,
        trajectory=trajectory,
    )


def _format_value(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _generation_rows(record: RunRecord) -> Iterable[list[str]]:
    method, params = split_strategy_text(record.strategy)
    for result in record.trajectory:
        yield [
            record.problem,
            method,
            params,
            repr(record.kill_proportion),
            str(record.run_index),
            str(result.generation),
            repr(result.best_adjusted),
            str(result.best_size),
            repr(result.mean_pop_size),
            repr(result.mean_adjusted),
            str(result.evaluations),
        ]


def write_summary_csv(summaries: Sequence[SweepSummary], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for s in summaries:
            writer.writerow(
                [
                    s.problem,
                    s.method,
                    s.params,
                    repr(s.kill_proportion),
                    str(s.n_runs),
                    repr(s.mean_fitness),
                    repr(s.std_fitness),
                    repr(s.mean_tree_size),
                    repr(s.std_tree_size),
                    repr(s.mean_evaluations),
                ]
            )


def read_summary_csv(path: Path) -> list[SweepSummary]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != SUMMARY_HEADER:
            raise ValueError(f"{path}: unexpected summary header {header}")
        out = []
        for row in reader:
            out.append(
                SweepSummary(
                    problem=row[0],
                    method=row[1],
                    params=row[2],
                    kill_proportion=float(row[3]),
                    n_runs=int(row[4]),
                    mean_fitness=float(row[5]),
                    std_fitness=float(row[6]),
                    mean_tree_size=float(row[7]),
                    std_tree_size=float(row[8]),
                    mean_evaluations=float(row[9]),
                )
            )
    return out


def read_generation_records(path: Path) -> list[RunRecord]:
    """Rebuild per-run records (final stats only) from a per-generation CSV."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != GENERATIONS_HEADER:
            raise ValueError(f"{path}: unexpected generations header {header}")
        runs: dict[tuple, dict] = {}
        for row in reader:
            problem, method, params = row[0], row[1], row[2]
            strategy = f"{method}:{params}" if params else method
            key = (problem, strategy, float(row[3]), int(row[4]))
            state = runs.setdefault(
                key, {"last_generation": -1, "best_adjusted": 0.0, "best_size": 0, "evaluations": 0}
            )
            generation = int(row[5])
            state["evaluations"] += int(row[10])
            if generation > state["last_generation"]:
                state["last_generation"] = generation
                state["best_adjusted"] = float(row[6])
                state["best_size"] = int(row[7])
    records = []
    for (problem, strategy, kill, run_index), state in runs.items():
        records.append(
            RunRecord(
                problem=problem,
                strategy=strategy,
                kill_proportion=kill,
                run_index=run_index,
                seed=-1,
                final_best_adjusted=state["best_adjusted"],
                final_best_size=state["best_size"],
                total_evaluations=state["evaluations"],
            )
        )
    return records


def run_experiment(
    config: ExperimentConfig, jobs: Optional[int] = None
) -> tuple[list[RunRecord], list[SweepSummary]]:
    """Execute the sweep and persist CSVs and the report under output_dir.

    Cells execute in canonical order (fanned out over processes when more
    than one worker is available) and rows are written in that same order,
    so outputs are identical for any worker count.  On failure a marker file
    named INCOMPLETE is left in the output directory.
    """
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    marker = out_dir / INCOMPLETE_MARKER
    marker.write_text("sweep did not finish\n")

    cells = expand_cells(config)
    payloads = [(cell, _cell_engine_config(config, cell)) for cell in cells]
    workers = min(effective_jobs(jobs), len(payloads))

    records: list[RunRecord] = []
    with open(out_dir / "generations.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(GENERATIONS_HEADER)
        if workers <= 1:
            for record in map(_run_cell, payloads):
                records.append(record)
                writer.writerows(_generation_rows(record))
        else:
            chunk = max(1, len(payloads) // (workers * 4))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for record in pool.map(_run_cell, payloads, chunksize=chunk):
                    records.append(record)
                    writer.writerows(_generation_rows(record))
    summaries = summarize(records)
    write_summary_csv(summaries, out_dir / "summary.csv")
    emit_report(summaries, out_dir)
    # Only a clean finish removes the marker; any failure above leaves it.
    marker.unlink(missing_ok=True)
    return records, summaries


# --- Reports --------------------------------------------------------------

MEASURES = (("mean_fitness", "mean fitness"), ("mean_tree_size", "mean tree size"))


def _method_label(summary: SweepSummary) -> str:
    label = f"{summary.method}:{summary.params}" if summary.params else summary.method
    if summary.kill_proportion > 0.0:
        label += f" W={summary.kill_proportion:g}"
    return label


def bar_chart_svg(title: str, ylabel: str, labels: Sequence[str], values: Sequence[float]) -> str:
    """A deterministic standalone SVG bar chart (no external dependencies)."""
    if len(labels) != len(values):
        raise ValueError("labels and values differ in length")
    n = len(values)
    margin_left, margin_right, margin_top, margin_bottom = 72.0, 24.0, 48.0, 120.0
    slot, bar_width = 46.0, 32.0
    plot_height = 240.0
    plot_width = max(n * slot, slot)
    width = margin_left + plot_width + margin_right
    height = margin_top + plot_height + margin_bottom
    vmax = max(values) if values and max(values) > 0 else 1.0
    scale = plot_height / vmax
    baseline = margin_top + plot_height

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<text x="{width / 2:.2f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{escape(title)}</text>',
        f'<text x="18" y="{margin_top + plot_height / 2:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 18 {margin_top + plot_height / 2:.2f})">'
        f"{escape(ylabel)}</text>",
        f'<line x1="{margin_left:.2f}" y1="{baseline:.2f}" '
        f'x2="{margin_left + plot_width:.2f}" y2="{baseline:.2f}" stroke="black"/>',
        f'<line x1="{margin_left:.2f}" y1="{margin_top:.2f}" '
        f'x2="{margin_left:.2f}" y2="{baseline:.2f}" stroke="black"/>',
        f'<text x="{margin_left - 6:.2f}" y="{margin_top + 4:.2f}" text-anchor="end" '
        f'font-family="sans-serif" font-size="10">{vmax:.6g}</text>',
        f'<text x="{margin_left - 6:.2f}" y="{baseline + 4:.2f}" text-anchor="end" '
        f'font-family="sans-serif" font-size="10">0</text>',
    ]
    for i, (label, value) in enumerate(zip(labels, values)):
        bar_height = value * scale
        x = margin_left + i * slot + (slot - bar_width) / 2
        y = baseline - bar_height
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_width:.2f}" '
            f'height="{bar_height:.2f}" fill="#4878a8"/>'
        )
        parts.append(
            f'<text x="{x + bar_width / 2:.2f}" y="{y - 4:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="9">{value:.6g}</text>'
        )
        label_x = x + bar_width / 2
        label_y = baseline + 12
        parts.append(
            f'<text x="{label_x:.2f}" y="{label_y:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10" '
            f'transform="rotate(-45 {label_x:.2f} {label_y:.2f})">{escape(label)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _summary_table_text(summaries: Sequence[SweepSummary]) -> str:
    lines = []
    header = (
        f"{'method':<14} {'params':<12} {'W':<5} {'runs':<5} "
        f"{'mean_fitness':<14} {'std_fitness':<13} {'mean_size':<11} "
        f"{'std_size':<10} {'mean_evals':<12}"
    )
    by_problem: dict[str, list[SweepSummary]] = {}
    for s in summaries:
        by_problem.setdefault(s.problem, []).append(s)
    for problem, group in by_problem.items():
        lines.append(f"== {problem} ==")
        lines.append(header)
        for s in group:
            lines.append(
                f"{s.method:<14} {s.params:<12} {s.kill_proportion:<5g} "
                f"{s.n_runs:<5} {s.mean_fitness:<14.6g} {s.std_fitness:<13.6g} "
                f"{s.mean_tree_size:<11.6g} {s.std_tree_size:<10.6g} "
                f"{s.mean_evaluations:<12.6g}"
            )
        lines.append("")
    return "\n".join(lines)


def emit_report(summaries: Sequence[SweepSummary], out_dir: Path) -> list[Path]:
    """Write per-problem SVG bar charts and a plain-text summary table."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    by_problem: dict[str, list[SweepSummary]] = {}
    for s in summaries:
        by_problem.setdefault(s.problem, []).append(s)
    for problem, group in by_problem.items():
        labels = [_method_label(s) for s in group]
        for attr, axis_label in MEASURES:
            values = [getattr(s, attr) for s in group]
            svg = bar_chart_svg(f"{problem}: {axis_label}", axis_label, labels, values)
            path = out_dir / f"{problem}__{attr}.svg"
            path.write_text(svg)
            written.append(path)
    table_path = out_dir / "report.txt"
    table_path.write_text(_summary_table_text(summaries))
    written.append(table_path)
    return written


def regenerate_report(out_dir: Path) -> list[Path]:
    """Rebuild plots and the text table from CSVs persisted in ``out_dir``.

    Prefers re-summarizing the per-generation CSV; falls back to the summary
    CSV when only that is present.
    """
    out_dir = Path(out_dir)
    generations = out_dir / "generations.csv"
    summary = out_dir / "summary.csv"
    if generations.exists():
        summaries = summarize(read_generation_records(generations))
    elif summary.exists():
        summaries = read_summary_csv(summary)
    else:
        raise FileNotFoundError(f"{out_dir} holds neither generations.csv nor summary.csv")
    return emit_report(summaries, out_dir)
