"""Experiment orchestration: grid expansion, the train/evaluate protocol,
and canonical CSV persistence.

Each grid point derives its own random stream from the master seed via
``task/v/m/lambda/seed-index``, so results are independent of execution
order and worker count; output rows are sorted canonically, making files
byte-identical at any parallelism.

Protocol per point: build the reservoir and input weights from derived
streams, drive a training instance with a 2N washout, train the readout,
then drive an independently generated evaluation instance from the zero
state and score it.  Evaluation inputs are fresh realizations by default
(the stricter generalization test); set ``reuse_input`` to repeat the
training realization.

Failure isolation: points whose dynamics diverge (truncated-series overflow,
integration blowup, exhausted regeneration) are recorded as ``FAIL`` rows
rather than aborting the sweep, and runs whose state magnitude reaches 1 are
failed the same way because they break the benchmark's comparability
contract (states must stay below 1 at the chosen input scalings).
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import metrics, readout, tasks
from .errors import (
    ConfigError,
    IntegrationError,
    InvalidRangeError,
    RegenerationExhaustedError,
    StateOverflowError,
)
from .reservoir import TOPOLOGIES, build_reservoir, drive
from .rng import RandomSource, new_source
from .tasks import TASK_KINDS, TaskInstance
from .transfer import TransferSpec, parse_transfer

__all__ = [
    "DEFAULT_V_GRID",
    "SENSITIVITY_GRID",
    "DEFAULT_TRANSFER_GRID",
    "TASK_DEFAULTS",
    "CSV_COLUMNS",
    "ExperimentConfig",
    "ExperimentResult",
    "load_config",
    "config_from_dict",
    "run_point",
    "run_sweep",
    "run_sensitivity",
    "write_csv",
    "read_csv",
]

# 10^-5 .. 10^-1 at quarter-decade increments, then 0.20..0.35 by 0.05.
DEFAULT_V_GRID = tuple(10.0 ** (-5.0 + 0.25 * k) for k in range(17)) + (
    0.20,
    0.25,
    0.30,
    0.35,
)

SENSITIVITY_GRID = tuple(i / 10.0 for i in range(1, 11))

DEFAULT_TRANSFER_GRID = ("taylor:1", "taylor:2", "taylor:3", "taylor:4", "tanh")
SENSITIVITY_TRANSFER_GRID = ("taylor:1", "tanh")

# task -> (topology, N, spectral radius)
TASK_DEFAULTS = {
    "memory": ("scr", 50, 0.9),
    "legendre3": ("goe", 50, 0.1),
    "mackey-glass": ("scr", 500, 0.9),
    "narma10": ("scr", 100, 0.8),
}

METRIC_NAMES = {
    "memory": "memory_capacity_total",
    "legendre3": "legendre3_capacity_total",
    "mackey-glass": "nmse",
    "narma10": "nmse",
}

CSV_COLUMNS = (
    "task",
    "topology",
    "N",
    "lambda",
    "v",
    "transfer",
    "seed",
    "metric",
    "value",
    "max_abs_state",
)

FAIL_SENTINEL = "FAIL"

# Runs whose states reach this magnitude violate the benchmark protocol and
# are recorded as failures (distinct from the hard overflow limit in drive).
PROTOCOL_STATE_LIMIT = 1.0

_CONFIG_KEYS = {
    "task",
    "topology",
    "N",
    "lambda",
    "v_grid",
    "transfer_grid",
    "seeds",
    "train_length",
    "eval_length",
    "washout",
    "tau_max",
    "legendre_order",
    "mg_horizon",
    "nmse_convention",
    "reuse_input",
    "ridge",
    "lambda_grid",
    "experiment",
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved description of one sweep or sensitivity experiment."""

    task: str
    topology: str
    size: int
    spectral_radius: float
    v_grid: tuple[float, ...] = DEFAULT_V_GRID
    transfer_grid: tuple[str, ...] = DEFAULT_TRANSFER_GRID
    seeds: int = 10
    train_length: int = 2000
    eval_length: int = 2000
    washout: int | None = None
    tau_max: int = 100
    legendre_order: int = 3
    mg_horizon: int = 1
    nmse_convention: str = "paper"
    reuse_input: bool = False
    ridge: float = 0.0
    lambda_grid: tuple[float, ...] | None = None
    experiment: str = "sweep"

    def __post_init__(self):
        if self.task not in TASK_KINDS:
            raise ConfigError(f"unknown task {self.task!r}; expected one of {TASK_KINDS}")
        if self.topology not in TOPOLOGIES:
            raise ConfigError(f"unknown topology {self.topology!r}; expected one of {TOPOLOGIES}")
        if self.experiment not in ("sweep", "sensitivity"):
            raise ConfigError(f"unknown experiment type {self.experiment!r}")
        if self.experiment == "sensitivity":
            if self.topology != "dense":
                raise ConfigError("sensitivity experiments require the dense topology")
            if not self.lambda_grid:
                raise ConfigError("sensitivity experiments require a lambda_grid")
        if not self.transfer_grid:
            raise ConfigError("transfer_grid must not be empty")
        for token in self.transfer_grid:
            try:
                parse_transfer(token)
            except InvalidRangeError as e:
                raise ConfigError(str(e)) from e
        if not self.v_grid:
            raise ConfigError("v_grid must not be empty")
        if any(v < 0 for v in self.v_grid):
            raise ConfigError("v values must be non-negative")
        if self.size < 2:
            raise ConfigError(f"N must be >= 2, got {self.size}")
        if self.seeds < 1:
            raise ConfigError(f"seeds must be >= 1, got {self.seeds}")
        if self.train_length <= 0 or self.eval_length <= 0:
            raise ConfigError("run lengths must be positive")
        if self.washout is not None and self.washout < 0:
            raise ConfigError("washout must be >= 0")
        if self.nmse_convention not in metrics.NMSE_CONVENTIONS:
            raise ConfigError(f"unknown nmse convention {self.nmse_convention!r}")

    @property
    def effective_washout(self) -> int:
        return 2 * self.size if self.washout is None else self.washout

    def lambdas(self) -> tuple[float, ...]:
        if self.experiment == "sensitivity":
            return tuple(self.lambda_grid or ())
        return (self.spectral_radius,)


@dataclass(frozen=True)
class ExperimentResult:
    """One output row: a scored run, a summary statistic, or a failure."""

    task: str
    topology: str
    size: int
    spectral_radius: float
    v: float
    transfer: str
    seed: str
    metric: str
    value: float
    max_abs_state: float
    failed: bool = False


def config_from_dict(raw: dict) -> ExperimentConfig:
    """Build a config from parsed JSON, applying per-task defaults."""
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "task" not in raw:
        raise ConfigError("config must name a task")
    task = raw["task"]
    if task not in TASK_DEFAULTS:
        raise ConfigError(f"unknown task {task!r}; expected one of {TASK_KINDS}")
    d_topology, d_size, d_lambda = TASK_DEFAULTS[task]
    experiment = raw.get("experiment", "sweep")
    if experiment == "sensitivity":
        d_topology = "dense"
    kwargs = dict(
        task=task,
        topology=raw.get("topology", d_topology),
        size=int(raw.get("N", d_size)),
        spectral_radius=float(raw.get("lambda", d_lambda)),
        seeds=int(raw.get("seeds", 10)),
        train_length=int(raw.get("train_length", 2000)),
        eval_length=int(raw.get("eval_length", 2000)),
        washout=None if raw.get("washout") is None else int(raw["washout"]),
        tau_max=int(raw.get("tau_max", 100)),
        legendre_order=int(raw.get("legendre_order", 3)),
        mg_horizon=int(raw.get("mg_horizon", 1)),
        nmse_convention=raw.get("nmse_convention", "paper"),
        reuse_input=bool(raw.get("reuse_input", False)),
        ridge=float(raw.get("ridge", 0.0)),
        experiment=experiment,
    )
    if experiment == "sensitivity":
        kwargs["v_grid"] = tuple(raw.get("v_grid", SENSITIVITY_GRID))
        kwargs["transfer_grid"] = tuple(raw.get("transfer_grid", SENSITIVITY_TRANSFER_GRID))
        kwargs["lambda_grid"] = tuple(raw.get("lambda_grid", SENSITIVITY_GRID))
    else:
        kwargs["v_grid"] = tuple(raw.get("v_grid", DEFAULT_V_GRID))
        kwargs["transfer_grid"] = tuple(raw.get("transfer_grid", DEFAULT_TRANSFER_GRID))
        if raw.get("lambda_grid") is not None:
            raise ConfigError("lambda_grid is only valid for sensitivity experiments")
    return ExperimentConfig(**kwargs)


def load_config(path) -> ExperimentConfig:
    """Load and validate a JSON config file."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config {path} is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    return config_from_dict(raw)


def _make_task(config: ExperimentConfig, src: RandomSource, length: int) -> TaskInstance:
    if config.task == "memory":
        return tasks.gen_memory(src, length, config.tau_max)
    if config.task == "legendre3":
        return tasks.gen_legendre(src, length, config.legendre_order, config.tau_max)
    if config.task == "mackey-glass":
        return tasks.gen_mackey_glass(src, length, config.mg_horizon)
    return tasks.gen_narma10(src, length)


def _score(config: ExperimentConfig, predictions: np.ndarray, targets: np.ndarray) -> float:
    if config.task in ("memory", "legendre3"):
        return metrics.total_capacity(predictions, targets).total
    return metrics.nmse(predictions[:, 0], targets[:, 0], config.nmse_convention)


def _dump_weights(dump_dir, config, v, token, lam, seed_index, weights) -> None:
    safe_token = token.replace(":", "-")
    name = f"{config.task}_v{v:.6g}_{safe_token}_lam{lam:.6g}_seed{seed_index}.csv"
    path = Path(dump_dir) / name
    lines = [",".join(f"{w:.17g}" for w in row) for row in weights.weights]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def run_point(
    config: ExperimentConfig,
    v: float,
    spec: TransferSpec,
    seed_index: int,
    master_seed: int,
    spectral_radius: float | None = None,
    dump_dir=None,
) -> list[ExperimentResult]:
    """Train and evaluate one grid point; failures become FAIL rows."""
    lam = config.spectral_radius if spectral_radius is None else spectral_radius
    token = spec.token
    point_src = new_source(master_seed).derive_stream(
        f"{config.task}/v={v:.17g}/m={token}/lam={lam:.17g}/seed={seed_index}"
    )
    metric_name = METRIC_NAMES[config.task]

    def failure(max_abs: float) -> list[ExperimentResult]:
        return [
            ExperimentResult(
                config.task, config.topology, config.size, lam, v, token,
                str(seed_index), metric_name, math.nan, max_abs, failed=True,
            )
        ]

    washout = config.effective_washout
    try:
        res = build_reservoir(
            config.topology, config.size, lam, v,
            point_src.derive_stream("reservoir"),
            point_src.derive_stream("input-weights"),
        )
        train_inst = _make_task(config, point_src.derive_stream("train-task"), config.train_length)
        train_traj = drive(res, spec, train_inst.input, washout)
        weights = readout.train(train_traj, train_inst.targets[washout:], config.ridge)
        if dump_dir is not None:
            _dump_weights(dump_dir, config, v, token, lam, seed_index, weights)
        if config.reuse_input:
            eval_inst = train_inst
        else:
            eval_inst = _make_task(config, point_src.derive_stream("eval-task"), config.eval_length)
        eval_traj = drive(res, spec, eval_inst.input, washout)
        predictions = readout.predict(weights, eval_traj)
        value = _score(config, predictions, eval_inst.targets[washout:])
    except StateOverflowError as e:
        return failure(e.magnitude)
    except (IntegrationError, RegenerationExhaustedError):
        return failure(math.nan)
    max_abs = max(train_traj.max_abs_state, eval_traj.max_abs_state)
    if max_abs >= PROTOCOL_STATE_LIMIT:
        return failure(max_abs)
    return [
        ExperimentResult(
            config.task, config.topology, config.size, lam, v, token,
            str(seed_index), metric_name, value, max_abs,
        )
    ]


def _transfer_order(token: str) -> tuple[int, int]:
    spec = parse_transfer(token)
    return (1, 0) if spec.kind == "tanh" else (0, spec.order)


def _seed_order(seed: str) -> tuple[int, int]:
    try:
        return (0, int(seed))
    except ValueError:
        return (1, {"mean": 0, "std": 1, "failed": 2}.get(seed, 3))


def _row_key(r: ExperimentResult):
    return (
        r.task,
        r.topology,
        r.size,
        r.spectral_radius,
        r.v,
        _transfer_order(r.transfer),
        _seed_order(r.seed),
        r.metric,
    )


def _grid(config: ExperimentConfig):
    for lam in config.lambdas():
        for v in config.v_grid:
            for token in config.transfer_grid:
                for seed_index in range(config.seeds):
                    yield lam, v, token, seed_index


def _point_worker(args) -> list[ExperimentResult]:
    config, lam, v, token, seed_index, master_seed, dump_dir = args
    return run_point(config, v, parse_transfer(token), seed_index, master_seed,
                     spectral_radius=lam, dump_dir=dump_dir)


def _summaries(points: list[ExperimentResult]) -> list[ExperimentResult]:
    groups: dict[tuple, list[ExperimentResult]] = {}
    for r in points:
        key = (r.task, r.topology, r.size, r.spectral_radius, r.v, r.transfer, r.metric)
        groups.setdefault(key, []).append(r)
    rows = []
    for key, members in groups.items():
        task, topology, size, lam, v, token, metric = key
        values = [m.value for m in members if not m.failed]
        max_abs = max((m.max_abs_state for m in members), default=math.nan)
        n_failed = sum(1 for m in members if m.failed)
        mean = float(np.mean(values)) if values else math.nan
        std = float(np.std(values, ddof=1)) if len(values) >= 2 else math.nan
        rows.append(ExperimentResult(task, topology, size, lam, v, token, "mean",
                                     metric, mean, max_abs))
        rows.append(ExperimentResult(task, topology, size, lam, v, token, "std",
                                     metric, std, max_abs))
        if n_failed:
            rows.append(ExperimentResult(task, topology, size, lam, v, token, "failed",
                                         metric, float(n_failed), max_abs))
    return rows


def run_sweep(config: ExperimentConfig, master_seed: int, parallelism: int = 1,
              dump_dir=None) -> list[ExperimentResult]:
    """Execute the full grid and append per-grid-point summary rows.

    Output order is canonical (task, lambda, v, transfer, seed), so files are
    identical regardless of ``parallelism``.  ``dump_dir`` enables the
    per-run readout weight sidecar files (names are unique per grid point,
    so parallel writes are safe).
    """
    if parallelism < 1:
        raise ConfigError(f"parallelism must be >= 1, got {parallelism}")
    jobs = [(config, lam, v, token, s, master_seed, dump_dir)
            for lam, v, token, s in _grid(config)]
    points: list[ExperimentResult] = []
    if parallelism == 1:
        for job in jobs:
            points.extend(_point_worker(job))
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            for rows in pool.map(_point_worker, jobs, chunksize=8):
                points.extend(rows)
    points.sort(key=_row_key)
    summaries = sorted(_summaries(points), key=_row_key)
    return points + summaries


def run_sensitivity(config: ExperimentConfig, master_seed: int, parallelism: int = 1,
                    dump_dir=None) -> list[ExperimentResult]:
    """Run the (v, lambda) sensitivity grid; requires a sensitivity config."""
    if config.experiment != "sensitivity":
        raise ConfigError("run_sensitivity requires experiment='sensitivity'")
    return run_sweep(config, master_seed, parallelism, dump_dir)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_csv(results, path) -> None:
    """Write rows in the fixed column order, 17 significant digits, LF endings."""
    lines = [",".join(CSV_COLUMNS)]
    for r in results:
        value = FAIL_SENTINEL if r.failed else _fmt(r.value)
        lines.append(
            ",".join(
                (
                    r.task,
                    r.topology,
                    str(r.size),
                    _fmt(r.spectral_radius),
                    _fmt(r.v),
                    r.transfer,
                    r.seed,
                    r.metric,
                    value,
                    _fmt(r.max_abs_state),
                )
            )
        )
    data = "\n".join(lines) + "\n"
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
    except OSError as e:
        raise OSError(f"cannot write results to {path}: {e}") from e


def read_csv(path) -> list[ExperimentResult]:
    """Parse a results file back into rows (inverse of :func:`write_csv`)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(f"cannot read results from {path}: {e}") from e
    lines = text.splitlines()
    if not lines or lines[0] != ",".join(CSV_COLUMNS):
        raise ConfigError(f"{path} does not carry the expected results header")
    rows = []
    for line in lines[1:]:
        fields = line.split(",")
        if len(fields) != len(CSV_COLUMNS):
            raise ConfigError(f"malformed results row: {line!r}")
        task, topology, size, lam, v, transfer, seed, metric, value, max_abs = fields
        failed = value == FAIL_SENTINEL
        rows.append(
            ExperimentResult(
                task, topology, int(size), float(lam), float(v), transfer, seed,
                metric, math.nan if failed else float(value), float(max_abs), failed,
            )
        )
    return rows
