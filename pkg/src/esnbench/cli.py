"""Command-line entry point (``esn-bench``)."""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import harness, tasks, transfer
from .errors import EsnBenchError
from .rng import new_source


def _config_dir():
    return resources.files("esnbench") / "configs"


def shipped_configs() -> list[str]:
    return sorted(p.name.removesuffix(".json") for p in _config_dir().iterdir()
                  if p.name.endswith(".json"))


def _resolve_config(name_or_path: str) -> harness.ExperimentConfig:
    path = Path(name_or_path)
    if path.exists():
        return harness.load_config(path)
    packaged = _config_dir() / f"{name_or_path}.json"
    if packaged.is_file():
        with resources.as_file(packaged) as p:
            return harness.load_config(p)
    raise EsnBenchError(
        f"no config file {name_or_path!r}; shipped configs: {', '.join(shipped_configs())}"
    )


def _cmd_run(args) -> int:
    config = _resolve_config(args.config)
    if args.dump_weights:
        Path(args.dump_weights).mkdir(parents=True, exist_ok=True)
    results = harness.run_sweep(config, args.seed, args.parallelism,
                                dump_dir=args.dump_weights)
    harness.write_csv(results, args.out)
    n_failed = sum(1 for r in results if r.failed)
    print(f"wrote {len(results)} rows to {args.out}" + (f" ({n_failed} failed points)" if n_failed else ""))
    return 0


def _cmd_taylor_error(args) -> int:
    lines = ["m,rmse"]
    for m in range(1, args.max_m + 1):
        lines.append(f"{m},{transfer.rmse_to_tanh(m, args.grid_points):.17g}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    print(f"wrote approximation errors for m=1..{args.max_m} to {args.out}")
    return 0


def _cmd_list_configs(_args) -> int:
    for name in shipped_configs():
        print(name)
    return 0


def _cmd_mg_series(args) -> int:
    src = new_source(args.seed).derive_stream("mg-series")
    series = tasks.integrate_mackey_glass(args.length, transient=args.transient, src=src)
    lines = ["t,x"] + [f"{t},{x:.17g}" for t, x in enumerate(series, start=1)]
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    print(f"wrote {args.length} samples to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esn-bench",
        description="Echo state network benchmarks with linear-to-tanh transfer functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a sweep or sensitivity config")
    p_run.add_argument("--config", required=True, help="config file path or shipped config name")
    p_run.add_argument("--out", required=True, help="output CSV path")
    p_run.add_argument("--seed", type=int, required=True, help="master seed (unsigned 64-bit)")
    p_run.add_argument("--parallelism", type=int, default=1, help="worker processes")
    p_run.add_argument("--dump-weights", default=None, metavar="DIR",
                       help="also write per-run readout weight CSVs to DIR")
    p_run.set_defaults(func=_cmd_run)

    p_te = sub.add_parser("taylor-error", help="tabulate series-vs-tanh RMSE")
    p_te.add_argument("--max-m", type=int, default=8)
    p_te.add_argument("--grid-points", type=int, default=1001)
    p_te.add_argument("--out", required=True)
    p_te.set_defaults(func=_cmd_taylor_error)

    p_list = sub.add_parser("list-configs", help="list shipped config names")
    p_list.set_defaults(func=_cmd_list_configs)

    p_mg = sub.add_parser("mg-series", help="dump a raw chaotic series for inspection")
    p_mg.add_argument("--length", type=int, default=2000)
    p_mg.add_argument("--seed", type=int, default=0)
    p_mg.add_argument("--transient", type=int, default=tasks.MG_TRANSIENT)
    p_mg.add_argument("--out", required=True)
    p_mg.set_defaults(func=_cmd_mg_series)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EsnBenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
