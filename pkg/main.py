#!/usr/bin/env python3
"""
TSN Ring Simulator - Main Entry Point

Runs CQF, Paternoster and three-queue CQF scenarios on a unidirectional switch
ring, prints analytic CQF bounds, and dumps the default scenario configuration.
"""

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from src.bounds import BoundInput, bounds_table
from src.config import ConfigError, ConfigManager, ScenarioConfig
from src.logging import SimLogger
from src.runner import SweepError, SweepRunner, emit_csv

# Load environment variables from .env file
load_dotenv()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Discrete-event simulator for TSN egress scheduling on a switch ring"
    )
    parser.add_argument("--version", action="version", version="TSN Ring Simulator v1.0.0")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run a scenario or sweep and emit CSV")
    run.add_argument("--config", type=str, required=True, help="Path to scenario JSON")
    run.add_argument("--out", type=str, default=None, help="CSV output path (default: stdout)")
    run.add_argument("--seed", type=int, default=None, help="Override the configured seed")
    run.add_argument(
        "--parallel", type=int, default=1, help="Worker processes for sweeps (default: 1)"
    )
    run.add_argument(
        "--log-level",
        type=str,
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Override the configured log level",
    )

    bounds = commands.add_parser("bounds", help="Print analytic CQF bounds")
    bounds.add_argument("--hops", type=int, required=True, help="Hop count H")
    bounds.add_argument("--cycle-ns", type=int, required=True, help="Cycle time CT in ns")
    bounds.add_argument("--prop-ns", type=int, default=0, help="Propagation delay in ns")
    bounds.add_argument(
        "--window-ns", type=int, default=None, help="ST window in ns (default: half the cycle)"
    )
    bounds.add_argument(
        "--streams", type=int, default=3, help="Streams sharing a link (default: 3)"
    )
    bounds.add_argument(
        "--frame-bytes", type=int, default=64, help="ST frame size in bytes (default: 64)"
    )

    commands.add_parser("defaults", help="Print the default scenario configuration")
    return parser


def apply_overrides(config: ScenarioConfig, args: argparse.Namespace) -> ScenarioConfig:
    """Apply --seed and --log-level on top of the loaded configuration."""
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    if args.log_level is not None:
        logging_config = replace(config.logging_config, level=args.log_level)
        config = replace(config, logging_config=logging_config)
    is_valid, error_message = config.validate()
    if not is_valid:
        raise ConfigError(f"Configuration validation error: {error_message}")
    return config


def command_run(args: argparse.Namespace) -> int:
    config_path = Path(args.config)
    if not config_path.exists():
        print(f"Error: Configuration file not found at {args.config}", file=sys.stderr)
        return 1

    manager = ConfigManager()
    try:
        config = apply_overrides(manager.load_config(str(config_path)), args)
    except ConfigError as e:
        print(f"Error: {args.config}: {e}", file=sys.stderr)
        return 1

    logger = SimLogger(config.logging_config)
    for warning in manager.warnings:
        logger.log_warning(warning)
    logger.log_info(
        "Loaded scenario",
        {"config": args.config, "scheduler": config.scheduler, "seed": config.seed},
    )

    try:
        rows = SweepRunner(logger=logger).run_sweep(config, parallel=args.parallel)
        emit_csv(rows, args.out)
    except SweepError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        logger.log_error("Could not write results", e)
        print(f"Error: {e}", file=sys.stderr)
        return 1

    if args.out:
        logger.log_info("Results written", {"path": args.out, "rows": len(rows)})
    return 0


def command_bounds(args: argparse.Namespace) -> int:
    try:
        b = BoundInput(
            hops=args.hops,
            cycle_time_ns=args.cycle_ns,
            st_window_ns=args.window_ns,
            streams_per_link=args.streams,
            frame_bits=args.frame_bytes * 8,
            prop_delay_ns=args.prop_ns,
        )
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    print(bounds_table(b))
    return 0


def command_defaults(args: argparse.Namespace) -> int:
    print(ConfigManager().dump_config(ScenarioConfig()))
    return 0


COMMANDS = {"run": command_run, "bounds": command_bounds, "defaults": command_defaults}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the simulator CLI."""
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
