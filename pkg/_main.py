#!/usr/bin/env python3
"""
Steklov Average Toolkit - Main Entry Point
Corpus generation, operator application, verification suites and reports
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from rich.console import Console

from core.errors import SteklovError
from core.logging_setup import configure_logging
from core.orchestrator import VerificationRunner
from core.run_config import COMMANDS, FORMATS, RunConfig, resolve

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3

console = Console()


def print_header(command: str):
    console.print("\n" + "=" * 80)
    console.print(f"  📐 STEKLOV AVERAGE TOOLKIT - {command}".center(80))
    console.print("=" * 80 + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steklov",
        description="Steklov time averages on sampled space-time fields, with a lemma verification harness",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", dest="config_path", help="JSON config file (flags override it)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--report", dest="report_path")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--lemma", dest="lemma_ids", help="comma-separated lemma ids, prefix match")
    parser.add_argument("--h", type=float, help="window length, an integer multiple of dt")
    parser.add_argument("--q", help="spatial exponent: real >= 1 or inf")
    parser.add_argument("--r", help="time exponent: real >= 1 or inf")
    parser.add_argument("--in", dest="field_in", help="input field manifest")
    parser.add_argument("--out", dest="field_out", help="output field manifest (gen-corpus: directory)")
    parser.add_argument("--dt", type=float, help="time step of the corpus grids")
    parser.add_argument("--jobs", type=int)
    parser.add_argument("--extended", action="store_true", default=None,
                        help="average: keep the whole of I using the zero extension")
    parser.add_argument("--log-level", dest="log_level")
    return parser


# ═══ commands ═══

def run_average(run_config: RunConfig) -> int:
    from modules.field import read_field, write_field
    from modules.operators import SteklovParams, steklov_average, steklov_average_extended
    from modules.report import SummaryView

    field = read_field(run_config.field_in)
    params = SteklovParams.from_h(run_config.h, field.time.dt)
    averaged = steklov_average_extended(field, params) if run_config.extended else steklov_average(field, params)
    target = write_field(averaged, run_config.field_out)

    view = SummaryView(console)
    view.show_field(f"Input {run_config.field_in}", field)
    view.show_field(f"Average h={params.h:g} (k={params.k}) → {target}", averaged)
    return EXIT_OK


def run_gen_corpus(run_config: RunConfig) -> int:
    from modules.field import write_field
    from core.orchestrator import build_suite

    out_dir = Path(run_config.field_out)
    out_dir.mkdir(parents=True, exist_ok=True)
    standard, _ = build_suite(run_config, include_random=False)
    for entry in standard:
        path = write_field(entry.field, out_dir / f"{entry.name}.json")
        console.print(f"   💾 {entry.name:<22} [{entry.smoothness_class}] → {path}")
    console.print(f"\n✅ {len(standard)} corpus fields written to {out_dir}\n")
    return EXIT_OK


def run_checks(run_config: RunConfig) -> int:
    from modules.report import SummaryView, write_report

    runner = VerificationRunner(run_config)
    runner.initialize(studies_only=run_config.command == "converge-study")
    results = runner.run()
    write_report(results, run_config.report_path, run_config.format, run_config.seed)

    view = SummaryView(console)
    view.show_summary(results)
    view.show_convergence(results)
    view.show_failures(results)
    console.print(f"📄 Report: {run_config.report_path}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def run(run_config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    print_header(run_config.command)
    try:
        if run_config.command == "average":
            return run_average(run_config)
        if run_config.command == "gen-corpus":
            return run_gen_corpus(run_config)
        return run_checks(run_config)
    except (SteklovError, ValueError) as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_CONFIG
    except OSError as e:
        console.print(f"[red]❌ I/O error: {e}[/red]")
        return EXIT_IO


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    flags = vars(args)
    command = flags.pop("command")
    configure_logging(flags.pop("log_level"))

    try:
        run_config = resolve(command, flags)
    except (SteklovError, ValueError) as e:
        console.print(f"[red]❌ Invalid configuration: {e}[/red]")
        return EXIT_CONFIG
    except OSError as e:
        console.print(f"[red]❌ I/O error: {e}[/red]")
        return EXIT_IO
    return run(run_config)


if __name__ == "__main__":
    sys.exit(main())
