"""
Summary View - rich tables for verification runs
"""

from collections import OrderedDict
from typing import List, Optional, Sequence

from rich import box
from rich.console import Console
from rich.table import Table

from config import REPORT_CONFIG
from modules.verify.results import ConvergenceStudy


def _fmt(value, digits: int = 3) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    return f"{value:.{digits}e}" if value != 0 and (abs(value) < 1e-3 or abs(value) >= 1e4) else f"{value:.{digits}f}"


def _params(parameters: dict) -> str:
    return " ".join(f"{k}={_fmt(v) if isinstance(v, float) else v}" for k, v in parameters.items() if k != "dt")


class SummaryView:
    """Renders verification results on a rich console"""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    def show_summary(self, results: Sequence) -> None:
        """Per check id: how many ran, passed, failed and the tightest margin"""
        groups = OrderedDict()
        for result in results:
            groups.setdefault(result.check_id, []).append(result)

        table = Table(
            title="📊 Verification summary",
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
            title_style="bold magenta",
        )
        table.add_column("Check", style="cyan")
        table.add_column("Runs", justify="right")
        table.add_column("Passed", justify="right", style="green")
        table.add_column("Failed", justify="right")
        table.add_column("Min margin", justify="right")

        total_failed = 0
        for check_id, group in groups.items():
            failed = sum(1 for r in group if not r.passed)
            total_failed += failed
            margins = [r.margin for r in group if r.margin is not None]
            style = "red" if failed else "white"
            table.add_row(
                check_id,
                str(len(group)),
                str(len(group) - failed),
                f"[{style}]{failed}[/{style}]",
                _fmt(min(margins)) if margins else "-",
            )

        table.add_section()
        total_style = "red" if total_failed else "green"
        table.add_row(
            "[bold]Total[/bold]",
            f"[bold]{len(results)}[/bold]",
            f"[bold]{len(results) - total_failed}[/bold]",
            f"[bold {total_style}]{total_failed}[/bold {total_style}]",
            "",
        )
        self.console.print(table)

    def show_failures(self, results: Sequence, limit: Optional[int] = None) -> None:
        limit = limit or REPORT_CONFIG["max_failures_shown"]
        failures = [r for r in results if not r.passed]
        if not failures:
            self.console.print("\n[green]✅ All checks passed[/green]\n")
            return

        table = Table(
            title=f"❌ Failing results ({len(failures)})",
            box=box.HEAVY,
            show_header=True,
            header_style="bold red",
        )
        table.add_column("Check", style="cyan")
        table.add_column("Field")
        table.add_column("Parameters", style="dim")
        table.add_column("Measured", justify="right")
        table.add_column("Bound/target", justify="right")
        table.add_column("Margin", justify="right", style="red")
        for result in failures[:limit]:
            record = result.to_record()
            table.add_row(
                record["check_id"], record["field_name"], _params(record["parameters"]),
                _fmt(record["measured"]), _fmt(record["bound_or_target"]), _fmt(record["margin"]),
            )
        self.console.print(table)
        if len(failures) > limit:
            self.console.print(f"[dim]... {len(failures) - limit} more in the report[/dim]")

    def show_convergence(self, results: Sequence) -> None:
        """Fitted orders with the raw (step, error) pairs behind them"""
        studies: List[ConvergenceStudy] = [r for r in results if isinstance(r, ConvergenceStudy)]
        if not studies:
            return

        table = Table(
            title="📉 Convergence studies",
            box=box.DOUBLE,
            show_header=True,
            header_style="bold yellow",
        )
        table.add_column("Check", style="cyan")
        table.add_column("Field")
        table.add_column("Order", justify="right")
        table.add_column("Target", justify="right")
        table.add_column("(step, error)", style="dim")
        table.add_column("", justify="center")
        for study in studies:
            pairs = "  ".join(f"({_fmt(v, 2)}, {_fmt(e, 2)})" for v, e in zip(study.values, study.errors))
            target = "-" if study.order_target is None else f"{study.order_target:.2f} ± {study.order_window:.2f}"
            table.add_row(
                study.check_id, study.field_name,
                _fmt(study.fitted_order), target, pairs,
                "✅" if study.passed else "❌",
            )
        self.console.print(table)

    def show_field(self, title: str, field) -> None:
        """Grid facts and value range of one field"""
        table = Table(title=f"📐 {title}", box=box.ROUNDED, show_header=False)
        table.add_column("", style="cyan")
        table.add_column("", justify="right")
        table.add_row("name", field.name)
        table.add_row("space", f"{field.space.shape} spacing {field.space.spacing}")
        table.add_row("time", f"t0={field.time.t0:g} dt={field.time.dt:g} n={field.time.n}")
        table.add_row("min / max", f"{field.values.min():.6g} / {field.values.max():.6g}")
        self.console.print(table)
