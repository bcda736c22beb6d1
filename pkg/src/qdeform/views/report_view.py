"""Rendering of reports, rule sets and dimension tables to the terminal."""

import sys
from typing import Iterable, Optional, TextIO

from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..algebra.deform import DimsTable
from ..algebra.report import CheckReport


def make_console(file: Optional[TextIO] = None, use_color: bool = False) -> Console:
    """A console whose output is byte-stable: no markup, highlighting or wrapping."""
    return Console(
        file=file or sys.stdout,
        markup=False,
        highlight=False,
        emoji=False,
        no_color=not use_color,
        color_system="standard" if use_color else None,
        soft_wrap=True,
    )


class ReportView:
    """Writes engine output through a rich Console."""

    def __init__(self, console: Optional[Console] = None, verbose: bool = False):
        self.console = console or make_console()
        self.verbose = verbose

    def lines(self, lines: Iterable[str]) -> None:
        for line in lines:
            self.console.print(Text(line))

    def report(self, report: CheckReport) -> None:
        self.lines(report.lines(self.verbose))

    def dims(self, table: DimsTable, emit: bool = False) -> None:
        """Machine-readable ``n H Hlambda equal`` lines when emitting, a table otherwise."""
        if emit:
            self.lines(table.lines())
            return
        grid = Table(title="graded dimensions", box=None, show_edge=False, pad_edge=False)
        for column in ("n", "H", "Hlambda", "equal"):
            grid.add_column(column, justify="right")
        for n, h, hl, eq in table.rows:
            grid.add_row(str(n), str(h), str(hl), "yes" if eq else "no")
        self.console.print(grid)
        totals = table.total_dimensions()
        if totals is not None:
            self.console.print(Text(f"total dimension: H {totals[0]}, Hlambda {totals[1]}"))

    def error(self, message: str) -> None:
        err = Console(file=sys.stderr, markup=False, highlight=False, no_color=True, soft_wrap=True)
        err.print(Text(f"error: {message}"))
