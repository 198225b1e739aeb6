"""
Rich-based CLI interface for the fractional variational toolkit.

Each command returns a process exit status: 0 on success, 1 when a file
cannot be written or read, 2 for domain and validation errors. Data goes to
stdout or the requested file; status messages go to stderr.
"""

import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.config.settings import settings
from src.errors import FracVarError
from src.export import ArtifactExporter
from src.reproduce import (
    TABLE_FIELDS,
    RunConfig,
    TableRow,
    build_figure,
    build_table,
    derivative_records,
    functional_record,
    series_control,
    solution_records,
)
from src.templates import customize_template, get_figure_template, list_available_templates

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2


class CLI:
    """
    Command-line interface for solving, evaluating and reproducing.

    Example:
        >>> from src.reproduce import create_run_config
        >>> cli = CLI()
        >>> cli.cmd_functional(create_run_config(1.0, "classical", m=10))
        0
    """

    def __init__(self, exporter: Optional[ArtifactExporter] = None):
        """
        Initialize the CLI.

        Args:
            exporter: Artifact writer, default ArtifactExporter()
        """
        self.console = Console(stderr=True)
        self.exporter = exporter or ArtifactExporter()

    def _guard(self, action: Callable[[], None]) -> int:
        try:
            action()
        except OSError as e:
            self.console.print(f"[bold red]✗ I/O error:[/bold red] {escape(str(e))}", highlight=False)
            return EXIT_IO
        except (FracVarError, ValueError) as e:
            self.console.print(f"[bold red]✗ Error:[/bold red] {escape(str(e))}", highlight=False)
            return EXIT_DOMAIN
        return EXIT_OK

    def _emit(self, records, fields: Sequence[str], path: Optional[Path], fmt: str) -> None:
        if path is None:
            sys.stdout.write(self.exporter.render(records, fields, fmt))
            sys.stdout.flush()
        else:
            written = self.exporter.write_records(records, fields, path, fmt)
            self.console.print(f"[green]✓ wrote[/green] {written}")

    # ===== Commands =====

    def cmd_solve(self, cfg: RunConfig) -> int:
        """Write x,y samples of the selected solution."""
        def action():
            records = solution_records(cfg)
            self._emit(records, ["x", "y"], cfg.output_path, cfg.output_format)
        return self._guard(action)

    def cmd_functional(self, cfg: RunConfig) -> int:
        """Write J of the selected solution as a single record."""
        def action():
            record = functional_record(cfg)
            self._emit([record], ["method", "alpha", "m", "J"], cfg.output_path, cfg.output_format)
        return self._guard(action)

    def cmd_table(
        self,
        m_sweep: Optional[Sequence[int]] = None,
        tol: Optional[float] = None,
        output_path: Optional[Path] = None,
        alphas: Optional[Sequence[float]] = None,
        output_format: str = "csv",
        max_workers: Optional[int] = None
    ) -> int:
        """Evaluate the functional-value table and write it."""
        def action():
            rows = build_table(alphas, m_sweep, series_control(tol), max_workers)
            self.display_table(rows)
            self._emit(rows, TABLE_FIELDS, output_path, output_format)
        return self._guard(action)

    def cmd_figures(
        self,
        alphas: Optional[Sequence[float]] = None,
        m: Optional[int] = None,
        output_dir: Optional[Path] = None,
        names: Optional[Sequence[str]] = None,
        output_format: str = "csv"
    ) -> int:
        """
        Write one data file per figure template into output_dir.

        Files keep the template name with the output format as suffix
        (figure_1.csv or figure_1.json).
        """
        def action():
            target = Path(output_dir or settings.output_dir)
            for name in names or list_available_templates():
                template = get_figure_template(name)
                if template is None:
                    raise ValueError(f"unknown figure {name!r}; available: {list_available_templates()}")
                figure = build_figure(customize_template(template, alphas), m)
                filename = Path(figure["filename"]).with_suffix(f".{output_format}")
                written = self.exporter.write_records(
                    figure["rows"], figure["columns"], target / filename, output_format
                )
                self.console.print(
                    f"[green]✓ {figure['name']}[/green] {len(figure['columns']) - 1} curves -> {written}"
                )
        return self._guard(action)

    def cmd_deriv(
        self,
        input_path: Path,
        alpha: float,
        side: str = "left",
        output_path: Optional[Path] = None,
        output_format: str = "csv"
    ) -> int:
        """Apply the L1 Caputo derivative to x,y samples read from a file."""
        def action():
            xs, ys = self.exporter.read_samples(input_path)
            records = derivative_records(xs, ys, alpha, side)
            self._emit(records, ["x", "d"], output_path, output_format)
        return self._guard(action)

    # ===== Display =====

    def display_table(self, rows: List[TableRow]) -> None:
        """Show table rows on the status console."""
        table = Table(title="Functional values", box=box.SIMPLE_HEAVY)
        for column in ("alpha", "J C-RL", "J C-C", "m", "C-RL limit", "C-C limit"):
            table.add_column(column, justify="right")

        def cell(value) -> str:
            return value if isinstance(value, str) else f"{value:.4f}"

        for row in rows:
            table.add_row(
                f"{row['alpha']:g}",
                cell(row["j_crl"]),
                cell(row["j_cc"]),
                str(row["m"]),
                cell(row["j_crl_limit"]),
                cell(row["j_cc_limit"]),
            )
        self.console.print(table)
