#!/usr/bin/env python3
"""
Main entry point for the fractional variational toolkit.

Subcommands solve, functional, table, figures and deriv; see --help.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.logging import RichHandler

from src.config.settings import settings
from src.reproduce import create_run_config
from src.ui import CLI
from src.ui.cli import EXIT_DOMAIN


def setup_logging(verbose: bool = False) -> None:
    """Route library logging to stderr through rich."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _split(values: Optional[Sequence[str]], kind):
    if not values:
        return None
    return [kind(part) for value in values for part in value.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Fractional variational toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Samples of the C-C solution at alpha = 0.7
  python main.py solve --alpha 0.7 --method cc --m 1000 --out y_cc.csv

  # Functional value of the classical solution
  python main.py functional --alpha 1 --method classical

  # Reproduce the functional-value table
  python main.py table --m-sweep 100,200,500,1000 --out table.csv

  # Figure data files
  python main.py figures --out-dir output

  # L1 derivative of samples from a file
  python main.py deriv --input y.csv --alpha 0.5 --side left
        """
    )
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", type=float, required=True, help="Fractional order in (0, 1]")
        p.add_argument("--method", choices=["classical", "crl", "cc"], required=True)
        p.add_argument("--m", type=int, help=f"Grid steps (default: {settings.default_grid_steps})")
        p.add_argument("--tol", type=float, help=f"Series tolerance (default: {settings.series_tol:g})")
        p.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", type=Path, help="Output file (default: stdout)")

    add_run_options(sub.add_parser("solve", help="Sample a closed-form solution"))
    add_run_options(sub.add_parser("functional", help="Evaluate the cost functional"))

    table = sub.add_parser("table", help="Reproduce the functional-value table")
    table.add_argument("--m-sweep", nargs="+", help="Grid sizes, comma or space separated")
    table.add_argument("--alphas", nargs="+", help="Orders, comma or space separated")
    table.add_argument("--tol", type=float)
    table.add_argument("--workers", type=int, help="Thread pool size for table cells")
    table.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
    table.add_argument("--out", type=Path)

    figures = sub.add_parser("figures", help="Write figure data files")
    figures.add_argument("--alphas", nargs="+", help="Override every curve's orders")
    figures.add_argument("--m", type=int, help=f"Grid steps (default: {settings.figure_grid_steps})")
    figures.add_argument("--out-dir", type=Path, default=Path(settings.output_dir))
    figures.add_argument("--figure", nargs="+", help="Subset of figures to write")
    figures.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")

    deriv = sub.add_parser("deriv", help="L1 Caputo derivative of x,y samples")
    deriv.add_argument("--input", type=Path, required=True)
    deriv.add_argument("--alpha", type=float, required=True)
    deriv.add_argument("--side", choices=["left", "right"], default="left")
    deriv.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
    deriv.add_argument("--out", type=Path)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit status."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    cli = CLI()

    try:
        if args.command in ("solve", "functional"):
            cfg = create_run_config(
                alpha=args.alpha,
                method=args.method,
                m=args.m,
                tol=args.tol,
                output_format=args.output_format,
                output_path=args.out,
            )
            run = cli.cmd_solve if args.command == "solve" else cli.cmd_functional
            return run(cfg)

        if args.command == "table":
            return cli.cmd_table(
                m_sweep=_split(args.m_sweep, int),
                tol=args.tol,
                output_path=args.out,
                alphas=_split(args.alphas, float),
                output_format=args.output_format,
                max_workers=args.workers,
            )

        if args.command == "figures":
            return cli.cmd_figures(
                alphas=_split(args.alphas, float),
                m=args.m,
                output_dir=args.out_dir,
                names=args.figure,
                output_format=args.output_format,
            )

        return cli.cmd_deriv(
            input_path=args.input,
            alpha=args.alpha,
            side=args.side,
            output_path=args.out,
            output_format=args.output_format,
        )

    except (ValidationError, ValueError) as e:
        cli.console.print(f"[bold red]✗ Invalid arguments:[/bold red] {escape(str(e))}", highlight=False)
        return EXIT_DOMAIN

    except KeyboardInterrupt:
        cli.console.print("\n\nInterrupted by user.")
        return 130


if __name__ == "__main__":
    sys.exit(main())
