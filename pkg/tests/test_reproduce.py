"""Tests for the reproduction pipeline and the figure/reference templates."""

import numpy as np
import pytest
from pydantic import ValidationError

from src.errors import DomainError, SolutionNotExistError
from src.fracops import Grid, Order, caputo_left_l1_all
from src.reproduce import (
    NOT_EXISTS,
    build_figure,
    build_table,
    create_run_config,
    derivative_records,
    functional_record,
    solution_records,
)
from src.specfun import gamma
from src.templates import (
    FIGURE_CONVERGENCE_TEMPLATE,
    REFERENCE_TABLE,
    customize_template,
    get_figure_template,
    list_available_templates,
    reference_values,
)
from src.varsolve import Method, SolutionSpec, sample_solution


class TestRunConfig:
    def test_defaults(self):
        cfg = create_run_config(0.7, "cc")
        assert cfg.m == 1000
        assert cfg.tol == 1e-14
        assert cfg.output_format == "csv"
        assert cfg.output_path is None
        assert cfg.method is Method.CC

    @pytest.mark.parametrize("alpha", [0.0, 1.5])
    def test_order_range(self, alpha):
        with pytest.raises(ValidationError):
            create_run_config(alpha, "cc")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            create_run_config(0.7, "euler")


class TestRecords:
    def test_solution_rows(self):
        records = solution_records(create_run_config(0.4, "cc", m=100))
        assert len(records) == 101
        assert records[0] == {"x": 0.0, "y": 0.0}
        assert records[-1]["x"] == 1.0

    def test_crl_gate(self):
        with pytest.raises(SolutionNotExistError):
            solution_records(create_run_config(0.4, "crl", m=10))

    def test_functional_record(self):
        record = functional_record(create_run_config(1.0, "classical", m=10))
        assert record["method"] == "classical"
        assert record["m"] == 10
        assert record["J"] == pytest.approx(-11.88, abs=1e-9)


class TestTable:
    def test_small_sweep(self):
        rows = build_table(alphas=(1.0, 0.4), m_sweep=(50, 100))
        assert [row["alpha"] for row in rows] == [1.0, 0.4]
        unit, small = rows
        assert unit["j_crl"] == pytest.approx(unit["j_cc"], abs=1e-6)
        assert unit["m"] in (50, 100)
        assert small["j_crl"] == NOT_EXISTS
        assert small["j_crl_limit"] == NOT_EXISTS
        assert np.isfinite(small["j_cc"])

    def test_threaded_matches_sequential(self):
        sequential = build_table(alphas=(0.7,), m_sweep=(40, 80), max_workers=1)
        threaded = build_table(alphas=(0.7,), m_sweep=(40, 80), max_workers=4)
        assert sequential == threaded

    def test_single_grid_limit_is_the_value(self):
        (row,) = build_table(alphas=(0.8,), m_sweep=(60,))
        assert row["m"] == 60
        assert row["j_cc_limit"] == row["j_cc"]
        assert row["j_crl_limit"] == row["j_crl"]

    def test_off_reference_order_uses_finest_grid(self):
        (row,) = build_table(alphas=(0.65,), m_sweep=(30, 60))
        assert row["m"] == 60

    @pytest.mark.slow
    def test_coarse_grids_that_reverse_the_ordering_are_skipped(self):
        (row,) = build_table(alphas=(0.55,), m_sweep=(100, 200, 1000))
        assert row["m"] == 1000
        assert row["j_crl"] < row["j_cc"]
        assert row["j_cc"] == pytest.approx(-40.9804, rel=1e-2)

    @pytest.mark.slow
    def test_full_table(self):
        rows = build_table()
        assert [row["alpha"] for row in rows] == [1.0, 0.95, 0.9, 0.8, 0.7, 0.55, 0.4]
        by_alpha = {row["alpha"]: row for row in rows}

        for alpha, (_, published_cc) in REFERENCE_TABLE.items():
            assert by_alpha[alpha]["j_cc"] == pytest.approx(published_cc, rel=5e-2)

        assert by_alpha[1.0]["j_crl"] == pytest.approx(by_alpha[1.0]["j_cc"], abs=1e-6)
        assert by_alpha[0.4]["j_crl"] == NOT_EXISTS
        for alpha in (0.95, 0.9, 0.8, 0.7, 0.55):
            assert by_alpha[alpha]["j_crl"] < by_alpha[alpha]["j_cc"], alpha

        for alpha in (0.9, 0.95):
            g2 = gamma(1.0 + alpha) ** 2
            crl = (36.0 * (2.0 * alpha - 1.0) / alpha ** 2 - 144.0 / (2.0 * alpha + 1.0)) / g2
            assert by_alpha[alpha]["j_crl_limit"] == pytest.approx(crl, rel=5e-2)


class TestFigures:
    def test_convergence_figure(self):
        figure = build_figure(FIGURE_CONVERGENCE_TEMPLATE, m=20)
        assert figure["filename"] == "figure_1.csv"
        assert figure["columns"][:2] == ["x", "y_classical"]
        assert len(figure["columns"]) == 10
        assert len(figure["rows"]) == 21

        column = {name: np.array([row[name] for row in figure["rows"]]) for name in figure["columns"]}
        for values in column.values():
            assert np.all(np.isfinite(values))
        np.testing.assert_allclose(column["y_crl_1"], column["y_classical"], atol=1e-12)

        gaps = [np.max(np.abs(column[f"y_crl_{a:g}"] - column["y_classical"])) for a in (0.7, 0.8, 0.9)]
        assert gaps[0] > gaps[1] > gaps[2]

    def test_small_order_figure(self):
        figure = build_figure(get_figure_template("figure-3"), m=50)
        assert figure["columns"] == ["x", "y_classical", "y_cc_0.4"]
        curve = [row["y_cc_0.4"] for row in figure["rows"]]
        assert curve[0] == 0.0
        assert abs(curve[-1]) <= 1e-8

    def test_crl_curve_skipped_below_threshold(self):
        figure = build_figure(customize_template(FIGURE_CONVERGENCE_TEMPLATE, [0.4]), m=10)
        assert figure["columns"] == ["x", "y_classical", "y_cc_0.4"]


class TestTemplates:
    def test_listing(self):
        assert list_available_templates() == ["figure-1", "figure-2", "figure-3"]

    def test_aliases(self):
        assert get_figure_template(" Convergence ")["name"] == "figure-1"
        assert get_figure_template("cc-small-order")["name"] == "figure-3"
        assert get_figure_template("figure-9") is None

    def test_customize_copies(self):
        custom = customize_template(FIGURE_CONVERGENCE_TEMPLATE, [0.75])
        assert custom["series"][0]["alphas"] == [0.75]
        assert FIGURE_CONVERGENCE_TEMPLATE["series"][0]["alphas"] == [0.7, 0.8, 0.9, 1.0]

    def test_reference_values(self):
        assert reference_values(0.4) == (None, -55.5863)
        assert reference_values(0.55) == (-127.9983, -40.9804)
        assert reference_values(0.33) == (None, None)


class TestDerivativeRecords:
    def test_constant(self):
        xs = np.linspace(0.0, 2.0, 9)
        records = derivative_records(xs, np.full(9, 3.0), 0.5, "left")
        assert [r["d"] for r in records] == [0.0] * 9

    def test_linear_left(self):
        xs = np.linspace(0.0, 1.0, 21)
        records = derivative_records(xs, xs.copy(), 0.5, "left")
        for r in records:
            assert r["d"] == pytest.approx(r["x"] ** 0.5 / gamma(1.5), abs=1e-10)

    def test_linear_right(self):
        xs = np.linspace(0.0, 1.0, 21)
        records = derivative_records(xs, 1.0 - xs, 0.5, "right")
        for r in records:
            assert r["d"] == pytest.approx((1.0 - r["x"]) ** 0.5 / gamma(1.5), abs=1e-10)

    def test_matches_functional_pipeline(self):
        y = sample_solution(SolutionSpec.of(Method.CC, 0.6), Grid.unit(30))
        records = derivative_records(y.grid.nodes(), y.values, 0.6, "left")
        np.testing.assert_array_equal([r["d"] for r in records], caputo_left_l1_all(y, Order(alpha=0.6)))

    def test_unknown_side(self):
        xs = np.linspace(0.0, 1.0, 5)
        with pytest.raises(DomainError):
            derivative_records(xs, xs, 0.5, "up")
