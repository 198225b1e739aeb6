"""
Validation utilities for sampled-function input files.

Checks that x,y rows parse as finite numbers and that the abscissae form a
uniform, increasing grid.
"""

from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


class GridValidator:
    """
    Validates x,y sample rows before they are turned into a SampledFunction.
    """

    @staticmethod
    def header_rows(lines: Sequence[str]) -> int:
        """
        Number of header lines to skip: 1 when no field of the first
        non-blank line is numeric, else 0.

        Example:
            >>> GridValidator.header_rows(["x,y", "0,1"])
            1
            >>> GridValidator.header_rows(["0.0,oops", "0.1,1"])
            0
        """
        for line in lines:
            if line.strip():
                fields = line.split(",")
                return 0 if any(_is_number(f) for f in fields) else 1
        return 0

    @staticmethod
    def parse_rows(lines: Sequence[str]) -> Tuple[bool, Optional[str], Optional[np.ndarray]]:
        """
        Parse comma-separated x,y rows with np.loadtxt.

        Args:
            lines: Raw text lines, optionally starting with a header

        Returns:
            Tuple of (is_valid, error_message, rows), rows an (n, 2) array
            or None when invalid

        Example:
            >>> ok, err, rows = GridValidator.parse_rows(["x,y", "0,1", "1,2"])
            >>> ok, rows.tolist()
            (True, [[0.0, 1.0], [1.0, 2.0]])
        """
        body = [line for line in lines if line.strip()]
        skip = GridValidator.header_rows(body)
        if len(body) - skip < 2:
            return False, f"need at least 2 sample rows, got {max(len(body) - skip, 0)}", None

        try:
            rows = np.loadtxt(body, delimiter=",", skiprows=skip, ndmin=2, dtype=float)
        except ValueError as e:
            return False, f"unparseable rows: {e}", None

        if rows.shape[1] != 2:
            return False, f"expected 2 columns, got {rows.shape[1]}", None
        bad = np.flatnonzero(~np.all(np.isfinite(rows), axis=1))
        if bad.size:
            return False, f"row {int(bad[0]) + 1}: non-finite value", None
        return True, None, rows

    @staticmethod
    def validate_uniform(xs: Sequence[float], rtol: float = 1e-6) -> Tuple[bool, Optional[str]]:
        """
        Check that xs is strictly increasing with constant spacing.

        Args:
            xs: Abscissae
            rtol: Allowed deviation of any step from the mean step, relative to it

        Returns:
            Tuple of (is_valid, error_message)

        Example:
            >>> GridValidator.validate_uniform([0.0, 0.5, 1.0])
            (True, None)
            >>> GridValidator.validate_uniform([0.0, 0.2, 1.0])[0]
            False
        """
        xs = np.asarray(xs, dtype=float)
        if xs.size < 2:
            return False, "a grid needs at least 2 nodes"
        h = (xs[-1] - xs[0]) / (xs.size - 1)
        if h <= 0:
            return False, "x values must be strictly increasing"
        deviation = np.abs(np.diff(xs) - h)
        if np.any(deviation > rtol * h):
            k = int(np.argmax(deviation > rtol * h)) + 1
            return False, f"non-uniform spacing at row {k}: step {xs[k] - xs[k - 1]:.6g} vs mean {h:.6g}"
        return True, None

    @staticmethod
    def validate_samples(lines: Sequence[str]) -> Dict[str, Any]:
        """
        Run all checks and return a report.

        Returns:
            Dictionary with keys is_valid, error, xs, ys and summary
        """
        ok, error, rows = GridValidator.parse_rows(lines)
        if ok:
            ok, error = GridValidator.validate_uniform(rows[:, 0])

        if ok:
            xs, ys = rows[:, 0], rows[:, 1]
            summary = f"{xs.size} samples on [{xs[0]:g}, {xs[-1]:g}]"
        else:
            xs = ys = np.empty(0)
            summary = f"Invalid samples: {error}"

        return {
            "is_valid": ok,
            "error": error,
            "xs": xs,
            "ys": ys,
            "summary": summary,
        }
