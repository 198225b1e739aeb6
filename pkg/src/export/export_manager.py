"""
Artifact Export Manager for writing solution samples, functional values,
tables and figure data.

CSV files are written with np.savetxt: one header row, comma separators and
LF line endings; floats use settings.csv_float_format. JSON files hold a
list of flat records with the same fields and values.
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import settings
from src.errors import InputFormatError
from src.utils.grid_validator import GridValidator

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


def _is_float(value: Any) -> bool:
    return isinstance(value, (float, np.floating))


class ArtifactExporter:
    """
    Renders records to CSV or JSON and reads x,y sample files back.

    Output is a pure function of the records, so repeated runs with the same
    inputs produce byte-identical files.
    """

    def __init__(self, float_format: Optional[str] = None):
        """
        Initialize the exporter.

        Args:
            float_format: printf-style float format, default settings.csv_float_format

        Example:
            >>> exporter = ArtifactExporter()
            >>> exporter.format_value(0.5)
            '5.000000000000e-01'
        """
        self.float_format = float_format or settings.csv_float_format

    def format_value(self, value: Any) -> str:
        """Render one cell; floats follow float_format, everything else str()."""
        if isinstance(value, (float, np.floating)):
            return self.float_format % float(value)
        if hasattr(value, "value"):  # enums
            return str(value.value)
        return str(value)

    def _json_value(self, value: Any) -> Any:
        if isinstance(value, (float, np.floating)):
            # same digits as the CSV rendering
            return float(self.float_format % float(value))
        if isinstance(value, np.integer):
            return int(value)
        if hasattr(value, "value"):
            return value.value
        return value

    def render(self, records: Sequence[Record], fields: Sequence[str], fmt: str = "csv") -> str:
        """
        Render records as CSV or JSON text.

        Args:
            records: Flat dictionaries
            fields: Column order
            fmt: "csv" or "json"

        Returns:
            Text ending with a single LF

        Example:
            >>> ArtifactExporter(float_format="%.1f").render([{"x": 0.0, "y": 1.0}], ["x", "y"])
            'x,y\\n0.0,1.0\\n'
        """
        if fmt == "csv":
            buffer = io.StringIO()
            header = ",".join(fields)
            if not records:
                return header + "\n"
            if all(_is_float(record[f]) for record in records for f in fields):
                table = np.array([[record[f] for f in fields] for record in records], dtype=float)
                cell_format = self.float_format
            else:
                # mixed cells (markers, integers, enums) are formatted first
                table = np.array(
                    [[self.format_value(record[f]) for f in fields] for record in records], dtype=object
                )
                cell_format = "%s"
            np.savetxt(buffer, table, fmt=cell_format, delimiter=",", header=header, comments="", newline="\n")
            return buffer.getvalue()
        if fmt == "json":
            payload = [{f: self._json_value(record[f]) for f in fields} for record in records]
            return json.dumps(payload, indent=2) + "\n"
        raise ValueError(f"unknown output format {fmt!r}")

    def write_records(
        self,
        records: Sequence[Record],
        fields: Sequence[str],
        path: Path,
        fmt: str = "csv"
    ) -> Path:
        """
        Write records to a file, creating parent directories.

        Raises:
            OSError: The file cannot be written
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(self.render(records, fields, fmt))
        logger.info("wrote %d records to %s", len(records), path)
        return path

    def read_samples(self, path: Path) -> Tuple[np.ndarray, np.ndarray]:
        """
        Read an x,y CSV on a uniform grid.

        Returns:
            (xs, ys) as float arrays

        Raises:
            OSError: The file cannot be opened
            InputFormatError: Bad rows or non-uniform spacing
        """
        text = Path(path).read_text(encoding="utf-8")
        report = GridValidator.validate_samples(text.splitlines())
        if not report["is_valid"]:
            raise InputFormatError(f"{path}: {report['error']}")
        logger.debug("read %s: %s", path, report["summary"])
        return report["xs"], report["ys"]

