"""CSV loading and schema validation for the sweep datasets."""

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

MODELS = ("upw", "usw", "nusw")

EXPECTED_HEADERS = {
    "capacity_vs_snr": ["gamma_db", "capacity_bits", "capacity_oracle_bits",
                        "capacity_asymptote_bits"],
    "capacity_vs_M": ["m_side", "capacity_bits", "capacity_oracle_bits",
                      "capacity_asymptote_bits"],
    "capacity_vs_re": ["r_e_m", "capacity_bits", "capacity_oracle_bits",
                       "capacity_asymptote_bits"],
    "capacity_perturbation": ["dtheta_rad", "dphi_rad", "capacity_bits",
                              "capacity_normalized", "rho"],
    "cospsi_vs_re": ["r_e_m", "cos_psi", "cos_psi_oracle"],
    "depth_vs_M": ["m_side", "depth_m", "r_s_m", "m_s", "m_s_linear_upsilon",
                   "depth_scan_m"],
    "power_vs_R0": ["r0_bits", "power_w", "power_oracle_w", "power_asymptote_w"],
    "power_vs_re": ["r_e_m", "power_w", "power_oracle_w", "power_asymptote_w"],
    "power_vs_M": ["m_side", "power_w", "power_oracle_w", "power_asymptote_w"],
}


class SchemaError(ValueError):
    """CSV header does not match the documented dataset schema."""


class EmptyDataError(ValueError):
    """CSV carries a header but no data rows."""


def _parse_cell(cell):
    if cell == "":
        return None
    if cell == "skipped":
        return None
    if cell == "inf":
        return math.inf
    return float(cell)


@dataclass
class Table:
    experiment: str
    path: Path
    columns: dict  # name -> list of float | inf | None

    def column(self, name):
        return self.columns[name]

    def finite(self, name):
        """Column as floats with None and inf mapped to nan (curve breaks)."""
        return [v if v is not None and math.isfinite(v) else math.nan
                for v in self.columns[name]]

    def has_values(self, name):
        return any(v is not None for v in self.columns[name])


def load_table(path, experiment):
    """Read one dataset CSV, validating the header and non-emptiness."""
    expected = EXPECTED_HEADERS[experiment]
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: file is empty, expected header {expected}")
    header = rows[0]
    if header != expected:
        missing = [c for c in expected if c not in header]
        surplus = [c for c in header if c not in expected]
        raise SchemaError(
            f"{path}: header mismatch; missing columns {missing}, "
            f"unexpected columns {surplus}")
    data = rows[1:]
    if not data:
        raise EmptyDataError(f"{path}: no data rows")
    for i, row in enumerate(data, start=2):
        if len(row) != len(expected):
            raise SchemaError(f"{path}: row {i} has {len(row)} cells, "
                              f"expected {len(expected)}")
    columns = {name: [_parse_cell(row[j]) for row in data]
               for j, name in enumerate(expected)}
    return Table(experiment=experiment, path=path, columns=columns)


@dataclass
class FigureSpec:
    """One figure: the experiment, its per-model CSVs, and the output stem."""

    experiment: str
    csv_paths: dict  # model -> Path, insertion-ordered
    out_base: Path
    formats: tuple = ("svg", "png")
    tables: dict = field(default_factory=dict)

    def load(self):
        self.tables = {model: load_table(path, self.experiment)
                       for model, path in self.csv_paths.items()}
        return self
