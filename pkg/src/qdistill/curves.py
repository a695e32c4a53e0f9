"""Yield curves and their CSV serialization.

CSV files carry one header row, one data row per grid point, comma
delimiters, ``.`` decimal separators and LF line endings.  Floats are
written as their shortest round-tripping decimal (Python ``repr``), so a
re-parsed file reproduces the in-memory values bit for bit.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np


@dataclass
class YieldCurve:
    """Ordered samples of one or more yield columns over a parameter grid."""

    param: str
    grid: np.ndarray
    columns: list[tuple[str, np.ndarray]]

    def header(self) -> list[str]:
        return [self.param] + [name for name, _ in self.columns]

    def rows(self):
        for i in range(len(self.grid)):
            yield [float(self.grid[i])] + [float(col[i]) for _, col in self.columns]

    def column(self, name: str) -> np.ndarray:
        for col_name, values in self.columns:
            if col_name == name:
                return values
        raise KeyError(name)


def format_csv(curve: YieldCurve) -> str:
    buf = io.StringIO()
    buf.write(",".join(curve.header()) + "\n")
    for row in curve.rows():
        buf.write(",".join(repr(v) for v in row) + "\n")
    return buf.getvalue()


def write_csv(curve: YieldCurve, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_csv(curve))


def parse_csv(text: str) -> YieldCurve:
    """Parse CSV text produced by :func:`format_csv`."""
    lines = [line for line in text.split("\n") if line]
    header = lines[0].split(",")
    data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    if data.ndim != 2 or data.shape[1] != len(header):
        raise ValueError("malformed curve CSV")
    columns = [(name, data[:, i + 1]) for i, name in enumerate(header[1:])]
    return YieldCurve(param=header[0], grid=data[:, 0], columns=columns)


def read_csv(path) -> YieldCurve:
    with open(path, "r", newline="") as fh:
        return parse_csv(fh.read())
