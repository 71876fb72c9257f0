# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Deterministic CSV / JSON / PGM writers.

Results reach this module as plain dicts produced by the endpoints. Values
are normalized before rendering: Fractions become ``"p/q"`` text, floats are
printed with 17 significant digits, quantum numbers become ``[n_r, m_l]``.
No timestamps or host data are written, so identical inputs give
byte-identical files.

Raster files:
    PGM is binary P5 with 16-bit big-endian samples scaled so the largest
    density maps to 65535. ``#`` comment lines after the magic number echo
    the parameters; row 0 is the top of the image (y = +radius).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import re
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from ..physics.errors import DomainError
from ..physics.params import QuantumNumbers
from ..physics.rational import NotRational, format_quantity
from ..physics.wavefunctions import DensityGrid

logger = logging.getLogger(__name__)

PGM_MAXVAL = 65535

TABLE_KEYS = ("rows", "levels", "specs", "checks", "states")

_FLOAT_SLOT = re.compile(r"\"\\u0000(\d+)\\u0000\"")


class OutputFormat(str, Enum):
    """File formats accepted by ``--format``."""

    CSV = "csv"
    JSON = "json"
    PGM = "pgm"


def to_jsonable(value: Any) -> Any:
    """Recursively convert results to JSON-compatible values."""
    if isinstance(value, (Fraction, NotRational)):
        return format_quantity(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, QuantumNumbers):
        return [value.n_r, value.m_l]
    if isinstance(value, DensityGrid):
        return {
            "radius": value.radius,
            "resolution": value.resolution,
            "metadata": to_jsonable(value.metadata),
            "values": value.values.tolist(),
        }
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {str(k) if not isinstance(k, Fraction) else format_quantity(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if isinstance(value, (Fraction, NotRational, float)) and not isinstance(value, bool):
        return format_quantity(value)
    if isinstance(value, QuantumNumbers):
        return f"({value.n_r},{value.m_l})"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def _header_lines(header: dict[str, Any] | None) -> list[str]:
    return [f"# {key} = {_cell(value)}" for key, value in (header or {}).items()]


def _slot_floats(value: Any, slots: list[str]) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        text = format_quantity(value)
        slots.append(text if any(c in text for c in ".e") else text + ".0")
        return f"\x00{len(slots) - 1}\x00"
    if isinstance(value, dict):
        return {key: _slot_floats(v, slots) for key, v in value.items()}
    if isinstance(value, list):
        return [_slot_floats(v, slots) for v in value]
    return value


def render_json(payload: Any) -> str:
    """Payload as indented JSON; finite floats carry 17 significant digits."""
    slots: list[str] = []
    text = json.dumps(_slot_floats(to_jsonable(payload), slots), indent=2, ensure_ascii=False)
    return _FLOAT_SLOT.sub(lambda match: slots[int(match.group(1))], text) + "\n"


def render_csv(rows: list[dict[str, Any]], header: dict[str, Any] | None = None) -> str:
    """Table rows as CSV, preceded by ``#`` parameter lines.

    An empty table renders as the parameter lines alone.
    """
    buffer = io.StringIO()
    for line in _header_lines(header):
        buffer.write(line + "\n")
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def render_density_csv(grid: DensityGrid, header: dict[str, Any] | None = None) -> str:
    """Raster as CSV: one line per pixel row, top row first."""
    lines = _header_lines({**grid.metadata, **(header or {})})
    lines.extend(",".join(format_quantity(float(v)) for v in row) for row in grid.values)
    return "\n".join(lines) + "\n"


def render_pgm(grid: DensityGrid, header: dict[str, Any] | None = None) -> bytes:
    """Raster as 16-bit binary PGM, max-normalized."""
    peak = float(np.max(grid.values))
    scaled = grid.values / peak * PGM_MAXVAL if peak > 0 else np.zeros_like(grid.values)
    samples = np.rint(scaled).astype(">u2")
    comments = "".join(line + "\n" for line in _header_lines({**grid.metadata, **(header or {})}))
    head = f"P5\n{comments}{grid.resolution} {grid.resolution}\n{PGM_MAXVAL}\n"
    return head.encode("utf-8") + samples.tobytes()


def _rows_of(result: dict[str, Any]) -> list[dict[str, Any]]:
    # an empty table is still a table; only results without one fall back to key,value
    for key in TABLE_KEYS:
        rows = result.get(key)
        if isinstance(rows, list) and all(isinstance(row, dict) for row in rows):
            return rows
    return [{"key": key, "value": value} for key, value in result.items() if not isinstance(value, (dict, list, DensityGrid))]


def _grids_of(result: dict[str, Any]) -> list[DensityGrid]:
    grid = result.get("grid")
    if isinstance(grid, DensityGrid):
        return [grid]
    grids = result.get("grids")
    if isinstance(grids, list):
        return [g for g in grids if isinstance(g, DensityGrid)]
    return []


def _panel_path(path: Path, grid: DensityGrid) -> Path:
    return path.with_name(f"{path.stem}_{grid.metadata['n_r']}_{abs(grid.metadata['m_l'])}{path.suffix}")


def write_result(result: dict[str, Any], path: str | Path, fmt: OutputFormat | str) -> list[Path]:
    """Write an endpoint result to ``path`` in the requested format.

    Rasters go to PGM or to a CSV matrix; a panel of rasters writes one file
    per state (``<stem>_<n_r>_<|m_l|><suffix>``). Everything else goes to a
    CSV table or to JSON.

    Returns:
        Paths written.

    Raises:
        DomainError: If PGM is requested for a result without a raster.
    """
    fmt = OutputFormat(fmt)
    path = Path(path)
    header = result.get("params") if isinstance(result.get("params"), dict) else None
    grids = _grids_of(result)
    outputs: list[tuple[Path, str | bytes]] = []

    if fmt is OutputFormat.JSON:
        outputs.append((path, render_json(result)))
    elif grids:
        targets = [path] if len(grids) == 1 else [_panel_path(path, g) for g in grids]
        for target, grid in zip(targets, grids):
            data = render_pgm(grid, header) if fmt is OutputFormat.PGM else render_density_csv(grid, header)
            outputs.append((target, data))
    elif fmt is OutputFormat.PGM:
        raise DomainError("PGM output needs a density raster")
    else:
        outputs.append((path, render_csv(_rows_of(result), header)))

    written = []
    for target, data in outputs:
        target.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(data, bytes):
            target.write_bytes(data)
        else:
            target.write_text(data, encoding="utf-8")
        logger.info("wrote %s", target)
        written.append(target)
    return written


__all__ = [
    "PGM_MAXVAL",
    "OutputFormat",
    "render_csv",
    "render_density_csv",
    "render_json",
    "render_pgm",
    "to_jsonable",
    "write_result",
]
