# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""File export: the single place results are written to disk."""

from .writers import (
    PGM_MAXVAL,
    OutputFormat,
    render_csv,
    render_density_csv,
    render_json,
    render_pgm,
    to_jsonable,
    write_result,
)

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
