# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""CLI entry point for nc-oscillator (ncosc command).

Usage:
    ncosc --help
    ncosc spectrum classify --B 0 --theta 0.70710678
    ncosc degeneracy levels --ratio 1/3 --m-l-max 11
    ncosc verify run --suite all --B 1/10 --theta 1/10
"""

import sys

from rich.console import Console

from .oscillator_base import OscillatorBase, config_from_env
from .physics.errors import OscillatorError


def main() -> None:
    """CLI entry point."""
    try:
        config = config_from_env()
    except OscillatorError as exc:
        Console(stderr=True).print(f"[red]{type(exc).__name__}:[/red] {exc}")
        sys.exit(exc.exit_code)
    app = OscillatorBase(config=config)
    app.cli.cli()


if __name__ == "__main__":
    main()
