# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Click command generation from endpoint classes via introspection.

Components:
    register_endpoint: Register endpoint methods as Click commands.
    CliManager: Builds the ``ncosc`` group lazily.

Example:
    Generated commands::

        ncosc spectrum classify --dimensionless --B 0 --theta 0.70710678
        ncosc degeneracy case3 20001 20000 --f 1/10000
        ncosc density grid --n-r 4 --m-l 4 --radius 3e-8 --units si --B 7.3e-19 --theta 1.4e-16 \\
            --out rings.pgm --format pgm
        ncosc verify run --suite all --B 1/10 --theta 1/10

Note:
    - ``config`` is special: never an option, injected as the resolved RunConfig
    - Run options (``--B``, ``--theta``, ``--config`` ...) exist on every command
    - Other required params become positional arguments
    - Optional params become --options
    - Boolean params become --flag/--no-flag toggles
    - Method underscores become dashes (low_lying → low-lying)
    - OscillatorError subclasses exit with their ``exit_code``; invalid
      configuration exits with 2; a failed verification exits with 1
"""

from __future__ import annotations

import asyncio
import inspect
import logging
from collections.abc import Callable
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Literal, get_args, get_origin, get_type_hints

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ..export.writers import OutputFormat, write_result
from ..physics.errors import OscillatorError
from ..physics.params import QuantumNumbers, UnitsMode
from ..physics.rational import NotRational, format_quantity
from ..physics.wavefunctions import DensityGrid
from .endpoint_base import CONTEXT_PARAM

if TYPE_CHECKING:
    from .cli_context import CliContext

console = Console()
err_console = Console(stderr=True)

EXIT_INVALID_CONFIG = 2
EXIT_VERIFICATION_FAILED = 1


def _display(value: Any) -> str:
    if isinstance(value, (Fraction, NotRational, float)) and not isinstance(value, bool):
        return format_quantity(value)
    if isinstance(value, QuantumNumbers):
        return f"({value.n_r}, {value.m_l})"
    if isinstance(value, DensityGrid):
        return f"<raster {value.resolution}x{value.resolution}, radius {format_quantity(value.radius)}>"
    if isinstance(value, (list, tuple)):
        return ", ".join(_display(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_display(v)}" for k, v in value.items())
    return str(getattr(value, "value", value))


def _print_table(rows: list[dict[str, Any]], title: str | None = None) -> None:
    table = Table(show_header=True, header_style="bold cyan", title=title)
    keys = list(rows[0].keys())
    for key in keys:
        table.add_column(key)
    for row in rows:
        table.add_row(*[_display(row.get(k, "")) for k in keys])
    console.print(table)


def _print_result(result: Any) -> None:
    """Print command result with rich formatting."""
    if isinstance(result, list) and result and isinstance(result[0], dict):
        _print_table(result)
    elif isinstance(result, dict):
        for key, value in result.items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                _print_table(value, title=key)
            else:
                console.print(f"[bold]{key}:[/bold] {_display(value)}")
    elif isinstance(result, list):
        for item in result:
            console.print(f"  • {_display(item)}")
    else:
        console.print(_display(result))


def _annotation_to_click_type(annotation: Any) -> type | click.Choice:
    """Convert Python type annotation to Click type."""
    if annotation is inspect.Parameter.empty or annotation is Any:
        return str

    origin = get_origin(annotation)
    if origin is type(None):
        return str

    args = get_args(annotation)
    if origin is type(int | str):  # UnionType
        non_none = [a for a in args if a is not type(None)]
        if non_none:
            annotation = non_none[0]

    if get_origin(annotation) is Literal:
        return click.Choice(get_args(annotation))

    if annotation is int:
        return int
    if annotation is bool:
        return bool
    if annotation is float:
        return float

    return str


def _key_values(pairs: tuple[str, ...], option: str) -> dict[str, str]:
    result = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise click.BadParameter(f"expected name=value, got {pair!r}", param_hint=option)
        result[key.strip()] = value.strip()
    return result


RUN_OPTIONS: list[Callable] = [
    click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Flat key=value config file"),
    click.option("--units", type=click.Choice([m.value for m in UnitsMode]), help="Units of the physical inputs"),
    click.option("--dimensionless", is_flag=True, default=False, help="Shorthand for --units dimensionless"),
    click.option("--mass", help="Mass m (kg, or 1)"),
    click.option("--omega", help="Frequency ω (1/s, or 1)"),
    click.option("--B", "B", help="Field times unit charge (p/q for exact)"),
    click.option("--theta", help="Noncommutativity θ (p/q for exact)"),
    click.option("--hbar", help="Reduced Planck constant"),
    click.option("--out", "output_path", type=click.Path(dir_okay=False), help="Write result to this file"),
    click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]), help="Output file format"),
    click.option("--threads", type=int, help="Worker threads"),
    click.option("--tol", "tolerances", multiple=True, help="Tolerance override name=value"),
    click.option("--cap", "caps", multiple=True, help="Cap override name=value"),
]
RUN_OPTION_NAMES = {
    "config_path", "units", "dimensionless", "mass", "omega", "B", "theta", "hbar",
    "output_path", "output_format", "threads", "tolerances", "caps",
}


def _run_flags(raw: dict[str, Any]) -> dict[str, Any]:
    """Translate run options into RunConfig fields (None = not given)."""
    flags = {key: raw.get(key) for key in ("mass", "omega", "B", "theta", "hbar", "output_path", "output_format", "threads")}
    flags["units"] = UnitsMode.DIMENSIONLESS.value if raw.get("dimensionless") else raw.get("units")
    flags["tolerances"] = _key_values(raw.get("tolerances") or (), "--tol") or None
    flags["caps"] = _key_values(raw.get("caps") or (), "--cap") or None
    return flags


def _create_click_command(
    endpoint: Any,
    method_name: str,
    run_async: Callable,
    cli_context: CliContext | None = None,
) -> click.Command:
    """Create a Click command from an endpoint method.

    Args:
        endpoint: Endpoint instance with the method.
        method_name: Name of the method to wrap.
        run_async: Function to run async code (e.g., asyncio.run).
        cli_context: CliContext resolving the RunConfig.

    Returns:
        Click command ready to be added to a group.
    """
    from .cli_context import CliContext

    method = getattr(endpoint, method_name)
    sig = inspect.signature(method)
    doc = method.__doc__ or f"{method_name} operation"
    try:
        hints = get_type_hints(method)
    except Exception:
        hints = {}

    options = []
    arguments = []
    needs_config = False

    for param_name, param in sig.parameters.items():
        if param_name == "self":
            continue
        if param_name == CONTEXT_PARAM:
            needs_config = True
            continue

        annotation = hints.get(param_name, param.annotation)
        click_type = _annotation_to_click_type(annotation)
        has_default = param.default is not inspect.Parameter.empty
        is_bool = annotation is bool or annotation == "bool"
        cli_name = param_name.replace("_", "-")

        if is_bool:
            options.append(
                click.option(
                    f"--{cli_name}/--no-{cli_name}",
                    default=param.default if has_default else False,
                    help=f"Enable/disable {param_name}",
                )
            )
        elif has_default:
            options.append(
                click.option(
                    f"--{cli_name}",
                    param_name,
                    type=click_type,
                    default=param.default,
                    show_default=True,
                    help=f"{param_name} parameter",
                )
            )
        else:
            arguments.append(click.argument(param_name, type=click_type))

    def cmd_func(**kwargs: Any) -> None:
        click_ctx = click.get_current_context()
        run_raw = {k: kwargs.pop(k) for k in list(kwargs) if k in RUN_OPTION_NAMES}
        py_kwargs = {k.replace("-", "_"): v for k, v in kwargs.items()}

        try:
            ctx = cli_context or CliContext()
            config = ctx.resolve(_run_flags(run_raw), run_raw.get("config_path"))
            if needs_config:
                py_kwargs[CONTEXT_PARAM] = config
            result = run_async(endpoint.invoke(method_name, py_kwargs))
            if result is None:
                return
            _print_result(result)
            if config.output_path is not None and isinstance(result, dict):
                for path in write_result(result, config.output_path, config.output_format):
                    err_console.print(f"[green]wrote[/green] {path}")
        except ValidationError as exc:
            err_console.print(f"[red]Invalid configuration:[/red] {exc}")
            click_ctx.exit(EXIT_INVALID_CONFIG)
        except OscillatorError as exc:
            err_console.print(f"[red]{type(exc).__name__}:[/red] {exc}")
            click_ctx.exit(exc.exit_code)

        if isinstance(result, dict) and result.get("passed") is False:
            click_ctx.exit(EXIT_VERIFICATION_FAILED)

    cmd: click.Command = click.command(help=doc)(cmd_func)
    for opt in reversed(options):
        cmd = opt(cmd)
    for run_opt in reversed(RUN_OPTIONS):
        cmd = run_opt(cmd)
    for arg in reversed(arguments):
        cmd = arg(cmd)

    return cmd


def register_endpoint(
    group: click.Group,
    endpoint: Any,
    run_async: Callable | None = None,
    cli_context: CliContext | None = None,
) -> click.Group:
    """Register all methods of an endpoint as Click commands.

    Creates a subgroup named after the endpoint and adds one command per
    public async method available on the CLI channel.

    Returns:
        The created Click subgroup.
    """
    if run_async is None:
        run_async = asyncio.run

    name = getattr(endpoint, "name", endpoint.__class__.__name__.lower())
    endpoint_doc = (endpoint.__class__.__doc__ or f"{name} commands.").strip().splitlines()[0]

    @group.group(name=name, help=endpoint_doc)
    def endpoint_group() -> None:
        pass

    for method_name, _ in endpoint.get_methods():
        if not endpoint.is_available_for_channel(method_name, "cli"):
            continue
        cmd = _create_click_command(endpoint, method_name, run_async, cli_context)
        cmd.name = method_name.replace("_", "-")
        endpoint_group.add_command(cmd)

    return endpoint_group


def setup_logging(level: str) -> None:
    """Send library logs to stderr through rich."""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


class CliManager:
    """Manager for the Click CLI application. Creates the group lazily on first access."""

    def __init__(self, parent: Any, cli_context: CliContext | None = None):
        self.oscillator = parent
        self.cli_context = cli_context
        self._cli: click.Group | None = None

    @property
    def cli(self) -> click.Group:
        """Lazy-create Click CLI group."""
        if self._cli is None:
            self._cli = self._create_cli()
        return self._cli

    def _create_cli(self) -> click.Group:
        """Build Click CLI from the discovered endpoints."""

        @click.group()
        @click.version_option(package_name="nc-oscillator")
        @click.option(
            "--log-level",
            type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
            default="WARNING",
            show_default=True,
            help="Logging level (stderr)",
        )
        def cli(log_level: str) -> None:
            """Charged oscillator on the noncommutative plane."""
            setup_logging(log_level)

        for endpoint in self.oscillator.endpoints.values():
            register_endpoint(cli, endpoint, cli_context=self.cli_context)

        return cli


__all__ = ["CliManager", "console", "register_endpoint", "setup_logging"]
