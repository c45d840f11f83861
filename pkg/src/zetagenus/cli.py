"""Command-line surface: coefficients, polynomials, tables, verification.

Four subcommands:

* coeff   one exact coefficient as p/q
* poly    a full degree-k polynomial as text, LaTeX, or JSON
* table   all coefficients up to a degree, exported CSV or JSON, with an
          optional JSON cache reused across runs
* verify  one named verification suite with configurable depth,
          tolerance, seed, and thread count

Exit codes: 0 all good, 1 a mathematical check failed, 2 usage or
configuration error.  Every flag can also be set through an environment
variable ZETAGENUS_<COMMAND>_<FLAG>, e.g. ZETAGENUS_VERIFY_DEPTH.

A genus is named "L" or "Ahat", or is a path to a JSON file of the form
{"name": ..., "coefficients": [{"num": "1", "den": "1"}, ...]} listing
the characteristic series coefficients from the constant term (which
must be 1) upward.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Optional

import click

from .genus import GenusSpec, coefficient_closed_form, coefficient_table
from .render import (
    render_poly_json,
    render_poly_latex,
    render_poly_text,
    render_table_csv,
    render_table_json,
    tables_with_cache,
)
from .verify import available_suites, run_suite

__all__ = ["cli", "main", "ConfigError"]


class ConfigError(click.ClickException):
    """Usage or configuration problem; reserved exit code 2."""

    exit_code = 2


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in text.replace(" ", "").split(","))
    except ValueError:
        raise ConfigError(f"partition {text!r} is not a comma list of integers")
    if not parts or any(p < 1 for p in parts):
        raise ConfigError("partition parts must be positive integers")
    return parts


def _load_genus(name: str, order: int) -> GenusSpec:
    """Resolve a genus name or a custom-series JSON file path."""
    if name == "L":
        return GenusSpec.l_genus(order)
    if name == "Ahat":
        return GenusSpec.a_hat(order)
    if not os.path.exists(name):
        raise ConfigError(
            f"unknown genus {name!r}: expected L, Ahat, or a JSON file path"
        )
    try:
        with open(name, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        coeffs = [
            Fraction(int(e["num"]), int(e["den"])) for e in doc["coefficients"]
        ]
        genus = GenusSpec.from_coefficients(str(doc["name"]), coeffs)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"cannot load genus from {name}: {exc}")
    if genus.order < order:
        raise ConfigError(
            f"genus {genus.name!r} provides coefficients through degree "
            f"{genus.order}, but degree {order} is required"
        )
    return genus


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.write("\n")
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}")


@click.group()
def cli() -> None:
    """Exact coefficients of multiplicative polynomial sequences, with
    numeric verification against nested zeta-type series."""


@cli.command()
@click.option("--genus", required=True, help="L, Ahat, or a series JSON path.")
@click.option("--partition", required=True, help="Comma list, e.g. 2,1.")
@click.option("--out", default=None, help="Write to file instead of stdout.")
def coeff(genus: str, partition: str, out: Optional[str]) -> None:
    """Print one exact coefficient as a reduced fraction."""
    parts = _parse_partition(partition)
    spec = _load_genus(genus, sum(parts))
    try:
        value = coefficient_closed_form(spec, parts)
    except ValueError as exc:
        raise ConfigError(str(exc))
    _emit(str(value), out)


@cli.command()
@click.option("--genus", required=True, help="L, Ahat, or a series JSON path.")
@click.option("--k", required=True, type=int, help="Degree of the polynomial.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "latex", "json"]),
    default="text",
    show_default=True,
)
@click.option("--out", default=None, help="Write to file instead of stdout.")
def poly(genus: str, k: int, fmt: str, out: Optional[str]) -> None:
    """Print the whole degree-k polynomial in power-sum variables."""
    if k < 0:
        raise ConfigError("k must be nonnegative")
    spec = _load_genus(genus, max(k, 1))
    try:
        table = coefficient_table(spec, k) if k >= 1 else None
    except ValueError as exc:
        raise ConfigError(str(exc))
    if fmt == "text":
        rendered = render_poly_text(table)
    elif fmt == "latex":
        rendered = render_poly_latex(table)
    else:
        rendered = render_poly_json(spec.name, k, table)
    _emit(rendered, out)


@cli.command()
@click.option("--genus", required=True, help="L, Ahat, or a series JSON path.")
@click.option("--max-k", required=True, type=int, help="Largest degree to export.")
@click.option("--out", required=True, help="Destination file.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@click.option("--cache", default=None, help="JSON cache file reused across runs.")
def table(genus: str, max_k: int, out: str, fmt: str, cache: Optional[str]) -> None:
    """Export every coefficient for degrees 1..max-k to a file."""
    if max_k < 1:
        raise ConfigError("max-k must be at least 1")
    spec = _load_genus(genus, max_k)
    try:
        tables = tables_with_cache(spec, max_k, cache)
    except ValueError as exc:
        raise ConfigError(str(exc))
    except OSError as exc:
        raise ConfigError(f"cache {cache}: {exc}")
    rendered = render_table_csv(tables) if fmt == "csv" else render_table_json(
        spec.name, max_k, tables
    )
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(rendered)
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}")


@cli.command()
@click.argument("suite", type=click.Choice(available_suites()))
@click.option(
    "--k",
    "--max-k",
    "max_k",
    type=int,
    default=None,
    help="Max degree (main, ahat, oracle, signs).",
)
@click.option("--max-r", type=int, default=None, help="Max tuple length / ground size.")
@click.option("--n", "level_cap", type=int, default=None, help="Formal level cap.")
@click.option("--samples", type=int, default=None, help="Sampled tuples per batch.")
@click.option(
    "--recurrence-samples", type=int, default=None, help="Recurrence spot checks."
)
@click.option("--depth", type=int, default=None, help="Series truncation depth.")
@click.option("--tol", type=float, default=None, help="Comparison tolerance.")
@click.option(
    "--delta", "margin", type=float, default=None, help="Exponent margin above 1."
)
@click.option("--seed", type=int, default=None, help="Seed for sampled suites.")
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--out", default=None, help="Also determines report destination.")
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    max_k: Optional[int],
    max_r: Optional[int],
    level_cap: Optional[int],
    samples: Optional[int],
    recurrence_samples: Optional[int],
    depth: Optional[int],
    tol: Optional[float],
    margin: Optional[float],
    seed: Optional[int],
    threads: int,
    out: Optional[str],
) -> None:
    """Run one verification suite; exit 1 iff any check fails."""
    if threads < 1:
        raise ConfigError("threads must be at least 1")
    try:
        report = run_suite(
            suite,
            max_k=max_k,
            max_r=max_r,
            level_cap=level_cap,
            samples=samples,
            recurrence_samples=recurrence_samples,
            depth=depth,
            tol=tol,
            margin=margin,
            seed=seed,
            threads=threads,
        )
    except ValueError as exc:
        raise ConfigError(str(exc))
    _emit(report.render(), out)
    if not report.passed:
        ctx.exit(1)


def main() -> None:
    """Console-script entry point with the documented env-var prefix."""
    cli(auto_envvar_prefix="ZETAGENUS")
