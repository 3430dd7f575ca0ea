"""
Command-line interface for elliptic-moments.

Usage:
    elliptic-moments moment --n 6 --m 2 --rho 1/2
    elliptic-moments word --word xxdxdxdd
    elliptic-moments positional --M 8 --positions 2,3,9,10
    elliptic-moments asymptotic --q 2 --rho 0.5 --v 100 --sweep 25,50,100 --format csv
    elliptic-moments validate --word xxdd --rho 0.3 --seed 7
"""

import functools
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import click
import numpy as np
import pandas as pd
from dotenv import load_dotenv
from pydantic import ValidationError

from elliptic_moments import __version__
from elliptic_moments.exceptions import CapacityError, DomainError
from elliptic_moments.models.asymptotics import AsymptoticParams
from elliptic_moments.models.polynomial import MomentPolynomial
from elliptic_moments.models.word import Word
from elliptic_moments.schema.output_schemas import figure_rows_schema, output_record_schema, polynomial_schema
from elliptic_moments.services.asymptotics_service import AsymptoticsService
from elliptic_moments.services.figure_data_service import FigureDataService
from elliptic_moments.services.moments_service import MomentsService
from elliptic_moments.services.montecarlo_service import MonteCarloService
from elliptic_moments.services.positional_service import PositionalService
from elliptic_moments.utils.config import get_settings
from elliptic_moments.utils.logger import get_logger, set_level

logger = get_logger(__name__)

EXIT_STATISTICAL_FAILURE = 1
EXIT_CAPACITY = 3


def _parse_rho(text: Optional[str]) -> Optional[Union[Fraction, float]]:
    """'a/b' and integers stay exact; anything else is a float."""
    if text is None:
        return None
    try:
        if "/" in text or text.strip().lstrip("+-").isdigit():
            return Fraction(text.strip())
        return float(text)
    except (ValueError, ZeroDivisionError) as e:
        raise click.BadParameter(f"not a number: {text!r}", param_hint="--rho") from e


def _parse_list(text: str, cast, hint: str) -> List:
    try:
        return [cast(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected a comma-separated list, got {text!r}", param_hint=hint) from e


def _parse_word(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as e:
        raise DomainError(f"[word]: letters must be 'x' or 'd', got {text!r}") from e


def _polynomial_payload(poly: MomentPolynomial) -> Dict[str, Any]:
    return polynomial_schema.dump({"coefficients": poly.to_json_map(), "text": str(poly)})


def _value_payload(value: Union[Fraction, float]) -> Union[str, float]:
    return str(value) if isinstance(value, Fraction) else value


def _emit(fmt: str, command: str, inputs: Dict[str, Any], result: Dict[str, Any],
          text_lines: List[str], seed: Optional[int] = None) -> None:
    """Print one result in the requested format; JSON goes through the output record schema."""
    if fmt == "json":
        record = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "provenance": {"version": __version__, "seed": None if seed is None else str(seed)},
        }
        click.echo(output_record_schema.dumps(record, indent=2))
    elif fmt == "csv":
        row = {}
        for key, value in result.items():
            if isinstance(value, dict) and "text" in value:
                value = value["text"]
            elif isinstance(value, (list, tuple)):
                value = ",".join(str(item) for item in value)
            row[key] = value
        click.echo(pd.DataFrame([row]).to_csv(index=False), nl=False)
    else:
        click.echo("\n".join(text_lines))


def _emit_frame(fmt: str, frame: pd.DataFrame) -> None:
    if fmt == "csv":
        click.echo(frame.to_csv(index=False), nl=False)
    elif fmt == "json":
        # NaN is not valid JSON
        rows = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
        click.echo(figure_rows_schema.dumps(rows, indent=2))
    else:
        click.echo(frame.to_string(index=False))


def _handles_errors(func):
    """Map capacity failures to exit code 3 and domain errors to click usage errors (exit 2)."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CapacityError as e:
            logger.error(f"❌ {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_CAPACITY)
        except DomainError as e:
            raise click.UsageError(str(e)) from e
    return wrapper


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text", show_default=True,
    help="Output format",
)


@click.group()
@click.version_option(version=__version__, prog_name="elliptic-moments")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Override ELLIPTIC_MOMENTS_LOG_LEVEL")
def cli(log_level: Optional[str]):
    """
    Exact mixed-moments of the Gaussian Elliptic Ensemble.

    Moments are integer polynomials in ρ; words are strings over x (X) and d (X†).
    """
    if log_level:
        set_level(log_level)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Power of X")
@click.option("--m", "m", type=int, required=True, help="Power of X†")
@click.option("--rho", default=None, help="Evaluate at ρ; a/b or integers are exact")
@format_option
@_handles_errors
def moment(n: int, m: int, rho: Optional[str], fmt: str):
    """
    Closed form of tr(X^n (X†)^m).

    Examples:

        elliptic-moments moment --n 6 --m 2

        elliptic-moments moment --n 5 --m 3 --rho 1/2
    """
    rho_value = _parse_rho(rho)
    poly = MomentsService.block_moment(n, m)
    result: Dict[str, Any] = {"polynomial": _polynomial_payload(poly)}
    lines = [f"P_{n}^{m}(ρ) = {poly}"]
    if rho_value is not None:
        value = MomentsService.evaluate(poly, rho_value)
        result["value"] = _value_payload(value)
        lines.append(f"value at ρ={rho}: {value}")
    _emit(fmt, "moment", {"n": n, "m": m, "rho": rho}, result, lines)


@cli.command()
@click.option("--word", "text", required=True, help="Word over x and d, e.g. xxdxdxdd")
@click.option("--rho", default=None, help="Evaluate at ρ; a/b or integers are exact")
@click.option("--oracle", is_flag=True, help="Enumerate pairings even for block words")
@format_option
@_handles_errors
def word(text: str, rho: Optional[str], oracle: bool, fmt: str):
    """
    Moment of an arbitrary word.

    Block words X^n (X†)^m use the closed form unless --oracle is given; every other word is
    enumerated, up to ELLIPTIC_MOMENTS_MAX_L letters.
    """
    rho_value = _parse_rho(rho)
    parsed = _parse_word(text)
    exponents = parsed.block_exponents()
    if exponents is not None and not oracle:
        poly, method = MomentsService.block_moment(*exponents), "closed_form"
    else:
        poly, method = MomentsService.word_moment_oracle(parsed), "oracle"
    result: Dict[str, Any] = {"method": method, "polynomial": _polynomial_payload(poly)}
    lines = [f"tr({parsed}) = {poly}  [{method}]"]
    if rho_value is not None:
        value = MomentsService.evaluate(poly, rho_value)
        result["value"] = _value_payload(value)
        lines.append(f"value at ρ={rho}: {value}")
    _emit(fmt, "word", {"word": str(parsed), "rho": rho, "oracle": oracle}, result, lines)


@cli.command()
@click.option("--M", "half_length", type=int, required=True, help="Half the word length")
@click.option("--positions", required=True, help="Comma-separated positions of X, e.g. 2,3,9,10")
@click.option("--rho", default=None, help="Evaluate at ρ; a/b or integers are exact")
@format_option
@_handles_errors
def positional(half_length: int, positions: str, rho: Optional[str], fmt: str):
    """
    Moment of the word of length 2M with X at the given positions and X† elsewhere.
    """
    rho_value = _parse_rho(rho)
    slots = _parse_list(positions, int, "--positions")
    canonical, record = PositionalService.canonicalize(half_length, slots)
    poly = PositionalService.positional_moment(record.original)
    ginibre = PositionalService.ginibre_moment(record.original)
    transforms = [kind.value for kind in record.transforms]
    result: Dict[str, Any] = {
        "canonical": list(canonical.positions),
        "transforms": transforms,
        "polynomial": _polynomial_payload(poly),
        "ginibre": str(ginibre),
    }
    lines = [
        f"canonical: M={canonical.M} positions={list(canonical.positions)} via {transforms or 'none'}",
        f"moment = {poly}",
        f"ginibre value = {ginibre}",
    ]
    if rho_value is not None:
        value = MomentsService.evaluate(poly, rho_value)
        result["value"] = _value_payload(value)
        lines.append(f"value at ρ={rho}: {value}")
    _emit(fmt, "positional", {"M": half_length, "positions": slots, "rho": rho}, result, lines)


@cli.command()
@click.option("--q", type=float, required=True, help="Ray u/v, q >= 1")
@click.option("--rho", type=float, required=True, help="Elliptic parameter, 0 < |ρ| < 1; ρ < 0 flips the sign by (-1)^{u+v}")
@click.option("--v", type=int, required=True, help="Half power of X†; u = round(q·v)")
@click.option("--sweep", default=None, help="Comma-separated v values for a figure table")
@format_option
@_handles_errors
def asymptotic(q: float, rho: float, v: int, sweep: Optional[str], fmt: str):
    """
    Saddle-point estimate of P_{2u}^{2v}(ρ)/√(P_{2u}^{2u} P_{2v}^{2v}) against the exact value.
    """
    if sweep:
        _emit_frame(fmt, FigureDataService.asymptotic_sweep(q, rho, _parse_list(sweep, int, "--sweep")))
        return
    try:
        params = AsymptoticParams(q=q, rho=rho, v=v)
    except ValidationError as e:
        raise DomainError(f"Validation error: {e.errors(include_url=False)}") from e
    summary = AsymptoticsService.summarize(params)
    u = max(params.u, v)
    exact = AsymptoticsService.rescaled_exact(2 * u, 2 * v, rho)
    result = {
        "u": u,
        "saddle": summary.saddle,
        "psi": summary.psi,
        "phi": summary.phi,
        "phi_hat": summary.phi_hat,
        "estimate": summary.estimate,
        "exact": exact,
        "ratio": exact / summary.estimate,
        "regime": summary.regime.value,
    }
    lines = [
        f"u={u}, v={v}, ρ={rho}: y*={summary.saddle:.6g}  Ψ={summary.psi:.6g}  Φ={summary.phi:.6g}",
        f"exact={exact:.6g}  estimate={summary.estimate:.6g}  ratio={exact / summary.estimate:.6f}",
        f"regime: {summary.regime.value}",
    ]
    _emit(fmt, "asymptotic", {"q": q, "rho": rho, "v": v}, result, lines)


@cli.command()
@click.option("--word", "text", required=True, help="Word over x and d")
@click.option("--rho", type=float, default=None, help="Elliptic parameter in [-1, 1]")
@click.option("--dim", type=int, default=None, help="Matrix size N [default: ELLIPTIC_MOMENTS_MC_DEFAULT_DIM]")
@click.option("--samples", type=int, default=None,
              help="Number of samples [default: ELLIPTIC_MOMENTS_MC_DEFAULT_SAMPLES]")
@click.option("--seed", type=int, default=None, help="Root seed; drawn from OS entropy when absent")
@click.option("--sweep", default=None, help="Comma-separated ρ values for a figure table")
@format_option
@_handles_errors
def validate(text: str, rho: Optional[float], dim: Optional[int], samples: Optional[int],
             seed: Optional[int], sweep: Optional[str], fmt: str):
    """
    Monte Carlo estimate of a word moment checked against the exact value; exits 1 on failure.
    """
    settings = get_settings()
    if dim is None:
        dim = settings.mc_default_dim
    if samples is None:
        samples = settings.mc_default_samples
    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
        click.echo(f"seed: {seed}", err=True)
    parsed = _parse_word(text)

    if sweep:
        frame = FigureDataService.montecarlo_sweep(parsed, _parse_list(sweep, float, "--sweep"), dim, samples, seed)
        _emit_frame(fmt, frame)
        if not frame["passed"].all():
            sys.exit(EXIT_STATISTICAL_FAILURE)
        return
    if rho is None:
        raise click.UsageError("either --rho or --sweep is required")

    outcome = MonteCarloService.validate_word_moment(parsed, rho, dim, samples, seed)
    estimate = outcome.estimate
    result = {
        "mean": estimate.mean,
        "stderr": estimate.stderr,
        "imag_mean": estimate.imag_mean,
        "exact": outcome.exact,
        "tolerance": outcome.tolerance,
        "z": outcome.z,
        "passed": outcome.passed,
    }
    lines = [
        f"mean={estimate.mean:.6f}  stderr={estimate.stderr:.6f}  exact={outcome.exact:.6f}  z={outcome.z:.3f}",
        "✅ within tolerance" if outcome.passed else "❌ outside tolerance",
    ]
    inputs = {"word": str(parsed), "rho": rho, "dim": dim, "samples": samples, "seed": seed}
    _emit(fmt, "validate", inputs, result, lines, seed=seed)
    if not outcome.passed:
        sys.exit(EXIT_STATISTICAL_FAILURE)


def main():
    """Entry point for the CLI."""
    load_dotenv()
    cli()


if __name__ == "__main__":
    main()
