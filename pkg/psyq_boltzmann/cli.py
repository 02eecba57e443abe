import contextlib
import json
import logging

import click

from . import __version__
from .algebra import parse_psyquandle_matrix
from .catalog import catalog, catalog_names
from .diagram import CrossingKind, parse_diagram
from .exceptions import ParseError, PsyqError
from .invariants import (
    Mode,
    check_psyquandle,
    enhanced_polynomial,
    enumerate_colorings,
    polynomial_to_string,
    result_json,
)
from .suite import run_suite
from .weights import WeightPair, parse_weight_pair, serialize_weight_pair, validate_weight_pair, weight_solution_space

logger = logging.getLogger(__name__)

KIND_WORDS = {
    CrossingKind.POSITIVE: "positive",
    CrossingKind.NEGATIVE: "negative",
    CrossingKind.SINGULAR: "singular",
}

existing_file = click.Path(exists=True, dir_okay=False, readable=True)


@contextlib.contextmanager
def domain_errors():
    """Parse failures exit with 2, every other package error with 1."""
    try:
        yield
    except ParseError as e:
        click.echo(f"⚠️  parse error: {e}", err=True)
        raise SystemExit(2)
    except PsyqError as e:
        click.echo(f"⚠️  {type(e).__name__}: {e}", err=True)
        raise SystemExit(1)


def read_psyquandle(path):
    with open(path, encoding="utf-8") as f:
        return parse_psyquandle_matrix(f.read())


def read_weights(path, order):
    with open(path, encoding="utf-8") as f:
        return parse_weight_pair(f.read(), order=order)


def emit_json(payload):
    click.echo(json.dumps(payload, ensure_ascii=False, indent=2))


@click.group()
@click.version_option(__version__, prog_name="psyq")
@click.option("-v", "--verbose", is_flag=True, help="Log debug output to stderr.")
def cli(verbose):
    """Psyquandle colorings and Boltzmann-weight enhanced invariants."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("psyquandle", type=existing_file)
@click.argument("weights", type=existing_file, required=False)
def validate(psyquandle, weights):
    """Check the psyquandle axioms and, optionally, a weight pair."""
    with domain_errors():
        X = read_psyquandle(psyquandle)
        w = read_weights(weights, X.order) if weights else None
        report = X.report()
        ok = report.valid
        adequacy = "pI-adequate" if report.pI_adequate else "not pI-adequate"
        if report.valid:
            click.echo(f"✅ valid psyquandle, {adequacy}")
        else:
            click.echo(f"⚠️  invalid psyquandle, {adequacy}")
            for violation in report.violations:
                click.echo(f"    axiom {violation.label} fails at {violation.witness}")
        if w is not None:
            weight_report = validate_weight_pair(X, w)
            ok = ok and weight_report.satisfies_core
            traits = [
                "pI-adequate pair" if weight_report.pI_adequate else "not pI-adequate",
                "strongly compatible" if weight_report.strongly_compatible else "not strongly compatible",
            ]
            mark = "✅" if weight_report.satisfies_core else "⚠️ "
            verdict = "Boltzmann weight" if weight_report.satisfies_core else "not a Boltzmann weight"
            click.echo(f"{mark} {verdict} mod {w.modulus}, {', '.join(traits)}")
            for violation in weight_report.violations:
                click.echo(f"    condition {violation.label} fails at {violation.witness}")
    raise SystemExit(0 if ok else 1)


@cli.command()
@click.option("--catalog", "catalog_name", help="Built-in diagram name.")
@click.option("--diagram", "diagram_file", type=existing_file, help="Diagram code file.")
@click.option("--psyquandle", "psyquandle_file", type=existing_file, required=True)
@click.option("--weights", "weights_file", type=existing_file)
@click.option("--two-variable", is_flag=True, help="Two-variable polynomial in u and v.")
@click.option("--pseudoknot", is_flag=True, help="Read singular crossings as precrossings.")
@click.option("--json", "as_json", is_flag=True)
def invariant(catalog_name, diagram_file, psyquandle_file, weights_file, two_variable, pseudoknot, as_json):
    """Counting invariant and Boltzmann-enhanced polynomial of a diagram."""
    if (catalog_name is None) == (diagram_file is None):
        raise click.UsageError("give exactly one of --catalog and --diagram")
    with domain_errors():
        if catalog_name is not None:
            d = catalog(catalog_name)
        else:
            with open(diagram_file, encoding="utf-8") as f:
                d = parse_diagram(f.read(), name=click.format_filename(diagram_file))
        X = read_psyquandle(psyquandle_file)
        check_psyquandle(X)
        colorings = enumerate_colorings(d, X)
        if weights_file is None:
            if two_variable or pseudoknot:
                raise click.UsageError("--two-variable and --pseudoknot need --weights")
            if as_json:
                emit_json(
                    {"diagram": d.name, "psyquandle_hash": X.fingerprint(), "counting_invariant": len(colorings)}
                )
            else:
                click.echo(f"Φ = {len(colorings)}")
            return
        w = read_weights(weights_file, X.order)
        mode = Mode.TWO if two_variable else Mode.SINGLE
        polynomial = enhanced_polynomial(d, X, w, mode, pseudoknot, colorings=colorings)
    if as_json:
        emit_json(result_json(d, X, polynomial))
    else:
        click.echo(f"Φ = {len(colorings)}, polynomial = {polynomial_to_string(polynomial)}")


@cli.command()
@click.argument("psyquandle", type=existing_file)
@click.option("--mod", "modulus", type=click.IntRange(min=2), required=True, help="Weight modulus N.")
@click.option("--pI", "require_pI", is_flag=True, help="Also require ψ(x,x) = 0.")
@click.option("--strong", "require_strong", is_flag=True, help="Also require strong compatibility.")
@click.option("--all", "list_all", is_flag=True, help="List every pair instead of generators.")
def cocycles(psyquandle, modulus, require_pI, require_strong, list_all):
    """Space of Boltzmann weight pairs over Z_N."""
    with domain_errors():
        X = read_psyquandle(psyquandle)
        space = weight_solution_space(X, modulus, require_pI, require_strong)
        click.echo(f"# {space.count} weight pairs mod {modulus} ({', '.join(space.labels)})")
        pairs = space.pairs() if list_all else [WeightPair.zero(X.order, modulus), *space.generators]
    for index, pair in enumerate(pairs):
        click.echo(f"\n# {'pair' if list_all else 'generator'} {index}")
        click.echo(serialize_weight_pair(pair), nl=False)


def crossing_summary(d):
    parts = []
    for kind, count in d.kind_counts().items():
        if count:
            parts.append(f"{count} {KIND_WORDS[kind]} crossing{'s' if count != 1 else ''}")
    return ", ".join(parts) or "no crossings"


@cli.command("catalog")
@click.option("--json", "as_json", is_flag=True)
def catalog_command(as_json):
    """List the built-in diagrams."""
    diagrams = [catalog(name) for name in catalog_names()]
    if as_json:
        emit_json(
            [
                {
                    "name": d.name,
                    "components": len(d.components),
                    "crossings": {KIND_WORDS[k]: n for k, n in d.kind_counts().items()},
                }
                for d in diagrams
            ]
        )
        return
    for d in diagrams:
        count = len(d.components)
        click.echo(f"{d.name} ({count} component{'s' if count != 1 else ''}, {crossing_summary(d)})")


@cli.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--two-variable", is_flag=True)
@click.option("--pseudoknot", is_flag=True)
@click.option("--workers", type=click.IntRange(min=1), help="Diagrams computed in parallel.")
def suite(directory, two_variable, pseudoknot, workers):
    """Invariant tables for every psyquandle/weight/diagram triple in DIRECTORY."""
    mode = Mode.TWO if two_variable else Mode.SINGLE
    with domain_errors():
        for entry, table in run_suite(directory, mode, pseudoknot, workers):
            click.echo(f"X = {entry.psyquandle}, weights = {entry.weights}")
            click.echo(table)
            click.echo("")


def main():
    cli()


if __name__ == "__main__":
    main()
