"""
Batch runs over a directory of psyquandle, weight and diagram files.

A directory may hold a ``suite.txt`` manifest with lines
``<psyquandle-file> <weight-file> <diagram> [<diagram> ...]`` where a diagram
is a ``.dgm`` file in the directory or a catalog name. Without a manifest
every ``<stem>.psy`` with a matching ``<stem>.wgt`` is run against the whole
built-in catalog.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import groupby
from pathlib import Path

from .algebra import parse_psyquandle_matrix
from .catalog import catalog, catalog_names
from .config import get_suite_workers
from .diagram import parse_diagram
from .exceptions import ParseError, PsyqError
from .invariants import Mode, enhanced_polynomial, enumerate_colorings, polynomial_to_string
from .weights import parse_weight_pair

logger = logging.getLogger(__name__)

MANIFEST = "suite.txt"
TABLE_HEADER = ("Φ_X^Z", "Φ_X^{φ,ψ}", "L")


@dataclass(frozen=True)
class SuiteEntry:
    psyquandle: str
    weights: str
    diagrams: tuple


@dataclass(frozen=True)
class SuiteRow:
    diagram: str
    count: int
    polynomial: str
    error: str | None = None


def _read(path):
    try:
        return path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path.name}: {exc.strerror or exc}") from exc


def _load_diagram(directory, reference):
    path = directory / reference
    if reference.endswith(".dgm"):
        return parse_diagram(_read(path), name=path.stem)
    return catalog(reference)


def read_manifest(directory):
    directory = Path(directory)
    manifest = directory / MANIFEST
    if manifest.is_file():
        entries = []
        for lineno, raw in enumerate(_read(manifest).splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) < 3:
                raise ParseError("expected '<psyquandle> <weights> <diagram> ...'", lineno)
            entries.append(SuiteEntry(tokens[0], tokens[1], tuple(tokens[2:])))
        return entries
    return [
        SuiteEntry(psy.name, psy.with_suffix(".wgt").name, tuple(catalog_names()))
        for psy in sorted(directory.glob("*.psy"))
        if psy.with_suffix(".wgt").is_file()
    ]


def _run_one(X, w, d, mode, pseudoknot):
    try:
        colorings = enumerate_colorings(d, X)
        polynomial = enhanced_polynomial(d, X, w, mode, pseudoknot, colorings=colorings)
    except PsyqError as exc:
        logger.warning("%s: %s", d.name, exc)
        return SuiteRow(d.name, 0, "", error=str(exc))
    return SuiteRow(d.name, len(colorings), polynomial_to_string(polynomial))


def run_entry(directory, entry, mode=Mode.SINGLE, pseudoknot=False, workers=None):
    """Invariant rows for one suite entry, in the order its diagrams are listed."""
    directory = Path(directory)
    X = parse_psyquandle_matrix(_read(directory / entry.psyquandle))
    w = parse_weight_pair(_read(directory / entry.weights), order=X.order)
    diagrams = [_load_diagram(directory, reference) for reference in entry.diagrams]
    workers = workers or get_suite_workers()
    if workers == 1:
        return [_run_one(X, w, d, mode, pseudoknot) for d in diagrams]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda d: _run_one(X, w, d, mode, pseudoknot), diagrams))


def format_table(rows):
    """Rows grouped by (counting invariant, polynomial), diagrams comma-separated."""
    ok = sorted((r for r in rows if r.error is None), key=lambda r: (r.count, r.polynomial))
    lines = [" | ".join(TABLE_HEADER)]
    for (count, polynomial), group in groupby(ok, key=lambda r: (r.count, r.polynomial)):
        lines.append(f"{count} | {polynomial} | {', '.join(r.diagram for r in group)}")
    lines.extend(f"- | error: {r.error} | {r.diagram}" for r in rows if r.error is not None)
    return "\n".join(lines)


def run_suite(directory, mode=Mode.SINGLE, pseudoknot=False, workers=None):
    """Yield (entry, table text) for every entry of the directory, in manifest order."""
    entries = read_manifest(directory)
    if not entries:
        raise ParseError(f"no suite entries found in {directory}")
    for entry in entries:
        rows = run_entry(directory, entry, mode, pseudoknot, workers)
        yield entry, format_table(rows)
