"""
Command-line front end.

stdout carries only JSON (sorted keys, shortest round-trip floats); human
messages go to stderr. Exit codes: 0 success, 1 verification failure,
2 usage or parse error, 3 dimension mismatch, 4 invalid event,
5 empty-subspace hypothesis violated.
"""

import json
import logging
import sys
from typing import Any, Callable, Dict

import click
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import GeometryError
from app.schemas.documents import Document, EventDocument, VectorDocument, parse_document
from app.services.command_service import parse_dims
from app.services.service_factory import ServiceFactory

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
SUITE_CHOICES = ["projection", "probability", "born", "geometry", "all"]

def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    raise SystemExit(code)

def _load(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_document(json.load(handle))
    except UnicodeDecodeError as e:
        _fail(f"{path}: not UTF-8 ({e})", EXIT_USAGE)
    except json.JSONDecodeError as e:
        _fail(f"{path}: malformed JSON ({e})", EXIT_USAGE)
    except ValidationError as e:
        _fail(f"{path}: invalid document ({e.error_count()} errors)\n{e}", EXIT_USAGE)

def _load_vector(path: str) -> VectorDocument:
    document = _load(path)
    if not isinstance(document, VectorDocument):
        _fail(f"{path}: expected a vector document", EXIT_USAGE)
    return document

def _load_event(path: str) -> EventDocument:
    document = _load(path)
    if not isinstance(document, EventDocument):
        _fail(f"{path}: expected an event document with 'frame' or 'matrix'", EXIT_USAGE)
    return document

def _emit(run: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    try:
        payload = run()
    except GeometryError as e:
        _fail(e.message, e.exit_code)
    click.echo(json.dumps(payload, sort_keys=True, allow_nan=False))
    return payload

def _command():
    return ServiceFactory.get_service("command")

DocumentPath = click.Path(exists=True, dir_okay=False)

@click.group()
@click.option("--tol-report", is_flag=True, help="Add the active tolerances to the JSON output.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Logging level on stderr (default from PROJECTIVE_LOG_LEVEL).")
@click.version_option(settings.VERSION, prog_name="projective")
@click.pass_context
def cli(ctx: click.Context, tol_report: bool, log_level: str):
    """Quantum probabilities from the Fubini-Study geometry of CP(H)."""
    logging.basicConfig(
        level=(log_level or settings.LOG_LEVEL).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    ctx.obj = {"tol_report": tol_report}

@cli.command()
@click.argument("state", type=DocumentPath)
@click.argument("target", type=DocumentPath)
@click.pass_obj
def dist(obj, state: str, target: str):
    """Distance from STATE to a state or to the subspace of an event."""
    first, second = _load_vector(state), _load(target)
    _emit(lambda: _command().dist(first, second, obj["tol_report"]))

@cli.command()
@click.argument("state", type=DocumentPath)
@click.argument("event", type=DocumentPath)
@click.pass_obj
def prob(obj, state: str, event: str):
    """Single-event probability, geometric and operator side by side."""
    vector, subspace = _load_vector(state), _load_event(event)
    _emit(lambda: _command().prob(vector, subspace, obj["tol_report"]))

@cli.command("seq-prob")
@click.argument("state", type=DocumentPath)
@click.option("--event", "events", type=DocumentPath, multiple=True,
              help="Event document; repeat in time order.")
@click.pass_obj
def seq_prob(obj, state: str, events):
    """Consecutive probability of the events, in the order given."""
    vector = _load_vector(state)
    documents = [_load_event(path) for path in events]
    _emit(lambda: _command().seq_prob(vector, documents, obj["tol_report"]))

@cli.command()
@click.argument("state", type=DocumentPath)
@click.argument("event", type=DocumentPath)
@click.pass_obj
def project(obj, state: str, event: str):
    """Projection of STATE on the subspace of EVENT."""
    vector, subspace = _load_vector(state), _load_event(event)
    _emit(lambda: _command().project(vector, subspace, obj["tol_report"]))

@cli.command()
@click.argument("start", type=DocumentPath)
@click.argument("end", type=DocumentPath)
@click.option("--steps", type=int, default=None, help="Number of arc-length steps (default 16).")
@click.pass_obj
def geodesic(obj, start: str, end: str, steps: int):
    """Shortest geodesic between two states, sampled in arc length."""
    first, second = _load_vector(start), _load_vector(end)
    _emit(lambda: _command().geodesic(first, second, steps, obj["tol_report"]))

@cli.command()
@click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True)
@click.option("--dims", default=settings.DEFAULT_DIMS, show_default=True, help="Comma-separated dimensions.")
@click.option("--trials", type=int, default=settings.DEFAULT_TRIALS, show_default=True)
@click.option("--max-chain", type=int, default=settings.DEFAULT_MAX_CHAIN, show_default=True)
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all", show_default=True)
@click.option("--workers", type=int, default=None, help="Worker threads (default PROJECTIVE_VERIFY_WORKERS).")
@click.pass_obj
def verify(obj, seed: int, dims: str, trials: int, max_chain: int, suite: str, workers: int):
    """Run the seeded verification suites; exit 1 on any failure."""
    payload = _emit(lambda: _command().verify(
        seed=seed,
        dims=parse_dims(dims),
        trials=trials,
        max_chain=max_chain,
        suite=suite,
        workers=workers,
        tol_report=obj["tol_report"],
    ))
    if not payload["passed"]:
        click.echo("error: verification recorded failures", err=True)
        raise SystemExit(1)

def main():
    cli(prog_name="projective")
