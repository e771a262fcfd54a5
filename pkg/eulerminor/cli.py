# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Command line: ``eulerminor <command> ...``.

Exit codes: 0 yes / ok, 1 no / absent / budget, 2 parse error, 3 violated
precondition.
"""
import sys
from enum import Enum
from functools import wraps
from pathlib import Path
from typing import List, Optional

import typer

from .cycles import STRATEGIES, find_peripheral_cycle
from .eulerian import SearchBudgetExceeded, Trace, TraceError, apply_trace, cycle_decomposition, dumps_trace, is_eulerian, k2_obstruction, loads_trace
from .fourreg import construct_replay, generate_4rp, reduce_to_b2, reduction_steps
from .multigraph import GraphError, GraphFormatError, PreconditionError, bouquet, format_multigraph, is_isomorphic, parse_multigraph
from .obstructions import EXTRACTORS, OBSTRUCTIONS, minor_star_contains
from .planarity import RotationSystem, format_embedding, format_kuratowski, is_outerplanar, is_planar
from .search_setup import SearchSetup
from .utils import print_header, write_text

EXIT_YES, EXIT_NO, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

app = typer.Typer(add_completion=False, help="Eulerian-minors of multigraphs and their obstructions.")


class Property(str, Enum):
    eulerian = "eulerian"
    planar = "planar"
    outerplanar = "outerplanar"


class ObstructionKind(str, Enum):
    planar = "planar"
    outerplanar = "outerplanar"
    eulerian = "eulerian"


class Strategy(str, Enum):
    direct = "direct"
    descent = "descent"


assert {s.value for s in Strategy} == set(STRATEGIES)

GraphFile = typer.Argument(..., exists=True, dir_okay=False, readable=True, help="Multigraph file.")
TraceFile = typer.Argument(..., exists=True, dir_okay=False, readable=True, help="Trace file.")
BudgetOption = typer.Option(None, "--budget", min=1, help="States a search may expand.")
OutOption = typer.Option(None, "--out", dir_okay=False, help="Write the certificate here and print the path.")


def guard(func):
    """Maps library errors onto exit codes."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GraphFormatError as ex:
            typer.echo(f"parse error: {ex}", err=True)
            raise typer.Exit(EXIT_PARSE)
        except TraceError as ex:
            typer.echo(f"trace invalid at step {ex.step}: {ex.reason}", err=True)
            raise typer.Exit(EXIT_PRECONDITION)
        except GraphError as ex:
            typer.echo(f"precondition failed: {ex}", err=True)
            raise typer.Exit(EXIT_PRECONDITION)
        except SearchBudgetExceeded as ex:
            typer.echo("budget")
            typer.echo(str(ex), err=True)
            raise typer.Exit(EXIT_NO)
        except AssertionError as ex:
            typer.echo(f"internal check failed: {ex}", err=True)
            raise typer.Exit(EXIT_PRECONDITION)

    return wrapper


def _read_graph(path: Path):
    return parse_multigraph(path.read_text())


def _emit(text: str, out: Optional[Path]):
    if out is None:
        typer.echo(text, nl=False)
    else:
        typer.echo(str(write_text(out, text)))


def _flush_log():
    setup = SearchSetup.get_instance()
    if setup.get("verbose") and setup.search_log:
        print_header("LOG", file=sys.stderr)
        setup.print_log_stack(file=sys.stderr)
        print_header("", file=sys.stderr)


@app.callback()
def options(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", help="Print the search log to stderr."),
    output_format: str = typer.Option("text", "--format", help="Output format (only 'text')."),
):
    if output_format != "text":
        raise typer.BadParameter(f"unsupported format {output_format!r}", param_hint="--format")
    setup = SearchSetup.get_instance()
    setup.clear_log()
    if verbose:
        setup.override_config("verbose", True)
    ctx.call_on_close(_flush_log)


@app.command()
@guard
def check(prop: Property = typer.Argument(..., metavar="PROPERTY"), file: Path = GraphFile, out: Optional[Path] = OutOption):
    """Verdict yes/no with a certificate: cycles or K2 trace, rotation or Kuratowski subgraph."""
    g = _read_graph(file)
    certificate = None
    if prop is Property.eulerian:
        verdict = is_eulerian(g)
        if verdict:
            certificate = "".join("cycle " + " ".join(map(str, c.edges)) + "\n" for c in cycle_decomposition(g))
        else:
            certificate = dumps_trace(k2_obstruction(g))
    elif prop is Property.planar:
        result = is_planar(g)
        verdict = isinstance(result, RotationSystem)
        certificate = format_embedding(g, result) if verdict else format_kuratowski(result)
    else:
        verdict = is_outerplanar(g)
    typer.echo("yes" if verdict else "no")
    if certificate is not None:
        _emit(certificate, out)
    raise typer.Exit(EXIT_YES if verdict else EXIT_NO)


@app.command()
@guard
def decompose(file: Path = GraphFile):
    """Cycle decomposition of an Eulerian graph."""
    for c in cycle_decomposition(_read_graph(file)):
        typer.echo("cycle " + " ".join(map(str, c.edges)))


@app.command()
@guard
def peripheral(file: Path = GraphFile, strategy: Strategy = typer.Option(Strategy.direct, "--strategy")):
    """One peripheral cycle, or 'none'."""
    cert = find_peripheral_cycle(_read_graph(file), strategy.value)
    if cert is None:
        typer.echo("none")
        raise typer.Exit(EXIT_NO)
    typer.echo("peripheral " + " ".join(map(str, cert.cycle.edges)))
    typer.echo("vertices " + " ".join(map(str, cert.cycle.vertices)))
    typer.echo(f"components {cert.component_counts[0]} {cert.component_counts[1]}")


@app.command()
@guard
def obstruct(kind: ObstructionKind = typer.Argument(..., metavar="KIND"), file: Path = GraphFile, budget: Optional[int] = BudgetOption, out: Optional[Path] = OutOption):
    """Trace to K5/K33p (planar), K23p/K4p (outerplanar) or K2 (eulerian)."""
    trace = EXTRACTORS[kind.value](_read_graph(file), budget=budget)
    _emit(dumps_trace(trace), out)


@app.command()
@guard
def reduce(file: Path = GraphFile, out: Optional[Path] = OutOption):
    """Reduction trace of a connected 4-regular planar graph to B2."""
    _emit(dumps_trace(reduce_to_b2(_read_graph(file))), out)


def _is_reduction(t: Trace) -> bool:
    try:
        reduction_steps(t)
    except GraphError:
        return False
    return is_isomorphic(t.target, bouquet(2))


@app.command()
@guard
def replay(file: Path = TraceFile):
    """Rebuilds a reduction trace's source from B2; replays any other trace forward."""
    t = loads_trace(file.read_text())
    final = construct_replay(t) if _is_reduction(t) else apply_trace(t)
    typer.echo(format_multigraph(final), nl=False)
    typer.echo("ok")


@app.command()
@guard
def verify(file: Path = TraceFile):
    """Exit 0 iff the trace replays and ends at its target."""
    apply_trace(loads_trace(file.read_text()))
    typer.echo("ok")


@app.command()
@guard
def generate(n: int = typer.Option(..., "--n", min=1, help="Number of vertices.")):
    """Connected 4-regular planar multigraphs on n vertices."""
    blocks = [format_multigraph(g) for g in generate_4rp(n)]
    typer.echo("\n".join(blocks), nl=False)


@app.command()
@guard
def contains(
    file: Path = GraphFile,
    target: str = typer.Option(..., "--target", help=f"One of {', '.join(OBSTRUCTIONS)}."),
    budget: Optional[int] = BudgetOption,
    out: Optional[Path] = OutOption,
):
    """Eulerian-minor* containment of a named obstruction."""
    if target not in OBSTRUCTIONS:
        raise typer.BadParameter(f"unknown obstruction {target!r}", param_hint="--target")
    trace = minor_star_contains(_read_graph(file), target, budget)
    if trace is None:
        typer.echo("absent")
        raise typer.Exit(EXIT_NO)
    _emit(dumps_trace(trace), out)


def run(argv: Optional[List[str]] = None) -> int:
    """Runs one command and returns its exit code instead of leaving the interpreter."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        app(args=argv, prog_name="eulerminor", standalone_mode=True)
    except SystemExit as ex:
        return EXIT_YES if ex.code is None else int(ex.code)
    return EXIT_YES


def main():
    sys.exit(run())
