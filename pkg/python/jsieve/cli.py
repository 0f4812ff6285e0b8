"""Command-line interface for jsieve.

Usage:
    jsieve replay SCRIPT
    jsieve check TREE
    jsieve finals TREE
    jsieve det-labels TREE
    jsieve audit TREE TYPES [L [DELTA]]
    jsieve solve TREE TYPES
    jsieve search --depth N [options]
    jsieve export-dot TREE [--types TYPES]

Exit codes: 0 clean, 1 violations or solver failure, 2 input error,
3 resource abort. Data goes to stdout, logs to stderr.
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
from jsieve import __version__
from jsieve.engine import AUDIT_RULES, SieveEngine
from jsieve.exceptions import EXIT_RESOURCE, EXIT_VIOLATIONS, JsieveError
from jsieve.models.assignment import TypeAssignment
from jsieve.models.divisor import DivisorClass
from jsieve.models.tree import CurveTree
from jsieve.utils.config import load_run_config
from jsieve.utils.dot import export_dot, tree_graph
from jsieve.utils.pandas_utils import depth_counts_to_dataframe, rejections_to_dataframe

logger = logging.getLogger(__name__)


def _handle_errors(command):
    """Turn ``JsieveError`` into its exit code with the message on stderr."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except JsieveError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def _engine(ctx: click.Context, **overrides) -> SieveEngine:
    config = load_run_config(ctx.obj.get("config_file"), overrides)
    return SieveEngine(config)


def _read_tree(handle) -> CurveTree:
    return CurveTree.from_json(handle.read())


def _read_types(handle) -> TypeAssignment:
    return TypeAssignment.from_json(handle.read())


def _emit(payload: Any) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


@click.group()
@click.version_option(__version__, prog_name="jsieve")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.option(
    "--config",
    "config_file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Dotenv-format file with JSIEVE_* settings",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, config_file: Optional[str]):
    """Blowup-tree sieve for counterexample configurations at infinity."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    ctx.ensure_object(dict)
    ctx.obj["config_file"] = config_file


@cli.command()
@click.argument("script", type=click.File("r"))
@_handle_errors
def replay(script):
    """Print the tree built by a blowup script."""
    tree = SieveEngine().replay(script.read())
    click.echo(tree.to_json(indent=2))


@cli.command()
@click.argument("tree", type=click.File("r"))
@_handle_errors
def check(tree):
    """Check label invariants and realizability."""
    violations = SieveEngine().check(_read_tree(tree))
    if violations:
        for violation in violations:
            click.echo(str(violation))
        sys.exit(EXIT_VIOLATIONS)
    click.echo("ok")


@cli.command()
@click.argument("tree", type=click.File("r"))
@_handle_errors
def finals(tree):
    """Print the final-curve ids."""
    _emit(SieveEngine().finals(_read_tree(tree)))


@cli.command("det-labels")
@click.argument("tree", type=click.File("r"))
@_handle_errors
def det_labels(tree):
    """Print the determinant label of every vertex."""
    labels = SieveEngine().det_labels(_read_tree(tree))
    _emit({str(v): d for v, d in labels.items()})


@cli.command()
@click.argument("tree", type=click.File("r"))
@click.argument("types", type=click.File("r"))
@click.argument("l_file", metavar="[L]", type=click.File("r"), required=False)
@click.argument("delta_file", metavar="[DELTA]", type=click.File("r"), required=False)
@click.option("--allow-negative-L", "allow_negative_l", is_flag=True)
@click.option("--allow-no-type1", is_flag=True)
@click.pass_context
@_handle_errors
def audit(ctx, tree, types, l_file, delta_file, allow_negative_l, allow_no_type1):
    """Per-rule pass/fail for every supplied layer."""
    engine = _engine(
        ctx,
        allow_negative_l=allow_negative_l or None,
        allow_no_type1=allow_no_type1 or None,
    )
    L = DivisorClass.from_json(l_file.read(), layer="L") if l_file else None
    Delta = DivisorClass.from_json(delta_file.read(), layer="Delta") if delta_file else None
    if Delta is not None and L is None:
        raise click.UsageError("a Delta file needs an L file")
    layers = engine.audit(_read_tree(tree), _read_types(types), L, Delta)
    failed = False
    for layer, violations in layers.items():
        for rule in AUDIT_RULES[layer]:
            hits = [v for v in violations if v.rule == rule]
            if rule == "LNEG" and engine.config.allow_negative_l:
                continue
            if rule == "C11" and engine.config.allow_no_type1:
                continue
            status = "FAIL" if hits else "PASS"
            failed = failed or bool(hits)
            detail = "; ".join(v.message for v in hits)
            click.echo(f"{status} {layer} {rule}" + (f": {detail}" if detail else ""))
    if failed:
        sys.exit(EXIT_VIOLATIONS)


@cli.command()
@click.argument("tree", type=click.File("r"))
@click.argument("types", type=click.File("r"))
@click.option("--delta-cap", type=int, default=None)
@click.option("--result-cap", type=int, default=None)
@click.option("--kernel-box", type=int, default=None)
@click.option("--allow-negative-L", "allow_negative_l", is_flag=True)
@click.option("--allow-no-type1", is_flag=True)
@click.pass_context
@_handle_errors
def solve(ctx, tree, types, delta_cap, result_cap, kernel_box, allow_negative_l, allow_no_type1):
    """Solve L, then Delta; one JSON line per L."""
    engine = _engine(
        ctx,
        delta_cap=delta_cap,
        result_cap=result_cap,
        kernel_box=kernel_box,
        allow_negative_l=allow_negative_l or None,
        allow_no_type1=allow_no_type1 or None,
    )
    for solved in engine.solve(_read_tree(tree), _read_types(types)):
        click.echo(solved.model_dump_json())


def _write_dot(directory: Path, reports) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for index, report in enumerate(reports):
        Delta = report.deltas[0].Delta if report.deltas else None
        name = f"{report.key[:16]}-{index}"
        graph = tree_graph(report.tree, report.assignment, report.L.L, Delta, name=name)
        graph.save(f"{name}.dot", directory=directory)


@cli.command()
@click.option(
    "--depth",
    type=int,
    default=None,
    help="Maximum number of blowups; every depth from 0 to N is visited and counted",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="JSON-lines report file")
@click.option("--summary-json", type=click.Path(dir_okay=False), default=None)
@click.option("--rejected-out", type=click.Path(dir_okay=False), default=None)
@click.option("--emit-dot", type=click.Path(file_okay=False), default=None)
@click.option("--table", is_flag=True, help="Print depth counts and rejections to stderr")
@click.option("--delta-cap", type=int, default=None)
@click.option("--result-cap", type=int, default=None)
@click.option("--score-threshold", type=int, default=None)
@click.option("--kernel-box", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--max-trees", type=int, default=None)
@click.option("--allow-negative-L", "allow_negative_l", is_flag=True)
@click.option("--allow-no-type1", is_flag=True)
@click.option("--verbose-trace", is_flag=True)
@click.pass_context
@_handle_errors
def search(ctx, depth, out, summary_json, rejected_out, emit_dot, table, **options):
    """Enumerate trees and run the candidate pipeline.

    Every tree with at most ``--depth`` blowups is visited, so ``--depth 2``
    visits 1 + 1 + 3 = 5 trees.
    """
    overrides: Dict[str, Any] = {
        k: (v or None) if isinstance(v, bool) else v for k, v in options.items()
    }
    overrides["max_blowups"] = depth
    engine = _engine(ctx, **overrides)
    result = engine.search()

    lines = "".join(report.to_json_line() + "\n" for report in result.reports)
    if out:
        Path(out).write_text(lines)
    else:
        click.echo(lines, nl=False)

    summary = result.summary.model_dump_json()
    if summary_json:
        Path(summary_json).write_text(summary + "\n")
    else:
        click.echo(f"summary (wall time nondeterministic): {summary}", err=True)
    if rejected_out:
        Path(rejected_out).write_text(
            "".join(r.model_dump_json() + "\n" for r in result.rejected)
        )
    if emit_dot:
        _write_dot(Path(emit_dot), result.reports)
    if table:
        click.echo(depth_counts_to_dataframe(result.summary).to_string(index=False), err=True)
        click.echo(rejections_to_dataframe(result.summary).to_string(index=False), err=True)
    if not result.summary.complete:
        sys.exit(EXIT_RESOURCE)


@cli.command("export-dot")
@click.argument("tree", type=click.File("r"))
@click.option("--types", type=click.File("r"), default=None, help="Type assignment JSON")
@_handle_errors
def export_dot_command(tree, types):
    """Print the tree in Graphviz DOT."""
    assignment = _read_types(types) if types else None
    click.echo(export_dot(_read_tree(tree), assignment), nl=False)


def main() -> None:
    """Console-script entry point."""
    cli(prog_name="jsieve")


if __name__ == "__main__":
    main()
