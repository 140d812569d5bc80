"""Command-line front end.

Exit codes: 0 on success, 1 when a verified bound or property fails, 2 on
bad input or usage. ``-`` stands for stdin / stdout wherever a file is read
or written.
"""

import json
import logging
import sys
from typing import IO, Callable, Optional, get_args

import click

from src.config import Settings, configure_logging, get_settings
from src.construction.orienter import OrientTrace, orient, verify_orientation_bounds
from src.construction.rainbow import (
    ColorTrace,
    all_certificates,
    rainbow_color,
    verify_coloring_certificates,
)
from src.cycles.structure import cycle_cover_report, zeta_bruteforce
from src.errors import ConsistencyError
from src.generators.families import (
    Family,
    FamilySpec,
    bipartite_corpus,
    gen_family,
    min_degree_corpus,
    random_corpus,
)
from src.graphs.core import EdgeColoring, Graph
from src.graphs.io import (
    parse_coloring,
    parse_graph,
    parse_orientation,
    serialize_coloring,
    serialize_graph,
    serialize_orientation,
)
from src.harness.theorems import TheoremReport, reports_to_table, run_corpus, run_report
from src.metrics.bridges import bridges
from src.metrics.distances import distance_to_json, girth, radius_diameter_centers
from src.oracles.orientations import optimal_oriented_diameter
from src.oracles.rainbow import exact_rc, is_rainbow_connected

OK, VIOLATION, BAD_INPUT = 0, 1, 2

CORPORA: dict[str, Callable[..., list[Graph]]] = {
    "random": random_corpus,
    "bipartite_dense": bipartite_corpus,
    "min_degree": min_degree_corpus,
}


def _settings() -> Settings:
    return click.get_current_context().find_root().obj


def _read_graph(stream: IO[str]) -> Graph:
    return parse_graph(stream.read())


def _write_json(path: Optional[str], payload: str) -> None:
    if path is None:
        return
    with click.open_file(path, "w") as handle:
        handle.write(payload + "\n")


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from EARS_LOG_LEVEL).")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Parallel workers.")
@click.option("--seed", type=int, default=None, help="Seed for random families.")
@click.pass_context
def cli(
    ctx: click.Context, log_level: Optional[str], threads: Optional[int], seed: Optional[int]
) -> None:
    """Ear-based strong orientations and rainbow colorings."""
    overrides = {"log_level": log_level, "threads": threads, "seed": seed}
    base = get_settings()
    ctx.obj = Settings(**{**base.dict(), **{k: v for k, v in overrides.items() if v is not None}})
    configure_logging(ctx.obj.log_level)


@cli.command()
@click.argument("graph", type=click.File("r"))
@click.option("--json", "json_path", default=None, help="Also write the analysis as JSON.")
def analyze(graph: IO[str], json_path: Optional[str]) -> int:
    """Print radius, diameter, centers, girth, eta, bridges and zeta."""
    g = _read_graph(graph)
    settings = _settings()
    result: dict = {"n": g.n, "m": g.m, "connected": g.is_connected()}
    if result["connected"]:
        rad, diam, centers = radius_diameter_centers(g, settings.threads)
        result.update(rad=rad, diam=diam, centers=centers)
    result["girth"] = distance_to_json(girth(g))
    cover = cycle_cover_report(g, threads=settings.threads)
    result["eta"] = cover.eta
    result["bridges"] = sorted(bridges(g))
    if g.n <= settings.zeta_max_n:
        result["zeta"] = zeta_bruteforce(g, settings.zeta_max_n)
    else:
        result["zeta"] = None
        result["zeta_note"] = f"n > {settings.zeta_max_n}, skipped"
    for key, value in result.items():
        click.echo(f"{key}: {value}")
    result["per_edge_cycle_len"] = cover.per_edge_cycle_len
    _write_json(json_path, json.dumps(result, indent=2))
    return OK


@cli.command(name="orient")
@click.argument("graph", type=click.File("r"))
@click.option("-o", "--output", type=click.File("w"), default="-", help="Orientation file.")
@click.option("--trace", "trace_path", default=None, help="Write the construction trace.")
def orient_command(graph: IO[str], output: IO[str], trace_path: Optional[str]) -> int:
    """Strongly orient a connected bridgeless graph."""
    g = _read_graph(graph)
    orientation, trace = orient(g)
    output.write(serialize_orientation(orientation))
    _write_json(trace_path, trace.json(indent=2))
    click.echo(
        f"center={trace.center} rad={trace.rad} eta={trace.eta} "
        f"rad_bound={trace.bounds.rad_bound} diam_bound={trace.bounds.diam_bound}",
        err=True,
    )
    return OK


@cli.command(name="rainbow")
@click.argument("graph", type=click.File("r"))
@click.option("-o", "--output", type=click.File("w"), default="-", help="Coloring file.")
@click.option("--trace", "trace_path", default=None, help="Write the construction trace.")
@click.option(
    "--verify",
    type=click.Choice(["none", "certificate", "exact"]),
    default="none",
    help="Check the coloring by certificates or by the exact oracle.",
)
@click.option("--certificates", default=None, help="Write one certificate per pair as JSON lines.")
def rainbow_command(
    graph: IO[str],
    output: IO[str],
    trace_path: Optional[str],
    verify: str,
    certificates: Optional[str],
) -> int:
    """Rainbow-color a connected bridgeless graph."""
    g = _read_graph(graph)
    settings = _settings()
    coloring, trace = rainbow_color(g)
    if verify == "exact" and coloring.color_count > settings.rainbow_max_colors:
        click.echo(
            f"error: {coloring.color_count} colors exceed the exact cap of "
            f"{settings.rainbow_max_colors}; use --verify certificate",
            err=True,
        )
        return BAD_INPUT
    output.write(serialize_coloring(coloring))
    _write_json(trace_path, trace.json(indent=2))
    if certificates is not None:
        with click.open_file(certificates, "w") as handle:
            for cert in all_certificates(g, trace):
                handle.write(cert.json() + "\n")

    ok = True
    if verify == "certificate":
        ok = verify_coloring_certificates(g, coloring, trace).ok
    elif verify == "exact":
        ok = is_rainbow_connected(
            coloring, settings.rainbow_max_colors, threads=settings.threads
        ).ok
    click.echo(
        f"colors={coloring.color_count} bound={trace.bound} verify={verify} "
        f"{'ok' if ok else 'FAILED'}",
        err=True,
    )
    return OK if ok and coloring.color_count <= trace.bound else VIOLATION


@cli.command()
@click.argument("family", type=click.Choice(list(get_args(Family))))
@click.option("--depth", type=int, default=None)
@click.option("--r", type=int, default=None)
@click.option("--eta", type=int, default=None)
@click.option("--copies", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--extra-ears", "extra_ears", type=int, default=None)
@click.option("-o", "--output", type=click.File("w"), default="-", help="Graph file.")
def generate(family: str, output: IO[str], **params: Optional[int]) -> int:
    """Generate a graph of one of the example families."""
    given = {key: value for key, value in params.items() if value is not None}
    spec = FamilySpec(family=family, params=given, seed=_settings().seed)
    output.write(serialize_graph(gen_family(spec)))
    return OK


@cli.command(name="verify-orientation")
@click.argument("graph", type=click.File("r"))
@click.argument("orientation", type=click.File("r"))
@click.option("--trace", "trace_path", default=None, help="Trace written by 'orient'.")
@click.option("--json", "json_path", default=None, help="Also write the report as JSON.")
def verify_orientation(
    graph: IO[str], orientation: IO[str], trace_path: Optional[str], json_path: Optional[str]
) -> int:
    """Measure an orientation against the eta bounds."""
    g = _read_graph(graph)
    o = parse_orientation(g, orientation.read())
    trace = OrientTrace.parse_file(trace_path) if trace_path else None
    report = verify_orientation_bounds(g, o, trace, _settings().threads)
    click.echo(
        f"strong={report.strong} rad={report.rad} (bound {report.rad_bound}) "
        f"diam={report.diam} (bound {report.diam_bound})"
    )
    _write_json(json_path, report.json(indent=2))
    return OK if report.passed else VIOLATION


@cli.command(name="verify-coloring")
@click.argument("graph", type=click.File("r"))
@click.argument("coloring", type=click.File("r"))
@click.option("--trace", "trace_path", default=None, help="Trace written by 'rainbow'.")
def verify_coloring(graph: IO[str], coloring: IO[str], trace_path: Optional[str]) -> int:
    """Check rainbow connectivity: by certificates with a trace, exactly otherwise."""
    g = _read_graph(graph)
    c: EdgeColoring = parse_coloring(g, coloring.read())
    if trace_path:
        report = verify_coloring_certificates(g, c, ColorTrace.parse_file(trace_path))
        click.echo(
            f"pairs={report.pairs_checked} failures={report.failures} "
            f"first_failure={report.first_failure}"
        )
        return OK if report.ok else VIOLATION
    settings = _settings()
    check = is_rainbow_connected(c, settings.rainbow_max_colors, threads=settings.threads)
    click.echo(
        f"colors={c.color_count} rainbow_connected={check.ok} "
        f"failing_pair={check.failing_pair}"
    )
    return OK if check.ok else VIOLATION


@cli.command()
@click.argument("graph", type=click.File("r"))
@click.option("--max-edges", type=int, default=None, help="Refuse graphs with more edges.")
@click.option("--json", "json_path", default=None, help="Also write the result as JSON.")
def exhaustive(graph: IO[str], max_edges: Optional[int], json_path: Optional[str]) -> int:
    """Best strong orientation by trying all of them."""
    g = _read_graph(graph)
    settings = _settings()
    cap = settings.exhaustive_max_edges if max_edges is None else max_edges
    result = optimal_oriented_diameter(g, cap, settings.threads)
    for key, value in result.to_dict().items():
        click.echo(f"{key}: {value}")
    _write_json(json_path, json.dumps(result.to_dict(), indent=2))
    return OK


@cli.command(name="exact-rc")
@click.argument("graph", type=click.File("r"))
@click.option("--max-edges", type=int, default=None, help="Refuse graphs with more edges.")
def exact_rc_command(graph: IO[str], max_edges: Optional[int]) -> int:
    """Exact rainbow connection number of a small graph."""
    g = _read_graph(graph)
    cap = _settings().exact_rc_max_edges if max_edges is None else max_edges
    click.echo(f"rc: {exact_rc(g, cap)}")
    return OK


@cli.command()
@click.argument("graph", type=click.File("r"), required=False)
@click.option(
    "--corpus", type=click.IntRange(min=1), default=None, help="Seeded corpus of N graphs instead."
)
@click.option(
    "--family",
    type=click.Choice(list(CORPORA)),
    default="random",
    show_default=True,
    help="Corpus family for --corpus.",
)
@click.option("--k", type=click.IntRange(min=2), default=2, help="Neighborhood radius k.")
@click.option("--face-len", type=click.IntRange(min=3), default=None, help="Asserted face bound.")
@click.option("--edge-transitive", is_flag=True, default=False, help="Assert edge-transitivity.")
@click.option("--json", "json_path", default=None, help="Also write the reports as JSON.")
def report(
    graph: Optional[IO[str]],
    corpus: Optional[int],
    family: str,
    k: int,
    face_len: Optional[int],
    edge_transitive: bool,
    json_path: Optional[str],
) -> int:
    """Check every theorem on one graph or on a seeded corpus."""
    if (graph is None) == (corpus is None):
        raise click.UsageError("give either a graph file or --corpus N")
    reports: list[TheoremReport]
    if graph is not None:
        reports = [run_report(_read_graph(graph), k, face_len, edge_transitive)]
    else:
        graphs = CORPORA[family](int(corpus or 0), seed=_settings().seed)
        reports = run_corpus(graphs, k, progress=True)
    click.echo(reports_to_table(reports).to_string(index=False))
    _write_json(json_path, json.dumps([json.loads(r.json()) for r in reports], indent=2))
    failed = sum(len(r.failures) for r in reports)
    if failed:
        click.echo(f"{failed} failed checks", err=True)
    return VIOLATION if failed else OK


def main(argv: Optional[list[str]] = None) -> int:
    """Run the CLI.

    Args:
        argv: arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns:
        int: exit code.
    """
    try:
        code = cli.main(args=argv, prog_name="ears", standalone_mode=False)
    except click.UsageError as error:
        error.show()
        return BAD_INPUT
    except click.ClickException as error:
        error.show()
        return BAD_INPUT
    except click.Abort:
        return BAD_INPUT
    except ConsistencyError as error:
        logging.error("Construction failed: %s", error)
        return VIOLATION
    except ValueError as error:
        click.echo(f"error: {error}", err=True)
        return BAD_INPUT
    return int(code or OK)


if __name__ == "__main__":
    sys.exit(main())
