"""Operator command line.

Exit codes: 0 success, 1 domain error (bad parameters, failed verification,
validation findings), 2 usage error.
"""

from __future__ import annotations

import functools
import os
from fractions import Fraction
from pathlib import Path

import click

from cgtportal.errors import PortalError
from cgtportal.content import export_page, import_page
from cgtportal.graphs import FamilySpec, generate, parse_edge_list, to_edge_list_text
from cgtportal.indexes import hosoya_wiener, spanning_tree_census, spanning_tree_count, verify_a136328
from cgtportal.indexes import wiener as wiener_index
from cgtportal.service.portal import PortalService
from cgtportal.workflow import plan_exercises


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PortalError as exc:
            raise click.ClickException(f"{exc.reason}: {exc.message}") from exc

    return wrapper


def _data_dir_option(fn):
    return click.option(
        "--data-dir",
        default=lambda: os.environ.get("DATA_DIR", "data"),
        show_default="data ($DATA_DIR)",
        help="Store root directory.",
    )(fn)


@click.group()
def main():
    """Course-portal service and exact graph-index engine."""


@main.command()
@_data_dir_option
@click.option("--host", default=lambda: os.environ.get("HOST", "127.0.0.1"))
@click.option("--port", default=lambda: int(os.environ.get("PORT", "8000")), type=int)
@click.option("--ui", "ui_dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Serve a built browser UI from this directory at /ui.")
@_domain_errors
def serve(data_dir, host, port, ui_dir):
    """Start the HTTP service."""
    import uvicorn

    from cgtportal.service.api import create_app

    app = create_app(PortalService(data_dir), ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command()
@_data_dir_option
@_domain_errors
def seed(data_dir):
    """Install the seed pages, corpus, syllabus, dev tokens, and roster."""
    service = PortalService(data_dir)
    service.seed()
    click.echo(f"seeded {len(service.index)} pages, {len(service.corpus)} corpus terms, "
               f"{len(service.students)} students into {data_dir}")


@main.command()
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@_domain_errors
def gen(family, params):
    """Emit the edge list of a family instance (e.g. gen wheel 5)."""
    click.echo(to_edge_list_text(generate(FamilySpec(family, tuple(params)))), nl=False)


@main.command()
@click.argument("edge_list_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@_domain_errors
def wiener(edge_list_file):
    """Wiener index of the graph in an edge-list file."""
    graph = parse_edge_list(edge_list_file.read_text(encoding="utf-8"))
    click.echo(str(wiener_index(graph)))


@main.command()
@click.argument("edge_list_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@_domain_errors
def hosoya(edge_list_file):
    """Hosoya-Wiener polynomial of the graph in an edge-list file."""
    graph = parse_edge_list(edge_list_file.read_text(encoding="utf-8"))
    poly = hosoya_wiener(graph)
    click.echo(str(poly))
    click.echo(f"derivative at 1 (Wiener index): {poly.derivative_at_one()}")


@main.command()
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@click.option("--force", is_flag=True, help="Override the census size guard.")
@_domain_errors
def census(family, params, force):
    """Spanning trees of a family instance, up to isomorphism."""
    graph = generate(FamilySpec(family, tuple(params)))
    classes = spanning_tree_census(graph, override_size_limit=force)
    total = spanning_tree_count(graph)
    click.echo(f"{'class':>5} {'multiplicity':>12} {'wiener':>8}  degree sequence")
    for i, cls in enumerate(classes, start=1):
        degseq = ",".join(map(str, sorted((len(a) for a in cls.representative.adjacency), reverse=True)))
        click.echo(f"{i:>5} {cls.multiplicity:>12} {cls.wiener:>8}  {degseq}")
    click.echo(f"classes: {len(classes)}; labeled trees: {sum(c.multiplicity for c in classes)} "
               f"(matrix-tree: {total})")


@main.command("verify-a136328")
@click.option("--max-n", default=17, show_default=True, type=int)
@click.option("--brute-max", default=6, show_default=True, type=int,
              help="Largest n checked by brute force (0 disables).")
@_domain_errors
def verify(max_n, brute_max):
    """Check the odd-graph Wiener closed forms against the published terms."""
    report = verify_a136328(max_n, brute_max=brute_max)
    click.echo(report.render())
    if not report.all_ok:
        raise click.ClickException("verification failed")


@main.command("export")
@click.argument("page_id")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write to a file instead of stdout.")
@_data_dir_option
@_domain_errors
def export_cmd(page_id, output, data_dir):
    """Export a stored page in the fielded format."""
    service = PortalService(data_dir)
    text = export_page(service.index.get(page_id))
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        click.echo(f"wrote {output}")


@main.command("import")
@click.argument("page_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@_data_dir_option
@_domain_errors
def import_cmd(page_file, data_dir):
    """Import a fielded page file into the store (must validate cleanly)."""
    service = PortalService(data_dir)
    page = import_page(page_file.read_text(encoding="utf-8"))
    service.put_page(page)
    click.echo(f"imported {page.id} ({page.title})")


@main.command()
@click.argument("roster_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@_data_dir_option
@_domain_errors
def roster(roster_file, data_dir):
    """Load a roster file (id, name, subject=grade,... per line)."""
    service = PortalService(data_dir)
    count = service.load_roster(roster_file.read_text(encoding="utf-8"))
    click.echo(f"loaded {count} students")


@main.command()
@click.option("--pcts", required=True, help="Group shares g1,g2,g3 summing to 1 (e.g. 0.2,0.5,0.3).")
@click.option("--total", required=True, type=int)
@_domain_errors
def plan(pcts, total):
    """Exercise-mix plan for the given group percentages."""
    parts = pcts.split(",")
    if len(parts) != 3:
        raise click.UsageError("--pcts needs exactly three comma-separated values")
    try:
        shares = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad percentage in {pcts!r}: {exc}")
    click.echo(plan_exercises(shares, total).render())


if __name__ == "__main__":
    main()
