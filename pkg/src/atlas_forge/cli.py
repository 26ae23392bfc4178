"""Single entry point orchestrating the pipeline.

Exit codes: 0 ok, 1 data error, 2 usage error. All logging goes to stderr so
stdout stays scriptable.
"""

from __future__ import annotations

import csv as csv_module
import dataclasses
import logging
import sys
from pathlib import Path

import click
import numpy as np

from . import assets, metrics
from .categories import RuleTableError, load_rule_table
from .genpipe.mock import mock_provider
from .genpipe.pipeline import compute_layout, generate_atlas
from .genpipe.provider import HttpProvider, RepairExhausted, TransportError, load_provider_config
from .ingest import DuplicateId, FormatError, ingest_atlas, load_incidents
from .layout.tsne import TsneParams
from .model import validate_dataset
from .serialization import AtlasFormatError, canonical_json_bytes, read_atlas, write_atlas
from .stats import dataset_stats, format_stats

log = logging.getLogger("atlas_forge")


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _build_provider(provider_config: str | None, mock_seed: int | None):
    if (provider_config is None) == (mock_seed is None):
        raise click.UsageError("exactly one of --provider-config or --mock-seed is required")
    if mock_seed is not None:
        return mock_provider(mock_seed)
    try:
        return HttpProvider(load_provider_config(provider_config))
    except (OSError, TypeError, ValueError) as exc:
        raise click.ClickException(f"provider config: {exc}") from exc


def _tsne_params(seed: int, perplexity: float, iters: int) -> TsneParams:
    try:
        return TsneParams(perplexity=perplexity, iterations=iters, seed=seed)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _read_atlas_or_fail(path: str):
    try:
        return read_atlas(path)
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc}") from exc
    except AtlasFormatError as exc:
        raise click.ClickException(f"{path}: {exc}") from exc


@click.group()
@click.option("--verbose", is_flag=True, help="Debug logging to stderr.")
def main(verbose: bool) -> None:
    """Build, inspect, and serve atlases of AI uses and their risks."""
    _setup_logging(verbose)


@main.command()
@click.option("--technology", required=True, help="Technology to generate uses for.")
@click.option("--domains-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Domain list, one per line; defaults to the packaged 46-domain list.")
@click.option("--provider-config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file with chat-completion endpoint settings.")
@click.option("--mock-seed", type=int, default=None, help="Use the offline deterministic provider.")
@click.option("--out", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--seed", type=int, default=0, help="Layout seed.")
@click.option("--perplexity", type=float, default=15.0)
@click.option("--iters", type=int, default=1000)
@click.option("--rules-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Category rule table; defaults to the packaged table.")
@click.option("--max-in-flight", type=int, default=4, help="Concurrent provider calls.")
def generate(technology, domains_file, provider_config, mock_seed, out, seed, perplexity, iters,
             rules_file, max_in_flight) -> None:
    """Generate a complete atlas for a technology."""
    provider = _build_provider(provider_config, mock_seed)
    domains = assets.load_domains_file(domains_file) if domains_file else assets.default_domains()
    if not domains:
        raise click.ClickException("domain list is empty")
    rules = _load_rules(rules_file)
    try:
        dataset = generate_atlas(
            provider,
            technology,
            domains,
            tsne_params=_tsne_params(seed, perplexity, iters),
            rules=rules,
            max_in_flight=max_in_flight,
        )
    except (RepairExhausted, TransportError) as exc:
        raise click.ClickException(str(exc)) from exc
    write_atlas(dataset, out)
    log.info("wrote %s (%d uses)", out, len(dataset.uses))


def _load_rules(rules_file):
    if rules_file is None:
        return None
    try:
        return load_rule_table(rules_file)
    except (OSError, RuleTableError) as exc:
        raise click.ClickException(f"rules: {exc}") from exc


@main.command()
@click.option("--incidents", "incidents_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None,
              help="Defaults to the file suffix.")
@click.option("--provider-config", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--mock-seed", type=int, default=None)
@click.option("--threshold", type=float, default=0.92, show_default=True,
              help="Cosine similarity at or above which uses merge.")
@click.option("--out", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--seed", type=int, default=0)
@click.option("--perplexity", type=float, default=15.0)
@click.option("--iters", type=int, default=1000)
@click.option("--max-in-flight", type=int, default=4)
@click.option("--interactive", is_flag=True, help="Confirm each proposed merge cluster.")
def ingest(incidents_path, fmt, provider_config, mock_seed, threshold, out, seed, perplexity,
           iters, max_in_flight, interactive) -> None:
    """Convert an incident corpus into a merged atlas; writes <out>.merge.json too."""
    provider = _build_provider(provider_config, mock_seed)
    fmt = fmt or ("json" if incidents_path.endswith(".json") else "csv")
    try:
        incidents = load_incidents(incidents_path, fmt)
    except DuplicateId as exc:
        raise click.ClickException(f"{incidents_path}: {exc}") from exc
    except FormatError as exc:
        raise click.ClickException(f"{incidents_path}: {exc}") from exc
    if not incidents:
        raise click.ClickException("incident file has no records")

    confirm = None
    if interactive:
        def confirm(cluster_uses) -> bool:
            lines = "\n".join(f"  - {u.short_description}" for u in cluster_uses)
            return click.confirm(f"Merge these {len(cluster_uses)} uses?\n{lines}\n", default=True)

    try:
        dataset, report = ingest_atlas(
            provider,
            incidents,
            threshold=threshold,
            tsne_params=_tsne_params(seed, perplexity, iters),
            max_in_flight=max_in_flight,
            confirm=confirm,
        )
    except (RepairExhausted, TransportError) as exc:
        raise click.ClickException(str(exc)) from exc
    write_atlas(dataset, out)
    report_path = out + ".merge.json"
    Path(report_path).write_bytes(canonical_json_bytes(report.to_jsonable()))
    log.info("wrote %s (%d uses) and %s", out, len(dataset.uses), report_path)


@main.command()
@click.option("--atlas", "atlas_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=0)
@click.option("--perplexity", type=float, default=15.0)
@click.option("--iters", type=int, default=1000)
def layout(atlas_path, seed, perplexity, iters) -> None:
    """Recompute coords and split_coords of an atlas file in place."""
    dataset = _read_atlas_or_fail(atlas_path)
    if not dataset.uses:
        raise click.ClickException("atlas has no uses to lay out")
    params = _tsne_params(seed, perplexity, iters)
    if len(dataset.uses) >= 3:
        coords, split = compute_layout(dataset.uses, params)
    else:
        from .layout.views import split_by_risk
        coords = {use.id: (0.5, 0.5) for use in dataset.uses}
        split = split_by_risk(coords, {use.id: use.risk_level for use in dataset.uses})
    dataset = dataclasses.replace(dataset, coords=coords, split_coords=split)
    write_atlas(dataset, atlas_path)
    log.info("relaid out %s (%d uses)", atlas_path, len(dataset.uses))


@main.command()
@click.option("--atlas", "atlas_path", required=True, type=click.Path(exists=True, dir_okay=False))
def validate(atlas_path) -> None:
    """Check every dataset invariant; exit 1 when violations are found."""
    dataset = _read_atlas_or_fail(atlas_path)
    report = validate_dataset(dataset)
    if not report.ok:
        for violation in report:
            click.echo(violation)
        raise click.ClickException(f"{len(report)} violation(s)")
    click.echo("ok")


@main.command("stats")
@click.option("--atlas", "atlas_path", required=True, type=click.Path(exists=True, dir_okay=False))
def stats_command(atlas_path) -> None:
    """Print risk/implementation/daily histograms of an atlas."""
    dataset = _read_atlas_or_fail(atlas_path)
    click.echo(format_stats(dataset_stats(dataset)))


@main.command("eval")
@click.option("--responses", "responses_path", required=True, type=click.Path(exists=True, dir_okay=False))
def eval_command(responses_path) -> None:
    """Compute study metrics from a responses CSV.

    Expected header: kind,subject,rater,item,value. Kinds: sus (item 1-10),
    aesthetics (item classic|expressive|pleasurable), rating (subject x rater
    matrix for agreement), correctness (value 1 = rater agrees).
    """
    try:
        click.echo(_eval_report(responses_path))
    except (ValueError, metrics.DegenerateMatrix) as exc:
        raise click.ClickException(str(exc)) from exc


def _eval_report(responses_path: str) -> str:
    sus_items: dict[str, dict[int, int]] = {}
    aesthetics: dict[str, list[float]] = {}
    ratings: dict[tuple[str, str], float] = {}
    correctness: dict[str, list[bool]] = {}

    with open(responses_path, newline="", encoding="utf-8") as fh:
        reader = csv_module.DictReader(fh)
        expected = {"kind", "subject", "rater", "item", "value"}
        if reader.fieldnames is None or not expected.issubset(reader.fieldnames):
            raise ValueError(f"header must contain {sorted(expected)}")
        for row_no, row in enumerate(reader, start=2):
            kind = row["kind"]
            try:
                if kind == "sus":
                    sus_items.setdefault(row["subject"], {})[int(row["item"])] = int(row["value"])
                elif kind == "aesthetics":
                    aesthetics.setdefault(row["item"], []).append(float(row["value"]))
                elif kind == "rating":
                    ratings[(row["subject"], row["rater"])] = float(row["value"])
                elif kind == "correctness":
                    correctness.setdefault(row["subject"], []).append(row["value"].strip() in ("1", "true", "yes"))
                else:
                    raise ValueError(f"unknown kind {kind!r}")
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"row {row_no}: {exc}") from None

    lines: list[str] = []
    if sus_items:
        scores = []
        for participant, items in sorted(sus_items.items()):
            if sorted(items) != list(range(1, 11)):
                raise ValueError(f"participant {participant}: needs items 1..10, got {sorted(items)}")
            scores.append(metrics.sus_score(metrics.SusResponse(tuple(items[i] for i in range(1, 11)))))
        lines.append(f"sus_mean: {sum(scores) / len(scores):.6f}")
        lines.append(f"sus_n: {len(scores)}")
    if aesthetics:
        classic, expressive, pleasurable = metrics.aesthetics_means(aesthetics)
        lines.append(f"aesthetics_classic: {classic:.6f}")
        lines.append(f"aesthetics_expressive: {expressive:.6f}")
        lines.append(f"aesthetics_pleasurable: {pleasurable:.6f}")
    if ratings:
        subjects = sorted({s for s, _ in ratings})
        raters = sorted({r for _, r in ratings})
        missing = [(s, r) for s in subjects for r in raters if (s, r) not in ratings]
        if missing:
            raise ValueError(f"ratings matrix incomplete; missing {missing[:3]}...")
        matrix = metrics.RatingsMatrix(
            np.array([[ratings[(s, r)] for r in raters] for s in subjects])
        )
        lines.append(f"icc: {metrics.icc(matrix):.6f}")
        lines.append(f"icc_subjects: {len(subjects)}")
        lines.append(f"icc_raters: {len(raters)}")
    if correctness:
        items = [
            metrics.ItemAnnotations(item_id, tuple(votes))
            for item_id, votes in sorted(correctness.items())
        ]
        lines.append(f"correctness_rate: {metrics.correctness_rate(items):.6f}")
        lines.append(f"correctness_items: {len(items)}")
    if not lines:
        raise ValueError("no recognized response rows")
    return "\n".join(lines)


@main.command()
@click.option("--atlas", "atlas_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static-dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="UI bundle served at /.")
def serve(atlas_path, port, host, static_dir) -> None:
    """Serve the atlas API (and optionally the UI bundle) over HTTP."""
    import uvicorn

    from .service import ServiceConfig, app_from_config

    config = ServiceConfig(atlas_path=atlas_path, host=host, port=port, static_dir=static_dir)
    try:
        app = app_from_config(config)
    except (OSError, AtlasFormatError) as exc:
        raise click.ClickException(f"{atlas_path}: {exc}") from exc
    log.info("serving %s on %s:%d", atlas_path, host, port)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")


if __name__ == "__main__":
    main()
