"""Command-line interface: learn, generate, match, stats, and serve."""

import sys

import click

from .learner import MSDIP, StoreLoadError
from .runner import RunnerError, run_generate, run_learn, run_match
from .stats import stats_for_store


@click.group()
def main():
    """Pattern-based question-answer generation over tagged sentences."""


@main.command()
@click.option("--pairs", "pairs_file", required=True, type=click.Path(exists=True))
@click.option("--msdip", "msdip_path", required=True, type=click.Path())
def learn(pairs_file, msdip_path):
    """Learn training pairs into the pattern store."""
    try:
        summary = run_learn(pairs_file, msdip_path)
    except (RunnerError, StoreLoadError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo(
        f"inserted {summary['inserted']}, duplicates {summary['duplicates']}, "
        f"store size {summary['store_size']}"
    )


@main.command()
@click.option("--input", "input_file", required=True, type=click.Path(exists=True))
@click.option("--msdip", "msdip_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--teach-queue", "teach_queue_path", default=None, type=click.Path())
def generate(input_file, msdip_path, out_path, teach_queue_path):
    """Generate question-answer pairs for a tagged-sentence corpus."""
    try:
        stats = run_generate(input_file, msdip_path, out_path, teach_queue_path)
    except (RunnerError, StoreLoadError, OSError, ValueError) as exc:
        raise click.ClickException(str(exc))
    click.echo(stats.table())


@main.command()
@click.option("--input", "input_file", required=True, type=click.Path(exists=True))
@click.option("--msdip", "msdip_path", required=True, type=click.Path(exists=True))
def match(input_file, msdip_path):
    """Show ranked pattern matches for each input sentence."""
    try:
        run_match(input_file, msdip_path, stream=sys.stdout)
    except (RunnerError, StoreLoadError, OSError, ValueError) as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.option("--msdip", "msdip_path", required=True, type=click.Path(exists=True))
def stats(msdip_path):
    """Print store statistics in the per-pronoun table layout."""
    try:
        store = MSDIP.load(msdip_path)
    except (StoreLoadError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo(stats_for_store(store).table())


@main.command()
@click.option("--msdip", "msdip_path", required=True, type=click.Path())
@click.option("--bind", "bind_addr", default="127.0.0.1:8750", show_default=True)
@click.option("--oracle", "oracle_url", required=True)
@click.option("--teach-queue", "queue_path", default=None, type=click.Path())
@click.option("--console", "console_dir", default=None, type=click.Path(exists=True),
              help="Directory with the built teach console to serve at /.")
def serve(msdip_path, bind_addr, oracle_url, queue_path, console_dir):
    """Run the teach-loop HTTP service."""
    import uvicorn

    from .service import create_app, http_tagger

    host, _, port = bind_addr.partition(":")
    app = create_app(
        msdip_path,
        queue_path=queue_path or msdip_path + ".queue",
        tagger=http_tagger(oracle_url),
        console_dir=console_dir,
    )
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8750))


if __name__ == "__main__":
    main()
