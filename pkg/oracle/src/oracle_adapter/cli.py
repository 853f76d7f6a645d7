"""Command-line interface for the tagging adapter."""

import json
import logging

import click

from .tagger import TagFailure, tag

logger = logging.getLogger(__name__)


@click.group()
def main():
    """Rule-based English tagging into the interchange format."""


@main.command("tag")
@click.option("--in", "in_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
def tag_file(in_path, out_path):
    """Tag one sentence per input line into JSON lines."""
    logging.basicConfig(level=logging.INFO)
    count = 0
    with open(in_path, encoding="utf-8") as src, open(
        out_path, "w", encoding="utf-8"
    ) as dst:
        for lineno, line in enumerate(src, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = tag(line)
            except TagFailure as exc:
                logger.warning("line %d skipped: %s", lineno, exc)
                continue
            dst.write(json.dumps(doc, ensure_ascii=False) + "\n")
            count += 1
    click.echo(f"tagged {count} sentences")


@main.command()
@click.option("--bind", "bind_addr", default="127.0.0.1:8761", show_default=True)
def serve(bind_addr):
    """Run the tagging service."""
    import uvicorn

    from .service import create_app

    host, _, port = bind_addr.partition(":")
    uvicorn.run(create_app(), host=host or "127.0.0.1", port=int(port or 8761))


if __name__ == "__main__":
    main()
