# app/routers/common.py
"""Options and helpers shared by every command."""
import functools
from typing import Optional, Sequence

import click

from app.core.matrix import Matrix
from app.core.vector import Vector
from app.models.enums import OutputFormat
from app.schemas.report import Envelope
from app.utils import codec
from app.utils.errors import ParseError
from app.utils.log_config import setup_logging


def common_options(fn):
    """--format / --inline / --verbose on a command; sets up logging before the body runs."""

    @click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]),
                  default=OutputFormat.text.value, show_default=True, help="Output format.")
    @click.option("--inline", multiple=True, metavar="LITERAL",
                  help="Matrix given as a literal like \"0 1; 2 0\" instead of a file.")
    @click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr.")
    @functools.wraps(fn)
    def wrapper(*args, fmt: str, inline: tuple, verbose: bool, **kwargs):
        setup_logging(verbose)
        return fn(*args, fmt=OutputFormat(fmt), inline=inline, **kwargs)

    return wrapper


def load_matrix(source: Optional[str], inline: Sequence[str]) -> Matrix:
    """A matrix file, or the single --inline literal."""
    if source and inline:
        raise ParseError(f"got both the file {source} and --inline; give one")
    if len(inline) > 1:
        raise ParseError(f"--inline given {len(inline)} times for a single matrix")
    if inline:
        return codec.parse_inline(inline[0])
    if not source:
        raise ParseError("missing matrix: give a file or --inline LITERAL")
    return codec.read_matrix(source)


def load_vectors(sources) -> list[Vector]:
    return [codec.read_vector(s) for s in sources]


def emit(fmt: OutputFormat, text: str, doc: Envelope) -> None:
    if fmt is OutputFormat.json:
        click.echo(doc.to_json())
    else:
        click.echo(text)


def flag(value: bool) -> str:
    return "true" if value else "false"
