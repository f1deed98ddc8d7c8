# app/utils/codec.py
"""
Text and JSON codecs for matrices and vectors.

Text: one row per line, whitespace-separated scalars, `#` comment lines.
Inline: rows separated by `;`. JSON: {"rows": [["0", "1g"], ...]}.
"""
from pathlib import Path

from pydantic import ValidationError

from app.core.matrix import Matrix
from app.core.scalar import format_scalar, parse_scalar
from app.core.vector import Vector
from app.schemas.matrix import MatrixOut
from app.utils.errors import ParseError


def _parse_rows(rows: list[list[str]], where: str) -> Matrix:
    if not rows:
        raise ParseError(f"{where}: empty matrix")
    width = len(rows[0])
    grid = []
    for i, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"{where}: row {i} has {len(row)} entries, expected {width}")
        try:
            grid.append([parse_scalar(tok) for tok in row])
        except ParseError as e:
            raise ParseError(f"{where}: row {i}: {e.detail}") from e
    return Matrix(grid)


def parse_matrix_text(text: str, where: str = "<input>") -> Matrix:
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text, where)
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return _parse_rows(rows, where)


def parse_matrix_json(text: str, where: str = "<input>") -> Matrix:
    try:
        doc = MatrixOut.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"{where}: bad matrix JSON ({e.error_count()} errors)") from e
    return _parse_rows(doc.rows, where)


def parse_inline(text: str) -> Matrix:
    """"0 1; 2 0" -> 2x2."""
    rows = [chunk.split() for chunk in text.split(";")]
    rows = [r for r in rows if r]
    return _parse_rows(rows, "inline")


def parse_vector(text: str) -> Vector:
    M = parse_inline(text)
    if M.rows != 1:
        raise ParseError(f"vector literal must be a single row, got {M.rows} rows")
    return M.row(0)


def read_matrix(source: str) -> Matrix:
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {source}: {e.strerror}") from e
    return parse_matrix_text(text, where=source)


def read_vector(source: str) -> Vector:
    """Inline row literal, or a file holding a single row."""
    path = Path(source)
    if path.is_file():
        M = read_matrix(source)
        if M.rows != 1:
            raise ParseError(f"{source}: vector file must hold a single row")
        return M.row(0)
    return parse_vector(source)


def vector_row(v: Vector) -> list[str]:
    return [format_scalar(x) for x in v]
