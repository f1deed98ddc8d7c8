# tests/test_codec.py
import pytest

from app.schemas.matrix import rows_of
from app.utils import codec
from app.utils.errors import ParseError
from tests.conftest import mat, vec


def test_text_with_comments_and_blank_lines():
    text = "# a 2x2 example\n\n0 1g\n  2 -inf  \n"
    assert codec.parse_matrix_text(text) == mat("0 1g; 2 -inf")


def test_json_document():
    text = '{"schema": "supertrop/1", "rows": [["0", "1/2g"], ["-inf", "3"]]}'
    assert codec.parse_matrix_text(text) == mat("0 1/2g; -inf 3")


def test_non_lowest_terms_are_canonicalized():
    assert str(codec.parse_inline("2/4 -6/3g")) == "1/2 -2g"


def test_inline_vector():
    assert codec.parse_vector("0 -inf 1g") == vec("0 -inf 1g")


@pytest.mark.parametrize("text, message", [
    ("0 1; 2", "row 2 has 1 entries, expected 2"),
    ("0 x", "bad rational"),
    ("1/0", "zero denominator"),
    ("", "empty matrix"),
])
def test_inline_errors(text, message):
    with pytest.raises(ParseError, match=message):
        codec.parse_inline(text)


def test_bad_json():
    with pytest.raises(ParseError, match="bad matrix JSON"):
        codec.parse_matrix_text('{"rows": 3}')


def test_vector_must_be_one_row():
    with pytest.raises(ParseError, match="single row"):
        codec.parse_vector("0 1; 2 3")


def test_read_matrix_from_file(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("0 1\n2 0\n", encoding="utf-8")
    assert codec.read_matrix(str(path)) == mat("0 1; 2 0")
    with pytest.raises(ParseError, match="cannot read"):
        codec.read_matrix(str(tmp_path / "missing.txt"))


def test_read_vector_from_file_or_literal(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("# v\n1 2g\n", encoding="utf-8")
    assert codec.read_vector(str(path)) == vec("1 2g")
    assert codec.read_vector("1 2g") == vec("1 2g")


def test_rows_for_json():
    assert rows_of(mat("0 -inf; 1g 2")) == [["0", "-inf"], ["1g", "2"]]
    assert codec.vector_row(vec("-1/3 0g")) == ["-1/3", "0g"]
