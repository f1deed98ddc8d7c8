# app/schemas/matrix.py
from typing import Optional

from app.core.matrix import DetResult, Matrix
from app.core.scalar import Scalar, format_scalar
from app.schemas.report import Envelope


def rows_of(M: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in M.grid]


class ScalarOut(Envelope):
    value: str

    @classmethod
    def of(cls, x: Scalar) -> "ScalarOut":
        return cls(value=format_scalar(x))


class MatrixOut(Envelope):
    rows: list[list[str]]

    @classmethod
    def of(cls, M: Matrix) -> "MatrixOut":
        return cls(rows=rows_of(M))


class DetOut(Envelope):
    value: str
    engine: str
    tie: bool
    witnesses: list[list[int]]

    @classmethod
    def of(cls, d: DetResult, engine: str) -> "DetOut":
        return cls(
            value=format_scalar(d.value),
            engine=engine,
            tie=d.is_tie,
            witnesses=sorted(list(p) for p in d.witnesses),
        )


class QuasiIdentityOut(Envelope):
    left: list[list[str]]    # A A^∇
    right: list[list[str]]   # A^∇ A
    left_is_quasi_identity: bool
    right_is_quasi_identity: bool


class RankOut(Envelope):
    rank: int
    independent: Optional[bool] = None
