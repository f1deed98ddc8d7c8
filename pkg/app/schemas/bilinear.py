# app/schemas/bilinear.py
from typing import Optional

from pydantic import BaseModel

from app.schemas.report import Envelope


class VectorClassOut(Envelope):
    value: str
    isotropic: bool
    normal: bool


class PairClassOut(Envelope):
    left_orthogonal: bool
    right_orthogonal: bool
    compatible: bool
    strictly_compatible: bool
    weakly_cauchy_schwartz: bool
    cauchy_schwartz: bool
    corner_singular: bool


class SymmetricOut(Envelope):
    symmetric: bool
    nondegenerate: bool
    radical: list[int]


class GramOut(Envelope):
    rows: list[list[str]]
    determinant: str
    dependent: bool
    degenerate: bool
    warnings: list[str] = []


class GSStepOut(BaseModel):
    projected: list[str]
    corrected: list[str]
    dominant: list[int]
    predicted: str


class GramSchmidtOut(Envelope):
    orthogonal: list[list[str]]
    leftover: list[list[str]]
    step: Optional[GSStepOut] = None


class StripOut(Envelope):
    kind: str
    lo: Optional[str] = None
    hi: Optional[str] = None
    at: Optional[str] = None
    swapped: bool = False
    verified: bool = True
    note: str = ""


class DecompositionOut(Envelope):
    aniso: list[list[str]]
    alternate: list[list[str]]
    aniso_sources: list[int]
    alternate_sources: list[int]
    demoted: list[int] = []
