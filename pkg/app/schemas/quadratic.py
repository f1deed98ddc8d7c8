# app/schemas/quadratic.py
from typing import Literal, Optional

from app.schemas.report import Envelope


class QuadFormOut(Envelope):
    kind: Literal["diagonal", "form"]
    rows: list[list[str]]   # diagonal: one row of q_i; form: the gram matrix


class QuasilinearityOut(Envelope):
    verdict: str
    trials: int
    witness: Optional[list[list[str]]] = None


class HyperbolicOut(Envelope):
    rows: list[list[str]]
    hyperbolic: bool
