# app/schemas/dual.py
from app.schemas.report import Envelope


class DualBaseOut(Envelope):
    functionals: list[list[str]]   # one row per epsilon_i
    rank: int


class DualGridOut(Envelope):
    grid: list[list[str]]          # [eps_i(b_j)]
    quasi_identity: list[list[str]]  # A A^∇
    agree: bool
