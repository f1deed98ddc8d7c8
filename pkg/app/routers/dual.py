# app/routers/dual.py
import click

from app.core import dual
from app.routers.common import common_options, emit, load_matrix
from app.schemas.dual import DualBaseOut, DualGridOut
from app.schemas.matrix import rows_of

router = click.Group(name="dual", help="Dual bases of closed bases.")


@router.command("dualbase")
@click.argument("source", required=False)
@common_options
def dualbase(source, fmt, inline):
    D = dual.dual_base(load_matrix(source, inline))
    M = D.as_matrix()
    emit(fmt, str(M), DualBaseOut(functionals=rows_of(M), rank=dual.dual_rank(D)))


# ✅ eps_i(b_j) next to A A^∇
@router.command("dualgrid")
@click.argument("source", required=False)
@common_options
def dualgrid(source, fmt, inline):
    grid, I_A = dual.dual_grids(load_matrix(source, inline))
    doc = DualGridOut(grid=rows_of(grid), quasi_identity=rows_of(I_A), agree=grid == I_A)
    emit(fmt, str(grid), doc)
