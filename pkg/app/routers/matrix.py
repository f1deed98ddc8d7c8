# app/routers/matrix.py
import click

from app.core import matrix as mx
from app.models.enums import Engine
from app.routers.common import common_options, emit, flag, load_matrix
from app.schemas.matrix import DetOut, MatrixOut, QuasiIdentityOut, RankOut, rows_of

router = click.Group(name="matrix", help="Determinants, quasi-inverses and rank.")


# ✅ |A| by either engine
@router.command("det")
@click.argument("source", required=False)
@click.option("--engine", type=click.Choice([e.value for e in Engine]), default=None,
              help="expand (n <= 8) or assign; picked by size when omitted.")
@common_options
def det(source, engine, fmt, inline):
    A = load_matrix(source, inline)
    engine = Engine(engine) if engine else mx.default_engine(A)
    d = mx.determinant(A, engine)
    emit(fmt, str(d.value), DetOut.of(d, engine.value))


@router.command("adj")
@click.argument("source", required=False)
@common_options
def adj(source, fmt, inline):
    M = mx.adjoint(load_matrix(source, inline))
    emit(fmt, str(M), MatrixOut.of(M))


# ✅ A^∇ = adj(A)/|A|, nonsingular only
@router.command("pinv")
@click.argument("source", required=False)
@click.option("--double", is_flag=True, help="Print A^∇∇ = A^∇ A A^∇ instead.")
@common_options
def pinv(source, double, fmt, inline):
    A = load_matrix(source, inline)
    M = mx.double_pseudo(A) if double else mx.pseudo_inverse(A)
    emit(fmt, str(M), MatrixOut.of(M))


@router.command("quasiid")
@click.argument("source", required=False)
@common_options
def quasiid(source, fmt, inline):
    left, right = mx.quasi_identities(load_matrix(source, inline))
    doc = QuasiIdentityOut(
        left=rows_of(left),
        right=rows_of(right),
        left_is_quasi_identity=mx.is_quasi_identity(left),
        right_is_quasi_identity=mx.is_quasi_identity(right),
    )
    emit(fmt, f"{left}\n\n{right}", doc)


@router.command("close")
@click.argument("source", required=False)
@common_options
def close(source, fmt, inline):
    M = mx.close(load_matrix(source, inline))
    emit(fmt, str(M), MatrixOut.of(M))


@router.command("rank")
@click.argument("source", required=False)
@common_options
def rank(source, fmt, inline):
    r = mx.rank(load_matrix(source, inline))
    emit(fmt, str(r), RankOut(rank=r))


# ✅ columns of the matrix are the vectors under test
@router.command("indep")
@click.argument("source", required=False)
@common_options
def indep(source, fmt, inline):
    A = load_matrix(source, inline)
    r = mx.rank(A)
    independent = mx.independent(mx.columns(A))
    emit(fmt, flag(independent), RankOut(rank=r, independent=independent))
