# app/routers/quadratic.py
import click

from app.core import quadratic as qd
from app.core.bilinear import BilinearForm
from app.core.scalar import parse_scalar
from app.core.vector import standard_base
from app.routers.common import common_options, emit, load_matrix, load_vectors
from app.schemas.matrix import MatrixOut, ScalarOut, rows_of
from app.schemas.quadratic import HyperbolicOut, QuadFormOut, QuasilinearityOut
from app.utils.codec import vector_row
from app.utils.config import get_settings
from app.utils.errors import ParseError

router = click.Group(name="quadratic", help="Quasilinear quadratic forms.")


@router.group("quad")
def quad():
    """Quadratic forms: FORM is a gram matrix, or a single row of q_i with --diagonal."""


diagonal_option = click.option("--diagonal", is_flag=True, help="Read FORM as the diagonal values q_i.")


def _load(source, diagonal, inline) -> qd.QuadraticForm:
    M = load_matrix(source, inline)
    if diagonal:
        if M.rows != 1:
            raise ParseError(f"{source or 'inline'}: --diagonal expects a single row of values")
        return qd.Diagonal(M.row(0).entries)
    return qd.q_of_form(BilinearForm(M))


def _doc(Q: qd.QuadraticForm) -> QuadFormOut:
    if isinstance(Q, qd.Diagonal):
        return QuadFormOut(kind="diagonal", rows=[[str(q) for q in Q.q]])
    return QuadFormOut(kind="form", rows=rows_of(Q.form.gram))


def _text(Q: qd.QuadraticForm) -> str:
    if isinstance(Q, qd.Diagonal):
        return " ".join(str(q) for q in Q.q)
    return str(Q.form.gram)


@quad.command("eval")
@click.argument("form", required=False)
@click.option("--vec", "vecs", multiple=True, required=True, help="Vector to evaluate; repeatable.")
@diagonal_option
@common_options
def q_eval(form, vecs, diagonal, fmt, inline):
    Q = _load(form, diagonal, inline)
    for v in load_vectors(vecs):
        value = qd.q_eval(Q, v)
        emit(fmt, str(value), ScalarOut.of(value))


# ✅ strict / quasilinear / neither
@quad.command("check")
@click.argument("form", required=False)
@diagonal_option
@click.option("--trials", type=int, default=64, show_default=True)
@click.option("--seed", type=int, default=None, help="Defaults to SUPERTROP_SEED.")
@common_options
def q_check(form, diagonal, trials, seed, fmt, inline):
    Q = _load(form, diagonal, inline)
    res = qd.quasilinearity_check(Q, trials, get_settings().seed if seed is None else seed)
    witness = [vector_row(v) for v in res.witness] if res.witness else None
    emit(fmt, res.verdict.value, QuasilinearityOut(verdict=res.verdict.value, trials=res.trials, witness=witness))


@quad.command("fromq")
@click.argument("form", required=False)
@diagonal_option
@common_options
def q_fromq(form, diagonal, fmt, inline):
    F = qd.form_from_q(_load(form, diagonal, inline))
    emit(fmt, str(F.gram), MatrixOut.of(F.gram))


@quad.command("hyper")
@click.argument("value")
@common_options
def q_hyper(value, fmt, inline):
    """Hyperbolic plane with pairing VALUE, a tangible scalar."""
    F = qd.hyperbolic_plane(parse_scalar(value))
    e1, e2 = standard_base(2)
    hyperbolic = qd.is_hyperbolic_plane(F, e1, e2)
    emit(fmt, str(F.gram), HyperbolicOut(rows=rows_of(F.gram), hyperbolic=hyperbolic))


@quad.command("osum")
@click.argument("forms", nargs=-1)
@diagonal_option
@common_options
def q_osum(forms, diagonal, fmt, inline):
    """Orthogonal sum of the FORMS files, or of every --inline literal."""
    if forms and inline:
        raise ParseError("osum takes form files or --inline literals, not both")
    parts = [(f, ()) for f in forms] or [(None, (lit,)) for lit in inline]
    if not parts:
        raise ParseError("osum needs at least one form")
    Q = qd.orthogonal_sum(*(_load(source, diagonal, lit) for source, lit in parts))
    emit(fmt, _text(Q), _doc(Q))
