# app/routers/bilinear.py
from dataclasses import asdict

import click

from app.core import bilinear as bl
from app.core.scalar import format_rational, format_scalar
from app.core.vector import standard_base
from app.models.enums import StripKind
from app.routers.common import common_options, emit, flag, load_matrix, load_vectors
from app.schemas.bilinear import (
    DecompositionOut,
    GramOut,
    GramSchmidtOut,
    PairClassOut,
    StripOut,
    SymmetricOut,
    VectorClassOut,
)
from app.schemas.matrix import rows_of
from app.utils.codec import vector_row
from app.utils.errors import ShapeError

router = click.Group(name="bilinear", help="Strict bilinear forms given by a gram matrix.")

vec_option = click.option("--vec", "vecs", multiple=True,
                          help="Vector as an inline row (\"0 -inf\") or a one-row file; repeatable.")


def _form(source, inline) -> bl.BilinearForm:
    return bl.BilinearForm(load_matrix(source, inline))


def _vectors(F: bl.BilinearForm, vecs) -> list:
    return load_vectors(vecs) if vecs else standard_base(F.dim)


def _exactly(vs: list, k: int, what: str) -> list:
    if len(vs) != k:
        raise ShapeError(f"{what} takes exactly {k} --vec options, got {len(vs)}")
    return vs


def _rows(vs) -> list[list[str]]:
    return [vector_row(v) for v in vs]


def _lines(vs) -> str:
    return "\n".join(str(v) for v in vs)


@router.command("gram")
@click.argument("form", required=False)
@vec_option
@common_options
def gram(form, vecs, fmt, inline):
    F = _form(form, inline)
    vs = _vectors(F, vecs)
    G = bl.gram_of(F, vs)
    dep = bl.gram_dependent(F, vs)
    doc = GramOut(rows=rows_of(G), determinant=format_scalar(dep.determinant), dependent=dep.dependent,
                  degenerate=dep.degenerate, warnings=list(dep.warnings))
    emit(fmt, f"{G}\n|G| = {dep.determinant}  dependent={flag(dep.dependent)}", doc)


@router.command("symmetric")
@click.argument("form", required=False)
@common_options
def symmetric(form, fmt, inline):
    F = _form(form, inline)
    radical = bl.radical_of_base(F, standard_base(F.dim))
    sym = bl.is_supertropically_symmetric(F)
    doc = SymmetricOut(symmetric=sym, nondegenerate=not radical, radical=radical)
    emit(fmt, f"symmetric={flag(sym)} nondegenerate={flag(not radical)}", doc)


@router.command("classify")
@click.argument("form", required=False)
@vec_option
@common_options
def classify(form, vecs, fmt, inline):
    F = _form(form, inline)
    (v,) = _exactly(load_vectors(vecs), 1, "classify")
    c = bl.classify_vector(F, v)
    doc = VectorClassOut(value=format_scalar(c.value), isotropic=c.isotropic, normal=c.normal)
    emit(fmt, f"{c.value} isotropic={flag(c.isotropic)} normal={flag(c.normal)}", doc)


@router.command("pair")
@click.argument("form", required=False)
@vec_option
@common_options
def pair(form, vecs, fmt, inline):
    F = _form(form, inline)
    v, w = _exactly(load_vectors(vecs), 2, "pair")
    pc = bl.pair_class(F, v, w)
    flags = asdict(pc)
    text = "\n".join(f"{name} {flag(value)}" for name, value in flags.items())
    emit(fmt, text, PairClassOut(**flags))


# ✅ Gram-Schmidt over the given vectors, in order
@router.command("gs")
@click.argument("form", required=False)
@vec_option
@click.option("--no-normalize", is_flag=True, help="Keep accepted vectors unnormalized.")
@common_options
def gs(form, vecs, no_normalize, fmt, inline):
    F = _form(form, inline)
    orthogonal, leftover = bl.gram_schmidt(F, _vectors(F, vecs), normalize_accepted=not no_normalize)
    doc = GramSchmidtOut(orthogonal=_rows(orthogonal), leftover=_rows(leftover))
    text = _lines(orthogonal)
    if leftover:
        text += "\n# leftover\n" + _lines(leftover)
    emit(fmt, text, doc)


@router.command("strip")
@click.argument("form", required=False)
@vec_option
@common_options
def strip(form, vecs, fmt, inline):
    F = _form(form, inline)
    v1, v2 = _exactly(_vectors(F, vecs), 2, "strip")
    res = bl.isotropic_strip(F, v1, v2)

    def fmt_q(q):
        return None if q is None else format_rational(q)

    lo, hi = ("all", "all") if res.is_all else (fmt_q(res.lo), fmt_q(res.hi))
    doc = StripOut(kind=res.kind.value, lo=lo, hi=hi, at=fmt_q(res.at),
                   swapped=res.first != v1, verified=res.verified, note=res.note)
    if res.is_all:
        text = "Interval all"
    elif res.kind is StripKind.interval:
        text = f"Interval {lo or '-inf'} {hi or 'inf'}"
    elif res.kind is StripKind.point:
        text = f"Point {fmt_q(res.at)}"
    else:
        text = "Empty"
    emit(fmt, text, doc)


@router.command("decompose")
@click.argument("form", required=False)
@vec_option
@common_options
def decompose(form, vecs, fmt, inline):
    F = _form(form, inline)
    D = bl.decompose(F, _vectors(F, vecs))
    doc = DecompositionOut(
        aniso=_rows(D.aniso),
        alternate=_rows(D.alternate),
        aniso_sources=list(D.aniso_sources),
        alternate_sources=list(D.alternate_sources),
        demoted=list(D.demoted),
    )
    emit(fmt, f"# anisotropic\n{_lines(D.aniso)}\n# alternate\n{_lines(D.alternate)}", doc)
