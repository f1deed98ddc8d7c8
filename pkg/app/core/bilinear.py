"""
Strict bilinear forms given by Gram matrices: <v, w> = sum_ij v_i g_ij w_j.

Covers isotropy and orthogonality predicates, compatibility and
Cauchy-Schwartz flags, Gram-determinant dependence, the radical,
Gram-Schmidt, the g-isotropic strip of a rank-2 space and the
anisotropic/alternate decomposition.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from app.core import matrix as mx
from app.core.matrix import Matrix
from app.core.oracle import sample_scalar, trial_rng
from app.core.scalar import (
    ONE,
    ZERO,
    Scalar,
    add,
    inv,
    mul,
    nu_cmp,
    nu_le,
    nu_lt,
    power,
    scalar_sum,
    tangible,
    tangible_lift,
)
from app.core.vector import Vector, lin_comb, vec_add, vec_scale, zero_vector
from app.models.enums import NuOrder, Orthogonality, StripKind
from app.utils.config import get_settings
from app.utils.errors import DomainError, PreconditionError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BilinearForm:
    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_square:
            raise ShapeError(f"gram matrix must be square, got {self.gram.rows}x{self.gram.cols}")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, v: Vector, w: Vector) -> Scalar:
        return evaluate(self, v, w)


@dataclass(frozen=True, slots=True)
class VectorClass:
    value: Scalar       # <v, v>
    isotropic: bool
    normal: bool


@dataclass(frozen=True, slots=True)
class PairClass:
    left_orthogonal: bool
    right_orthogonal: bool
    compatible: bool
    strictly_compatible: bool
    weakly_cauchy_schwartz: bool
    cauchy_schwartz: bool
    corner_singular: bool


@dataclass(frozen=True, slots=True)
class GramDependence:
    dependent: bool
    degenerate: bool
    determinant: Scalar
    independent: Optional[bool] = None   # minor-rank cross-check, when run
    warnings: tuple = ()

    def __bool__(self) -> bool:
        return self.dependent


@dataclass(frozen=True, slots=True)
class GSResult:
    projected: Vector
    corrected: Vector
    dominant: frozenset
    predicted: Scalar   # <v,v> + sum_j <v,b_j>(<v,b_j>+<b_j,v>)/beta_j


@dataclass(frozen=True, slots=True)
class StripResult:
    kind: StripKind
    first: Vector                  # w = first + beta * second
    second: Vector
    lo: Optional[Fraction] = None  # None on an interval: unbounded below
    hi: Optional[Fraction] = None  # None on an interval: unbounded above
    at: Optional[Fraction] = None
    note: str = ""
    verified: bool = True

    @property
    def is_all(self) -> bool:
        return self.kind is StripKind.interval and self.lo is None and self.hi is None

    @property
    def nonempty(self) -> bool:
        return self.kind is not StripKind.empty


@dataclass(frozen=True, slots=True)
class Decomposition:
    aniso: tuple
    alternate: tuple
    aniso_sources: tuple       # input index behind each aniso vector
    alternate_sources: tuple
    demoted: tuple = ()        # input indices moved out of the anisotropic part


# ---- evaluation ----

def _check_dim(F: BilinearForm, v: Vector) -> None:
    if v.dim != F.dim:
        raise ShapeError(f"vector of dimension {v.dim} for a form of dimension {F.dim}")


def evaluate(F: BilinearForm, v: Vector, w: Vector) -> Scalar:
    _check_dim(F, v)
    _check_dim(F, w)
    acc = ZERO
    for i, vi in enumerate(v):
        if vi.is_zero:
            continue
        for j, wj in enumerate(w):
            if wj.is_zero:
                continue
            acc = add(acc, mul(mul(vi, F.gram[i, j]), wj))
    return acc


def gram_of(F: BilinearForm, vs: Sequence[Vector]) -> Matrix:
    if not vs:
        raise ShapeError("Gram matrix of an empty family")
    return Matrix([[evaluate(F, v, w) for w in vs] for v in vs])


def classify_vector(F: BilinearForm, v: Vector) -> VectorClass:
    q = evaluate(F, v, v)
    return VectorClass(value=q, isotropic=q.in_ghost_ideal, normal=q == ONE)


def normalize(F: BilinearForm, v: Vector) -> Vector:
    q = evaluate(F, v, v)
    if not q.is_tangible:
        raise DomainError(f"cannot normalize a g-isotropic vector: <v,v> = {q}")
    return vec_scale(inv(power(q, Fraction(1, 2))), v)


# ---- symmetry and orthogonality ----

def is_supertropically_symmetric(F: BilinearForm) -> bool:
    g = F.gram
    return all(add(g[i, j], g[j, i]).in_ghost_ideal for i in range(F.dim) for j in range(i + 1, F.dim))


def _require_symmetric(F: BilinearForm, what: str) -> None:
    if not is_supertropically_symmetric(F):
        raise PreconditionError(f"{what} needs a supertropically symmetric form (g_ij + g_ji in G0)")


def is_g_orthogonal(F: BilinearForm, v: Vector, w: Vector, side: Orthogonality = Orthogonality.both) -> bool:
    left = evaluate(F, v, w).in_ghost_ideal
    right = evaluate(F, w, v).in_ghost_ideal
    if side is Orthogonality.left:
        return left
    if side is Orthogonality.right:
        return right
    return left and right


def is_alternate(F: BilinearForm, base: Sequence[Vector], samples: int = 16, seed: int = 0) -> bool:
    """Every base vector g-isotropic; spot-checked on tangible combinations."""
    _require_symmetric(F, "alternation test")
    if not all(classify_vector(F, b).isotropic for b in base):
        return False
    settings = get_settings()
    for index in range(samples if base else 0):
        rng = trial_rng(seed, index, "alternate")
        coeffs = [sample_scalar(rng, settings, tangible_only=True) for _ in base]
        v = lin_comb(coeffs, list(base))
        if not classify_vector(F, v).isotropic:
            logger.error("isotropic base spans a non-isotropic vector %s", v)
            return False
    return True


# ---- pairs ----

def _corner_singular(a11: Scalar, a12: Scalar, a21: Scalar, a22: Scalar) -> bool:
    """nu-match against [[a, a b], [a b, a b^2]]."""
    if a11.is_zero or a12.is_zero or a21.is_zero:
        return a12.is_zero and a21.is_zero and a22.is_zero
    if a12.value != a21.value or a22.is_zero:
        return False
    beta = a12.value - a11.value
    return a22.value == a11.value + 2 * beta


def pair_class(F: BilinearForm, v: Vector, w: Vector) -> PairClass:
    vv, ww = evaluate(F, v, v), evaluate(F, w, w)
    vw, wv = evaluate(F, v, w), evaluate(F, w, v)
    diag, cross = add(vv, ww), add(vw, wv)
    square_cross = add(power(vw, 2), power(wv, 2))
    norm_product = mul(vv, ww)
    compatible = nu_le(cross, diag)
    return PairClass(
        left_orthogonal=vw.in_ghost_ideal,
        right_orthogonal=wv.in_ghost_ideal,
        compatible=compatible,
        strictly_compatible=compatible and (nu_cmp(vv, ww) is NuOrder.match or nu_lt(cross, diag)),
        weakly_cauchy_schwartz=nu_le(square_cross, norm_product),
        cauchy_schwartz=nu_lt(square_cross, norm_product),
        corner_singular=_corner_singular(vv, vw, wv, ww),
    )


def compatible_sum_check(F: BilinearForm, v: Vector, w: Vector) -> tuple[Scalar, Scalar]:
    """(<v+w, v+w>, <v,v> + <w,w>); equal for strictly compatible pairs."""
    s = vec_add(v, w)
    return evaluate(F, s, s), add(evaluate(F, v, v), evaluate(F, w, w))


# ---- radical and Gram dependence ----

def radical_member(F: BilinearForm, spanners: Sequence[Vector], v: Vector) -> bool:
    return all(evaluate(F, v, s).in_ghost_ideal for s in spanners)


def radical_of_base(F: BilinearForm, spanners: Sequence[Vector]) -> list[int]:
    return [i for i, s in enumerate(spanners) if radical_member(F, spanners, s)]


def is_nondegenerate(F: BilinearForm, spanners: Sequence[Vector]) -> bool:
    return not radical_of_base(F, spanners)


def gram_dependent(F: BilinearForm, vs: Sequence[Vector]) -> GramDependence:
    d = mx.determinant(gram_of(F, vs)).value
    dependent = d.in_ghost_ideal
    degenerate = not is_nondegenerate(F, vs)
    warnings = []
    if degenerate:
        warnings.append("span is degenerate: some spanner lies in the radical")
        logger.warning("gram_dependent: degenerate span, the dependence criterion does not apply")
    independent = None
    if dependent and not degenerate:
        independent = mx.independent(vs)
        if independent:
            warnings.append("Gram determinant is ghost but the vectors are tropically independent")
            logger.error("Gram dependence not confirmed by the minor-rank criterion for %s", list(vs))
    return GramDependence(dependent, degenerate, d, independent, tuple(warnings))


# ---- Gram-Schmidt ----

def _check_orthogonal_base(F: BilinearForm, B: Sequence[Vector]) -> list[Scalar]:
    norms = []
    for j, b in enumerate(B):
        q = evaluate(F, b, b)
        if not q.is_tangible:
            raise DomainError(f"base vector {j} is g-isotropic or -inf: <b,b> = {q}")
        norms.append(q)
    for i in range(len(B)):
        for j in range(len(B)):
            if i != j and not evaluate(F, B[i], B[j]).in_ghost_ideal:
                raise PreconditionError(f"base vectors {i} and {j} are not g-orthogonal")
    return norms


def gs_step(F: BilinearForm, B: Sequence[Vector], v: Vector) -> GSResult:
    _require_symmetric(F, "Gram-Schmidt")
    _check_dim(F, v)
    norms = _check_orthogonal_base(F, B)
    if not B:
        return GSResult(zero_vector(v.dim), v, frozenset(), evaluate(F, v, v))

    betas = [tangible_lift(q) for q in norms]
    left = [evaluate(F, v, b) for b in B]    # <v, b_j>
    right = [evaluate(F, b, v) for b in B]   # <b_j, v>
    coeffs = [mul(l, inv(beta)) for l, beta in zip(left, betas)]
    projected = lin_comb(coeffs, list(B))
    corrected = vec_add(v, projected)

    weights = [mul(power(add(l, r), 2), inv(beta)) for l, r, beta in zip(left, right, betas)]
    top = scalar_sum(weights)
    dominant = frozenset() if top.is_zero else frozenset(
        j for j, x in enumerate(weights) if nu_cmp(x, top) is NuOrder.match
    )
    predicted = add(
        evaluate(F, v, v),
        scalar_sum(mul(mul(l, add(l, r)), inv(beta)) for l, r, beta in zip(left, right, betas)),
    )
    return GSResult(projected, corrected, dominant, predicted)


def _joins_anisotropic(F: BilinearForm, accepted: Sequence[Vector], c: Vector) -> bool:
    if not classify_vector(F, c).isotropic:
        return all(pair_class(F, b, c).cauchy_schwartz for b in accepted)
    return False


def gram_schmidt(F: BilinearForm, vs: Sequence[Vector], normalize_accepted: bool = True) -> tuple[list, list]:
    """(orthogonal, leftover): vectors whose corrected form stays g-nonisotropic and CS are kept."""
    _require_symmetric(F, "Gram-Schmidt")
    orthogonal: list[Vector] = []
    leftover: list[Vector] = []
    for v in vs:
        c = gs_step(F, orthogonal, v).corrected
        if _joins_anisotropic(F, orthogonal, c):
            orthogonal.append(normalize(F, c) if normalize_accepted else c)
        else:
            leftover.append(v)
    return orthogonal, leftover


# ---- rank-2 isotropic strip ----

def strip_witness(first: Vector, second: Vector, q: Fraction) -> Vector:
    return vec_add(first, vec_scale(tangible(q), second))


def _strip_samples(res: StripResult) -> list[Fraction]:
    if res.kind is StripKind.point:
        return [res.at]
    if res.kind is StripKind.empty:
        return [Fraction(-1), Fraction(0), Fraction(1)]
    if res.lo is not None and res.hi is not None:
        return [res.lo, res.hi, (res.lo + res.hi) / 2]
    if res.hi is not None:
        return [res.hi, res.hi - 1]
    if res.lo is not None:
        return [res.lo, res.lo + 1]
    return [Fraction(0), Fraction(-1), Fraction(1)]


def _strip_cut(candidates: list[Optional[Fraction]], pick) -> Optional[Fraction]:
    present = [q for q in candidates if q is not None]
    return pick(present) if present else None


def isotropic_strip(F: BilinearForm, v1: Vector, v2: Vector) -> StripResult:
    """
    Tangible beta with first + beta * second g-isotropic.

    <w,w> = a11 + a beta + a22 beta^2 with a beta always in G0, so w is
    g-nonisotropic exactly when a tangible a11 or a22 beta^2 is the unique top.
    """
    _require_symmetric(F, "isotropic strip")
    a11, a22 = evaluate(F, v1, v1), evaluate(F, v2, v2)
    first, second = v1, v2
    if nu_lt(a22, a11):
        # order so that a11 <=_nu a22
        first, second, a11, a22 = v2, v1, a22, a11
    a = add(evaluate(F, first, second), evaluate(F, second, first))
    half = None if a11.is_zero or a22.is_zero else (a11.value - a22.value) / 2

    # small beta leaves a tangible a11 on top, large beta a tangible a22 beta^2
    lo = _strip_cut([None if a.is_zero else a11.value - a.value, half], min) if a11.is_tangible else None
    hi = _strip_cut([None if a.is_zero else a.value - a22.value, half], max) if a22.is_tangible else None

    degenerate = a11.is_zero and a22.is_zero and a.is_zero
    if degenerate:
        res = StripResult(StripKind.empty, first, second, note="degenerate: every pairing of the span is -inf")
    elif a22.is_tangible and hi is None:
        # a11 <=_nu a22 leaves lo defined whenever a11 is tangible
        res = StripResult(StripKind.empty, first, second, note="<w,w> is always the tangible a22 beta^2")
    elif lo is not None and lo == hi:
        res = StripResult(StripKind.point, first, second, at=lo)
    else:
        note = "every tangible beta is isotropic" if lo is None and hi is None else ""
        res = StripResult(StripKind.interval, first, second, lo=lo, hi=hi, note=note)
    logger.debug("isotropic strip: %s lo=%s hi=%s at=%s", res.kind.value, res.lo, res.hi, res.at)

    # an empty strip is checked on sample betas that must stay g-nonisotropic, or -inf when degenerate
    samples = [evaluate(F, w, w) for w in (strip_witness(first, second, q) for q in _strip_samples(res))]
    if degenerate:
        verified = all(q.is_zero for q in samples)
    else:
        verified = all(q.in_ghost_ideal is res.nonempty for q in samples)
    if not verified:
        logger.error("isotropic strip failed re-evaluation for gram\n%s", F.gram)
    return StripResult(res.kind, first, second, res.lo, res.hi, res.at, res.note, verified)


# ---- decomposition ----

def rescue_vector(F: BilinearForm, w: Vector, v: Vector) -> Vector:
    """v + beta w with nu(beta) one above nu(a/â22 + 1 + a11/â), making {v + beta w, w} corner singular."""
    a11, a22 = evaluate(F, v, v), evaluate(F, w, w)
    a = add(evaluate(F, v, w), evaluate(F, w, v))
    threshold = add(mul(a, inv(tangible_lift(a22))), ONE)
    if not a.is_zero:
        threshold = add(threshold, mul(a11, inv(tangible_lift(a))))
    return vec_add(v, vec_scale(tangible(threshold.value + 1), w))


def _isotropic_replacement(F: BilinearForm, aniso: Sequence[Vector], c: Vector, idx: int) -> Vector:
    """
    c is g-nonisotropic and orthogonal to `aniso` but not Cauchy-Schwartz with
    some b in it; span{b, c} has a ghost Gram determinant, so its strip holds
    an isotropic vector that stays orthogonal to `aniso`.
    """
    for b in aniso:
        if pair_class(F, b, c).cauchy_schwartz:
            continue
        strip = isotropic_strip(F, c, b)
        if strip.kind is StripKind.point:
            q = strip.at
        elif strip.kind is StripKind.interval and strip.lo is not None and strip.hi is not None:
            q = (strip.lo + strip.hi) / 2
        elif strip.kind is StripKind.interval:
            q = strip.hi if strip.hi is not None else strip.lo
        else:
            continue
        w = strip_witness(strip.first, strip.second, q if q is not None else Fraction(0))
        if classify_vector(F, w).isotropic and all(is_g_orthogonal(F, a, w) for a in aniso):
            logger.debug("decompose: vector %d replaced inside its strip with %s", idx, b)
            return w
    logger.warning("decompose: corrected vector %d is not g-isotropic", idx)
    return c


def _alternate_candidate(F: BilinearForm, a: Vector, c: Vector) -> Optional[Vector]:
    """c + t a with t chosen so that t^2 <a,a> ties <c,c> (or t <a,c> when <c,c> is -inf)."""
    alpha, gamma = evaluate(F, a, a), evaluate(F, c, c)
    s = add(evaluate(F, a, c), evaluate(F, c, a))
    if not gamma.is_zero:
        t = (gamma.value - alpha.value) / 2
    elif not s.is_zero:
        t = s.value - alpha.value
    else:
        return None
    return vec_add(c, vec_scale(tangible(t), a))


def _demote(F: BilinearForm, aniso: Sequence[Vector], alternate: Sequence[Vector], i: int, j: int) -> Vector:
    """Isotropic stand-in for aniso[i], which is Cauchy-Schwartz with the isotropic alternate[j]."""
    a = aniso[i]
    rest = [b for k, b in enumerate(aniso) if k != i]
    order = [j] + [k for k in range(len(alternate)) if k != j]
    valid = []
    for k in order:
        w = _alternate_candidate(F, a, alternate[k])
        if w is None or not classify_vector(F, w).isotropic:
            continue
        if not all(is_g_orthogonal(F, b, w) for b in rest):
            continue
        if mx.independent(rest + list(alternate) + [w]):
            return w
        valid.append(w)
    logger.warning("decompose: no independent isotropic stand-in for an anisotropic vector, keeping a dependent one")
    return valid[0] if valid else vec_add(alternate[j], a)


def decompose(F: BilinearForm, base: Sequence[Vector]) -> Decomposition:
    """
    Split a base into an anisotropic part and a supertropically alternate part.

    Vectors are processed in input order and passes repeat until no further
    vector joins the anisotropic part, so the result depends on the order.
    An anisotropic vector left Cauchy-Schwartz with an alternate one is then
    moved into the alternate part.
    """
    _require_symmetric(F, "decomposition")
    if not base:
        return Decomposition((), (), (), ())
    if not mx.independent(base):
        raise PreconditionError("decomposition needs a tropically independent base")

    aniso: list[Vector] = []
    sources: list[int] = []
    pending = list(enumerate(base))
    changed = True
    while changed and pending:
        changed = False
        remaining = []
        for idx, v in pending:
            c = gs_step(F, aniso, v).corrected
            if _joins_anisotropic(F, aniso, c):
                logger.debug("decompose: vector %d joins the anisotropic part", idx)
                aniso.append(c)
                sources.append(idx)
                changed = True
            else:
                remaining.append((idx, v))
        pending = remaining

    alternate = []
    alternate_sources = []
    for idx, v in pending:
        c = gs_step(F, aniso, v).corrected
        if not classify_vector(F, c).isotropic:
            c = _isotropic_replacement(F, aniso, c, idx)
        alternate.append(c)
        alternate_sources.append(idx)

    demoted = []
    while True:
        clash = next(
            (
                (i, j)
                for i, b in enumerate(aniso)
                for j, c in enumerate(alternate)
                if classify_vector(F, c).isotropic and pair_class(F, b, c).cauchy_schwartz
            ),
            None,
        )
        if clash is None:
            break
        i, j = clash
        logger.debug("decompose: vector %d is Cauchy-Schwartz with alternate %d, demoting", sources[i], j)
        w = _demote(F, aniso, alternate, i, j)
        alternate.append(w)
        alternate_sources.append(sources[i])
        demoted.append(sources[i])
        del aniso[i]
        del sources[i]

    return Decomposition(
        aniso=tuple(aniso),
        alternate=tuple(alternate),
        aniso_sources=tuple(sources),
        alternate_sources=tuple(alternate_sources),
        demoted=tuple(demoted),
    )


def decomposition_violations(F: BilinearForm, base: Sequence[Vector], D: Decomposition) -> list[str]:
    """Empty when every postcondition of the decomposition holds."""
    problems = []
    for i, b in enumerate(D.aniso):
        if classify_vector(F, b).isotropic:
            problems.append(f"aniso vector {i} is g-isotropic")
        for j in range(i + 1, len(D.aniso)):
            pc = pair_class(F, b, D.aniso[j])
            if not (pc.left_orthogonal and pc.right_orthogonal):
                problems.append(f"aniso vectors {i}, {j} are not g-orthogonal")
            if not pc.cauchy_schwartz:
                problems.append(f"aniso vectors {i}, {j} are not Cauchy-Schwartz")
    for j, c in enumerate(D.alternate):
        if not classify_vector(F, c).isotropic:
            problems.append(f"alternate vector {j} is not g-isotropic")
        for i, b in enumerate(D.aniso):
            if not is_g_orthogonal(F, b, c):
                problems.append(f"aniso {i} and alternate {j} do not pair into G0")
            if pair_class(F, b, c).cauchy_schwartz:
                problems.append(f"aniso {i} and alternate {j} are Cauchy-Schwartz")
    if len(D.aniso) + len(D.alternate) != len(base):
        problems.append(f"{len(D.aniso)} + {len(D.alternate)} vectors for a base of {len(base)}")
    return problems
