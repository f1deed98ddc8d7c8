"""
Quasilinear quadratic forms, either backed by a bilinear form (Q(v) = <v,v>)
or diagonal (Q(sum a_i b_i) = sum a_i^2 q_i).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from app.core import bilinear as bl
from app.core import matrix as mx
from app.core.bilinear import BilinearForm
from app.core.matrix import Matrix
from app.core.oracle import sample_vector, trial_rng
from app.core.scalar import ZERO, Scalar, add, ghost_surpasses, mul, nu_lt, power, scalar_sum
from app.core.vector import Vector, lin_comb, standard_base, unit_vector, vec_add
from app.models.enums import Quasilinearity
from app.utils.config import get_settings
from app.utils.errors import DomainError, PreconditionError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FormBacked:
    form: BilinearForm

    @property
    def dim(self) -> int:
        return self.form.dim


@dataclass(frozen=True, slots=True)
class Diagonal:
    q: tuple
    base: Optional[tuple] = None   # vectors the coordinates refer to, when converted from a form

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(self.q))
        if not self.q:
            raise ShapeError("diagonal quadratic form needs at least one value")
        if self.base is not None:
            object.__setattr__(self, "base", tuple(self.base))
            if len(self.base) != len(self.q):
                raise ShapeError(f"{len(self.q)} values for a base of {len(self.base)} vectors")

    @property
    def dim(self) -> int:
        return len(self.q)

    def vector(self, coeffs: Vector) -> Vector:
        """The ambient vector with coordinates `coeffs` in the recorded base."""
        if self.base is None:
            return coeffs
        return lin_comb(list(coeffs), list(self.base))


QuadraticForm = Union[FormBacked, Diagonal]


@dataclass(frozen=True, slots=True)
class QuasilinearityResult:
    verdict: Quasilinearity
    trials: int
    witness: Optional[tuple] = None   # (v, w) that broke equality, or |=

    @property
    def strict(self) -> bool:
        return self.verdict is Quasilinearity.strict


def q_of_form(F: BilinearForm) -> FormBacked:
    return FormBacked(F)


def q_eval(Q: QuadraticForm, v: Vector) -> Scalar:
    if v.dim != Q.dim:
        raise ShapeError(f"vector of dimension {v.dim} for a quadratic form of dimension {Q.dim}")
    if isinstance(Q, FormBacked):
        return bl.evaluate(Q.form, v, v)
    return scalar_sum(mul(power(x, 2), q) for x, q in zip(v, Q.q) if not x.is_zero)


def _pairs(Q: QuadraticForm, trials: int, seed: int):
    n = Q.dim
    base = standard_base(n)
    for i in range(n):
        for j in range(i + 1, n):
            yield base[i], base[j]
    settings = get_settings()
    for index in range(trials):
        rng = trial_rng(seed, index, "quasilinear")
        yield sample_vector(rng, settings, n), sample_vector(rng, settings, n)


def quasilinearity_check(Q: QuadraticForm, trials: int, seed: int) -> QuasilinearityResult:
    if isinstance(Q, Diagonal):
        return QuasilinearityResult(Quasilinearity.strict, 0)
    verdict, witness, count = Quasilinearity.strict, None, 0
    for v, w in _pairs(Q, trials, seed):
        count += 1
        lhs = q_eval(Q, vec_add(v, w))
        rhs = add(q_eval(Q, v), q_eval(Q, w))
        if lhs == rhs:
            continue
        if not ghost_surpasses(lhs, rhs):
            logger.debug("quasilinearity broken: Q(v+w) = %s, Q(v)+Q(w) = %s", lhs, rhs)
            return QuasilinearityResult(Quasilinearity.neither, count, (v, w))
        if verdict is Quasilinearity.strict:
            verdict, witness = Quasilinearity.quasilinear, (v, w)
    return QuasilinearityResult(verdict, count, witness)


def _require_strict(Q: QuadraticForm, trials: int, seed: int) -> None:
    result = quasilinearity_check(Q, trials, seed)
    if not result.strict:
        raise PreconditionError(f"quadratic form is {result.verdict.value}, not strictly quasilinear")


def form_from_q(Q: QuadraticForm, trials: int = 64, seed: Optional[int] = None) -> BilinearForm:
    """B_Q with g_ij = sqrt(Q(e_i) Q(e_j))."""
    _require_strict(Q, trials, get_settings().seed if seed is None else seed)
    n = Q.dim
    values = [q_eval(Q, unit_vector(n, i)) for i in range(n)]
    half = Fraction(1, 2)
    return BilinearForm(Matrix([[power(mul(a, b), half) for b in values] for a in values]))


def to_diagonal(Q: QuadraticForm, trials: int = 64, seed: Optional[int] = None) -> Diagonal:
    if isinstance(Q, Diagonal):
        return Q
    if not bl.is_supertropically_symmetric(Q.form):
        raise PreconditionError("diagonalizing needs a supertropically symmetric form")
    _require_strict(Q, trials, get_settings().seed if seed is None else seed)
    base = standard_base(Q.dim)
    return Diagonal(tuple(q_eval(Q, b) for b in base), tuple(base))


def aniso_quadratic(F: BilinearForm, base: Sequence[Vector]) -> tuple[Optional[Diagonal], bl.Decomposition]:
    """Diagonal form on the anisotropic part of decompose(F, base); None when that part is empty."""
    D = bl.decompose(F, base)
    if not D.aniso:
        return None, D
    return Diagonal(tuple(bl.evaluate(F, b, b) for b in D.aniso), D.aniso), D


def hyperbolic_plane(a: Scalar) -> BilinearForm:
    if not a.is_tangible:
        raise DomainError(f"hyperbolic plane needs a tangible pairing, got {a}")
    return BilinearForm(Matrix([[ZERO, a], [a, ZERO]]))


def is_hyperbolic_plane(F: BilinearForm, b1: Vector, b2: Vector) -> bool:
    if not mx.independent([b1, b2]):
        raise PreconditionError("hyperbolic plane test needs an independent pair")
    Q = FormBacked(F)
    q1, q2 = q_eval(Q, b1), q_eval(Q, b2)
    if not (q1.in_ghost_ideal and q2.in_ghost_ideal):
        return False
    return nu_lt(add(q1, q2), q_eval(Q, vec_add(b1, b2)))


def orthogonal_sum(*forms: QuadraticForm) -> QuadraticForm:
    if not forms:
        raise ShapeError("orthogonal sum of no forms")
    if all(isinstance(Q, Diagonal) for Q in forms):
        return Diagonal(tuple(q for Q in forms for q in Q.q))
    if not all(isinstance(Q, FormBacked) for Q in forms):
        raise PreconditionError("orthogonal sum mixes diagonal and form-backed representations")
    n = sum(Q.dim for Q in forms)
    grid = [[ZERO] * n for _ in range(n)]
    offset = 0
    for Q in forms:
        g = Q.form.gram
        for i in range(Q.dim):
            for j in range(Q.dim):
                grid[offset + i][offset + j] = g[i, j]
        offset += Q.dim
    return FormBacked(BilinearForm(Matrix(grid)))


def singletons(Q: Diagonal) -> list[Diagonal]:
    return [Diagonal((q,)) for q in Q.q]


def split_vector(v: Vector, dims: Sequence[int]) -> list[Vector]:
    """Cut v into consecutive blocks of the given sizes."""
    if sum(dims) != v.dim:
        raise ShapeError(f"blocks of {sum(dims)} coordinates for a vector of dimension {v.dim}")
    out, start = [], 0
    for d in dims:
        out.append(Vector(v[start + k] for k in range(d)))
        start += d
    return out
