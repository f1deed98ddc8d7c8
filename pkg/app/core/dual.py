"""
Linear functionals as row vectors, the dual base of a closed base, ghost
kernels and the double-dual evaluation.

ε_i reads the i-th coordinate of L_A(v) = A^∇∇ v, so the evaluation grid
[ε_i(b_j)] is A^∇∇ A, a quasi-identity for closed bases.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from app.core import matrix as mx
from app.core.matrix import Matrix
from app.core.oracle import describe, sample_scalar, sample_vector, trial_rng
from app.core.scalar import ONE, ZERO, Scalar, add, mul, nu
from app.core.vector import Vector, is_ghost_vector, vec_add, vec_ghost_surpasses, vec_scale
from app.models.enums import Verdict
from app.schemas.report import Failure, TrialReport
from app.utils.config import get_settings
from app.utils.errors import PreconditionError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Functional:
    row: Vector

    @property
    def dim(self) -> int:
        return self.row.dim

    def __call__(self, v: Vector) -> Scalar:
        return apply(self, v)


@dataclass(frozen=True, slots=True)
class DualBase:
    functionals: tuple
    source: Matrix

    def __len__(self) -> int:
        return len(self.functionals)

    def as_matrix(self) -> Matrix:
        return mx.from_rows([f.row for f in self.functionals])


@dataclass(frozen=True, slots=True)
class GhostMonicResult:
    holds: bool
    verdict: Verdict
    trials: int
    witness: Optional[Vector] = None

    def __bool__(self) -> bool:
        return self.holds


def functional_from_row(row: Vector) -> Functional:
    return Functional(row)


def apply(f: Functional, v: Vector) -> Scalar:
    if f.dim != v.dim:
        raise ShapeError(f"functional of dimension {f.dim} applied to vector of dimension {v.dim}")
    acc = ZERO
    for a, x in zip(f.row, v):
        acc = add(acc, mul(a, x))
    return acc


def project_closed(A: Matrix, v: Vector) -> Vector:
    """L̃_A(v) = I_A v."""
    I_A, _ = mx.quasi_identities(A)
    return mx.mat_vec(I_A, v)


def lower(A: Matrix, v: Vector) -> Vector:
    """L_A(v) = A^∇∇ v, the coordinates of v with respect to the columns of A."""
    return mx.mat_vec(mx.double_pseudo(A), v)


def dual_base(A: Matrix) -> DualBase:
    # is_closed_base raises DomainError for singular A
    if not mx.is_closed_base(A):
        raise PreconditionError("dual base needs a closed base (I_A A = A); pass close(A) instead")
    D = mx.double_pseudo(A)
    functionals = tuple(Functional(D.row(i)) for i in range(D.rows))
    return DualBase(functionals, A)


def dual_eval_matrix(D: DualBase) -> Matrix:
    """[ε_i(b_j)]."""
    base = mx.columns(D.source)
    return Matrix([[apply(f, b) for b in base] for f in D.functionals])


def literal_eval_matrix(A: Matrix) -> Matrix:
    """[b_i^T A^∇∇ b_j], the grid obtained by pairing base vectors through A^∇∇."""
    return mx.mat_mul(mx.transpose(A), mx.mat_mul(mx.double_pseudo(A), A))


def dual_grids(A: Matrix) -> tuple[Matrix, Matrix]:
    """The ε_i(b_j) grid next to I_A = A A^∇; divergence is logged, not resolved."""
    grid = dual_eval_matrix(dual_base(A))
    I_A, _ = mx.quasi_identities(A)
    if grid != I_A:
        logger.warning("dual grid differs from I_A:\n%s\nvs\n%s", grid, I_A)
    literal = literal_eval_matrix(A)
    if literal != grid:
        logger.info("pairing grid b_i^T A^∇∇ b_j differs from the dual grid:\n%s", literal)
    return grid, I_A


def dual_rank(D: DualBase) -> int:
    return mx.rank(D.as_matrix())


def phi_matrix(D: DualBase) -> Matrix:
    """Row j holds Φ(b_j) = b_j** evaluated on ε_1..ε_n."""
    return Matrix([[double_dual_eval(b, f) for f in D.functionals] for b in mx.columns(D.source)])


def ghost_kernel_contains(M: Matrix, v: Vector) -> bool:
    return is_ghost_vector(mx.mat_vec(M, v))


def is_ghost_monic(M: Matrix, trials: int, seed: int) -> GhostMonicResult:
    if not M.is_square:
        raise ShapeError(f"ghost-monic test needs a square matrix, got {M.rows}x{M.cols}")
    if mx.is_nonsingular(M):
        return GhostMonicResult(True, Verdict.proved, 0)
    settings = get_settings()
    n = M.cols
    for index in range(trials):
        if index == 0:
            v = Vector(ONE for _ in range(n))
        else:
            v = sample_vector(trial_rng(seed, index, "ghost-monic"), settings, n, tangible_only=True)
        if ghost_kernel_contains(M, v):
            logger.debug("ghost kernel holds tangible %s", v)
            return GhostMonicResult(False, Verdict.counterexample, index + 1, v)
    return GhostMonicResult(True, Verdict.passed, trials)


def is_tropically_onto(M: Matrix) -> bool:
    if not M.is_square:
        raise ShapeError(f"tropically-onto test needs a square matrix, got {M.rows}x{M.cols}")
    return mx.rank(M) == M.rows


def double_dual_eval(v: Vector, f: Functional) -> Scalar:
    """v**(f) = f(v)."""
    return apply(f, v)


def check_map_axioms(M: Matrix, trials: int, seed: int) -> TrialReport:
    settings = get_settings()
    n = M.cols

    def phi(x: Vector) -> Vector:
        return mx.mat_vec(M, x)

    for index in range(trials):
        rng = trial_rng(seed, index, "map-axioms")
        v = sample_vector(rng, settings, n)
        w = sample_vector(rng, settings, n)
        alpha = sample_scalar(rng, settings, tangible_only=True)
        a = nu(sample_scalar(rng, settings, tangible_only=True))
        checks = [
            ("phi(v+w) = phi(v)+phi(w)", phi(vec_add(v, w)), vec_add(phi(v), phi(w)), False),
            ("phi(v+w) |= phi(v)+phi(w)", phi(vec_add(v, w)), vec_add(phi(v), phi(w)), True),
            ("phi(alpha v) = alpha phi(v)", phi(vec_scale(alpha, v)), vec_scale(alpha, phi(v)), False),
            ("phi(a v) |= a phi(v)", phi(vec_scale(a, v)), vec_scale(a, phi(v)), True),
        ]
        for relation, lhs, rhs, surpass in checks:
            ok = vec_ghost_surpasses(lhs, rhs) if surpass else lhs == rhs
            if not ok:
                failure = Failure(index=index, input=describe([v, w, alpha, a]), expected=relation,
                                  got=f"{lhs} vs {rhs}")
                return TrialReport(suite="map-axioms", trials=trials, seed=seed,
                                   verdict=Verdict.counterexample, failures=[failure])
    return TrialReport(suite="map-axioms", trials=trials, seed=seed, verdict=Verdict.passed)
