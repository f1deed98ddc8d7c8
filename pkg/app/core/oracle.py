"""
Independent brute-force engines and seeded samplers.

Every sampled value depends only on (seed, index), so trials can be
replayed one by one and reports are reproducible.
"""
import logging
import random
from fractions import Fraction
from itertools import permutations, product
from typing import Optional, Sequence, Union

from app.core import matrix as mx
from app.core.matrix import DetResult, Matrix
from app.core.scalar import ZERO, Scalar, ghost, scalar_product, scalar_sum, tangible
from app.core.vector import Vector, is_ghost_vector, lin_comb
from app.models.enums import SampleKind
from app.utils.config import Settings, get_settings
from app.utils.errors import CapacityError, DomainError

logger = logging.getLogger(__name__)

Shape = Union[None, int, tuple[int, int]]


def trial_rng(seed: int, index: int, salt: str = "") -> random.Random:
    return random.Random(f"{salt}:{seed}:{index}")


# ---- brute force ----

def brute_force_det(A: Matrix) -> DetResult:
    """n! expansion through the scalar folds; shares nothing with the assignment engine."""
    if not A.is_square:
        raise DomainError(f"determinant needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    if n > 8:
        raise CapacityError(f"brute-force determinant is capped at n = 8, got n = {n}")
    terms = {}
    for perm in permutations(range(n)):
        term = scalar_product(A[i, perm[i]] for i in range(n))
        if not term.is_zero:
            terms[perm] = term
    value = scalar_sum(terms.values())
    if value.is_zero:
        return DetResult(ZERO, frozenset())
    witnesses = frozenset(p for p, t in terms.items() if t.value == value.value)
    return DetResult(value, witnesses)


def dependence_search(
    vectors: Sequence[Vector],
    grid: Sequence[Fraction],
    limit: int = 200_000,
) -> Optional[list[Scalar]]:
    """
    Look for tangible-or-zero coefficients (not all zero) whose combination is
    a ghost vector. A witness proves dependence; None proves nothing.
    """
    if not grid:
        raise DomainError("dependence search needs a nonempty grid")
    choices = [ZERO] + [tangible(q) for q in grid]
    for count, coeffs in enumerate(product(choices, repeat=len(vectors))):
        if count >= limit:
            logger.debug("dependence search stopped after %d combinations", limit)
            break
        if all(c.is_zero for c in coeffs):
            continue
        if is_ghost_vector(lin_comb(list(coeffs), list(vectors))):
            return list(coeffs)
    return None


# ---- samplers ----

def sample_scalar(rng: random.Random, settings: Settings, tangible_only: bool = False) -> Scalar:
    q = rng.randint(settings.nu_low, settings.nu_high)
    if tangible_only:
        return tangible(q)
    u = rng.random()
    if u < settings.zero_density:
        return ZERO
    if u < settings.zero_density + settings.ghost_density:
        return ghost(q)
    return tangible(q)


def sample_vector(rng: random.Random, settings: Settings, n: int, tangible_only: bool = False) -> Vector:
    return Vector(sample_scalar(rng, settings, tangible_only) for _ in range(n))


def sample_matrix(rng: random.Random, settings: Settings, rows: int, cols: int,
                  tangible_only: bool = False) -> Matrix:
    return Matrix([[sample_scalar(rng, settings, tangible_only) for _ in range(cols)] for _ in range(rows)])


def sample_nonsingular(rng: random.Random, settings: Settings, n: int, tangible_only: bool = False) -> Matrix:
    for attempt in range(settings.sample_retries):
        A = sample_matrix(rng, settings, n, n, tangible_only)
        if mx.determinant(A).value.is_tangible:
            return A
    raise DomainError(f"sampler exhausted: no nonsingular {n}x{n} matrix in {settings.sample_retries} tries")


def sample_symmetric_gram(rng: random.Random, settings: Settings, n: int, tangible_only: bool = False) -> Matrix:
    grid = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = sample_scalar(rng, settings, tangible_only)
            grid[i][j] = grid[j][i] = x
    return Matrix(grid)


def sample_closed_base(rng: random.Random, settings: Settings, n: int) -> Matrix:
    """close(A) for a nonsingular tangible A; retried until the result is closed under its own I_A."""
    for attempt in range(settings.sample_retries):
        A = sample_nonsingular(rng, settings, n, tangible_only=True)
        closed = mx.close(A)
        if mx.is_nonsingular(closed) and mx.is_closed_base(closed):
            return closed
        logger.debug("closed-base sampler: close(A) not self-closed, retrying (attempt %d)", attempt)
    raise DomainError(f"sampler exhausted: no closed {n}x{n} base in {settings.sample_retries} tries")


def sample_independent_base(rng: random.Random, settings: Settings, n: int) -> list[Vector]:
    return mx.columns(sample_nonsingular(rng, settings, n, tangible_only=True))


def sample_cs_gram(rng: random.Random, settings: Settings, n: int) -> Matrix:
    """Symmetric gram whose standard base is Cauchy-Schwartz: g_ij^2 <_nu g_ii g_jj off the diagonal."""
    diag = [rng.randint(settings.nu_low, settings.nu_high) for _ in range(n)]
    grid = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = tangible(diag[i])
        for j in range(i + 1, n):
            if rng.random() < settings.zero_density:
                continue
            top = Fraction(diag[i] + diag[j], 2)
            q = top - 1 - rng.randint(0, 4)
            x = ghost(q) if rng.random() < settings.ghost_density else tangible(q)
            grid[i][j] = grid[j][i] = x
    return Matrix(grid)


def sample_gs_instance(rng: random.Random, settings: Settings, n: int, m: int) -> Matrix:
    """
    Symmetric gram on F^n whose first m standard vectors are pairwise
    g-orthogonal, g-nonisotropic and weakly Cauchy-Schwartz.
    """
    grid = [[x for x in row] for row in sample_symmetric_gram(rng, settings, n).grid]
    diag = [rng.randint(settings.nu_low, settings.nu_high) for _ in range(m)]
    for i in range(m):
        grid[i][i] = tangible(diag[i])
        for j in range(i + 1, m):
            if rng.random() < settings.zero_density:
                x = ZERO
            else:
                top = Fraction(diag[i] + diag[j], 2)
                x = ghost(top - rng.randint(0, 4))
            grid[i][j] = grid[j][i] = x
    return Matrix(grid)


def sample_pair_gram(rng: random.Random, settings: Settings) -> Matrix:
    """Symmetric 2x2 gram with a tangible diagonal; the shared off-diagonal entry is unrestricted."""
    a, d = (sample_scalar(rng, settings, tangible_only=True) for _ in range(2))
    x = sample_scalar(rng, settings)
    return Matrix([[a, x], [x, d]])


def sample_strip_gram(rng: random.Random, settings: Settings) -> Matrix:
    """Symmetric nondegenerate 2x2 gram with tangible entries."""
    return sample_symmetric_gram(rng, settings, 2, tangible_only=True)


def sample(kind: SampleKind, shape: Shape, seed: int, index: int, settings: Optional[Settings] = None):
    settings = settings or get_settings()
    rng = trial_rng(seed, index, kind.value)
    if kind is SampleKind.scalar:
        return sample_scalar(rng, settings)
    if kind is SampleKind.tangible_scalar:
        return sample_scalar(rng, settings, tangible_only=True)
    if kind is SampleKind.vector:
        return sample_vector(rng, settings, _dim(shape))
    if kind is SampleKind.matrix:
        rows, cols = shape if isinstance(shape, tuple) else (_dim(shape), _dim(shape))
        return sample_matrix(rng, settings, rows, cols)
    if kind is SampleKind.nonsingular_matrix:
        return sample_nonsingular(rng, settings, _dim(shape))
    if kind is SampleKind.symmetric_gram:
        return sample_symmetric_gram(rng, settings, _dim(shape))
    if kind is SampleKind.closed_base:
        return sample_closed_base(rng, settings, _dim(shape))
    raise DomainError(f"unknown sample kind {kind}")


def _dim(shape: Shape) -> int:
    if isinstance(shape, tuple):
        rows, cols = shape
        if rows != cols:
            raise DomainError(f"expected a square shape, got {rows}x{cols}")
        shape = rows
    if not shape or shape < 1 or shape > 10:
        raise CapacityError(f"sample dimension must be in 1..10, got {shape}")
    return shape


def describe(x) -> str:
    """One-line serialization of sampled inputs for failure reports."""
    if isinstance(x, Matrix):
        return "; ".join(" ".join(str(s) for s in row) for row in x.grid)
    if isinstance(x, (list, tuple)):
        return " | ".join(describe(y) for y in x)
    return str(x)


